#pragma once

#include "otg/blocks.hpp"
#include "otg/build.hpp"
#include "otg/canonical.hpp"
#include "otg/count.hpp"
#include "otg/error.hpp"
#include "otg/exhaustive.hpp"
#include "otg/io.hpp"
#include "otg/isomorphism.hpp"
#include "otg/nested.hpp"
#include "otg/oriented_graph.hpp"
#include "otg/recognize.hpp"
#include "otg/sequence.hpp"
#include "otg/undirected_graph.hpp"
