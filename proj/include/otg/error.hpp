#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otg {

// Raised by the text parsers. `position` is a 0-based character offset for
// sequence strings and a 1-based line number for edge-list documents.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace otg
