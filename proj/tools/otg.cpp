// Command-line surface for the oriented threshold graph library.
// Exit codes: 0 success or a true verdict, 1 false verdict or non-member,
// 2 usage error, 3 parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otg/otg.hpp"

namespace {

// Carries a fully formatted message for exit code 3.
struct InputParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

otg::TernarySequence parse_seq_arg(const std::string& text) {
    try {
        return otg::parse_sequence(text);
    } catch (const otg::ParseError& e) {
        throw InputParseError("parse error: " + std::string(e.what()) + " (offset " +
                              std::to_string(e.position()) + ")");
    }
}

otg::TernarySequence parse_binary_arg(const std::string& text) {
    try {
        return otg::parse_binary_sequence(text);
    } catch (const otg::ParseError& e) {
        throw InputParseError("parse error: " + std::string(e.what()) + " (offset " +
                              std::to_string(e.position()) + ")");
    }
}

otg::OrientedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return otg::parse_edge_list(buf.str());
    } catch (const otg::ParseError& e) {
        throw InputParseError("parse error in " + path + ": " + std::string(e.what()) +
                              " (line " + std::to_string(e.position()) + ")");
    }
}

std::string format_set(const std::vector<otg::Vertex>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(set[i]);
    }
    out += "}";
    return out;
}

void print_weights(const otg::WeightRealization& w) {
    std::cout << "weights:";
    for (long long x : w.weights()) std::cout << " " << x;
    std::cout << "\n" << "threshold: " << w.threshold() << "\n";
}

// Sequences may start with '-', which the option parser would otherwise
// claim; such tokens land in the subcommand's extras instead, as does a
// literal "--" separator.
std::string take_sequence_arg(CLI::App* cmd, const std::string& bound) {
    auto rem = cmd->remaining();
    std::erase(rem, std::string("--"));
    const bool have_bound = cmd->count("seq") > 0;
    if (have_bound && rem.empty()) return bound;
    if (!have_bound && rem.size() == 1) return rem[0];
    throw std::invalid_argument(cmd->get_name() + ": expected exactly one sequence argument");
}

int run_selfcheck(int max_n) {
    if (max_n < 1 || max_n > 6)
        throw std::invalid_argument("selfcheck: --max-n must be between 1 and 6");
    bool all_ok = true;
    auto report = [&](const char* suite, bool ok) {
        std::cout << (ok ? "ok " : "fail ") << suite << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (int n = 1; n <= max_n && ok; ++n)
            otg::for_each_oriented_graph(n, [&](const otg::OrientedGraph& g) {
                if (!ok) return;
                const bool by_orientation = otg::recognize(g);
                const bool by_peel = otg::extract(g).has_value();
                auto part = otg::displit_partition(g);
                const bool by_partition = part && otg::check_properly_nested(g, *part);
                if (by_orientation != by_peel || by_peel != by_partition) ok = false;
            });
        report("recognizer-agreement", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= std::min(max_n, 5); ++n)
            ok = ok && otg::count_classes(n).count == otg::brute_count_classes(n).count;
        report("count-oracle", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 12; ++n)
            ok = ok && otg::BigInt(otg::enumerate_canonical(n).size()) ==
                           otg::count_classes(n).count;
        report("enumeration-count", ok);
    }
    {
        bool ok = true;
        for (int len = 0; len <= 8 && ok; ++len)
            otg::for_each_sequence(len, [&](const otg::TernarySequence& s) {
                if (ok && otg::build_from_weights(otg::realize_weights(s)) != otg::dtg_build(s))
                    ok = false;
            });
        report("weight-roundtrip", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n)
            otg::for_each_undirected_graph(n, [&](const otg::UndirectedGraph& g) {
                if (ok && otg::is_threshold_undirected(g) != otg::is_switch_free(g)) ok = false;
            });
        report("undirected-threshold", ok);
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oriented threshold graph toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    std::string build_seq, build_out = "edgelist";
    auto* build = app.add_subcommand("build", "build a graph from a creation sequence");
    build->add_option("seq", build_seq, "creation sequence, e.g. \"+-0-*\"");
    build->add_option("--out", build_out, "output format")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    build->allow_extras();
    build->callback([&] {
        const auto g = otg::dtg_build(parse_seq_arg(take_sequence_arg(build, build_seq)));
        std::cout << (build_out == "dot" ? otg::export_dot(g) : otg::emit_edge_list(g));
    });

    std::string weights_seq;
    auto* weights = app.add_subcommand("weights", "integer weight realization of a sequence");
    weights->add_option("seq", weights_seq, "creation sequence");
    weights->allow_extras();
    weights->callback([&] {
        print_weights(otg::realize_weights(parse_seq_arg(take_sequence_arg(weights, weights_seq))));
    });

    std::string canon_seq;
    auto* canon = app.add_subcommand("canon", "canonical form of a creation sequence");
    canon->add_option("seq", canon_seq, "creation sequence");
    canon->allow_extras();
    canon->callback([&] {
        std::cout << otg::canonicalize(parse_seq_arg(take_sequence_arg(canon, canon_seq))).str()
                  << "\n";
    });

    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("iso", "test two edge-list files for isomorphism");
    iso->add_option("fileA", iso_a, "edge-list file")->required();
    iso->add_option("fileB", iso_b, "edge-list file")->required();
    iso->callback([&] {
        const auto ga = load_graph(iso_a);
        const auto gb = load_graph(iso_b);
        const auto ea = otg::extract_sequence(ga);
        const auto eb = otg::extract_sequence(gb);
        std::cout << "left: " << (ea ? "member" : "non-member") << "\n";
        std::cout << "right: " << (eb ? "member" : "non-member") << "\n";
        bool same = false;
        std::string note;
        if (ea && eb) {
            same = otg::canonicalize(*ea) == otg::canonicalize(*eb);
        } else if (!ea && !eb) {
            if (ga.vertex_count() > 8 || gb.vertex_count() > 8)
                throw std::invalid_argument(
                    "both graphs are outside the class; brute force handles at most 8 vertices");
            same = otg::are_isomorphic_bruteforce(ga, gb);
            note = " (brute-force)";
        }
        std::cout << "isomorphic: " << (same ? "yes" : "no") << note << "\n";
        rc = same ? 0 : 1;
    });

    std::string rec_file;
    auto* rec = app.add_subcommand("recognize", "membership verdict for an edge-list file");
    rec->add_option("file", rec_file, "edge-list file")->required();
    rec->callback([&] {
        const auto g = load_graph(rec_file);
        const auto ex = otg::extract(g);
        if (!ex) {
            std::cout << "member: no\n";
            rc = 1;
            return;
        }
        std::cout << "member: yes\n";
        std::cout << "sequence: " << otg::canonicalize(ex->sequence).str() << "\n";
        const auto part = otg::displit_partition(g);
        std::cout << "displit: T=" << format_set(part->top) << " I="
                  << format_set(part->independent) << " B=" << format_set(part->bottom) << "\n";
        print_weights(otg::realize_weights(g));
    });

    int count_n = 0;
    auto* count = app.add_subcommand("count", "number of isomorphism classes on n vertices");
    count->add_option("n", count_n, "vertex count")->required();
    count->callback([&] { std::cout << otg::count_classes(count_n).count << "\n"; });

    int enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "canonical sequences on n vertices");
    enumerate->add_option("n", enum_n, "vertex count")->required();
    enumerate->callback([&] {
        otg::CanonicalEnumerator en(enum_n);
        while (auto s = en.next()) std::cout << s->str() << "\n";
    });

    std::string orient_seq;
    bool orient_list = false;
    auto* orient = app.add_subcommand(
        "orientations", "transitive orientation classes of an undirected sequence");
    orient->add_option("seq", orient_seq, "minus-free sequence, e.g. \"+0*\" or \"10*\"");
    orient->add_flag("--list", orient_list, "also list one sequence per class");
    orient->allow_extras();
    orient->callback([&] {
        const auto b = parse_binary_arg(take_sequence_arg(orient, orient_seq));
        std::cout << otg::count_transitive_orientations(b) << "\n";
        if (orient_list)
            for (const auto& s : otg::enumerate_orientation_classes(b))
                std::cout << s.str() << "\n";
    });

    int max_n = 5;
    auto* selfcheck = app.add_subcommand("selfcheck", "cross-validate the library against oracles");
    selfcheck->add_option("--max-n", max_n, "largest vertex count for exhaustive sweeps");
    selfcheck->callback([&] { rc = run_selfcheck(max_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InputParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
