#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "otg/otg.hpp"
#include "support/oracles.hpp"

using otg::BigInt;
using otg::parse_sequence;
using otg::TernarySequence;

TEST_CASE("class counts follow the three-term recurrence") {
    REQUIRE(otg::count_classes(1) == otg::ClassCount{1, 1});
    REQUIRE(otg::count_classes(2) == otg::ClassCount{2, 2});
    REQUIRE(otg::count_classes(3).count == 5);
    REQUIRE(otg::count_classes(4).count == 13);
    REQUIRE(otg::count_classes(5).count == 34);
    REQUIRE(otg::count_classes(12).count == 28657);
    REQUIRE_THROWS_AS(otg::count_classes(0), std::domain_error);
    REQUIRE_THROWS_AS(otg::count_classes(-1), std::domain_error);
}

TEST_CASE("class counts are odd-index Fibonacci numbers") {
    REQUIRE(otg::fibonacci(0) == 0);
    REQUIRE(otg::fibonacci(1) == 1);
    REQUIRE(otg::fibonacci(6) == 8);
    REQUIRE(otg::fibonacci(9) == 34);
    REQUIRE_THROWS_AS(otg::fibonacci(-2), std::domain_error);

    for (int n = 1; n <= 60; ++n)
        REQUIRE(otg::count_classes(n).count == otg::fibonacci(2 * n - 1));
}

TEST_CASE("the enumerator and the recurrence agree") {
    for (int n = 1; n <= 12; ++n)
        REQUIRE(BigInt(otg::enumerate_canonical(n).size()) == otg::count_classes(n).count);
}

TEST_CASE("the labeled sweep agrees with the recurrence") {
    for (int n = 1; n <= 5; ++n)
        REQUIRE(otg::brute_count_classes(n).count == otg::count_classes(n).count);
    REQUIRE_THROWS_AS(otg::brute_count_classes(6), std::invalid_argument);
    REQUIRE_THROWS_AS(otg::brute_count_classes(0), std::domain_error);
}

TEST_CASE("orientation class counts of an undirected member") {
    REQUIRE(otg::count_transitive_orientations(parse_sequence("++0+0*")) == 6);
    REQUIRE(otg::count_transitive_orientations(parse_sequence("+0*")) == 2);
    REQUIRE(otg::count_transitive_orientations(parse_sequence("++*")) == 1);
    REQUIRE(otg::count_transitive_orientations(parse_sequence("00*")) == 1);
    REQUIRE(otg::count_transitive_orientations(parse_sequence("*")) == 1);
    REQUIRE_THROWS_AS(otg::count_transitive_orientations(parse_sequence("+-0*")),
                      std::domain_error);
}

TEST_CASE("orientation class enumeration, exact small cases") {
    auto strings = [](const char* b) {
        std::vector<std::string> out;
        for (const auto& s : otg::enumerate_orientation_classes(parse_sequence(b)))
            out.push_back(s.str());
        return out;
    };
    REQUIRE(strings("++0+0*") == std::vector<std::string>{"++0+0*", "++0-0*", "+-0+0*",
                                                          "+-0-0*", "--0+0*", "--0-0*"});
    REQUIRE(strings("+0*") == std::vector<std::string>{"+0*", "-0*"});
    REQUIRE(strings("++*") == std::vector<std::string>{"++*"});
    REQUIRE_THROWS_AS(otg::enumerate_orientation_classes(parse_sequence("-0*")),
                      std::domain_error);
}

TEST_CASE("orientation classes are canonical, distinct, and shape preserving") {
    int failures = 0;
    for (int len = 0; len <= 7; ++len)
        otg::for_each_sequence(len, [&](const TernarySequence& s) {
            if (otg::has_minus(s)) return;
            const auto classes = otg::enumerate_orientation_classes(s);
            if (BigInt(classes.size()) != otg::count_transitive_orientations(s)) ++failures;
            const auto base = otg::threshold_build(s);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (!otg::is_canonical(classes[i])) ++failures;
                if (i > 0 && !(classes[i - 1] < classes[i])) ++failures;
                if (otg::magnitudes(classes[i]) != s) ++failures;
                if (otg::underlying(otg::dtg_build(classes[i])) != base) ++failures;
            }
        });
    REQUIRE(failures == 0);
}

TEST_CASE("orientation classes match the exhaustive orientation search") {
    // For every minus-free sequence, orienting each edge both ways and
    // bucketing the transitive results up to isomorphism must land exactly on
    // the enumerated classes.
    int failures = 0;
    for (int len = 0; len <= 5; ++len)
        otg::for_each_sequence(len, [&](const TernarySequence& s) {
            if (otg::has_minus(s)) return;
            const auto reps = oracle::transitive_orientation_classes(otg::threshold_build(s));
            const auto classes = otg::enumerate_orientation_classes(s);
            if (reps.size() != classes.size()) ++failures;
            std::vector<otg::OrientedGraph> built;
            for (const auto& c : classes) built.push_back(otg::dtg_build(c));
            for (std::size_t i = 0; i < built.size(); ++i) {
                for (std::size_t j = i + 1; j < built.size(); ++j)
                    if (otg::are_isomorphic_bruteforce(built[i], built[j])) ++failures;
                int hits = 0;
                for (const auto& r : reps)
                    if (otg::are_isomorphic_bruteforce(built[i], r)) ++hits;
                if (hits != 1) ++failures;
            }
        });
    REQUIRE(failures == 0);
}

TEST_CASE("classes whose newest vertex dominates count one size down") {
    for (int n = 2; n <= 10; ++n) {
        BigInt plus_headed = 0;
        for (const auto& s : otg::enumerate_canonical(n))
            if (s.length() > 0 && s[0] == otg::Symbol::plus) ++plus_headed;
        REQUIRE(plus_headed == otg::count_classes(n - 1).count);
    }
}
