#include "pathmorse/chain.hpp"

#include "oracle.hpp"
#include "pathmorse/core.hpp"

#include <doctest.h>

using namespace pathmorse;

namespace {
Path P(std::vector<VertexId> v) { return Path(std::move(v)); }
}

TEST_CASE("chain arithmetic") {
    Chain c(1);
    CHECK(c.is_zero());
    c.add(P({0, 1}), 2);
    c.add(P({1, 2}), Rational(1, 2));
    CHECK(c.term_count() == 2);
    CHECK(c.coefficient(P({0, 1})) == 2);
    CHECK(c.coefficient(P({2, 0})) == 0);
    c.add(P({0, 1}), -2);  // cancels away
    CHECK(c.term_count() == 1);
    CHECK_THROWS_AS(c.add(P({0}), 1), std::invalid_argument);  // dimension mismatch

    Chain d(1);
    d.add(P({1, 2}), Rational(1, 2));
    CHECK((c - d).is_zero());
    CHECK((c + d).coefficient(P({1, 2})) == 1);
    CHECK((c * 4).coefficient(P({1, 2})) == 2);
}

TEST_CASE("boundary signs on a 2-path") {
    Chain b = boundary(P({0, 1, 2}));
    CHECK(b.dimension() == 1);
    CHECK(b.coefficient(P({1, 2})) == 1);
    CHECK(b.coefficient(P({0, 2})) == -1);
    CHECK(b.coefficient(P({0, 1})) == 1);
}

TEST_CASE("boundary keeps degenerate faces as formal terms") {
    Chain b = boundary(P({0, 1, 0}));
    CHECK(b.coefficient(P({1, 0})) == 1);
    CHECK(b.coefficient(P({0, 0})) == -1);  // degenerate, not dropped
    CHECK(b.coefficient(P({0, 1})) == 1);
}

TEST_CASE("boundary of dimension 0 is zero") {
    CHECK(boundary(P({3})).is_zero());
    CHECK(boundary(P({3})).dimension() == -1);
}

TEST_CASE("boundary of boundary vanishes on random sequences") {
    DetRng rng(21);
    for (int it = 0; it < 300; ++it) {
        int len = 2 + static_cast<int>(rng.below(6));
        std::vector<VertexId> v;
        for (int i = 0; i < len; ++i) v.push_back(static_cast<VertexId>(rng.below(4)));
        CHECK(boundary(boundary(P(v))).is_zero());
    }
}

TEST_CASE("boundary matches the oracle term by term") {
    DetRng rng(22);
    for (int it = 0; it < 200; ++it) {
        int len = 1 + static_cast<int>(rng.below(6));
        std::vector<VertexId> v;
        for (int i = 0; i < len; ++i) v.push_back(static_cast<VertexId>(rng.below(5)));
        Chain b = boundary(P(v));
        auto expected = oracle::seq_boundary(std::vector<int>(v.begin(), v.end()));
        CHECK(b.term_count() == expected.size());
        for (const auto& [seq, coeff] : expected) {
            CHECK(b.coefficient(P(std::vector<VertexId>(seq.begin(), seq.end()))) == coeff);
        }
    }
}

TEST_CASE("allowed support detection") {
    Digraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(boundary(P({0, 1, 2})).supported_on_allowed(triangle));
    Digraph line(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(boundary(P({0, 1, 2})).supported_on_allowed(line));  // 02 not allowed
}

TEST_CASE("chain renders with signs and coefficients") {
    Chain c(1);
    c.add(P({0, 1}), 1);
    c.add(P({1, 2}), Rational(-3, 2));
    std::string s = c.to_string();
    CHECK(s.find("3/2") != std::string::npos);
    CHECK(s.find('-') != std::string::npos);
}
