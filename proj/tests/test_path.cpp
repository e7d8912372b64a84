#include "pathmorse/path.hpp"

#include "pathmorse/core.hpp"

#include <doctest.h>

using namespace pathmorse;

namespace {
Path P(std::vector<VertexId> v) { return Path(std::move(v)); }
}

TEST_CASE("path basics") {
    CHECK_THROWS_AS(Path({}), std::invalid_argument);
    Path p = P({0, 1, 2});
    CHECK(p.dimension() == 2);
    CHECK(p.length() == 3);
    CHECK(p.front() == 0);
    CHECK(p.back() == 2);
    CHECK(p.is_elementary());
    CHECK(p.is_simplicial());
    CHECK_FALSE(p.is_closed());
    CHECK(P({0, 1, 0}).is_closed());
    CHECK(P({0, 1, 0}).is_elementary());
    CHECK_FALSE(P({0, 1, 0}).is_simplicial());
    CHECK_FALSE(P({0, 0}).is_elementary());
}

TEST_CASE("faces and insertions are formal") {
    Path p = P({0, 1, 2});
    CHECK(p.face(0) == P({1, 2}));
    CHECK(p.face(1) == P({0, 2}));
    CHECK(p.face(2) == P({0, 1}));
    CHECK_THROWS_AS(p.face(3), std::out_of_range);
    // degenerate results are representable
    CHECK(P({0, 1, 0}).face(1) == P({0, 0}));
    CHECK(p.insert_after(-1, 5) == P({5, 0, 1, 2}));
    CHECK(p.insert_after(0, 5) == P({0, 5, 1, 2}));
    CHECK(p.insert_after(2, 5) == P({0, 1, 2, 5}));
    CHECK_THROWS_AS(p.insert_after(3, 5), std::out_of_range);
    // round-trip: inserting after j then removing position j+1
    CHECK(p.insert_after(1, 7).face(2) == p);
}

TEST_CASE("allowed path enumeration") {
    Digraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(enumerate_allowed_paths(triangle, 0).size() == 3);
    CHECK(enumerate_allowed_paths(triangle, 1).size() == 3);
    auto two = enumerate_allowed_paths(triangle, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == P({0, 1, 2}));
    CHECK(enumerate_allowed_paths(triangle, 3).empty());

    Digraph cycle2(2, {{0, 1}, {1, 0}});
    auto loops = enumerate_allowed_paths(cycle2, 2);
    REQUIRE(loops.size() == 2);
    CHECK(loops[0] == P({0, 1, 0}));
    CHECK(loops[1] == P({1, 0, 1}));

    // lexicographic order
    Digraph g(3, {{2, 0}, {0, 1}, {2, 1}});
    auto edges = enumerate_allowed_paths(g, 1);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == P({0, 1}));
    CHECK(edges[1] == P({2, 0}));
    CHECK(edges[2] == P({2, 1}));
}

TEST_CASE("enumeration respects the budget") {
    // complete DAG on 9 vertices has lots of long paths
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < 9; ++u) {
        for (VertexId v = u + 1; v < 9; ++v) edges.push_back({u, v});
    }
    Digraph g(9, std::move(edges));
    Budget tight;
    tight.path_limit = 10;
    CHECK_THROWS_AS(enumerate_allowed_paths(g, 4, tight), BudgetError);
}

TEST_CASE("removable and addable vertices") {
    // from the definitions: in {v0->v1, v1->v2, v0->v2, v2->v0}, v1 is
    // removable in v0v1v2 while v2 is not removable in v0v2v0 or v1v2v0
    Digraph g(3, {{0, 1}, {1, 2}, {0, 2}, {2, 0}});
    CHECK(removable_vertices(g, P({0, 1, 2})) == std::vector<int>{0, 1, 2});
    CHECK(removable_vertices(g, P({0, 2, 0})) == std::vector<int>{0, 2});
    CHECK(removable_vertices(g, P({1, 2, 0})) == std::vector<int>{0, 2});
    CHECK(removable_vertices(g, P({0})).empty());  // single vertex: no faces

    CHECK(allowed_face(g, P({0, 1, 2}), 1).has_value());
    CHECK_FALSE(allowed_face(g, P({0, 2, 0}), 1).has_value());
    CHECK_FALSE(allowed_face(g, P({0}), 0).has_value());

    Digraph line(3, {{0, 1}, {1, 2}});
    auto adds = addable_vertices(line, P({0}));
    REQUIRE(adds.size() == 1);
    CHECK(adds[0] == std::pair<VertexId, int>{1, 0});
    auto cofaces = allowed_cofaces(line, P({0, 2}));
    // 0->2 is not even an edge, but insertion can still give allowed paths
    REQUIRE(cofaces.size() == 1);
    CHECK(cofaces[0] == P({0, 1, 2}));
}

TEST_CASE("intermediate path dichotomy on a square") {
    Digraph square(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    // alpha = 013 > gamma = 01 > beta = 0: gamma' = 03? no, 0->3 absent;
    // candidates are faces of alpha containing beta as a face
    auto res = find_intermediate(square, P({0, 1, 3}), P({0}), P({0, 1}));
    // removing v1 v3 (consecutive) from alpha leaves 0
    REQUIRE(std::holds_alternative<ConsecutivePairRemoval>(res));
    CHECK(std::get<ConsecutivePairRemoval>(res).position == 1);

    // alpha = 013 > gamma = 01 > beta = 1: gamma' = 13 works
    auto res2 = find_intermediate(square, P({0, 1, 3}), P({1}), P({0, 1}));
    REQUIRE(std::holds_alternative<Path>(res2));
    CHECK(std::get<Path>(res2) == P({1, 3}));

    CHECK_THROWS_AS(find_intermediate(square, P({0, 1, 3}), P({2}), P({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("first-repetition decomposition") {
    // a simplicial path is a single segment
    Decomposition d0 = decompose_path(P({0, 1, 2}));
    REQUIRE(d0.segments.size() == 1);
    CHECK(d0.segments[0] == P({0, 1, 2}));
    CHECK(d0.loop_count() == 0);

    // a pure loop decomposes as vertex * loop * vertex
    Decomposition d1 = decompose_path(P({3, 4, 3}));
    REQUIRE(d1.segments.size() == 3);
    CHECK(d1.segments[0] == P({3}));
    CHECK(d1.segments[1] == P({3, 4, 3}));
    CHECK(d1.segments[2] == P({3}));
    CHECK(d1.segment_is_closed(1));
    CHECK(d1.loop_count() == 1);
    CHECK(d1.concatenate() == P({3, 4, 3}));
}

TEST_CASE("concatenation round trip on random sequences") {
    DetRng rng(20240817);
    for (int it = 0; it < 1000; ++it) {
        int len = 1 + static_cast<int>(rng.below(9));
        std::vector<VertexId> v;
        v.push_back(static_cast<VertexId>(rng.below(5)));
        while (static_cast<int>(v.size()) < len) {
            VertexId next;
            do {
                next = static_cast<VertexId>(rng.below(5));
            } while (next == v.back());  // keep it elementary
            v.push_back(next);
        }
        Path p(v);
        Decomposition d = decompose_path(p);
        CHECK(d.concatenate() == p);
        CHECK(d.segments.size() % 2 == 1);
        for (std::size_t i = 0; i < d.segments.size(); ++i) {
            if (d.segment_is_closed(i)) {
                CHECK(d.segments[i].is_closed());
            } else {
                CHECK(d.segments[i].is_simplicial());
            }
            if (i > 0) CHECK(d.segments[i - 1].back() == d.segments[i].front());
        }
    }
}
