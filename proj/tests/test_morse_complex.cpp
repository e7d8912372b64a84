#include "pathmorse/morse_complex.hpp"

#include "pathmorse/generators.hpp"

#include <doctest.h>

using namespace pathmorse;

namespace {
Path P(std::vector<VertexId> v) { return Path(std::move(v)); }

MorseFunction F(std::vector<int> values) {
    MorseFunction f;
    for (int v : values) f.values.push_back(Rational(v));
    return f;
}

Digraph triangle() { return Digraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
}  // namespace

TEST_CASE("path basis check on transitive and thin digraphs") {
    PathBasisCheck ok = check_path_basis(triangle(), 3);
    CHECK(ok.ok);
    CHECK(ok.basis[2].size() == 1);
    CHECK(ok.full[2]);

    // the line digraph has an allowed 2-path but omega_2 = 0: basis empty
    Digraph line(3, {{0, 1}, {1, 2}});
    PathBasisCheck thin = check_path_basis(line, 3);
    CHECK(thin.ok);
    CHECK(thin.basis[2].empty());
    CHECK_FALSE(thin.full[2]);

    // the square has omega_2 of dimension 1 spanned by a difference, which
    // is not a path basis
    Digraph square(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    PathBasisCheck bad = check_path_basis(square, 3);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failed_dimension == 2);
}

TEST_CASE("partition on the triangle example") {
    Digraph g = triangle();
    MorseFunction f = F({1, 0, 2});
    PathBasisCheck basis = check_path_basis(g, 3);
    REQUIRE(basis.ok);
    Matching m = restrict_to_basis(build_matching(g, f, 3), basis.basis);
    BasisPartition part = partition_basis(basis.basis, m);
    CHECK(part.critical[0] == std::vector<Path>{P({1})});
    CHECK(part.lower[0] == std::vector<Path>{P({0}), P({2})});
    CHECK(part.upper[1] == std::vector<Path>{P({0, 1}), P({1, 2})});
    CHECK(part.lower[1] == std::vector<Path>{P({0, 2})});
    CHECK(part.upper[2] == std::vector<Path>{P({0, 1, 2})});
    CHECK(part.critical[1].empty());
    CHECK(part.critical[2].empty());
}

TEST_CASE("basis restriction drops pairs that leave the basis") {
    // on the line digraph the pair (v1v2, v0v1v2) exists combinatorially,
    // but v0v1v2 is not a basis element; the restriction must drop it or the
    // Morse complex would lose the critical edge v1v2
    Digraph line(3, {{0, 1}, {1, 2}});
    MorseFunction f = F({0, 1, 2});
    Matching full = build_matching(line, f, 3);
    CHECK(full.size() == 2);
    REQUIRE(full.pair_of_upper(P({0, 1, 2})) != nullptr);

    PathBasisCheck basis = check_path_basis(line, 3);
    Matching restricted = restrict_to_basis(full, basis.basis);
    CHECK(restricted.size() == 1);
    CHECK(restricted.pair_of_upper(P({0, 1, 2})) == nullptr);

    BasisPartition part = partition_basis(basis.basis, restricted);
    CHECK(part.critical[0] == std::vector<Path>{P({0}), P({2})});
    CHECK(part.critical[1] == std::vector<Path>{P({1, 2})});

    MorseComplexData data = build_morse_complex(line, f, 2);
    REQUIRE(data.critical[1].size() == 1);
    // boundary of the surviving critical edge: transport of v2 - v1
    // lands on e_{v2} - e_{v0}
    REQUIRE(data.boundary[1].rows() == 2);
    CHECK(data.boundary[1].at(0, 0) == -1);
    CHECK(data.boundary[1].at(1, 0) == 1);

    HomologyReport morse = morse_homology(line, f, 2);
    HomologyReport direct = homology(line, 2);
    CHECK(morse.betti == direct.betti);
}

TEST_CASE("morse complex of the triangle example") {
    MorseComplexData data = build_morse_complex(triangle(), F({1, 0, 2}), 2);
    CHECK(data.critical[0] == std::vector<Path>{P({1})});
    CHECK(data.critical[1].empty());
    CHECK(data.critical[2].empty());
    HomologyReport r = morse_homology(triangle(), F({1, 0, 2}), 2);
    CHECK(r.betti == std::vector<int>{1, 0, 0});
}

TEST_CASE("trivial function gives the identity morse complex") {
    // empty matching: every basis element is critical and the morse boundary
    // is the restriction of the ordinary boundary, matrix for matrix
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        InstanceParams params;
        params.vertices = 5;
        params.edge_percent = 45;
        Digraph g = gen_instance(InstanceKind::transitive_dag, params, seed);
        GeneratedMorse gen = generate_morse(g, seed, MorseStrategy::trivial);
        MorseComplexData data = build_morse_complex(g, gen.f, 3);
        OmegaComplex omega(g, data.top);
        for (int n = 0; n <= data.top; ++n) {
            REQUIRE(static_cast<int>(data.critical[n].size()) == omega.basis(n).dim());
            if (n == 0) continue;
            QMatrix direct = omega.boundary_of(n);
            const QMatrix& morse = data.boundary[n];
            REQUIRE(morse.cols() == direct.cols());
            REQUIRE(morse.rows() == direct.rows());
            for (int r = 0; r < morse.rows(); ++r) {
                for (int c = 0; c < morse.cols(); ++c) {
                    CHECK(morse.at(r, c) == direct.at(r, c));
                }
            }
        }
    }
}

TEST_CASE("morse boundary squares to zero") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        InstanceParams params;
        params.vertices = 6;
        params.edge_percent = 40;
        Digraph g = gen_instance(InstanceKind::transitive_dag, params, seed);
        GeneratedMorse gen = generate_morse(g, seed, MorseStrategy::multi_zero);
        MorseComplexData data = build_morse_complex(g, gen.f, 3);
        for (int n = 1; n + 1 <= data.top; ++n) {
            const QMatrix& a = data.boundary[n];
            const QMatrix& b = data.boundary[n + 1];
            for (int i = 0; i < a.rows(); ++i) {
                for (int j = 0; j < b.cols(); ++j) {
                    Rational acc = 0;
                    for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
                    CHECK(acc == 0);
                }
            }
        }
    }
}

TEST_CASE("morse boundary equals the alternating path sum") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        InstanceParams params;
        params.vertices = 5;
        params.edge_percent = 50;
        Digraph g = gen_instance(InstanceKind::transitive_dag, params, seed);
        GeneratedMorse gen = generate_morse(g, seed + 100, MorseStrategy::multi_zero);

        PathBasisCheck basis = check_path_basis(g, 4);
        REQUIRE(basis.ok);
        Matching m = restrict_to_basis(build_matching(g, gen.f, 4), basis.basis);
        BasisPartition part = partition_basis(basis.basis, m);

        for (int n = 1; n <= 3; ++n) {
            for (const Path& b : part.critical[n]) {
                Chain direct = morse_boundary(b, part, m);
                Chain from_paths(n - 1);
                for (const AlternatingPath& ap : alternating_paths(b, part, m)) {
                    from_paths.add(ap.tail, ap.coefficient);
                }
                CAPTURE(seed);
                CAPTURE(b.to_string());
                CHECK(direct == from_paths);
            }
        }
    }
}

TEST_CASE("alternating path enumeration refuses a cyclic matching") {
    std::vector<MatchedPair> pairs;
    pairs.push_back({P({0}), P({0, 1}), -1});
    pairs.push_back({P({1}), P({1, 2}), -1});
    pairs.push_back({P({2}), P({2, 0}), -1});
    Matching m(std::move(pairs));
    BasisPartition part;
    part.top = 1;
    part.upper.assign(2, {});
    part.lower.assign(2, {});
    part.critical.assign(2, {});
    CHECK_THROWS_AS(alternating_paths(P({0, 1}), part, m), std::invalid_argument);
}

TEST_CASE("theorem 1 verification passes on the triangle example") {
    Theorem1Report r = verify_theorem_1(triangle(), F({1, 0, 2}), 2);
    CHECK(r.pass);
    CHECK(r.basis_ok);
    CHECK(r.betti_direct == std::vector<int>{1, 0, 0});
    CHECK(r.betti_morse == std::vector<int>{1, 0, 0});
    CHECK(r.pair_count == 3);
    CHECK(r.critical_counts[0] == 1);
    CHECK(r.dimension_accounting);
    CHECK(r.failures.empty());
}

TEST_CASE("theorem 1 verification fails loudly off a path basis") {
    Digraph square(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    CHECK_THROWS_AS(verify_theorem_1(square, F({1, 2, 3, 4}), 2), std::invalid_argument);
}

TEST_CASE("assemble rejects an invalid function with the witness detail") {
    CHECK_THROWS_AS(build_morse_complex(triangle(), F({0, 0, 2}), 2), std::invalid_argument);
}
