#pragma once

#include "pathmorse/omega.hpp"

#include <optional>
#include <vector>

namespace pathmorse {

enum class Ring { rational, integer };

struct HomologyReport {
    int max_dimension = 0;
    std::vector<int> betti;                          // 0..max_dimension
    std::vector<int> omega_dims;                     // 0..max_dimension
    std::optional<std::vector<std::vector<Integer>>> torsion;  // factors >= 2
    bool loop_warning = false;  // directed loops: nothing asserted above the cap
};

/// Path homology of g up to dimension n_max. Rational mode computes Betti
/// numbers by exact rank; integer mode additionally computes the invariant
/// factors of each homology group via Smith normal form (free rank always
/// equals the rational Betti number).
HomologyReport homology(const Digraph& g, int n_max, Ring ring = Ring::rational,
                        const Budget& budget = {});

/// Homology of an abstract finitely generated chain complex given by integer
/// boundary matrices a[n]: C_n -> C_{n-1} (a[0] maps to 0 and may be 0 x k).
/// Returns per-dimension (free rank, torsion factors).
struct IntegerHomology {
    std::vector<int> free_rank;
    std::vector<std::vector<Integer>> torsion;
};
IntegerHomology integer_complex_homology(const std::vector<ZMatrix>& a);

/// Rational Betti numbers of an abstract complex from rational boundary
/// matrices (same shape conventions).
std::vector<int> rational_complex_betti(const std::vector<QMatrix>& a);

struct InclusionReport {
    int max_dimension = 0;
    std::vector<int> betti_sub;
    std::vector<int> betti_ambient;
    std::vector<int> induced_rank;
    std::vector<bool> isomorphism;
    bool all_isomorphisms = true;
};

/// Induced map on rational path homology of an inclusion of digraphs.
/// to_ambient maps sub vertex ids injectively to ambient ids and must carry
/// every sub edge to an ambient edge; std::invalid_argument otherwise. An
/// empty map means the identity.
InclusionReport induced_inclusion(const Digraph& sub, const Digraph& ambient,
                                  const std::vector<VertexId>& to_ambient, int n_max,
                                  const Budget& budget = {});
InclusionReport induced_inclusion(const Digraph& sub, const Digraph& ambient, int n_max,
                                  const Budget& budget = {});

}  // namespace pathmorse
