#pragma once

#include "pathmorse/homology.hpp"
#include "pathmorse/morse.hpp"

#include <string>
#include <vector>

namespace pathmorse {

/// Outcome of checking whether the allowed paths form a basis of Omega_n in
/// every dimension up to the cap. Per dimension, either every allowed
/// n-path has an allowed-supported boundary (then Omega_n = P_n and the
/// allowed paths are the basis) or, for n >= 2, Omega_n = 0 (empty basis).
struct PathBasisCheck {
    bool ok = false;
    int top = 0;
    std::vector<std::vector<Path>> basis;  // per dimension 0..top
    std::vector<bool> full;                // basis is all allowed paths
    int failed_dimension = -1;
};

PathBasisCheck check_path_basis(const Digraph& g, int n_max, const Budget& budget = {});

struct BasisPartition {
    int top = 0;
    std::vector<std::vector<Path>> upper;     // U_n: upper pair members
    std::vector<std::vector<Path>> lower;     // D_n: lower pair members
    std::vector<std::vector<Path>> critical;  // C_n: the rest
};

/// Drop pairs with a member outside the basis (the partition definitions
/// quantify over basis elements only). A sub-matching of an acyclic matching
/// stays acyclic.
Matching restrict_to_basis(const Matching& m, const std::vector<std::vector<Path>>& basis);

/// Classify each basis element per dimension. Throws std::invalid_argument
/// when a pair member is missing from the basis.
BasisPartition partition_basis(const std::vector<std::vector<Path>>& basis, const Matching& m);

/// Zigzag b > a1 < b1 > a2 < ... > ak < bk > a through matched pairs, with
/// the pair lower left by a different face each time. The coefficient keeps
/// the literal quotient form
///   m(p) = (-1)^k * (off-pair incidences) / (pair incidences).
struct AlternatingPath {
    Path head;
    Path tail;
    std::vector<MatchedPair> interior;
    Rational coefficient;
};

/// All alternating paths from head to a critical tail one dimension down,
/// depth-first, k = 0 included. The matching must be acyclic (checked).
std::vector<AlternatingPath> alternating_paths(const Path& head, const BasisPartition& partition,
                                               const Matching& m);

struct MorseComplexData {
    int top = 0;
    std::vector<std::vector<Path>> critical;  // C_n per dimension
    std::vector<QMatrix> boundary;            // boundary[n]: C_n -> C_{n-1}
};

/// Morse boundary of one critical element as a chain over C_{n-1}, computed
/// with memoized downstream contributions (sound under acyclicity).
Chain morse_boundary(const Path& b, const BasisPartition& partition, const Matching& m);

/// Assemble the full Morse complex for (g, f). Preconditions (path basis,
/// validation, acyclicity) are checked; failures throw std::invalid_argument
/// with an explanation.
MorseComplexData build_morse_complex(const Digraph& g, const MorseFunction& f, int n_max,
                                     const Budget& budget = {});

/// Homology of the Morse complex, same report shape as homology().
HomologyReport morse_homology(const Digraph& g, const MorseFunction& f, int n_max,
                              Ring ring = Ring::rational, const Budget& budget = {});

struct Theorem1Report {
    bool pass = false;
    bool basis_ok = false;
    int max_dimension = 0;
    std::vector<int> betti_direct;
    std::vector<int> betti_morse;
    std::vector<int> omega_dims;
    std::vector<int> critical_counts;  // |C_n|
    std::vector<int> upper_counts;     // |U_n|
    std::vector<int> lower_counts;     // |D_n|
    std::size_t pair_count = 0;
    bool dimension_accounting = false;  // dim Omega_n = |C_n|+|U_n|+|D_n|, |U_{n+1}|=|D_n|
    std::vector<std::vector<Integer>> torsion_direct;  // integer mode only
    std::vector<std::vector<Integer>> torsion_morse;
    bool torsion_match = true;
    std::vector<std::string> failures;
};

/// Machine check that the Morse complex computes path homology: Betti
/// equality per dimension plus the dimension accounting
/// dim Omega_n = |C_n| + |U_n| + |D_n| with |U_{n+1}| = |D_n| (each matched
/// pair contributes one atom complex: identity boundary, no homology).
/// Integer mode also compares invariant factors.
Theorem1Report verify_theorem_1(const Digraph& g, const MorseFunction& f, int n_max,
                                Ring ring = Ring::rational, const Budget& budget = {});

}  // namespace pathmorse
