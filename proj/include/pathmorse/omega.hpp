#pragma once

#include "pathmorse/chain.hpp"
#include "pathmorse/linalg.hpp"

#include <vector>

namespace pathmorse {

/// Basis of Omega_n(G) = P_n(G) intersect boundary^{-1} P_{n-1}(G): chains of
/// allowed n-paths whose boundary is again supported on allowed paths.
/// Generators are kept in reduced echelon form over the canonical
/// (lexicographic) path order, which makes the basis unique.
struct OmegaBasis {
    int dimension;
    std::vector<Path> allowed;      // canonical basis of P_n(G)
    std::vector<Chain> generators;  // reduced echelon form

    int path_count() const { return static_cast<int>(allowed.size()); }
    int dim() const { return static_cast<int>(generators.size()); }
};

OmegaBasis omega_basis(const Digraph& g, int n, const Budget& budget = {});

/// Omega bases for dimensions 0..top plus the boundary matrices needed for
/// homology: boundary_of(n) expresses the boundary of each Omega_n generator
/// in the coordinates of the allowed (n-1)-paths.
class OmegaComplex {
  public:
    OmegaComplex(const Digraph& g, int top, const Budget& budget = {});

    int top() const { return static_cast<int>(bases_.size()) - 1; }
    const OmegaBasis& basis(int n) const { return bases_[n]; }

    /// Matrix of the boundary of Omega_n generators over allowed (n-1)-path
    /// coordinates; rows = allowed (n-1)-paths, cols = generators.
    QMatrix boundary_of(int n) const;

    /// Rank of the boundary restricted to Omega_n (0 for n = 0 or when
    /// Omega_n is trivial).
    int boundary_rank(int n) const;

  private:
    std::vector<OmegaBasis> bases_;
};

/// Integer counterpart: the Omega_n lattice (kernel lattice of the
/// non-allowed-face projection over Z) and boundary matrices expressed in the
/// lattice bases. Generators are integral chains; the lattice is saturated,
/// so expressing boundaries in it stays integral.
struct OmegaLattice {
    int dimension;
    std::vector<Path> allowed;
    std::vector<Chain> generators;  // integral coefficients

    int dim() const { return static_cast<int>(generators.size()); }
};

class OmegaComplexZ {
  public:
    OmegaComplexZ(const Digraph& g, int top, const Budget& budget = {});

    int top() const { return static_cast<int>(bases_.size()) - 1; }
    const OmegaLattice& basis(int n) const { return bases_[n]; }

    /// Boundary of the Omega_n lattice generators in the Omega_{n-1} lattice
    /// basis (k_{n-1} x k_n integer matrix).
    ZMatrix boundary_in_lattice(int n) const;

  private:
    std::vector<OmegaLattice> bases_;
};

}  // namespace pathmorse
