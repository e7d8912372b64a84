#pragma once

#include "pathmorse/digraph.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pathmorse {

/// Elementary path: a nonempty vertex sequence v0 v1 ... vn of dimension n.
/// Sequences produced by face maps may contain equal consecutive vertices;
/// such degenerate sequences are valid Path values (never allowed in any
/// digraph) so that chains over the ambient sequence module stay closed under
/// the boundary operator.
class Path {
  public:
    explicit Path(std::vector<VertexId> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    int length() const { return static_cast<int>(vertices_.size()); }
    VertexId operator[](int i) const { return vertices_[i]; }
    VertexId front() const { return vertices_.front(); }
    VertexId back() const { return vertices_.back(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    /// Consecutive vertices all distinct.
    bool is_elementary() const;
    /// All vertices pairwise distinct.
    bool is_simplicial() const;
    /// Positive dimension with equal endpoints.
    bool is_closed() const { return dimension() >= 1 && front() == back(); }
    /// Every consecutive pair is an edge of g.
    bool allowed_in(const Digraph& g) const;

    /// Face map d_i: drop the vertex at position i (0 <= i <= dimension).
    /// Purely formal; the result may be degenerate or non-allowed.
    Path face(int i) const;

    /// Insert vertex u after position j (-1 <= j <= dimension). Formal.
    Path insert_after(int j, VertexId u) const;

    std::string to_string() const;
    std::string to_string(const Digraph& g) const;

    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        return a.vertices_ <=> b.vertices_;
    }
    friend bool operator==(const Path& a, const Path& b) = default;

  private:
    std::vector<VertexId> vertices_;
};

/// All allowed elementary n-paths of g in lexicographic order. Throws
/// BudgetError once more than budget.path_limit paths would be produced.
std::vector<Path> enumerate_allowed_paths(const Digraph& g, int dimension,
                                          const Budget& budget = {});

/// d_i p when it is an allowed elementary path of g, absent otherwise
/// (always absent for dimension 0). Present for i = 0 and i = dimension when
/// the dimension is positive. Throws on a bad index.
std::optional<Path> allowed_face(const Digraph& g, const Path& p, int i);

/// Indices i with allowed_face(g, p, i) present: i = 0, i = n, or the edge
/// v_{i-1} -> v_{i+1} exists. Empty for dimension 0 (a single vertex has no
/// faces; its boundary is zero).
std::vector<int> removable_vertices(const Digraph& g, const Path& p);

/// All (u, j) with -1 <= j <= n such that inserting u after position j gives
/// an allowed elementary path: j = -1 needs u -> v0, j = n needs vn -> u,
/// interior j needs v_j -> u and u -> v_{j+1}. Sorted by (j, u).
std::vector<std::pair<VertexId, int>> addable_vertices(const Digraph& g, const Path& p);

/// Allowed elementary cofaces of p in g (deduplicated, lexicographic).
/// Distinct insertions always give distinct paths, so this has the same size
/// as addable_vertices(g, p).
std::vector<Path> allowed_cofaces(const Digraph& g, const Path& p);

/// Witness that beta arises from alpha by deleting the two consecutive
/// vertices at positions `position` and `position`+1.
struct ConsecutivePairRemoval {
    int position;
};

/// Given allowed paths alpha > gamma > beta (each one single-vertex removal
/// apart), return an allowed gamma' != gamma with alpha > gamma' > beta, or
/// the consecutive-pair witness when no such gamma' exists. Exactly one of
/// the two outcomes always holds; candidates are scanned in canonical order.
/// Throws std::invalid_argument when the inputs are not in face relation.
std::variant<Path, ConsecutivePairRemoval> find_intermediate(const Digraph& g, const Path& alpha,
                                                             const Path& beta, const Path& gamma);

/// Greedy first-repetition decomposition of an elementary path into
/// alternating simplicial segments and closed segments:
/// p = beta_1 * gamma_1 * beta_2 * ... * gamma_k * beta_{k+1},
/// where each beta is simplicial (possibly a single vertex), each gamma is
/// closed, and consecutive segments share their junction vertex.
struct Decomposition {
    std::vector<Path> segments;

    bool segment_is_closed(std::size_t index) const { return index % 2 == 1; }
    std::size_t loop_count() const { return segments.size() / 2; }
    Path concatenate() const;
};

Decomposition decompose_path(const Path& p);

}  // namespace pathmorse
