#pragma once

#include "pathmorse/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pathmorse {

/// Finite simple digraph: no self-loops, no parallel edges. Vertices are dense
/// ids 0..n-1 in declaration order; labels are carried for reporting only.
class Digraph {
  public:
    Digraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges,
            std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(VertexId u, VertexId v) const { return adj_[u][v] != 0; }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[v]; }
    const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_[v]; }
    int out_degree(VertexId v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(VertexId v) const { return static_cast<int>(in_[v].size()); }

    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    int n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> out_, in_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::string> labels_;
};

/// u -> v and v -> w always implies u -> w. Composable pairs with u == w
/// require the absent self-loop u -> u, so any 2-cycle breaks transitivity.
bool is_transitive(const Digraph& g);

/// Distinct v0, v1, v2 with v0 -> v1 -> v2 and v0 -> v2.
bool contains_triangle(const Digraph& g);

/// Distinct v0, v1, v1', v2 with v0 -> v1 -> v2 and v0 -> v1' -> v2.
bool contains_square(const Digraph& g);

bool contains_triangle_or_square(const Digraph& g);

/// v lies on a directed loop, i.e. v reaches itself by a nonempty walk.
bool on_directed_loop(const Digraph& g, VertexId v);

/// Box product: vertices V(G) x V(H) (id = x * |V(H)| + y), edges
/// (x,y) -> (x',y) for x -> x' and (x,y) -> (x,y') for y -> y'.
Digraph box_product(const Digraph& g, const Digraph& h);

/// Is the vertex map f: V(G) -> V(H) a digraph map, i.e. does every edge
/// u -> v of G satisfy f(u) = f(v) or f(u) -> f(v) in H?
bool check_digraph_map(const Digraph& g, const Digraph& h, const std::vector<VertexId>& f);

/// The directed line I_1 with vertices {0, 1} and the single edge 0 -> 1.
Digraph directed_interval();

}  // namespace pathmorse
