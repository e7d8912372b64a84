#include "pathmorse/digraph.hpp"

#include <algorithm>

namespace pathmorse {

Digraph::Digraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges,
                 std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int v = 0; v < n_; ++v) labels_.push_back("v" + std::to_string(v));
    } else if (static_cast<int>(labels_.size()) != n_) {
        throw std::invalid_argument("label count does not match vertex count");
    }

    out_.assign(n_, {});
    in_.assign(n_, {});
    adj_.assign(n_, std::vector<char>(n_, 0));
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw std::invalid_argument("edge endpoint not a declared vertex");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop edge at vertex " + labels_[u]);
        }
        if (adj_[u][v]) {
            throw std::invalid_argument("duplicate edge " + labels_[u] + " -> " + labels_[v]);
        }
        adj_[u][v] = 1;
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& nb : out_) std::sort(nb.begin(), nb.end());
    for (auto& nb : in_) std::sort(nb.begin(), nb.end());
    std::sort(edges_.begin(), edges_.end());
}

bool is_transitive(const Digraph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.out_neighbors(u)) {
            for (VertexId w : g.out_neighbors(v)) {
                if (u == w) return false;  // would need the self-loop u -> u
                if (!g.has_edge(u, w)) return false;
            }
        }
    }
    return true;
}

bool contains_triangle(const Digraph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.out_neighbors(u)) {
            for (VertexId w : g.out_neighbors(v)) {
                if (w != u && g.has_edge(u, w)) return true;
            }
        }
    }
    return false;
}

bool contains_square(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        for (VertexId c = 0; c < g.vertex_count(); ++c) {
            if (a == c) continue;
            int mids = 0;
            for (VertexId b : g.out_neighbors(a)) {
                if (b != c && g.has_edge(b, c)) ++mids;
            }
            if (mids >= 2) return true;
        }
    }
    return false;
}

bool contains_triangle_or_square(const Digraph& g) {
    return contains_triangle(g) || contains_square(g);
}

bool on_directed_loop(const Digraph& g, VertexId v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("unknown vertex");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        if (seen[x]) continue;
        seen[x] = 1;
        for (VertexId y : g.out_neighbors(x)) stack.push_back(y);
    }
    return false;
}

Digraph box_product(const Digraph& g, const Digraph& h) {
    const int nh = h.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels;
    labels.reserve(std::size_t(g.vertex_count()) * nh);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (VertexId y = 0; y < nh; ++y) {
            labels.push_back("(" + g.label(x) + "," + h.label(y) + ")");
        }
    }
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (VertexId y = 0; y < nh; ++y) {
            for (VertexId y2 : h.out_neighbors(y)) edges.push_back({x * nh + y, x * nh + y2});
            for (VertexId x2 : g.out_neighbors(x)) edges.push_back({x * nh + y, x2 * nh + y});
        }
    }
    return Digraph(g.vertex_count() * nh, std::move(edges), std::move(labels));
}

bool check_digraph_map(const Digraph& g, const Digraph& h, const std::vector<VertexId>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count()) {
        throw std::invalid_argument("vertex map is not total");
    }
    for (VertexId x : f) {
        if (x < 0 || x >= h.vertex_count()) {
            throw std::invalid_argument("vertex map image outside the codomain");
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (f[u] != f[v] && !h.has_edge(f[u], f[v])) return false;
    }
    return true;
}

Digraph directed_interval() { return Digraph(2, {{0, 1}}, {"0", "1"}); }

}  // namespace pathmorse
