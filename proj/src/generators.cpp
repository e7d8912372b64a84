#include "pathmorse/generators.hpp"

#include <map>

namespace pathmorse {

InstanceKind parse_instance_kind(const std::string& name) {
    static const std::map<std::string, InstanceKind> kinds{
        {"triangle", InstanceKind::triangle},
        {"square", InstanceKind::square},
        {"line", InstanceKind::line},
        {"cycle", InstanceKind::cycle},
        {"random", InstanceKind::random_digraph},
        {"transitive-dag", InstanceKind::transitive_dag},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw std::invalid_argument("unknown instance kind: " + name);
    return it->second;
}

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

Digraph make(int n, std::vector<std::pair<VertexId, VertexId>> edges) {
    return Digraph(n, std::move(edges), default_labels(n));
}

}  // namespace

Digraph gen_instance(InstanceKind kind, const InstanceParams& params, std::uint64_t seed) {
    if (params.edge_percent < 0 || params.edge_percent > 100) {
        throw std::invalid_argument("edge percentage out of range");
    }
    switch (kind) {
        case InstanceKind::triangle:
            return make(3, {{0, 1}, {1, 2}, {0, 2}});
        case InstanceKind::square:
            return make(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
        default:
            break;
    }

    int n = params.vertices;
    if (n < 1) throw std::invalid_argument("instance needs at least one vertex");
    if (n > params.vertex_cap) {
        throw std::invalid_argument("vertex count exceeds the cap of " +
                                    std::to_string(params.vertex_cap));
    }
    DetRng rng(seed);
    switch (kind) {
        case InstanceKind::line: {
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return make(n, std::move(edges));
        }
        case InstanceKind::cycle: {
            if (n < 2) throw std::invalid_argument("a cycle needs at least two vertices");
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            return make(n, std::move(edges));
        }
        case InstanceKind::random_digraph: {
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = 0; v < n; ++v) {
                    if (u == v) continue;
                    if (rng.chance(params.edge_percent, 100)) edges.emplace_back(u, v);
                }
            }
            return make(n, std::move(edges));
        }
        case InstanceKind::transitive_dag: {
            std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = u + 1; v < n; ++v) {
                    if (rng.chance(params.edge_percent, 100)) adj[u][v] = 1;
                }
            }
            // transitive closure along the id order (the DAG respects it)
            for (VertexId mid = 0; mid < n; ++mid) {
                for (VertexId u = 0; u < n; ++u) {
                    if (!adj[u][mid]) continue;
                    for (VertexId v = 0; v < n; ++v) {
                        if (adj[mid][v]) adj[u][v] = 1;
                    }
                }
            }
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = 0; v < n; ++v) {
                    if (adj[u][v]) edges.emplace_back(u, v);
                }
            }
            return make(n, std::move(edges));
        }
        default:
            throw std::invalid_argument("unhandled instance kind");
    }
}

}  // namespace pathmorse
