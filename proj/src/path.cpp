#include "pathmorse/path.hpp"

#include <algorithm>
#include <set>

namespace pathmorse {

Path::Path(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("empty vertex sequence");
}

bool Path::is_elementary() const {
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i] == vertices_[i - 1]) return false;
    }
    return true;
}

bool Path::is_simplicial() const {
    std::set<VertexId> seen(vertices_.begin(), vertices_.end());
    return seen.size() == vertices_.size();
}

bool Path::allowed_in(const Digraph& g) const {
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        VertexId u = vertices_[i - 1], v = vertices_[i];
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) return false;
        if (!g.has_edge(u, v)) return false;
    }
    return !vertices_.empty() && vertices_[0] >= 0 && vertices_[0] < g.vertex_count();
}

Path Path::face(int i) const {
    if (i < 0 || i > dimension()) throw std::out_of_range("face index out of range");
    std::vector<VertexId> v = vertices_;
    v.erase(v.begin() + i);
    return Path(std::move(v));
}

Path Path::insert_after(int j, VertexId u) const {
    if (j < -1 || j > dimension()) throw std::out_of_range("insertion slot out of range");
    std::vector<VertexId> v = vertices_;
    v.insert(v.begin() + (j + 1), u);
    return Path(std::move(v));
}

std::string Path::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(vertices_[i]);
    }
    return s;
}

std::string Path::to_string(const Digraph& g) const {
    std::string s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += " ";
        s += g.label(vertices_[i]);
    }
    return s;
}

std::vector<Path> enumerate_allowed_paths(const Digraph& g, int dimension, const Budget& budget) {
    if (dimension < 0) throw std::invalid_argument("negative path dimension");
    std::vector<Path> result;
    std::vector<VertexId> current;
    std::size_t produced = 0;

    auto extend = [&](auto&& self, VertexId last, int remaining) -> void {
        if (remaining == 0) {
            if (++produced > budget.path_limit) {
                throw BudgetError("path budget exceeded while enumerating dimension " +
                                  std::to_string(dimension));
            }
            result.emplace_back(current);
            return;
        }
        for (VertexId next : g.out_neighbors(last)) {
            current.push_back(next);
            self(self, next, remaining - 1);
            current.pop_back();
        }
    };

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        current.assign(1, v);
        extend(extend, v, dimension);
    }
    return result;
}

std::optional<Path> allowed_face(const Digraph& g, const Path& p, int i) {
    if (i < 0 || i > p.dimension()) throw std::out_of_range("face index out of range");
    if (p.dimension() == 0) return std::nullopt;
    Path f = p.face(i);
    if (f.is_elementary() && f.allowed_in(g)) return f;
    return std::nullopt;
}

std::vector<int> removable_vertices(const Digraph& g, const Path& p) {
    std::vector<int> result;
    const int n = p.dimension();
    if (n == 0) return result;
    for (int i = 0; i <= n; ++i) {
        if (i == 0 || i == n || g.has_edge(p[i - 1], p[i + 1])) result.push_back(i);
    }
    return result;
}

std::vector<std::pair<VertexId, int>> addable_vertices(const Digraph& g, const Path& p) {
    std::vector<std::pair<VertexId, int>> result;
    const int n = p.dimension();
    for (int j = -1; j <= n; ++j) {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            bool ok;
            if (j == -1) {
                ok = g.has_edge(u, p[0]);
            } else if (j == n) {
                ok = g.has_edge(p[n], u);
            } else {
                ok = g.has_edge(p[j], u) && g.has_edge(u, p[j + 1]);
            }
            if (ok) result.push_back({u, j});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
    return result;
}

std::vector<Path> allowed_cofaces(const Digraph& g, const Path& p) {
    std::set<Path> cofaces;
    for (const auto& [u, j] : addable_vertices(g, p)) {
        cofaces.insert(p.insert_after(j, u));
    }
    return std::vector<Path>(cofaces.begin(), cofaces.end());
}

namespace {

// Is child obtained from parent by removing exactly one vertex?
bool is_single_removal(const Path& parent, const Path& child) {
    if (parent.dimension() != child.dimension() + 1) return false;
    for (int i = 0; i <= parent.dimension(); ++i) {
        if (parent.face(i) == child) return true;
    }
    return false;
}

}  // namespace

std::variant<Path, ConsecutivePairRemoval> find_intermediate(const Digraph& g, const Path& alpha,
                                                             const Path& beta, const Path& gamma) {
    if (!alpha.allowed_in(g) || !beta.allowed_in(g) || !gamma.allowed_in(g) ||
        !alpha.is_elementary() || !beta.is_elementary() || !gamma.is_elementary()) {
        throw std::invalid_argument("inputs must be allowed elementary paths");
    }
    if (!is_single_removal(alpha, gamma) || !is_single_removal(gamma, beta)) {
        throw std::invalid_argument("inputs are not in face relation");
    }

    for (int i = 0; i <= alpha.dimension(); ++i) {
        Path candidate = alpha.face(i);
        if (candidate == gamma) continue;
        if (!candidate.is_elementary() || !candidate.allowed_in(g)) continue;
        if (is_single_removal(candidate, beta)) return candidate;
    }
    for (int i = 0; i + 1 <= alpha.dimension(); ++i) {
        if (alpha.face(i).face(i) == beta) return ConsecutivePairRemoval{i};
    }
    throw std::logic_error("face-interval dichotomy violated");
}

Path Decomposition::concatenate() const {
    std::vector<VertexId> all(segments.front().vertices());
    for (std::size_t s = 1; s < segments.size(); ++s) {
        const auto& v = segments[s].vertices();
        all.insert(all.end(), v.begin() + 1, v.end());
    }
    return Path(std::move(all));
}

Decomposition decompose_path(const Path& p) {
    Decomposition d;
    const auto& v = p.vertices();
    std::size_t start = 0;
    while (true) {
        // first index > start whose vertex repeats one seen since start
        std::size_t repeat = v.size();
        std::size_t repeat_of = 0;
        for (std::size_t i = start + 1; i < v.size() && repeat == v.size(); ++i) {
            for (std::size_t j = start; j < i; ++j) {
                if (v[j] == v[i]) {
                    repeat = i;
                    repeat_of = j;
                    break;
                }
            }
        }
        if (repeat == v.size()) {
            d.segments.emplace_back(std::vector<VertexId>(v.begin() + start, v.end()));
            return d;
        }
        d.segments.emplace_back(std::vector<VertexId>(v.begin() + start, v.begin() + repeat_of + 1));
        d.segments.emplace_back(std::vector<VertexId>(v.begin() + repeat_of, v.begin() + repeat + 1));
        start = repeat;
    }
}

}  // namespace pathmorse
