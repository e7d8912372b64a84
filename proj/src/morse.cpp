#include "pathmorse/morse.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pathmorse {

Rational path_weight(const MorseFunction& f, const Path& p) {
    Rational w = 0;
    for (VertexId v : p.vertices()) w += f[v];
    return w;
}

namespace {

void require_sized(const Digraph& g, const MorseFunction& f) {
    if (static_cast<int>(f.values.size()) != g.vertex_count()) {
        throw std::invalid_argument("function must assign a value to every vertex");
    }
    for (const Rational& v : f.values) {
        if (v < 0) throw std::invalid_argument("negative vertex value");
    }
}

// Shortest v -> target walk by BFS, as a vertex sequence starting at v.
// Returns an empty vector when unreachable.
std::vector<VertexId> shortest_walk(const Digraph& g, VertexId from, VertexId target) {
    std::vector<VertexId> parent(g.vertex_count(), -1);
    std::deque<VertexId> queue;
    for (VertexId w : g.out_neighbors(from)) {
        if (parent[w] == -1) {
            parent[w] = from;
            queue.push_back(w);
        }
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        if (x == target) {
            std::vector<VertexId> walk{target};
            for (VertexId cur = parent[target]; cur != from; cur = parent[cur]) {
                walk.push_back(cur);
            }
            walk.push_back(from);
            std::reverse(walk.begin(), walk.end());
            return walk;
        }
        for (VertexId w : g.out_neighbors(x)) {
            if (parent[w] == -1) {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    return {};
}

std::vector<VertexId> zero_vertices(const MorseFunction& f) {
    std::vector<VertexId> zeros;
    for (VertexId v = 0; v < static_cast<VertexId>(f.values.size()); ++v) {
        if (f.values[v] == 0) zeros.push_back(v);
    }
    return zeros;
}

}  // namespace

ValidationReport validate_morse(const Digraph& g, const MorseFunction& f, int check_length,
                                const Budget& budget) {
    require_sized(g, f);
    ValidationReport report;
    report.checked_length = check_length > 0 ? check_length : g.vertex_count() + 2;

    std::vector<VertexId> zeros = zero_vertices(f);
    for (VertexId v : zeros) {
        if (on_directed_loop(g, v)) {
            std::vector<VertexId> loop = shortest_walk(g, v, v);
            report.witness = MorseWitness{
                MorseViolation::zero_on_loop, Path(std::move(loop)), {},
                "zero-valued vertex " + g.label(v) + " lies on a directed loop"};
            return report;
        }
    }
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        for (std::size_t j = i + 1; j < zeros.size(); ++j) {
            std::vector<VertexId> forward = shortest_walk(g, zeros[i], zeros[j]);
            std::vector<VertexId> back = shortest_walk(g, zeros[j], zeros[i]);
            if (!forward.empty() && !back.empty()) {
                forward.insert(forward.end(), back.begin() + 1, back.end());
                report.witness = MorseWitness{
                    MorseViolation::zero_pair_reachable, Path(std::move(forward)), {},
                    "zero-valued vertices " + g.label(zeros[i]) + " and " + g.label(zeros[j]) +
                        " are mutually reachable"};
                return report;
            }
        }
    }

    for (int dim = 0; dim < report.checked_length; ++dim) {
        std::vector<Path> paths = enumerate_allowed_paths(g, dim, budget);
        if (paths.empty()) break;
        for (const Path& p : paths) {
            std::vector<Path> faces;
            for (int i : removable_vertices(g, p)) {
                if (f[p[i]] == 0) faces.push_back(p.face(i));
            }
            report.max_equal_faces = std::max(report.max_equal_faces, static_cast<int>(faces.size()));
            if (faces.size() >= 2) {
                std::string detail =
                    "path has " + std::to_string(faces.size()) + " equal-weight allowed faces";
                report.witness =
                    MorseWitness{MorseViolation::face_count, p, std::move(faces), std::move(detail)};
                return report;
            }

            std::set<Path> cofaces;
            std::set<VertexId> inserted;
            for (const auto& [u, j] : addable_vertices(g, p)) {
                if (f[u] == 0) {
                    cofaces.insert(p.insert_after(j, u));
                    inserted.insert(u);
                }
            }
            report.max_equal_cofaces_paths =
                std::max(report.max_equal_cofaces_paths, static_cast<int>(cofaces.size()));
            report.max_equal_cofaces_vertices =
                std::max(report.max_equal_cofaces_vertices, static_cast<int>(inserted.size()));
            if (cofaces.size() >= 2) {
                std::string detail = "path has " + std::to_string(cofaces.size()) +
                                     " equal-weight allowed cofaces";
                report.witness = MorseWitness{
                    MorseViolation::coface_count, p,
                    std::vector<Path>(cofaces.begin(), cofaces.end()), std::move(detail)};
                return report;
            }
        }
    }
    report.valid = true;
    return report;
}

bool is_critical(const Digraph& g, const MorseFunction& f, const Path& p) {
    for (int i : removable_vertices(g, p)) {
        if (f[p[i]] == 0) return false;
    }
    for (const auto& [u, j] : addable_vertices(g, p)) {
        if (f[u] == 0) return false;
    }
    return true;
}

std::vector<Path> critical_paths(const Digraph& g, const MorseFunction& f, int n,
                                 const Budget& budget) {
    require_sized(g, f);
    std::vector<Path> out;
    for (const Path& p : enumerate_allowed_paths(g, n, budget)) {
        if (is_critical(g, f, p)) out.push_back(p);
    }
    return out;
}

Matching::Matching(std::vector<MatchedPair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end(), [](const MatchedPair& a, const MatchedPair& b) {
        return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
    });
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (!by_lower_.emplace(pairs_[i].lower, i).second ||
            !by_upper_.emplace(pairs_[i].upper, i).second) {
            throw std::invalid_argument("a path appears in two matched pairs");
        }
    }
    for (const auto& [p, i] : by_lower_) {
        if (by_upper_.count(p)) {
            throw std::invalid_argument("a path appears in two matched pairs");
        }
    }
}

const MatchedPair* Matching::pair_of_lower(const Path& p) const {
    auto it = by_lower_.find(p);
    return it == by_lower_.end() ? nullptr : &pairs_[it->second];
}

const MatchedPair* Matching::pair_of_upper(const Path& p) const {
    auto it = by_upper_.find(p);
    return it == by_upper_.end() ? nullptr : &pairs_[it->second];
}

Matching build_matching(const Digraph& g, const MorseFunction& f, int n_max,
                        const Budget& budget) {
    require_sized(g, f);
    std::vector<MatchedPair> pairs;
    for (int upper_dim = 1; upper_dim <= n_max; ++upper_dim) {
        std::vector<Path> paths = enumerate_allowed_paths(g, upper_dim, budget);
        if (paths.empty()) break;
        for (const Path& beta : paths) {
            std::vector<int> zero_positions;
            for (int i : removable_vertices(g, beta)) {
                if (f[beta[i]] == 0) zero_positions.push_back(i);
            }
            if (zero_positions.size() > 1) {
                throw std::invalid_argument(
                    "path with two equal-weight faces; the function is not a discrete Morse "
                    "function");
            }
            if (zero_positions.size() == 1) {
                int i = zero_positions[0];
                pairs.push_back({beta.face(i), beta, i % 2 == 0 ? 1 : -1});
            }
        }
    }
    return Matching(std::move(pairs));
}

Chain grad(const Matching& m, const Path& p) {
    Chain out(p.dimension() + 1);
    if (const MatchedPair* pair = m.pair_of_lower(p)) {
        out.add(pair->upper, Rational(-pair->incidence));
    }
    return out;
}

Chain grad(const Matching& m, const Chain& c) {
    Chain out(c.dimension() + 1);
    for (const auto& [p, coeff] : c.terms()) {
        if (const MatchedPair* pair = m.pair_of_lower(p)) {
            out.add(pair->upper, coeff * Rational(-pair->incidence));
        }
    }
    return out;
}

AcyclicityReport check_acyclic(const Matching& m) {
    const auto& pairs = m.pairs();
    int n = static_cast<int>(pairs.size());
    std::map<Path, int> lower_index;
    for (int i = 0; i < n; ++i) lower_index.emplace(pairs[i].lower, i);

    std::vector<std::vector<int>> next(n);
    for (int i = 0; i < n; ++i) {
        const Chain b = boundary(pairs[i].upper);
        for (const auto& [q, c] : b.terms()) {
            if (q == pairs[i].lower) continue;
            auto it = lower_index.find(q);
            if (it != lower_index.end()) next[i].push_back(it->second);
        }
    }

    // 0 = unseen, 1 = on stack, 2 = done
    std::vector<int> color(n, 0);
    std::vector<int> stack;
    AcyclicityReport report;

    auto dfs = [&](auto&& self, int i) -> bool {
        color[i] = 1;
        stack.push_back(i);
        for (int j : next[i]) {
            if (color[j] == 1) {
                auto at = std::find(stack.begin(), stack.end(), j);
                for (auto it = at; it != stack.end(); ++it) report.cycle.push_back(pairs[*it]);
                return true;
            }
            if (color[j] == 0 && self(self, j)) return true;
        }
        stack.pop_back();
        color[i] = 2;
        return false;
    };
    for (int i = 0; i < n; ++i) {
        if (color[i] == 0 && dfs(dfs, i)) {
            report.acyclic = false;
            return report;
        }
    }
    return report;
}

GeneratedMorse generate_morse(const Digraph& g, std::uint64_t seed, MorseStrategy strategy) {
    DetRng rng(seed);
    int n = g.vertex_count();

    auto trivial = [&](DetRng& r) {
        std::vector<Rational> values;
        values.reserve(n);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i + 1;
        r.shuffle(order);
        for (int i = 0; i < n; ++i) values.push_back(Rational(order[i]));
        return MorseFunction{std::move(values)};
    };

    GeneratedMorse out;
    if (strategy == MorseStrategy::trivial || n == 0) {
        out.f = trivial(rng);
        out.validation = validate_morse(g, out.f);
        return out;
    }

    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v) {
        if (static_cast<int>(g.out_neighbors(v).size()) <= 1 &&
            static_cast<int>(g.in_neighbors(v).size()) <= 1 && !on_directed_loop(g, v)) {
            candidates.push_back(v);
        }
    }

    if (strategy == MorseStrategy::single_zero) {
        if (candidates.empty()) {
            out.f = trivial(rng);
            out.fallback_to_trivial = true;
            out.notice = "no vertex qualifies as a single zero; using positive values";
            out.validation = validate_morse(g, out.f);
            return out;
        }
        VertexId zero = candidates[rng.below(candidates.size())];
        out.f = trivial(rng);
        out.f.values[zero] = 0;
        out.validation = validate_morse(g, out.f);
        if (!out.validation.valid) {
            // a lone zero off every directed loop always validates; guard anyway
            out.f = trivial(rng);
            out.fallback_to_trivial = true;
            out.notice = "single-zero candidate failed validation; using positive values";
            out.validation = validate_morse(g, out.f);
        }
        return out;
    }

    // multi_zero: rejection sampling over loop-free vertices
    std::vector<VertexId> loop_free;
    for (VertexId v = 0; v < n; ++v) {
        if (!on_directed_loop(g, v)) loop_free.push_back(v);
    }
    for (int attempt = 0; attempt < 64 && !loop_free.empty(); ++attempt) {
        std::vector<VertexId> zeros;
        for (VertexId v : loop_free) {
            if (rng.chance(1, 3)) zeros.push_back(v);
        }
        if (zeros.empty()) zeros.push_back(loop_free[rng.below(loop_free.size())]);
        MorseFunction f = trivial(rng);
        for (VertexId v : zeros) f.values[v] = 0;
        ValidationReport validation = validate_morse(g, f);
        if (validation.valid) {
            out.f = std::move(f);
            out.validation = std::move(validation);
            return out;
        }
    }
    out.f = trivial(rng);
    out.fallback_to_trivial = true;
    out.notice = "no sampled zero set validated; using positive values";
    out.validation = validate_morse(g, out.f);
    return out;
}

}  // namespace pathmorse
