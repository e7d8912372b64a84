#include "pathmorse/collapse.hpp"

#include <algorithm>
#include <set>

namespace pathmorse {

bool zero_degree_check(const Digraph& g, const MorseFunction& f) {
    if (static_cast<int>(f.values.size()) != g.vertex_count()) {
        throw std::invalid_argument("function must assign a value to every vertex");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (f[v] == 0 &&
            (g.out_neighbors(v).size() != 1 || g.in_neighbors(v).size() != 1)) {
            return false;
        }
    }
    return true;
}

OneStepResult one_step_collapse(const Digraph& g, const MorseFunction& f, VertexId v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (f[v] != 0) throw std::invalid_argument("step vertex must have value zero");
    if (g.in_neighbors(v).size() != 1 || g.out_neighbors(v).size() != 1) {
        throw std::invalid_argument("step vertex must have in-degree 1 and out-degree 1");
    }
    VertexId u = g.in_neighbors(v)[0];
    VertexId w = g.out_neighbors(v)[0];
    if (u == w) throw std::invalid_argument("step vertex lies on a directed 2-loop");
    if (!g.has_edge(u, w)) throw std::invalid_argument("shortcut edge is absent; step not applicable");

    std::vector<VertexId> to_parent;
    std::vector<VertexId> new_id(g.vertex_count(), -1);
    std::vector<std::string> labels;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (x == v) continue;
        new_id[x] = static_cast<VertexId>(to_parent.size());
        to_parent.push_back(x);
        labels.push_back(g.label(x));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;  // v carries exactly u->v and v->w
        edges.emplace_back(new_id[a], new_id[b]);
    }
    OneStepResult result{Digraph(g.vertex_count() - 1, edges, labels),
                         MorseFunction{}, {u, v, w}, std::move(to_parent)};
    result.function.values.reserve(result.to_parent.size());
    for (VertexId x : result.to_parent) result.function.values.push_back(f[x]);

    ValidationReport check = validate_morse(result.digraph, result.function);
    if (!check.valid) {
        throw std::logic_error("restricted function fails validation after a collapse step: " +
                               check.witness->detail);
    }
    return result;
}

CollapseTrace full_collapse(const Digraph& g, const MorseFunction& f) {
    ValidationReport check = validate_morse(g, f);
    if (!check.valid) {
        throw std::invalid_argument("not a discrete Morse function: " + check.witness->detail);
    }
    if (!zero_degree_check(g, f)) {
        throw std::invalid_argument("a zero-valued vertex does not have in- and out-degree 1");
    }

    CollapseTrace trace;
    trace.digraphs.push_back(g);
    trace.functions.push_back(f);
    std::vector<VertexId> identity(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) identity[v] = v;
    trace.to_original.push_back(std::move(identity));

    for (;;) {
        const Digraph& cur = trace.digraphs.back();
        const MorseFunction& fc = trace.functions.back();
        VertexId target = -1;
        for (VertexId v = 0; v < cur.vertex_count(); ++v) {
            if (fc[v] != 0) continue;
            if (cur.in_neighbors(v).size() != 1 || cur.out_neighbors(v).size() != 1) continue;
            VertexId u = cur.in_neighbors(v)[0];
            VertexId w = cur.out_neighbors(v)[0];
            if (u != w && cur.has_edge(u, w)) {
                target = v;
                break;
            }
        }
        if (target == -1) break;
        OneStepResult step = one_step_collapse(cur, fc, target);
        const std::vector<VertexId>& parent_map = trace.to_original.back();
        std::vector<VertexId> to_original(step.to_parent.size());
        for (std::size_t i = 0; i < step.to_parent.size(); ++i) {
            to_original[i] = parent_map[step.to_parent[i]];
        }
        trace.steps.push_back(step.step);
        trace.digraphs.push_back(std::move(step.digraph));
        trace.functions.push_back(std::move(step.function));
        trace.to_original.push_back(std::move(to_original));
    }
    return trace;
}

namespace {

Path map_path(const Path& p, const std::vector<VertexId>& vertex_map) {
    std::vector<VertexId> mapped;
    mapped.reserve(p.vertices().size());
    for (VertexId v : p.vertices()) mapped.push_back(vertex_map[v]);
    return Path(std::move(mapped));
}

// (lower, upper) in original ids, for cross-stage comparison.
std::set<std::pair<Path, Path>> pairs_in_original_ids(const Matching& m,
                                                      const std::vector<VertexId>& to_original) {
    std::set<std::pair<Path, Path>> out;
    for (const MatchedPair& pair : m.pairs()) {
        out.emplace(map_path(pair.lower, to_original), map_path(pair.upper, to_original));
    }
    return out;
}

}  // namespace

MatchingInclusionReport matching_inclusion_check(const Digraph& g, const MorseFunction& f,
                                                 const CollapseTrace& trace, int n_max,
                                                 const Budget& budget) {
    MatchingInclusionReport report;

    std::vector<Matching> matchings;
    matchings.reserve(trace.digraphs.size());
    for (std::size_t k = 0; k < trace.digraphs.size(); ++k) {
        matchings.push_back(build_matching(trace.digraphs[k], trace.functions[k], n_max, budget));
        report.matching_sizes.push_back(matchings.back().size());
    }

    std::vector<std::set<std::pair<Path, Path>>> original_pairs;
    original_pairs.reserve(matchings.size());
    for (std::size_t k = 0; k < matchings.size(); ++k) {
        original_pairs.push_back(pairs_in_original_ids(matchings[k], trace.to_original[k]));
    }
    for (std::size_t k = 0; k + 1 < original_pairs.size(); ++k) {
        for (const auto& pair : original_pairs[k + 1]) {
            if (!original_pairs[k].count(pair)) {
                report.inclusions_hold = false;
                report.failures.push_back(
                    "pair of stage " + std::to_string(k + 1) +
                    " is missing from stage " + std::to_string(k) + ": (" +
                    pair.first.to_string(g) + ", " + pair.second.to_string(g) + ")");
            }
        }
    }

    // classify every initial pair by where the zero vertex of the upper path
    // sits; an interior zero needs the shortcut edge around it
    for (const MatchedPair& pair : matchings.front().pairs()) {
        const Path& beta = pair.upper;
        int dim = beta.dimension();
        std::vector<int> zero_positions;
        for (int i = 0; i <= dim; ++i) {
            if (f[beta[i]] == 0) zero_positions.push_back(i);
        }
        if (zero_positions.size() != 1) {
            report.shapes_classified = false;
            report.failures.push_back("upper path without a unique zero vertex: " +
                                      beta.to_string(g));
            continue;
        }
        int p = zero_positions[0];
        if (pair.lower != beta.face(p)) {
            report.shapes_classified = false;
            report.failures.push_back("pair lower is not the zero-removal face of " +
                                      beta.to_string(g));
            continue;
        }
        if (p == 0) {
            ++report.zero_first_pairs;
        } else if (p == dim) {
            ++report.zero_last_pairs;
        } else if (g.has_edge(beta[p - 1], beta[p + 1])) {
            ++report.interior_pairs;
        } else {
            report.shapes_classified = false;
            report.failures.push_back("interior zero without the shortcut edge in " +
                                      beta.to_string(g));
        }
    }

    // residual pairs: zero at an endpoint of the upper path, and the would-be
    // shortcut edge absent (so the step does not apply)
    const Digraph& collapsed = trace.final();
    const MorseFunction& fc = trace.final_function();
    for (const MatchedPair& pair : matchings.back().pairs()) {
        const Path& beta = pair.upper;
        int dim = beta.dimension();
        std::vector<int> zero_positions;
        for (int i = 0; i <= dim; ++i) {
            if (fc[beta[i]] == 0) zero_positions.push_back(i);
        }
        if (zero_positions.size() != 1) {
            report.residual_endpoint_only = false;
            report.failures.push_back("residual upper path without a unique zero vertex: " +
                                      beta.to_string(collapsed));
            continue;
        }
        int p = zero_positions[0];
        if (p != 0 && p != dim) {
            report.residual_endpoint_only = false;
            report.failures.push_back("residual pair with an interior zero: " +
                                      beta.to_string(collapsed));
            continue;
        }
        VertexId v = beta[p];
        if (collapsed.in_neighbors(v).size() != 1 || collapsed.out_neighbors(v).size() != 1) {
            report.residual_endpoint_only = false;
            report.failures.push_back("residual zero vertex without degree (1, 1): " +
                                      collapsed.label(v));
            continue;
        }
        VertexId u = collapsed.in_neighbors(v)[0];
        VertexId w = collapsed.out_neighbors(v)[0];
        if (u != w && collapsed.has_edge(u, w)) {
            report.residual_endpoint_only = false;
            report.failures.push_back("residual pair whose zero vertex still admits the step: " +
                                      beta.to_string(collapsed));
        }
    }

    report.pass =
        report.inclusions_hold && report.shapes_classified && report.residual_endpoint_only;
    return report;
}

std::vector<VertexId> retraction_map(const Digraph& g, const CollapseStep& step) {
    std::vector<VertexId> r(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) r[x] = x;
    r[step.v] = step.w;
    if (!check_digraph_map(g, g, r)) {
        throw std::logic_error("retraction is not a digraph map");
    }
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (x != step.v && r[x] != x) {
            throw std::logic_error("retraction moves a vertex outside the collapsed image");
        }
    }
    return r;
}

bool homotopy_check(const Digraph& g, const std::vector<VertexId>& r) {
    if (static_cast<int>(r.size()) != g.vertex_count()) {
        throw std::invalid_argument("map size mismatch");
    }
    Digraph interval = directed_interval();
    Digraph cylinder = box_product(g, interval);
    // vertex (x, t) of the cylinder has id x * 2 + t
    std::vector<VertexId> homotopy(cylinder.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        homotopy[x * 2 + 0] = x;
        homotopy[x * 2 + 1] = r[x];
    }
    return check_digraph_map(cylinder, g, homotopy);
}

Theorem2Report verify_theorem_2(const Digraph& g, const MorseFunction& f, int n_max, Ring ring,
                                const Budget& budget) {
    Theorem2Report report;
    report.max_dimension = n_max;
    report.degree_ok = zero_degree_check(g, f);
    if (!report.degree_ok) {
        throw std::invalid_argument("a zero-valued vertex does not have in- and out-degree 1");
    }

    CollapseTrace trace = full_collapse(g, f);
    report.steps = trace.step_count();

    HomologyReport initial = homology(g, n_max, ring, budget);
    HomologyReport collapsed = homology(trace.final(), n_max, ring, budget);
    report.betti_initial = initial.betti;
    report.betti_collapsed = collapsed.betti;
    if (report.betti_initial != report.betti_collapsed) {
        report.failures.push_back("betti numbers disagree");
    }

    InclusionReport inclusion =
        induced_inclusion(trace.final(), g, trace.to_original.back(), n_max, budget);
    report.inclusion_iso = inclusion.isomorphism;
    if (!inclusion.all_isomorphisms) {
        report.failures.push_back("the inclusion of the collapsed digraph is not an isomorphism "
                                  "on homology in every dimension");
    }

    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        std::vector<VertexId> r;
        try {
            r = retraction_map(trace.digraphs[k], trace.steps[k]);
        } catch (const std::logic_error& e) {
            report.retractions_ok = false;
            report.failures.push_back("step " + std::to_string(k) + ": " + e.what());
            continue;
        }
        if (!homotopy_check(trace.digraphs[k], r)) {
            report.homotopies_ok = false;
            report.failures.push_back("step " + std::to_string(k) +
                                      ": homotopy map fails the digraph-map check");
        }
    }

    if (ring == Ring::integer) {
        if (initial.torsion) report.torsion_initial = *initial.torsion;
        if (collapsed.torsion) report.torsion_collapsed = *collapsed.torsion;
        report.torsion_match = report.torsion_initial == report.torsion_collapsed;
        if (!report.torsion_match) report.failures.push_back("torsion disagrees");
    }

    report.pass = report.failures.empty();
    return report;
}

}  // namespace pathmorse
