#include "pathmorse/collapse.hpp"
#include "pathmorse/generators.hpp"
#include "pathmorse/io.hpp"
#include "pathmorse/morse_complex.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace pathmorse;

namespace {

Digraph make_digraph(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, VertexId> id_of;
    for (const auto& label : vertices) {
        if (!id_of.emplace(label, static_cast<VertexId>(id_of.size())).second) {
            throw std::invalid_argument("duplicate vertex label: " + label);
        }
    }
    std::vector<std::pair<VertexId, VertexId>> e;
    e.reserve(edges.size());
    for (const auto& [from, to] : edges) {
        auto a = id_of.find(from), b = id_of.find(to);
        if (a == id_of.end() || b == id_of.end()) {
            throw std::invalid_argument("edge endpoint is not a declared vertex");
        }
        e.emplace_back(a->second, b->second);
    }
    return Digraph(static_cast<int>(vertices.size()), std::move(e), vertices);
}

MorseFunction make_values(const Digraph& g, const py::dict& values) {
    std::vector<Rational> v(g.vertex_count(), Rational(-1));
    std::map<std::string, VertexId> id_of;
    for (VertexId u = 0; u < g.vertex_count(); ++u) id_of.emplace(g.label(u), u);
    for (const auto& item : values) {
        std::string label = py::cast<std::string>(item.first);
        auto it = id_of.find(label);
        if (it == id_of.end()) throw std::invalid_argument("value for unknown vertex: " + label);
        if (py::isinstance<py::int_>(item.second)) {
            v[it->second] = Rational(py::cast<long long>(item.second));
        } else {
            v[it->second] = parse_rational(py::cast<std::string>(item.second));
        }
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (v[u] < 0) throw std::invalid_argument("missing or negative value for vertex " + g.label(u));
    }
    return MorseFunction{std::move(v)};
}

py::list path_py(const Path& p, const Digraph& g) {
    py::list out;
    for (VertexId v : p.vertices()) out.append(g.label(v));
    return out;
}

py::list paths_py(const std::vector<Path>& paths, const Digraph& g) {
    py::list out;
    for (const Path& p : paths) out.append(path_py(p, g));
    return out;
}

py::list matrix_py(const QMatrix& m) {
    py::list rows;
    for (int r = 0; r < m.rows(); ++r) {
        py::list row;
        for (int c = 0; c < m.cols(); ++c) row.append(rational_to_string(m.at(r, c)));
        rows.append(std::move(row));
    }
    return rows;
}

py::list torsion_py(const std::vector<std::vector<Integer>>& torsion) {
    py::list out;
    for (const auto& factors : torsion) {
        py::list row;
        for (const Integer& d : factors) row.append(d.str());
        out.append(std::move(row));
    }
    return out;
}

Ring ring_of(const std::string& name) {
    if (name == "rational") return Ring::rational;
    if (name == "integer") return Ring::integer;
    throw std::invalid_argument("unknown ring: " + name);
}

int resolve_dim(int max_dim, const Digraph& g) {
    return max_dim >= 0 ? max_dim : g.vertex_count() + 1;
}

py::dict digraph_py(const Digraph& g) {
    py::dict out;
    py::list vs, es;
    for (VertexId v = 0; v < g.vertex_count(); ++v) vs.append(g.label(v));
    for (const auto& [u, v] : g.edges()) es.append(py::make_tuple(g.label(u), g.label(v)));
    out["vertices"] = std::move(vs);
    out["edges"] = std::move(es);
    return out;
}

py::dict values_py(const Digraph& g, const MorseFunction& f) {
    py::dict out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out[py::str(g.label(v))] = rational_to_string(f[v]);
    }
    return out;
}

py::dict witness_py(const MorseWitness& w, const Digraph& g) {
    static const char* names[] = {"negative_value", "zero_on_loop", "zero_pair_reachable",
                                  "face_count", "coface_count"};
    py::dict out;
    out["kind"] = names[static_cast<int>(w.kind)];
    out["path"] = path_py(w.path, g);
    out["cofactors"] = paths_py(w.cofactors, g);
    out["detail"] = w.detail;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "path homology and discrete Morse theory for digraphs";

    m.def(
        "homology",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, int max_dim,
           const std::string& ring) {
            Digraph g = make_digraph(vertices, edges);
            HomologyReport r = homology(g, resolve_dim(max_dim, g), ring_of(ring));
            py::dict out;
            out["betti"] = r.betti;
            out["omega_dims"] = r.omega_dims;
            out["loop_warning"] = r.loop_warning;
            if (r.torsion) out["torsion"] = torsion_py(*r.torsion);
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("max_dim") = -1,
        py::arg("ring") = "rational");

    m.def(
        "allowed_paths",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, int max_dim) {
            Digraph g = make_digraph(vertices, edges);
            int top = resolve_dim(max_dim, g);
            py::list out;
            for (int n = 0; n <= top; ++n) out.append(paths_py(enumerate_allowed_paths(g, n), g));
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("max_dim") = -1);

    m.def(
        "validate_morse",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values,
           int check_length) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            ValidationReport r = validate_morse(g, f, check_length);
            py::dict out;
            out["valid"] = r.valid;
            out["checked_length"] = r.checked_length;
            out["max_equal_faces"] = r.max_equal_faces;
            out["max_equal_cofaces_paths"] = r.max_equal_cofaces_paths;
            out["max_equal_cofaces_vertices"] = r.max_equal_cofaces_vertices;
            if (r.witness) out["witness"] = witness_py(*r.witness, g);
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"), py::arg("check_length") = 0);

    m.def(
        "critical_paths",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values,
           int max_dim) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            int top = resolve_dim(max_dim, g);
            py::list out;
            for (int n = 0; n <= top; ++n) out.append(paths_py(critical_paths(g, f, n), g));
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"), py::arg("max_dim") = -1);

    m.def(
        "matching",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values,
           int max_dim) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            int top = resolve_dim(max_dim, g);
            Matching match = build_matching(g, f, top);
            AcyclicityReport acyclicity = check_acyclic(match);
            py::dict out;
            py::list pairs;
            for (const MatchedPair& pair : match.pairs()) {
                py::dict entry;
                entry["lower"] = path_py(pair.lower, g);
                entry["upper"] = path_py(pair.upper, g);
                entry["incidence"] = pair.incidence;
                pairs.append(std::move(entry));
            }
            out["pairs"] = std::move(pairs);
            out["acyclic"] = acyclicity.acyclic;
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"), py::arg("max_dim") = -1);

    m.def(
        "morse_complex",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values,
           int max_dim, const std::string& ring) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            int top = resolve_dim(max_dim, g);
            MorseComplexData data = build_morse_complex(g, f, top);
            HomologyReport r = morse_homology(g, f, top, ring_of(ring));
            py::dict out;
            py::list cells, mats;
            for (int n = 0; n <= data.top; ++n) {
                cells.append(paths_py(data.critical[n], g));
                mats.append(matrix_py(data.boundary[n]));
            }
            out["critical_cells"] = std::move(cells);
            out["boundary"] = std::move(mats);
            out["betti"] = r.betti;
            if (r.torsion) out["torsion"] = torsion_py(*r.torsion);
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"), py::arg("max_dim") = -1,
        py::arg("ring") = "rational");

    m.def(
        "collapse",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            CollapseTrace trace = full_collapse(g, f);
            py::dict out;
            out["steps"] = trace.step_count();
            py::list removed;
            for (std::size_t k = 0; k < trace.steps.size(); ++k) {
                const Digraph& stage = trace.digraphs[k];
                const CollapseStep& s = trace.steps[k];
                removed.append(py::make_tuple(stage.label(s.u), stage.label(s.v), stage.label(s.w)));
            }
            out["removed"] = std::move(removed);
            out["digraph"] = digraph_py(trace.final());
            out["values"] = values_py(trace.final(), trace.final_function());
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"));

    m.def(
        "verify_theorem_1",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values,
           int max_dim, const std::string& ring) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            Theorem1Report r = verify_theorem_1(g, f, resolve_dim(max_dim, g), ring_of(ring));
            py::dict out;
            out["pass"] = r.pass;
            out["basis_ok"] = r.basis_ok;
            out["betti_direct"] = r.betti_direct;
            out["betti_morse"] = r.betti_morse;
            out["omega_dims"] = r.omega_dims;
            out["critical_counts"] = r.critical_counts;
            out["upper_counts"] = r.upper_counts;
            out["lower_counts"] = r.lower_counts;
            out["pair_count"] = r.pair_count;
            out["dimension_accounting"] = r.dimension_accounting;
            out["torsion_direct"] = torsion_py(r.torsion_direct);
            out["torsion_morse"] = torsion_py(r.torsion_morse);
            out["torsion_match"] = r.torsion_match;
            out["failures"] = r.failures;
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"), py::arg("max_dim") = -1,
        py::arg("ring") = "rational");

    m.def(
        "verify_theorem_2",
        [](const std::vector<std::string>& vertices,
           const std::vector<std::pair<std::string, std::string>>& edges, const py::dict& values,
           int max_dim, const std::string& ring) {
            Digraph g = make_digraph(vertices, edges);
            MorseFunction f = make_values(g, values);
            Theorem2Report r = verify_theorem_2(g, f, resolve_dim(max_dim, g), ring_of(ring));
            py::dict out;
            out["pass"] = r.pass;
            out["degree_ok"] = r.degree_ok;
            out["steps"] = r.steps;
            out["betti_initial"] = r.betti_initial;
            out["betti_collapsed"] = r.betti_collapsed;
            out["inclusion_iso"] = r.inclusion_iso;
            out["retractions_ok"] = r.retractions_ok;
            out["homotopies_ok"] = r.homotopies_ok;
            out["torsion_initial"] = torsion_py(r.torsion_initial);
            out["torsion_collapsed"] = torsion_py(r.torsion_collapsed);
            out["torsion_match"] = r.torsion_match;
            out["failures"] = r.failures;
            return out;
        },
        py::arg("vertices"), py::arg("edges"), py::arg("values"), py::arg("max_dim") = -1,
        py::arg("ring") = "rational");

    m.def(
        "generate",
        [](const std::string& kind, int n, int edge_percent, std::uint64_t seed,
           const std::string& morse) {
            InstanceParams params;
            params.vertices = n;
            params.edge_percent = edge_percent;
            Digraph g = gen_instance(parse_instance_kind(kind), params, seed);
            py::dict out = digraph_py(g);
            if (!morse.empty()) {
                MorseStrategy strategy;
                if (morse == "trivial") strategy = MorseStrategy::trivial;
                else if (morse == "single-zero") strategy = MorseStrategy::single_zero;
                else if (morse == "multi-zero") strategy = MorseStrategy::multi_zero;
                else throw std::invalid_argument("unknown strategy: " + morse);
                GeneratedMorse gen = generate_morse(g, seed, strategy);
                out["values"] = values_py(g, gen.f);
                out["notice"] = gen.notice;
            }
            return out;
        },
        py::arg("kind"), py::arg("n") = 6, py::arg("edge_percent") = 30, py::arg("seed") = 0,
        py::arg("morse") = "");
}
