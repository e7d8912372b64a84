#include "pathmorse/collapse.hpp"
#include "pathmorse/generators.hpp"
#include "pathmorse/io.hpp"
#include "pathmorse/morse_complex.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace pathmorse;

struct CommonOpts {
    std::string digraph_file;
    std::string morse_file;
    int max_dim = -1;  // default |V| + 1, resolved after loading
    std::string ring = "rational";
    int check_length = 0;
    std::string output = "text";
};

Ring parse_ring(const std::string& name) {
    if (name == "rational") return Ring::rational;
    if (name == "integer") return Ring::integer;
    throw std::invalid_argument("unknown ring: " + name);
}

int resolve_max_dim(const CommonOpts& opts, const Digraph& g) {
    return opts.max_dim >= 0 ? opts.max_dim : g.vertex_count() + 1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// digest over the canonical re-serialization, so formatting differences in
// the input files do not change the reported digest
std::string inputs_digest(const std::vector<json>& documents) {
    std::string bytes;
    for (const json& doc : documents) bytes += doc.dump();
    return digest(bytes);
}

json path_json(const Path& p, const Digraph& g) {
    json out = json::array();
    for (VertexId v : p.vertices()) out.push_back(g.label(v));
    return out;
}

json paths_json(const std::vector<Path>& paths, const Digraph& g) {
    json out = json::array();
    for (const Path& p : paths) out.push_back(path_json(p, g));
    return out;
}

json matrix_json(const QMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json torsion_json(const std::vector<std::vector<Integer>>& torsion) {
    json out = json::array();
    for (const auto& factors : torsion) {
        json row = json::array();
        for (const Integer& d : factors) row.push_back(d.str());
        out.push_back(std::move(row));
    }
    return out;
}

json witness_json(const MorseWitness& w, const Digraph& g) {
    static const char* names[] = {"negative_value", "zero_on_loop", "zero_pair_reachable",
                                  "face_count", "coface_count"};
    json out;
    out["kind"] = names[static_cast<int>(w.kind)];
    out["path"] = path_json(w.path, g);
    out["cofactors"] = paths_json(w.cofactors, g);
    out["detail"] = w.detail;
    return out;
}

void emit(const json& report, const std::string& mode) {
    if (mode == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text mode: flat deterministic key: value lines
    std::cout << "command: " << report.at("command").get<std::string>() << "\n";
    std::cout << "inputs: " << report.at("inputs").get<std::string>() << "\n";
    for (const auto& [key, value] : report.items()) {
        if (key == "command" || key == "inputs") continue;
        std::cout << key << ": " << value.dump() << "\n";
    }
}

json base_report(const std::string& command, const std::vector<json>& documents) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs_digest(documents);
    return report;
}

int cmd_homology(const CommonOpts& opts) {
    json doc = json::parse(slurp(opts.digraph_file));
    Digraph g = parse_digraph(doc);
    int n_max = resolve_max_dim(opts, g);
    HomologyReport result = homology(g, n_max, parse_ring(opts.ring));

    json report = base_report("homology", {doc});
    report["max_dim"] = n_max;
    report["ring"] = opts.ring;
    report["betti"] = result.betti;
    report["omega_dims"] = result.omega_dims;
    report["loop_warning"] = result.loop_warning;
    if (result.torsion) report["torsion"] = torsion_json(*result.torsion);
    emit(report, opts.output);
    return 0;
}

int cmd_validate_morse(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    ValidationReport result = validate_morse(g, f, opts.check_length);

    json report = base_report("validate-morse", {gdoc, mdoc});
    report["valid"] = result.valid;
    report["checked_length"] = result.checked_length;
    report["max_equal_faces"] = result.max_equal_faces;
    report["max_equal_cofaces_paths"] = result.max_equal_cofaces_paths;
    report["max_equal_cofaces_vertices"] = result.max_equal_cofaces_vertices;
    if (result.witness) report["witness"] = witness_json(*result.witness, g);
    emit(report, opts.output);
    return result.valid ? 0 : 1;
}

int cmd_critical(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    ValidationReport check = validate_morse(g, f, opts.check_length);
    if (!check.valid) {
        throw std::invalid_argument("not a discrete Morse function: " + check.witness->detail);
    }
    int n_max = resolve_max_dim(opts, g);

    json report = base_report("critical", {gdoc, mdoc});
    report["max_dim"] = n_max;
    json per_dim = json::array();
    json counts = json::array();
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Path> crit = critical_paths(g, f, n);
        counts.push_back(crit.size());
        per_dim.push_back(paths_json(crit, g));
    }
    report["critical_counts"] = std::move(counts);
    report["critical_paths"] = std::move(per_dim);
    emit(report, opts.output);
    return 0;
}

int cmd_matching(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    int n_max = resolve_max_dim(opts, g);
    ValidationReport check = validate_morse(g, f, std::max(g.vertex_count() + 2, n_max + 2));
    if (!check.valid) {
        throw std::invalid_argument("not a discrete Morse function: " + check.witness->detail);
    }
    Matching m = build_matching(g, f, n_max);
    AcyclicityReport acyclicity = check_acyclic(m);

    json report = base_report("matching", {gdoc, mdoc});
    report["max_dim"] = n_max;
    report["size"] = m.size();
    json pairs = json::array();
    for (const MatchedPair& pair : m.pairs()) {
        json entry;
        entry["lower"] = path_json(pair.lower, g);
        entry["upper"] = path_json(pair.upper, g);
        entry["incidence"] = pair.incidence;
        pairs.push_back(std::move(entry));
    }
    report["pairs"] = std::move(pairs);
    report["acyclic"] = acyclicity.acyclic;
    if (!acyclicity.acyclic) {
        json cycle = json::array();
        for (const MatchedPair& pair : acyclicity.cycle) {
            cycle.push_back(json::array({path_json(pair.lower, g), path_json(pair.upper, g)}));
        }
        report["cycle"] = std::move(cycle);
    }
    emit(report, opts.output);
    return acyclicity.acyclic ? 0 : 1;
}

int cmd_morse_complex(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    int n_max = resolve_max_dim(opts, g);
    MorseComplexData data = build_morse_complex(g, f, n_max);
    HomologyReport result = morse_homology(g, f, n_max, parse_ring(opts.ring));

    json report = base_report("morse-complex", {gdoc, mdoc});
    report["max_dim"] = n_max;
    report["ring"] = opts.ring;
    json counts = json::array();
    json cells = json::array();
    json matrices = json::array();
    for (int n = 0; n <= data.top; ++n) {
        counts.push_back(data.critical[n].size());
        cells.push_back(paths_json(data.critical[n], g));
        matrices.push_back(matrix_json(data.boundary[n]));
    }
    report["critical_counts"] = std::move(counts);
    report["critical_cells"] = std::move(cells);
    report["boundary"] = std::move(matrices);
    report["betti"] = result.betti;
    if (result.torsion) report["torsion"] = torsion_json(*result.torsion);
    emit(report, opts.output);
    return 0;
}

int cmd_collapse(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    CollapseTrace trace = full_collapse(g, f);

    json report = base_report("collapse", {gdoc, mdoc});
    report["steps"] = trace.step_count();
    json step_list = json::array();
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const Digraph& stage = trace.digraphs[k];
        const CollapseStep& s = trace.steps[k];
        step_list.push_back(json::array({stage.label(s.u), stage.label(s.v), stage.label(s.w)}));
    }
    report["removed"] = std::move(step_list);
    json sizes = json::array();
    for (const Digraph& stage : trace.digraphs) sizes.push_back(stage.vertex_count());
    report["stage_vertices"] = std::move(sizes);
    report["collapsed_digraph"] = digraph_to_document(trace.final());
    report["collapsed_morse"] = morse_to_document(trace.final(), trace.final_function());
    emit(report, opts.output);
    return 0;
}

int cmd_verify_thm1(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    int n_max = resolve_max_dim(opts, g);
    Theorem1Report result = verify_theorem_1(g, f, n_max, parse_ring(opts.ring));

    json report = base_report("verify-thm1", {gdoc, mdoc});
    report["max_dim"] = n_max;
    report["ring"] = opts.ring;
    report["pass"] = result.pass;
    report["basis_ok"] = result.basis_ok;
    report["betti_direct"] = result.betti_direct;
    report["betti_morse"] = result.betti_morse;
    report["omega_dims"] = result.omega_dims;
    report["critical_counts"] = result.critical_counts;
    report["upper_counts"] = result.upper_counts;
    report["lower_counts"] = result.lower_counts;
    report["pair_count"] = result.pair_count;
    report["dimension_accounting"] = result.dimension_accounting;
    if (!result.torsion_direct.empty() || !result.torsion_morse.empty()) {
        report["torsion_direct"] = torsion_json(result.torsion_direct);
        report["torsion_morse"] = torsion_json(result.torsion_morse);
        report["torsion_match"] = result.torsion_match;
    }
    report["failures"] = result.failures;
    emit(report, opts.output);
    return result.pass ? 0 : 1;
}

int cmd_verify_thm2(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    json mdoc = json::parse(slurp(opts.morse_file));
    Digraph g = parse_digraph(gdoc);
    MorseFunction f = parse_morse(mdoc, g);
    int n_max = resolve_max_dim(opts, g);
    Theorem2Report result = verify_theorem_2(g, f, n_max, parse_ring(opts.ring));

    json report = base_report("verify-thm2", {gdoc, mdoc});
    report["max_dim"] = n_max;
    report["ring"] = opts.ring;
    report["pass"] = result.pass;
    report["degree_ok"] = result.degree_ok;
    report["steps"] = result.steps;
    report["betti_initial"] = result.betti_initial;
    report["betti_collapsed"] = result.betti_collapsed;
    report["inclusion_iso"] = result.inclusion_iso;
    report["retractions_ok"] = result.retractions_ok;
    report["homotopies_ok"] = result.homotopies_ok;
    if (!result.torsion_initial.empty() || !result.torsion_collapsed.empty()) {
        report["torsion_initial"] = torsion_json(result.torsion_initial);
        report["torsion_collapsed"] = torsion_json(result.torsion_collapsed);
        report["torsion_match"] = result.torsion_match;
    }
    report["failures"] = result.failures;
    emit(report, opts.output);
    return result.pass ? 0 : 1;
}

int cmd_paths(const CommonOpts& opts) {
    json gdoc = json::parse(slurp(opts.digraph_file));
    Digraph g = parse_digraph(gdoc);
    int n_max = resolve_max_dim(opts, g);

    json report = base_report("paths", {gdoc});
    report["max_dim"] = n_max;
    json counts = json::array();
    json per_dim = json::array();
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Path> paths = enumerate_allowed_paths(g, n);
        counts.push_back(paths.size());
        per_dim.push_back(paths_json(paths, g));
    }
    report["allowed_counts"] = std::move(counts);
    report["allowed_paths"] = std::move(per_dim);
    emit(report, opts.output);
    return 0;
}

struct GenOpts {
    std::string kind = "transitive-dag";
    int vertices = 6;
    int edge_percent = 30;
    std::uint64_t seed = 0;
    std::string morse;  // empty = no morse document
    std::string out;    // file prefix; empty = stdout
    std::string output = "json";
};

int cmd_gen(const GenOpts& opts) {
    InstanceParams params;
    params.vertices = opts.vertices;
    params.edge_percent = opts.edge_percent;
    Digraph g = gen_instance(parse_instance_kind(opts.kind), params, opts.seed);
    json gdoc = digraph_to_document(g);

    std::optional<json> mdoc;
    if (!opts.morse.empty()) {
        MorseStrategy strategy;
        if (opts.morse == "trivial") {
            strategy = MorseStrategy::trivial;
        } else if (opts.morse == "single-zero") {
            strategy = MorseStrategy::single_zero;
        } else if (opts.morse == "multi-zero") {
            strategy = MorseStrategy::multi_zero;
        } else {
            throw std::invalid_argument("unknown strategy: " + opts.morse);
        }
        GeneratedMorse gen = generate_morse(g, opts.seed, strategy);
        if (!gen.notice.empty()) std::cerr << "notice: " << gen.notice << "\n";
        mdoc = morse_to_document(g, gen.f);
    }

    if (!opts.out.empty()) {
        std::ofstream gfile(opts.out + ".digraph.json");
        gfile << gdoc.dump(2) << "\n";
        if (mdoc) {
            std::ofstream mfile(opts.out + ".morse.json");
            mfile << mdoc->dump(2) << "\n";
        }
        std::cout << "wrote " << opts.out << ".digraph.json";
        if (mdoc) std::cout << " and " << opts.out << ".morse.json";
        std::cout << "\n";
        return 0;
    }
    json combined;
    combined["digraph"] = std::move(gdoc);
    if (mdoc) combined["morse"] = std::move(*mdoc);
    std::cout << combined.dump(2) << "\n";
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_morse, bool with_ring) {
    cmd->add_option("digraph", opts.digraph_file, "digraph document (*.digraph.json)")->required();
    if (with_morse) {
        cmd->add_option("morse", opts.morse_file, "vertex values document (*.morse.json)")
            ->required();
    }
    cmd->add_option("--max-dim", opts.max_dim, "top homological dimension (default |V|+1)");
    if (with_ring) {
        cmd->add_option("--ring", opts.ring, "rational|integer")->default_str("rational");
    }
    cmd->add_option("--check-length", opts.check_length,
                    "validation path length (default |V|+2)");
    cmd->add_option("--output", opts.output, "json|text")->default_str("text");
}

}  // namespace

int main(int argc, char** argv) {
    auto started = std::chrono::steady_clock::now();
    CLI::App app{"path homology and discrete Morse theory for digraphs"};
    app.require_subcommand(1);

    CommonOpts homology_opts, validate_opts, critical_opts, matching_opts, complex_opts,
        collapse_opts, thm1_opts, thm2_opts, paths_opts;
    GenOpts gen_opts;

    add_common(app.add_subcommand("homology", "path homology of a digraph"), homology_opts,
               false, true);
    add_common(app.add_subcommand("validate-morse", "check the discrete Morse conditions"),
               validate_opts, true, false);
    add_common(app.add_subcommand("critical", "critical allowed paths per dimension"),
               critical_opts, true, false);
    add_common(app.add_subcommand("matching", "gradient matching and acyclicity"), matching_opts,
               true, false);
    add_common(app.add_subcommand("morse-complex", "critical cells, Morse boundary, homology"),
               complex_opts, true, true);
    add_common(app.add_subcommand("collapse", "full collapse at the zero vertices"),
               collapse_opts, true, false);
    add_common(app.add_subcommand("verify-thm1",
                                  "Morse complex homology equals path homology"),
               thm1_opts, true, true);
    add_common(app.add_subcommand("verify-thm2", "collapse preserves path homology"), thm2_opts,
               true, true);
    add_common(app.add_subcommand("paths", "allowed paths per dimension"), paths_opts, false,
               false);

    CLI::App* gen = app.add_subcommand("gen", "generate instance documents");
    gen->add_option("--kind", gen_opts.kind,
                    "triangle|square|line|cycle|random|transitive-dag");
    gen->add_option("--n", gen_opts.vertices, "vertex count");
    gen->add_option("--edge-percent", gen_opts.edge_percent, "edge probability in percent");
    gen->add_option("--seed", gen_opts.seed, "generator seed");
    gen->add_option("--morse", gen_opts.morse, "also generate values: trivial|single-zero|multi-zero");
    gen->add_option("--out", gen_opts.out, "file prefix; writes <out>.digraph.json [.morse.json]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    int code = 2;
    try {
        if (app.got_subcommand("homology")) code = cmd_homology(homology_opts);
        else if (app.got_subcommand("validate-morse")) code = cmd_validate_morse(validate_opts);
        else if (app.got_subcommand("critical")) code = cmd_critical(critical_opts);
        else if (app.got_subcommand("matching")) code = cmd_matching(matching_opts);
        else if (app.got_subcommand("morse-complex")) code = cmd_morse_complex(complex_opts);
        else if (app.got_subcommand("collapse")) code = cmd_collapse(collapse_opts);
        else if (app.got_subcommand("verify-thm1")) code = cmd_verify_thm1(thm1_opts);
        else if (app.got_subcommand("verify-thm2")) code = cmd_verify_thm2(thm2_opts);
        else if (app.got_subcommand("paths")) code = cmd_paths(paths_opts);
        else if (app.got_subcommand("gen")) code = cmd_gen(gen_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    // stderr keeps stdout byte-stable for identical inputs
    std::cerr << "wall_time_ms=" << elapsed << "\n";
    return code;
}
