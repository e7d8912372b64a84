#include "pathmorse/morse_complex.hpp"

#include <algorithm>
#include <set>

namespace pathmorse {

PathBasisCheck check_path_basis(const Digraph& g, int n_max, const Budget& budget) {
    if (n_max < 0) throw std::invalid_argument("negative dimension cap");
    PathBasisCheck check;
    check.top = n_max;
    check.basis.resize(n_max + 1);
    check.full.assign(n_max + 1, false);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Path> allowed = enumerate_allowed_paths(g, n, budget);
        if (n <= 1) {
            check.basis[n] = std::move(allowed);
            check.full[n] = true;
            continue;
        }
        bool closed = true;  // every face of every allowed path is again allowed
        for (const Path& p : allowed) {
            if (static_cast<int>(removable_vertices(g, p).size()) != n + 1) {
                closed = false;
                break;
            }
        }
        if (closed) {
            check.basis[n] = std::move(allowed);
            check.full[n] = true;
            continue;
        }
        if (omega_basis(g, n, budget).dim() == 0) {
            continue;  // empty basis of the zero space
        }
        check.failed_dimension = n;
        return check;
    }
    check.ok = true;
    return check;
}

namespace {

std::vector<std::set<Path>> basis_sets(const std::vector<std::vector<Path>>& basis) {
    std::vector<std::set<Path>> sets(basis.size());
    for (std::size_t n = 0; n < basis.size(); ++n) sets[n].insert(basis[n].begin(), basis[n].end());
    return sets;
}

}  // namespace

Matching restrict_to_basis(const Matching& m, const std::vector<std::vector<Path>>& basis) {
    auto sets = basis_sets(basis);
    int top = static_cast<int>(basis.size()) - 1;
    std::vector<MatchedPair> kept;
    for (const MatchedPair& pair : m.pairs()) {
        int n = pair.lower.dimension();
        if (n < 0 || n + 1 > top) continue;
        if (sets[n].count(pair.lower) && sets[n + 1].count(pair.upper)) kept.push_back(pair);
    }
    return Matching(std::move(kept));
}

BasisPartition partition_basis(const std::vector<std::vector<Path>>& basis, const Matching& m) {
    auto sets = basis_sets(basis);
    int top = static_cast<int>(basis.size()) - 1;
    for (const MatchedPair& pair : m.pairs()) {
        int n = pair.lower.dimension();
        if (n < 0 || n + 1 > top || !sets[n].count(pair.lower) || !sets[n + 1].count(pair.upper)) {
            throw std::invalid_argument("matched pair member is not a basis element");
        }
    }
    BasisPartition partition;
    partition.top = top;
    partition.upper.resize(top + 1);
    partition.lower.resize(top + 1);
    partition.critical.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        for (const Path& p : basis[n]) {
            if (m.pair_of_upper(p)) {
                partition.upper[n].push_back(p);
            } else if (m.pair_of_lower(p)) {
                partition.lower[n].push_back(p);
            } else {
                partition.critical[n].push_back(p);
            }
        }
    }
    return partition;
}

namespace {

// Shared machinery for alternating paths and the memoized Morse boundary.
class FlowEngine {
  public:
    FlowEngine(const BasisPartition& partition, const Matching& m) : m_(m) {
        for (int n = 0; n <= partition.top; ++n) {
            critical_.insert(partition.critical[n].begin(), partition.critical[n].end());
            in_basis_.insert(partition.critical[n].begin(), partition.critical[n].end());
            in_basis_.insert(partition.upper[n].begin(), partition.upper[n].end());
            in_basis_.insert(partition.lower[n].begin(), partition.lower[n].end());
        }
    }

    bool is_basis_element(const Path& p) const { return in_basis_.count(p) > 0; }
    bool is_critical_element(const Path& p) const { return critical_.count(p) > 0; }

    // T(q): identity on critical elements, transport through the pair on
    // matched lower elements, zero on matched upper elements.
    Chain transport(const Path& q) {
        if (critical_.count(q)) {
            Chain c(q.dimension());
            c.add(q, 1);
            return c;
        }
        if (const MatchedPair* pair = m_.pair_of_lower(q)) {
            return flow(*pair) * (Rational(-1) / pair->incidence);
        }
        return Chain(q.dimension());
    }

    // D(b) for a matched upper b: boundary terms over basis elements, with
    // the pair's own lower excluded, pushed through T. Memoized; acyclicity
    // makes the recursion well-founded.
    const Chain& flow(const MatchedPair& pair) {
        auto it = cache_.find(pair.upper);
        if (it != cache_.end()) return it->second;
        Chain out(pair.upper.dimension() - 1);
        const Chain db = boundary(pair.upper);
        for (const auto& [q, c] : db.terms()) {
            if (q == pair.lower || !in_basis_.count(q)) continue;
            out.add(transport(q), c);
        }
        return cache_.emplace(pair.upper, std::move(out)).first->second;
    }

    // Morse boundary of a critical element: all basis faces, no exclusion.
    Chain boundary_of_critical(const Path& b) {
        Chain out(b.dimension() - 1);
        const Chain db = boundary(b);
        for (const auto& [q, c] : db.terms()) {
            if (!in_basis_.count(q)) continue;
            out.add(transport(q), c);
        }
        return out;
    }

  private:
    const Matching& m_;
    std::set<Path> critical_, in_basis_;
    std::map<Path, Chain> cache_;
};

}  // namespace

std::vector<AlternatingPath> alternating_paths(const Path& head, const BasisPartition& partition,
                                               const Matching& m) {
    AcyclicityReport acyclicity = check_acyclic(m);
    if (!acyclicity.acyclic) {
        throw std::invalid_argument("the matching has an alternating cycle");
    }
    std::vector<AlternatingPath> out;
    if (head.dimension() <= 0) return out;

    FlowEngine engine(partition, m);
    std::vector<MatchedPair> interior;

    auto descend = [&](auto&& self, const Path& b, const Path* excluded, const Rational& numerator,
                       const Rational& denominator) -> void {
        const Chain db = boundary(b);
        for (const auto& [q, c] : db.terms()) {
            if (excluded && q == *excluded) continue;
            if (!engine.is_basis_element(q)) continue;
            if (engine.is_critical_element(q)) {
                Rational sign = interior.size() % 2 == 0 ? 1 : -1;
                out.push_back({head, q, interior, sign * numerator * c / denominator});
                continue;
            }
            if (const MatchedPair* pair = m.pair_of_lower(q)) {
                interior.push_back(*pair);
                self(self, pair->upper, &q, numerator * c, denominator * pair->incidence);
                interior.pop_back();
            }
        }
    };
    descend(descend, head, nullptr, 1, 1);
    return out;
}

Chain morse_boundary(const Path& b, const BasisPartition& partition, const Matching& m) {
    FlowEngine engine(partition, m);
    return engine.boundary_of_critical(b);
}

namespace {

struct ComplexPieces {
    PathBasisCheck basis_check;
    Matching restricted;
    BasisPartition partition;  // dimensions 0 .. n_max+2
    MorseComplexData data;     // dimensions 0 .. n_max+1
};

// The critical set in dimension n_max+1 depends on pairs reaching one
// dimension higher, so the basis check and the matching go to n_max+2 while
// the assembled complex stops at n_max+1 (enough for betti up to n_max).
ComplexPieces assemble(const Digraph& g, const MorseFunction& f, int n_max, const Budget& budget) {
    if (n_max < 0) throw std::invalid_argument("negative dimension cap");
    ComplexPieces pieces;
    pieces.basis_check = check_path_basis(g, n_max + 2, budget);
    if (!pieces.basis_check.ok) {
        throw std::invalid_argument(
            "allowed paths do not form a basis of the chain space in dimension " +
            std::to_string(pieces.basis_check.failed_dimension) +
            "; the Morse complex is not defined for this digraph");
    }
    int validate_to = std::max(g.vertex_count() + 2, n_max + 4);
    ValidationReport validation = validate_morse(g, f, validate_to, budget);
    if (!validation.valid) {
        throw std::invalid_argument("not a discrete Morse function: " + validation.witness->detail);
    }

    Matching matching = build_matching(g, f, n_max + 2, budget);
    pieces.restricted = restrict_to_basis(matching, pieces.basis_check.basis);
    AcyclicityReport acyclicity = check_acyclic(pieces.restricted);
    if (!acyclicity.acyclic) {
        throw std::invalid_argument("the matching has an alternating cycle");
    }
    pieces.partition = partition_basis(pieces.basis_check.basis, pieces.restricted);

    int top = n_max + 1;
    pieces.data.top = top;
    pieces.data.critical.resize(top + 1);
    for (int n = 0; n <= top; ++n) pieces.data.critical[n] = pieces.partition.critical[n];

    FlowEngine engine(pieces.partition, pieces.restricted);
    pieces.data.boundary.reserve(top + 1);
    for (int n = 0; n <= top; ++n) {
        const auto& cols = pieces.data.critical[n];
        if (n == 0) {
            pieces.data.boundary.emplace_back(0, static_cast<int>(cols.size()));
            continue;
        }
        const auto& rows = pieces.data.critical[n - 1];
        std::map<Path, int> row_index;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_index.emplace(rows[i], i);
        QMatrix mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            Chain db = engine.boundary_of_critical(cols[j]);
            for (const auto& [q, c] : db.terms()) {
                mat.at(row_index.at(q), j) = c;
            }
        }
        pieces.data.boundary.push_back(std::move(mat));
    }
    return pieces;
}

bool graph_has_cycle(const Digraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (on_directed_loop(g, v)) return true;
    }
    return false;
}

std::vector<ZMatrix> integral_boundaries(const std::vector<QMatrix>& boundaries) {
    std::vector<ZMatrix> out;
    out.reserve(boundaries.size());
    for (const QMatrix& m : boundaries) {
        ZMatrix z(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) {
                if (denominator(m.at(r, c)) != 1) {
                    throw std::logic_error("Morse boundary has a non-integer entry");
                }
                z.at(r, c) = numerator(m.at(r, c));
            }
        }
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

MorseComplexData build_morse_complex(const Digraph& g, const MorseFunction& f, int n_max,
                                     const Budget& budget) {
    return assemble(g, f, n_max, budget).data;
}

HomologyReport morse_homology(const Digraph& g, const MorseFunction& f, int n_max, Ring ring,
                              const Budget& budget) {
    ComplexPieces pieces = assemble(g, f, n_max, budget);
    HomologyReport report;
    report.max_dimension = n_max;
    report.loop_warning = graph_has_cycle(g);
    report.omega_dims.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        report.omega_dims[n] = static_cast<int>(pieces.data.critical[n].size());
    }
    report.betti = rational_complex_betti(pieces.data.boundary);
    if (ring == Ring::integer) {
        IntegerHomology ih = integer_complex_homology(integral_boundaries(pieces.data.boundary));
        if (ih.free_rank != report.betti) {
            throw std::logic_error("integer free ranks disagree with rational betti numbers");
        }
        report.torsion = std::move(ih.torsion);
    }
    return report;
}

Theorem1Report verify_theorem_1(const Digraph& g, const MorseFunction& f, int n_max, Ring ring,
                                const Budget& budget) {
    Theorem1Report report;
    report.max_dimension = n_max;

    ComplexPieces pieces = assemble(g, f, n_max, budget);
    report.basis_ok = pieces.basis_check.ok;
    report.pair_count = pieces.restricted.size();

    HomologyReport direct = homology(g, n_max, ring, budget);
    report.betti_direct = direct.betti;
    report.betti_morse = rational_complex_betti(pieces.data.boundary);

    int top = n_max + 1;
    report.omega_dims.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        report.omega_dims[n] = static_cast<int>(pieces.basis_check.basis[n].size());
    }
    for (int n = 0; n <= n_max; ++n) {
        if (report.omega_dims[n] != direct.omega_dims[n]) {
            report.failures.push_back("chain space dimension mismatch between the basis check and "
                                      "the kernel computation in dimension " + std::to_string(n));
        }
    }

    report.critical_counts.resize(top + 1);
    report.upper_counts.resize(top + 1);
    report.lower_counts.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        report.critical_counts[n] = static_cast<int>(pieces.partition.critical[n].size());
        report.upper_counts[n] = static_cast<int>(pieces.partition.upper[n].size());
        report.lower_counts[n] = static_cast<int>(pieces.partition.lower[n].size());
    }

    report.dimension_accounting = true;
    for (int n = 0; n <= top; ++n) {
        int total = report.critical_counts[n] + report.upper_counts[n] + report.lower_counts[n];
        if (total != report.omega_dims[n]) {
            report.dimension_accounting = false;
            report.failures.push_back("partition does not account for dimension " +
                                      std::to_string(n));
        }
    }
    for (int n = 0; n <= top; ++n) {
        int uppers_above = static_cast<int>(pieces.partition.upper[n + 1].size());
        if (uppers_above != report.lower_counts[n]) {
            report.dimension_accounting = false;
            report.failures.push_back("pair counts disagree between dimensions " +
                                      std::to_string(n) + " and " + std::to_string(n + 1));
        }
    }

    if (report.betti_direct != report.betti_morse) {
        report.failures.push_back("betti numbers disagree");
    }

    if (ring == Ring::integer) {
        if (direct.torsion) report.torsion_direct = *direct.torsion;
        IntegerHomology ih = integer_complex_homology(integral_boundaries(pieces.data.boundary));
        report.torsion_morse = ih.torsion;
        report.torsion_match = report.torsion_direct == report.torsion_morse;
        if (!report.torsion_match) report.failures.push_back("torsion disagrees");
    }

    report.pass = report.failures.empty();
    return report;
}

}  // namespace pathmorse
