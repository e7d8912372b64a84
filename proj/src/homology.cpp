#include "pathmorse/homology.hpp"

#include <algorithm>
#include <set>

namespace pathmorse {

namespace {

bool has_directed_cycle(const Digraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (on_directed_loop(g, v)) return true;
    }
    return false;
}

}  // namespace

std::vector<int> rational_complex_betti(const std::vector<QMatrix>& boundaries) {
    // boundaries[n] : C_n -> C_{n-1}; reported degrees are 0 .. size-2 so
    // every betti number sees the incoming rank as well.
    if (boundaries.size() < 2) throw std::invalid_argument("need boundaries up to top+1");
    std::vector<int> ranks(boundaries.size());
    for (std::size_t n = 0; n < boundaries.size(); ++n) ranks[n] = boundaries[n].rank();
    std::vector<int> betti(boundaries.size() - 1);
    for (std::size_t n = 0; n + 1 < boundaries.size(); ++n) {
        betti[n] = boundaries[n].cols() - ranks[n] - ranks[n + 1];
    }
    return betti;
}

IntegerHomology integer_complex_homology(const std::vector<ZMatrix>& boundaries) {
    if (boundaries.size() < 2) throw std::invalid_argument("need boundaries up to top+1");
    IntegerHomology out;
    std::size_t degrees = boundaries.size() - 1;
    out.free_rank.resize(degrees);
    out.torsion.resize(degrees);
    for (std::size_t n = 0; n < degrees; ++n) {
        std::vector<std::vector<Integer>> kernel = kernel_lattice(boundaries[n]);
        int k = static_cast<int>(kernel.size());
        int dim = boundaries[n].cols();

        // express the incoming boundary in the kernel basis; the lattice is
        // saturated, so the coordinates are integers.
        QMatrix kmat(dim, k);
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < dim; ++i) kmat.at(i, j) = Rational(kernel[j][i]);
        }
        const ZMatrix& incoming = boundaries[n + 1];
        if (incoming.rows() != dim) throw std::invalid_argument("boundary dimensions disagree");
        QMatrix rhs(dim, incoming.cols());
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < incoming.cols(); ++c) rhs.at(r, c) = Rational(incoming.at(r, c));
        }
        QMatrix x = kmat.solve(rhs);
        ZMatrix xz(k, incoming.cols());
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < incoming.cols(); ++c) {
                if (denominator(x.at(r, c)) != 1) {
                    throw std::logic_error("cycle coordinates of a boundary are not integral");
                }
                xz.at(r, c) = numerator(x.at(r, c));
            }
        }
        SmithResult snf = smith_normal_form(xz);
        out.free_rank[n] = k - snf.rank;
        for (const Integer& d : snf.invariant_factors) {
            if (d > 1) out.torsion[n].push_back(d);
        }
    }
    return out;
}

HomologyReport homology(const Digraph& g, int n_max, Ring ring, const Budget& budget) {
    if (n_max < 0) throw std::invalid_argument("negative dimension cap");
    HomologyReport report;
    report.max_dimension = n_max;
    report.loop_warning = has_directed_cycle(g);

    int top = n_max + 1;
    OmegaComplex complex(g, top, budget);
    report.omega_dims.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) report.omega_dims[n] = complex.basis(n).dim();

    std::vector<QMatrix> boundaries;
    boundaries.reserve(top + 1);
    for (int n = 0; n <= top; ++n) boundaries.push_back(complex.boundary_of(n));
    report.betti = rational_complex_betti(boundaries);

    if (ring == Ring::integer) {
        OmegaComplexZ lattice(g, top, budget);
        std::vector<ZMatrix> zb;
        zb.reserve(top + 1);
        for (int n = 0; n <= top; ++n) zb.push_back(lattice.boundary_in_lattice(n));
        IntegerHomology ih = integer_complex_homology(zb);
        if (ih.free_rank != report.betti) {
            throw std::logic_error("integer free ranks disagree with rational betti numbers");
        }
        report.torsion = std::move(ih.torsion);
    }
    return report;
}

InclusionReport induced_inclusion(const Digraph& sub, const Digraph& ambient,
                                  const std::vector<VertexId>& to_ambient, int n_max,
                                  const Budget& budget) {
    if (static_cast<int>(to_ambient.size()) != sub.vertex_count()) {
        throw std::invalid_argument("vertex map size mismatch");
    }
    std::set<VertexId> seen;
    for (VertexId v : to_ambient) {
        if (v < 0 || v >= ambient.vertex_count()) throw std::invalid_argument("vertex map out of range");
        if (!seen.insert(v).second) throw std::invalid_argument("vertex map is not injective");
    }
    for (const auto& [u, v] : sub.edges()) {
        if (!ambient.has_edge(to_ambient[u], to_ambient[v])) {
            throw std::invalid_argument("edge does not map to an ambient edge");
        }
    }

    int top = n_max + 1;
    OmegaComplex sc(sub, top, budget);
    OmegaComplex ac(ambient, top, budget);

    InclusionReport report;
    report.betti_sub.resize(n_max + 1);
    report.betti_ambient.resize(n_max + 1);
    report.induced_rank.resize(n_max + 1);
    report.isomorphism.resize(n_max + 1);

    for (int n = 0; n <= n_max; ++n) {
        report.betti_sub[n] = sc.basis(n).dim() - sc.boundary_rank(n) - sc.boundary_rank(n + 1);
        report.betti_ambient[n] = ac.basis(n).dim() - ac.boundary_rank(n) - ac.boundary_rank(n + 1);

        // cycles of the sub complex, written in ambient path coordinates
        const auto& amb_allowed = ac.basis(n).allowed;
        std::map<Path, int> amb_row;
        for (int i = 0; i < static_cast<int>(amb_allowed.size()); ++i) amb_row.emplace(amb_allowed[i], i);

        std::vector<std::vector<Rational>> cycle_cols;
        for (const auto& coeffs : sc.boundary_of(n).nullspace()) {
            Chain z(n);
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                if (coeffs[j] != 0) z = z + sc.basis(n).generators[j] * coeffs[j];
            }
            std::vector<Rational> col(amb_allowed.size(), Rational(0));
            for (const auto& [p, c] : z.terms()) {
                std::vector<VertexId> mapped;
                mapped.reserve(p.vertices().size());
                for (VertexId v : p.vertices()) mapped.push_back(to_ambient[v]);
                auto it = amb_row.find(Path(std::move(mapped)));
                if (it == amb_row.end()) throw std::logic_error("mapped path is not allowed in the ambient digraph");
                col[it->second] = c;
            }
            cycle_cols.push_back(std::move(col));
        }

        QMatrix image = ac.boundary_of(n + 1);
        int rank_image = image.rank();
        // boundary_of(n+1) rows are already ambient path coordinates, so the
        // image columns stack directly next to the mapped cycles.
        QMatrix combined(static_cast<int>(amb_allowed.size()),
                         image.cols() + static_cast<int>(cycle_cols.size()));
        for (int r = 0; r < image.rows(); ++r) {
            for (int c = 0; c < image.cols(); ++c) combined.at(r, c) = image.at(r, c);
        }
        for (int j = 0; j < static_cast<int>(cycle_cols.size()); ++j) {
            for (int r = 0; r < static_cast<int>(cycle_cols[j].size()); ++r) {
                combined.at(r, image.cols() + j) = cycle_cols[j][r];
            }
        }
        report.induced_rank[n] = combined.rank() - rank_image;
        report.isomorphism[n] = report.induced_rank[n] == report.betti_sub[n] &&
                                report.induced_rank[n] == report.betti_ambient[n];
    }
    report.all_isomorphisms =
        std::all_of(report.isomorphism.begin(), report.isomorphism.end(), [](bool b) { return b; });
    return report;
}

InclusionReport induced_inclusion(const Digraph& sub, const Digraph& ambient, int n_max,
                                  const Budget& budget) {
    std::vector<VertexId> identity(sub.vertex_count());
    for (VertexId v = 0; v < sub.vertex_count(); ++v) identity[v] = v;
    return induced_inclusion(sub, ambient, identity, n_max, budget);
}

}  // namespace pathmorse
