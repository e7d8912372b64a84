#include "pathmorse/omega.hpp"

#include <algorithm>
#include <set>

namespace pathmorse {

namespace {

// Columns: boundaries of allowed n-paths restricted to non-allowed
// (n-1)-sequences (the projection whose kernel is Omega_n).
QMatrix nonallowed_projection(const std::vector<Path>& allowed_n,
                              const std::vector<Path>& allowed_prev) {
    std::set<Path> prev(allowed_prev.begin(), allowed_prev.end());
    std::map<Path, int> rows;
    std::vector<Chain> boundaries;
    boundaries.reserve(allowed_n.size());
    for (const Path& p : allowed_n) {
        Chain b = boundary(p);
        for (const auto& [q, c] : b.terms()) {
            if (!prev.count(q)) rows.try_emplace(q, static_cast<int>(rows.size()));
        }
        boundaries.push_back(std::move(b));
    }
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(allowed_n.size()));
    for (int j = 0; j < static_cast<int>(boundaries.size()); ++j) {
        for (const auto& [q, c] : boundaries[j].terms()) {
            auto it = rows.find(q);
            if (it != rows.end()) m.at(it->second, j) = c;
        }
    }
    return m;
}

}  // namespace

OmegaBasis omega_basis(const Digraph& g, int n, const Budget& budget) {
    if (n < 0) throw std::invalid_argument("negative dimension");
    OmegaBasis basis;
    basis.dimension = n;
    basis.allowed = enumerate_allowed_paths(g, n, budget);
    if (n == 0) {
        for (const Path& p : basis.allowed) {
            Chain c(0);
            c.add(p, 1);
            basis.generators.push_back(std::move(c));
        }
        return basis;
    }

    std::vector<Path> prev = enumerate_allowed_paths(g, n - 1, budget);
    QMatrix m = nonallowed_projection(basis.allowed, prev);
    for (const auto& vec : m.nullspace()) {
        Chain c(n);
        for (std::size_t j = 0; j < vec.size(); ++j) {
            if (vec[j] != 0) c.add(basis.allowed[j], vec[j]);
        }
        basis.generators.push_back(std::move(c));
    }
    return basis;
}

OmegaComplex::OmegaComplex(const Digraph& g, int top, const Budget& budget) {
    if (top < 0) throw std::invalid_argument("negative dimension cap");
    bases_.reserve(top + 1);
    for (int n = 0; n <= top; ++n) bases_.push_back(omega_basis(g, n, budget));
}

QMatrix OmegaComplex::boundary_of(int n) const {
    if (n <= 0 || n > top()) {
        return QMatrix(0, n == 0 ? bases_[0].dim() : 0);
    }
    const auto& prev_allowed = bases_[n - 1].allowed;
    std::map<Path, int> row;
    for (int i = 0; i < static_cast<int>(prev_allowed.size()); ++i) row.emplace(prev_allowed[i], i);

    QMatrix m(static_cast<int>(prev_allowed.size()), bases_[n].dim());
    for (int j = 0; j < bases_[n].dim(); ++j) {
        Chain b = boundary(bases_[n].generators[j]);
        for (const auto& [q, c] : b.terms()) {
            auto it = row.find(q);
            if (it == row.end()) {
                throw std::logic_error("Omega generator boundary leaves the allowed span");
            }
            m.at(it->second, j) = c;
        }
    }
    return m;
}

int OmegaComplex::boundary_rank(int n) const {
    if (n <= 0 || n > top()) return 0;
    return boundary_of(n).rank();
}

namespace {

ZMatrix nonallowed_projection_z(const std::vector<Path>& allowed_n,
                                const std::vector<Path>& allowed_prev) {
    std::set<Path> prev(allowed_prev.begin(), allowed_prev.end());
    std::map<Path, int> rows;
    std::vector<Chain> boundaries;
    boundaries.reserve(allowed_n.size());
    for (const Path& p : allowed_n) {
        Chain b = boundary(p);
        for (const auto& [q, c] : b.terms()) {
            if (!prev.count(q)) rows.try_emplace(q, static_cast<int>(rows.size()));
        }
        boundaries.push_back(std::move(b));
    }
    ZMatrix m(static_cast<int>(rows.size()), static_cast<int>(allowed_n.size()));
    for (int j = 0; j < static_cast<int>(boundaries.size()); ++j) {
        for (const auto& [q, c] : boundaries[j].terms()) {
            auto it = rows.find(q);
            if (it != rows.end()) m.at(it->second, j) = numerator(c);
        }
    }
    return m;
}

}  // namespace

OmegaComplexZ::OmegaComplexZ(const Digraph& g, int top, const Budget& budget) {
    if (top < 0) throw std::invalid_argument("negative dimension cap");
    bases_.reserve(top + 1);
    for (int n = 0; n <= top; ++n) {
        OmegaLattice lattice;
        lattice.dimension = n;
        lattice.allowed = enumerate_allowed_paths(g, n, budget);
        if (n == 0) {
            for (const Path& p : lattice.allowed) {
                Chain c(0);
                c.add(p, 1);
                lattice.generators.push_back(std::move(c));
            }
        } else {
            ZMatrix m = nonallowed_projection_z(lattice.allowed, bases_[n - 1].allowed);
            for (const auto& vec : kernel_lattice(m)) {
                Chain c(n);
                for (std::size_t j = 0; j < vec.size(); ++j) {
                    if (vec[j] != 0) c.add(lattice.allowed[j], Rational(vec[j]));
                }
                lattice.generators.push_back(std::move(c));
            }
        }
        bases_.push_back(std::move(lattice));
    }
}

ZMatrix OmegaComplexZ::boundary_in_lattice(int n) const {
    if (n <= 0 || n > top()) {
        return ZMatrix(0, n == 0 ? bases_[0].dim() : 0);
    }
    const OmegaLattice& prev = bases_[n - 1];
    std::map<Path, int> row;
    for (int i = 0; i < static_cast<int>(prev.allowed.size()); ++i) row.emplace(prev.allowed[i], i);

    // lattice basis of Omega_{n-1} in path coordinates
    QMatrix lattice(static_cast<int>(prev.allowed.size()), prev.dim());
    for (int j = 0; j < prev.dim(); ++j) {
        for (const auto& [q, c] : prev.generators[j].terms()) lattice.at(row.at(q), j) = c;
    }

    QMatrix rhs(static_cast<int>(prev.allowed.size()), bases_[n].dim());
    for (int j = 0; j < bases_[n].dim(); ++j) {
        Chain b = boundary(bases_[n].generators[j]);
        for (const auto& [q, c] : b.terms()) {
            auto it = row.find(q);
            if (it == row.end()) {
                throw std::logic_error("Omega lattice boundary leaves the allowed span");
            }
            rhs.at(it->second, j) = c;
        }
    }

    QMatrix x = lattice.solve(rhs);
    ZMatrix out(prev.dim(), bases_[n].dim());
    for (int r = 0; r < x.rows(); ++r) {
        for (int c = 0; c < x.cols(); ++c) {
            if (denominator(x.at(r, c)) != 1) {
                throw std::logic_error("boundary is not integral in the saturated lattice basis");
            }
            out.at(r, c) = numerator(x.at(r, c));
        }
    }
    return out;
}

}  // namespace pathmorse
