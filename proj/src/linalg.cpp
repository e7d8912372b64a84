#include "pathmorse/linalg.hpp"

#include <algorithm>
#include <limits>

namespace pathmorse {

namespace {

Integer gcd_int(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Integer lcm_int(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer g = gcd_int(a, b);
    Integer r = (a / g) * b;
    return r < 0 ? -r : r;
}

// Scale a rational row to a primitive integer vector (content 1). Sign kept.
std::vector<Integer> to_primitive(const std::vector<Rational>& row) {
    Integer den_lcm = 1;
    for (const auto& x : row) {
        if (x != 0) den_lcm = lcm_int(den_lcm, denominator(x));
    }
    std::vector<Integer> out(row.size());
    Integer content = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != 0) {
            out[i] = numerator(row[i]) * (den_lcm / denominator(row[i]));
            content = gcd_int(content, out[i]);
        }
    }
    if (content > 1) {
        for (auto& x : out) x /= content;
    }
    return out;
}

void make_primitive(std::vector<Integer>& row) {
    Integer content = 0;
    for (const auto& x : row) content = gcd_int(content, x);
    if (content > 1) {
        for (auto& x : row) x /= content;
    }
}

}  // namespace

int QMatrix::rank() const {
    // fraction-free elimination on primitive integer rows; pivot column is
    // the active column of smallest support, pivot row the smallest-support
    // row hitting it
    std::vector<std::vector<Integer>> m;
    m.reserve(rows_);
    for (int r = 0; r < rows_; ++r) {
        std::vector<Rational> row(cols_);
        for (int c = 0; c < cols_; ++c) row[c] = at(r, c);
        m.push_back(to_primitive(row));
    }

    std::vector<char> row_done(rows_, 0), col_done(cols_, 0);
    int rank = 0;
    for (;;) {
        int best_col = -1;
        long best_support = std::numeric_limits<long>::max();
        for (int c = 0; c < cols_; ++c) {
            if (col_done[c]) continue;
            long support = 0;
            for (int r = 0; r < rows_; ++r) {
                if (!row_done[r] && m[r][c] != 0) ++support;
            }
            if (support > 0 && support < best_support) {
                best_support = support;
                best_col = c;
            }
        }
        if (best_col < 0) break;

        int pivot = -1;
        long pivot_support = std::numeric_limits<long>::max();
        for (int r = 0; r < rows_; ++r) {
            if (row_done[r] || m[r][best_col] == 0) continue;
            long support = 0;
            for (int c = 0; c < cols_; ++c) {
                if (m[r][c] != 0) ++support;
            }
            if (support < pivot_support) {
                pivot_support = support;
                pivot = r;
            }
        }

        const Integer p = m[pivot][best_col];
        for (int r = 0; r < rows_; ++r) {
            if (row_done[r] || r == pivot || m[r][best_col] == 0) continue;
            const Integer q = m[r][best_col];
            for (int c = 0; c < cols_; ++c) {
                m[r][c] = m[r][c] * p - m[pivot][c] * q;
            }
            make_primitive(m[r]);
        }
        row_done[pivot] = 1;
        col_done[best_col] = 1;
        ++rank;
    }
    return rank;
}

QMatrix QMatrix::rref(std::vector<int>* pivots) const {
    QMatrix m = *this;
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r) {
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int k = 0; k < cols_; ++k) std::swap(m.at(pivot, k), m.at(lead, k));
        }
        const Rational inv = Rational(1) / m.at(lead, c);
        for (int k = c; k < cols_; ++k) m.at(lead, k) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, c) == 0) continue;
            const Rational factor = m.at(r, c);
            for (int k = c; k < cols_; ++k) m.at(r, k) -= factor * m.at(lead, k);
        }
        if (pivots) pivots->push_back(c);
        ++lead;
    }
    return m;
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    std::vector<int> pivots;
    QMatrix r = rref(&pivots);
    std::vector<char> is_pivot(cols_, 0);
    for (int c : pivots) is_pivot[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols_);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            x[pivots[i]] = -r.at(static_cast<int>(i), free);
        }
        basis.push_back(std::move(x));
    }
    return reduced_span_basis(std::move(basis));
}

QMatrix QMatrix::augment(const QMatrix& other) const {
    if (other.rows_ != rows_) throw std::invalid_argument("augment: row mismatch");
    QMatrix m(rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
    }
    return m;
}

QMatrix QMatrix::solve(const QMatrix& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve: row mismatch");
    std::vector<int> pivots;
    QMatrix r = augment(rhs).rref(&pivots);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= cols_) throw std::invalid_argument("solve: inconsistent system");
        if (pivots[i] != static_cast<int>(i)) {
            throw std::invalid_argument("solve: matrix does not have full column rank");
        }
    }
    if (static_cast<int>(pivots.size()) != cols_) {
        throw std::invalid_argument("solve: matrix does not have full column rank");
    }
    QMatrix x(cols_, rhs.cols_);
    for (int i = 0; i < cols_; ++i) {
        for (int j = 0; j < rhs.cols_; ++j) x.at(i, j) = r.at(i, cols_ + j);
    }
    return x;
}

std::vector<std::vector<Rational>> reduced_span_basis(std::vector<std::vector<Rational>> vectors) {
    std::vector<std::vector<Rational>> basis;     // reduced, leading coeff 1
    std::vector<std::size_t> leads;

    auto leading = [](const std::vector<Rational>& v) {
        std::size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        return i;
    };

    for (auto& v : vectors) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (leads[b] < v.size() && v[leads[b]] != 0) {
                const Rational factor = v[leads[b]];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= factor * basis[b][i];
            }
        }
        std::size_t lead = leading(v);
        if (lead == v.size()) continue;
        const Rational inv = Rational(1) / v[lead];
        for (auto& x : v) x *= inv;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b][lead] != 0) {
                const Rational factor = basis[b][lead];
                for (std::size_t i = 0; i < v.size(); ++i) basis[b][i] -= factor * v[i];
            }
        }
        basis.push_back(std::move(v));
        leads.push_back(lead);
    }

    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return leads[a] < leads[b]; });
    std::vector<std::vector<Rational>> sorted;
    sorted.reserve(basis.size());
    for (std::size_t i : order) sorted.push_back(std::move(basis[i]));
    return sorted;
}

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? -x : x; }

}  // namespace

SmithResult smith_normal_form(const ZMatrix& a) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Integer>> d(rows, std::vector<Integer>(cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) d[r][c] = a.at(r, c);
    }

    SmithResult result(cols);
    for (int i = 0; i < cols; ++i) result.right.at(i, i) = 1;

    auto swap_cols = [&](int c1, int c2) {
        for (int r = 0; r < rows; ++r) std::swap(d[r][c1], d[r][c2]);
        for (int r = 0; r < cols; ++r) std::swap(result.right.at(r, c1), result.right.at(r, c2));
    };
    auto add_col = [&](int dst, int src, const Integer& k) {  // col_dst += k * col_src
        for (int r = 0; r < rows; ++r) d[r][dst] += k * d[r][src];
        for (int r = 0; r < cols; ++r) result.right.at(r, dst) += k * result.right.at(r, src);
    };
    auto negate_col = [&](int c) {
        for (int r = 0; r < rows; ++r) d[r][c] = -d[r][c];
        for (int r = 0; r < cols; ++r) result.right.at(r, c) = -result.right.at(r, c);
    };

    const int bound = std::min(rows, cols);
    int t = 0;
    while (t < bound) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        int pr = -1, pc = -1;
        Integer best = 0;
        for (int r = t; r < rows; ++r) {
            for (int c = t; c < cols; ++c) {
                if (d[r][c] == 0) continue;
                Integer v = abs_int(d[r][c]);
                if (pr < 0 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        if (pr != t) std::swap(d[pr], d[t]);
        if (pc != t) swap_cols(pc, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < rows; ++r) {
                if (d[r][t] == 0) continue;
                Integer q = d[r][t] / d[t][t];
                if (q != 0) {
                    for (int c = t; c < cols; ++c) d[r][c] -= q * d[t][c];
                }
                if (d[r][t] != 0) {  // remainder becomes the smaller pivot
                    std::swap(d[r], d[t]);
                    clean = false;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (d[t][c] == 0) continue;
                Integer q = d[t][c] / d[t][t];
                if (q != 0) add_col(c, t, -q);
                if (d[t][c] != 0) {
                    swap_cols(c, t);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility: fold any bad entry into the pivot row
                for (int r = t + 1; r < rows && clean; ++r) {
                    for (int c = t + 1; c < cols && clean; ++c) {
                        if (d[r][c] % d[t][t] != 0) {
                            for (int k = t; k < cols; ++k) d[t][k] += d[r][k];
                            clean = false;
                        }
                    }
                }
            }
        }
        if (d[t][t] < 0) {
            negate_col(t);
        }
        ++t;
    }

    for (int i = 0; i < bound; ++i) {
        if (d[i][i] != 0) {
            result.invariant_factors.push_back(d[i][i]);
            ++result.rank;
        }
    }
    return result;
}

std::vector<std::vector<Integer>> kernel_lattice(const ZMatrix& a) {
    SmithResult s = smith_normal_form(a);
    std::vector<std::vector<Integer>> basis;
    for (int c = s.rank; c < a.cols(); ++c) {
        std::vector<Integer> v(a.cols());
        for (int r = 0; r < a.cols(); ++r) v[r] = s.right.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pathmorse
