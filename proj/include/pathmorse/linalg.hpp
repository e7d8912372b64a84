#pragma once

#include "pathmorse/core.hpp"

#include <vector>

namespace pathmorse {

/// Dense matrix over exact rationals. Desk scale by design: the library caps
/// instance sizes before matrices get large.
class QMatrix {
  public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    /// Rank by fraction-free elimination: rows are rescaled to primitive
    /// integer vectors after each step and pivots are chosen in the column
    /// of smallest support.
    int rank() const;

    /// Reduced row echelon form with left-to-right pivoting (canonical given
    /// the column order). Pivot column indices are appended to *pivots when
    /// given.
    QMatrix rref(std::vector<int>* pivots = nullptr) const;

    /// Canonical basis of the right nullspace: one column vector per free
    /// column, reduced so that each vector's first nonzero coordinate is 1
    /// and is zero in every other vector ("reduced echelon" over the row
    /// index order).
    std::vector<std::vector<Rational>> nullspace() const;

    /// Appends other's columns to the right (row counts must match).
    QMatrix augment(const QMatrix& other) const;

    /// Solves self * x = b for each column b of rhs. self must have full
    /// column rank and the system must be consistent; throws otherwise.
    QMatrix solve(const QMatrix& rhs) const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Reduce a list of coordinate vectors (spanning a subspace, possibly
/// dependent) to the canonical reduced echelon basis of their span: each
/// surviving vector has leading coordinate (first nonzero index) normalized
/// to 1 and eliminated from all others; vectors sorted by leading index.
std::vector<std::vector<Rational>> reduced_span_basis(std::vector<std::vector<Rational>> vectors);

/// Dense matrix over exact integers, for Smith normal form work.
class ZMatrix {
  public:
    ZMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  private:
    int rows_, cols_;
    std::vector<Integer> a_;
};

/// Smith normal form outcome: diagonal invariant factors d_1 | d_2 | ... (all
/// positive, zeros dropped) and the unimodular right transform V with
/// U * A * V diagonal. Columns rank..cols-1 of V span the kernel lattice of A
/// (a saturated sublattice, since V is unimodular).
struct SmithResult {
    std::vector<Integer> invariant_factors;
    int rank = 0;
    ZMatrix right;  // V, cols x cols

    SmithResult(int cols) : right(cols, cols) {}
};

/// Row/column reduction with pivot magnitude minimization; exact, no modular
/// arithmetic.
SmithResult smith_normal_form(const ZMatrix& a);

/// Basis of the kernel lattice of a (columns, each of length a.cols()).
std::vector<std::vector<Integer>> kernel_lattice(const ZMatrix& a);

}  // namespace pathmorse
