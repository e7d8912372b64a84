#pragma once

#include "pathmorse/path.hpp"

#include <map>
#include <string>

namespace pathmorse {

/// Sparse formal linear combination of equal-dimension paths with exact
/// rational coefficients. Zero coefficients are never stored. Terms may be
/// non-allowed or degenerate sequences (elements of the ambient module over
/// all vertex sequences).
class Chain {
  public:
    explicit Chain(int dimension) : dimension_(dimension) {}

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Path, Rational>& terms() const { return terms_; }

    /// Coefficient of p (zero when absent).
    Rational coefficient(const Path& p) const;

    /// Adds c * p, erasing the term if the sum cancels. Throws on a
    /// dimension mismatch.
    void add(const Path& p, const Rational& c);
    void add(const Chain& other, const Rational& scale = 1);

    Chain operator*(const Rational& scale) const;
    Chain operator+(const Chain& other) const;
    Chain operator-(const Chain& other) const;

    /// True when every term is an allowed path of g.
    bool supported_on_allowed(const Digraph& g) const;

    std::string to_string() const;
    std::string to_string(const Digraph& g) const;

    friend bool operator==(const Chain& a, const Chain& b) = default;

  private:
    int dimension_;
    std::map<Path, Rational> terms_;
};

/// Alternating-sum boundary over the ambient sequence module: for each term
/// p, sum (-1)^i d_i p over all positions. Degenerate faces are kept as
/// formal terms. The boundary of a 0-chain is the zero chain of dimension -1.
Chain boundary(const Chain& c);
Chain boundary(const Path& p);

}  // namespace pathmorse
