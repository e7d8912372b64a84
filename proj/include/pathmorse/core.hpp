#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathmorse {

using VertexId = int;
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Resource caps for path enumeration and linear algebra. Exceeding a cap
/// raises BudgetError; results are never truncated silently.
struct Budget {
    std::size_t path_limit = 1'000'000;
};

class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse "p/q" or "p" into an exact rational. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q) = 1.
std::string rational_to_string(const Rational& value);

/// Deterministic 64-bit generator (splitmix64). Identical streams on every
/// platform, unlike the standard distributions.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n);

    /// Bernoulli with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace pathmorse
