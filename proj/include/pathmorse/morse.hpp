#pragma once

#include "pathmorse/chain.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathmorse {

/// Non-negative vertex weighting. Values are exact rationals; equality tests
/// are exact.
struct MorseFunction {
    std::vector<Rational> values;  // indexed by vertex id

    const Rational& operator[](VertexId v) const { return values[v]; }
};

/// Weight of a path: sum of its vertex values.
Rational path_weight(const MorseFunction& f, const Path& p);

enum class MorseViolation {
    negative_value,
    zero_on_loop,
    zero_pair_reachable,
    face_count,
    coface_count,
};

struct MorseWitness {
    MorseViolation kind;
    Path path;                     // offending path (loop for zero_on_loop)
    std::vector<Path> cofactors;   // the equal-weight faces or cofaces
    std::string detail;
};

struct ValidationReport {
    bool valid = false;
    int checked_length = 0;
    std::optional<MorseWitness> witness;
    // both counting conventions for the coface condition, maxima over all
    // scanned paths: by distinct coface paths and by distinct inserted
    // vertices
    int max_equal_faces = 0;
    int max_equal_cofaces_paths = 0;
    int max_equal_cofaces_vertices = 0;
};

/// Checks that f is a discrete Morse function on g, certified for all
/// allowed paths of length <= check_length (default |V|+2 when <= 0).
/// Structural pre-checks run first: no zero value on a directed loop, no two
/// zero vertices mutually reachable. The coface condition counts distinct
/// coface paths; the report also carries the distinct-vertex count. Throws
/// std::invalid_argument on negative values.
ValidationReport validate_morse(const Digraph& g, const MorseFunction& f, int check_length = 0,
                                const Budget& budget = {});

/// Critical path test: no equal-weight allowed face and no equal-weight
/// allowed coface.
bool is_critical(const Digraph& g, const MorseFunction& f, const Path& p);

/// All critical allowed n-paths, lexicographic.
std::vector<Path> critical_paths(const Digraph& g, const MorseFunction& f, int n,
                                 const Budget& budget = {});

struct MatchedPair {
    Path lower;
    Path upper;
    int incidence;  // m(upper > lower) = <boundary(upper), lower> = +-1

    friend bool operator==(const MatchedPair& a, const MatchedPair& b) = default;
};

/// The gradient pairing: each allowed (n+1)-path beta with exactly one
/// equal-weight allowed face is paired with that face.
class Matching {
  public:
    Matching() = default;
    explicit Matching(std::vector<MatchedPair> pairs);

    const std::vector<MatchedPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    const MatchedPair* pair_of_lower(const Path& p) const;
    const MatchedPair* pair_of_upper(const Path& p) const;

  private:
    std::vector<MatchedPair> pairs_;  // sorted by (upper, lower)
    std::map<Path, std::size_t> by_lower_, by_upper_;
};

/// All pairs (alpha^(n), beta^(n+1)) with n < n_max, f(alpha) = f(beta).
/// f must validate to length >= n_max + 2; duplicate pair membership throws
/// (it would mean f is invalid or was validated too short).
Matching build_matching(const Digraph& g, const MorseFunction& f, int n_max,
                        const Budget& budget = {});

/// Algebraic gradient: grad(lower) = -m(upper > lower) * upper for each
/// matched pair, zero on unmatched paths, extended linearly.
Chain grad(const Matching& m, const Chain& c);
Chain grad(const Matching& m, const Path& p);

struct AcyclicityReport {
    bool acyclic = true;
    std::vector<MatchedPair> cycle;  // witness pairs a1<b1>a2<...>a1 when cyclic
};

/// Cycle search over the relation (a,b) -> (a',b') when a' != a and
/// <boundary(b), a'> != 0, both pairs in the matching.
AcyclicityReport check_acyclic(const Matching& m);

enum class MorseStrategy { trivial, single_zero, multi_zero };

struct GeneratedMorse {
    MorseFunction f;
    ValidationReport validation;
    bool fallback_to_trivial = false;
    std::string notice;
};

/// Seeded generation: trivial assigns distinct positive integers 1..|V|
/// shuffled; single-zero zeroes one vertex with out-degree <= 1, in-degree
/// <= 1, not on a directed loop (canonical order scan, seeded choice) and
/// falls back to trivial with a notice when none exists; multi-zero
/// rejection-samples larger zero sets and re-validates.
GeneratedMorse generate_morse(const Digraph& g, std::uint64_t seed, MorseStrategy strategy);

}  // namespace pathmorse
