#pragma once

#include "pathmorse/homology.hpp"
#include "pathmorse/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathmorse {

/// One collapse step: zero vertex v with unique in-neighbor u and unique
/// out-neighbor w, shortcut u -> w present; v and the edges u -> v, v -> w
/// are removed. Vertex ids refer to the digraph the step was applied to.
struct CollapseStep {
    VertexId u, v, w;
};

/// Full collapse trace. Each digraphs[k] keeps the original vertex universe
/// minus the removed vertices, re-densified; to_original[k] maps its ids
/// back to ids of digraphs[0] = G.
struct CollapseTrace {
    std::vector<Digraph> digraphs;             // G = digraphs[0], ..., G~ = back()
    std::vector<MorseFunction> functions;      // restrictions of f
    std::vector<CollapseStep> steps;           // steps[k] applied to digraphs[k]
    std::vector<std::vector<VertexId>> to_original;

    const Digraph& initial() const { return digraphs.front(); }
    const Digraph& final() const { return digraphs.back(); }
    const MorseFunction& final_function() const { return functions.back(); }
    std::size_t step_count() const { return steps.size(); }
};

/// Every zero-valued vertex has out-degree 1 and in-degree 1.
bool zero_degree_check(const Digraph& g, const MorseFunction& f);

/// Apply the step at zero vertex v. Requires zero_degree_check, f(v) = 0 and
/// the shortcut edge u -> w; returns the collapsed digraph, the restricted
/// function and the id map new -> old. Throws std::invalid_argument when the
/// step does not apply.
struct OneStepResult {
    Digraph digraph;
    MorseFunction function;
    CollapseStep step;
    std::vector<VertexId> to_parent;
};
OneStepResult one_step_collapse(const Digraph& g, const MorseFunction& f, VertexId v);

/// Repeat one-step collapses, scanning eligible zero vertices in canonical
/// id order, until no triple (u, v, w) with f(v) = 0 and u -> w remains.
CollapseTrace full_collapse(const Digraph& g, const MorseFunction& f);

/// Lemma-shape classification of a matched pair under the degree-1 zero
/// hypothesis: the upper path's unique zero vertex sits at an interior
/// position (shortcut edge must exist), at the end, or at the start.
enum class PairShape { interior, zero_last, zero_first };

struct MatchingInclusionReport {
    bool pass = false;
    bool inclusions_hold = true;       // matching shrinks at every step
    bool shapes_classified = true;     // every initial pair fits a shape
    bool residual_endpoint_only = true;  // final pairs: endpoint shapes, no shortcut
    std::vector<std::size_t> matching_sizes;  // per trace stage
    std::size_t interior_pairs = 0, zero_last_pairs = 0, zero_first_pairs = 0;
    std::vector<std::string> failures;
};

/// Checks matching monotonicity along the trace, classifies each pair of the
/// initial matching into the three shapes, and verifies that residual pairs
/// of the collapsed digraph have only the endpoint shapes with the shortcut
/// edge absent.
MatchingInclusionReport matching_inclusion_check(const Digraph& g, const MorseFunction& f,
                                                 const CollapseTrace& trace, int n_max,
                                                 const Budget& budget = {});

/// Retraction for one step: r(v) = w, identity elsewhere, as a self-map of
/// the pre-step digraph's vertices. Verified to be a digraph map onto the
/// collapsed image fixing it pointwise; throws std::logic_error otherwise.
std::vector<VertexId> retraction_map(const Digraph& g, const CollapseStep& step);

/// Homotopy witness: F on G box I_1 with F(x,0) = x, F(x,1) = r(x) must be a
/// digraph map into G; true exactly when it is.
bool homotopy_check(const Digraph& g, const std::vector<VertexId>& r);

struct Theorem2Report {
    bool pass = false;
    bool degree_ok = false;
    int max_dimension = 0;
    std::size_t steps = 0;
    std::vector<int> betti_initial;
    std::vector<int> betti_collapsed;
    std::vector<bool> inclusion_iso;
    bool retractions_ok = true;
    bool homotopies_ok = true;
    std::vector<std::vector<Integer>> torsion_initial;  // integer mode only
    std::vector<std::vector<Integer>> torsion_collapsed;
    bool torsion_match = true;
    std::vector<std::string> failures;
};

/// Machine check that collapsing preserves path homology: runs full_collapse,
/// compares Betti numbers, verifies the inclusion-induced map is an
/// isomorphism per dimension, and checks retraction + homotopy witnesses for
/// every step. Integer mode also compares invariant factors.
Theorem2Report verify_theorem_2(const Digraph& g, const MorseFunction& f, int n_max,
                                Ring ring = Ring::rational, const Budget& budget = {});

}  // namespace pathmorse
