#pragma once

#include "pathmorse/digraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace pathmorse {

enum class InstanceKind { triangle, square, line, cycle, random_digraph, transitive_dag };

struct InstanceParams {
    int vertices = 0;           // line/cycle/random/transitive-dag
    int edge_percent = 30;      // edge probability in percent for random kinds
    int vertex_cap = 12;
};

InstanceKind parse_instance_kind(const std::string& name);  // throws on unknown

/// Deterministic instance generation. transitive-dag draws a random DAG on
/// the id order and takes its transitive closure (closing a digraph with
/// directed cycles would force self-loops). Labels are "v0".."v{n-1}".
/// Throws std::invalid_argument on infeasible params (caps included).
Digraph gen_instance(InstanceKind kind, const InstanceParams& params, std::uint64_t seed);

}  // namespace pathmorse
