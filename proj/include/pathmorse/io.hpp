#pragma once

#include "pathmorse/digraph.hpp"
#include "pathmorse/morse.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace pathmorse {

/// Document schema, version 1:
///   digraph: {"format": "digraph/1", "vertices": ["v0", ...],
///             "edges": [["v0","v1"], ...]}
///   morse:   {"format": "morse/1", "values": {"v0": "1", "v1": "0", ...}}
/// Rationals travel as canonical "p/q" strings (or integer strings); no
/// binary floats cross the interface.

nlohmann::json digraph_to_document(const Digraph& g);
Digraph parse_digraph(const nlohmann::json& doc);

nlohmann::json morse_to_document(const Digraph& g, const MorseFunction& f);
MorseFunction parse_morse(const nlohmann::json& doc, const Digraph& g);

Digraph load_digraph(const std::string& path);
MorseFunction load_morse(const std::string& path, const Digraph& g);

/// FNV-1a digest of the canonical serialization, hex string; used as the
/// inputs digest in run reports (stable across platforms).
std::string digest(const std::string& bytes);

}  // namespace pathmorse
