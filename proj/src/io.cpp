#include "pathmorse/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pathmorse {

using nlohmann::json;

json digraph_to_document(const Digraph& g) {
    json doc;
    doc["format"] = "digraph/1";
    doc["vertices"] = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.label(v));
    doc["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) {
        doc["edges"].push_back(json::array({g.label(u), g.label(v)}));
    }
    return doc;
}

namespace {

void require_format(const json& doc, const std::string& expected) {
    if (!doc.is_object()) throw std::invalid_argument("document is not a JSON object");
    if (!doc.contains("format") || !doc["format"].is_string() ||
        doc["format"].get<std::string>() != expected) {
        throw std::invalid_argument("document format must be \"" + expected + "\"");
    }
}

std::string value_to_rational_text(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    throw std::invalid_argument("values must be rational strings or integers");
}

}  // namespace

Digraph parse_digraph(const json& doc) {
    require_format(doc, "digraph/1");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw std::invalid_argument("missing vertices array");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw std::invalid_argument("missing edges array");
    }
    std::vector<std::string> labels;
    std::map<std::string, VertexId> id_of;
    for (const json& v : doc["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("vertex labels must be strings");
        std::string label = v.get<std::string>();
        if (!id_of.emplace(label, static_cast<VertexId>(labels.size())).second) {
            throw std::invalid_argument("duplicate vertex label: " + label);
        }
        labels.push_back(std::move(label));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw std::invalid_argument("edges must be [from, to] label pairs");
        }
        auto from = id_of.find(e[0].get<std::string>());
        auto to = id_of.find(e[1].get<std::string>());
        if (from == id_of.end() || to == id_of.end()) {
            throw std::invalid_argument("edge endpoint is not a declared vertex");
        }
        edges.emplace_back(from->second, to->second);
    }
    const int n = static_cast<int>(labels.size());
    return Digraph(n, std::move(edges), std::move(labels));
}

json morse_to_document(const Digraph& g, const MorseFunction& f) {
    if (static_cast<int>(f.values.size()) != g.vertex_count()) {
        throw std::invalid_argument("function must assign a value to every vertex");
    }
    json doc;
    doc["format"] = "morse/1";
    json values = json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        values[g.label(v)] = rational_to_string(f[v]);
    }
    doc["values"] = std::move(values);
    return doc;
}

MorseFunction parse_morse(const json& doc, const Digraph& g) {
    require_format(doc, "morse/1");
    if (!doc.contains("values") || !doc["values"].is_object()) {
        throw std::invalid_argument("missing values object");
    }
    std::map<std::string, VertexId> id_of;
    for (VertexId v = 0; v < g.vertex_count(); ++v) id_of.emplace(g.label(v), v);

    MorseFunction f;
    f.values.assign(g.vertex_count(), Rational(-1));
    std::set<VertexId> seen;
    for (const auto& [label, value] : doc["values"].items()) {
        auto it = id_of.find(label);
        if (it == id_of.end()) {
            throw std::invalid_argument("value for unknown vertex: " + label);
        }
        seen.insert(it->second);
        Rational r = parse_rational(value_to_rational_text(value));
        if (r < 0) throw std::invalid_argument("negative value for vertex " + label);
        f.values[it->second] = r;
    }
    if (static_cast<int>(seen.size()) != g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!seen.count(v)) {
                throw std::invalid_argument("missing value for vertex " + g.label(v));
            }
        }
    }
    return f;
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

}  // namespace

Digraph load_digraph(const std::string& path) { return parse_digraph(load_json(path)); }

MorseFunction load_morse(const std::string& path, const Digraph& g) {
    return parse_morse(load_json(path), g);
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
    return out.str();
}

}  // namespace pathmorse
