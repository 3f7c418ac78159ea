#include "locsep/export.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace locsep {

namespace {

std::vector<std::vector<std::size_t>> bag_tags(const Graph& g, const Decomposition* deco) {
    std::vector<std::vector<std::size_t>> tags(g.vertex_count());
    if (!deco) return tags;
    for (std::size_t b = 0; b < deco->bags.size(); ++b)
        for (VertexId v : deco->bags[b]) tags.at(v).push_back(b);
    return tags;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string export_json(const Graph& g, const Decomposition* deco) {
    using nlohmann::ordered_json;
    const auto tags = bag_tags(g, deco);
    ordered_json doc;
    doc["directed"] = false;
    doc["bag_count"] = deco ? deco->bags.size() : 0;
    doc["nodes"] = ordered_json::array();
    doc["edges"] = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ordered_json node;
        node["id"] = v;
        node["label"] = g.label(v);
        node["bags"] = tags[v];
        if (deco) node["separator"] = std::binary_search(deco->separator_vertices.begin(), deco->separator_vertices.end(), v);
        doc["nodes"].push_back(std::move(node));
    }
    for (auto [u, v] : g.edges()) doc["edges"].push_back(ordered_json{{"source", u}, {"target", v}});
    return doc.dump(2) + '\n';
}

std::string export_dot(const Graph& g, const Decomposition* deco) {
    const auto tags = bag_tags(g, deco);
    std::string out = "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v) + " [label=\"" + dot_escape(g.label(v)) + "\", bags=\"";
        for (std::size_t i = 0; i < tags[v].size(); ++i) {
            if (i) out += ';';
            out += std::to_string(tags[v][i]);
        }
        out += "\"];\n";
    }
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace locsep
