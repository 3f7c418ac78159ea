#include "locsep/cover.hpp"

#include "locsep/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace locsep {

Cover::Cover(std::size_t vertex_count, std::vector<Community> communities)
    : vertex_count_(vertex_count), communities_(std::move(communities)) {
    for (auto& c : communities_) {
        require(!c.empty(), ErrorKind::Precondition, "cover contains an empty community");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        require(c.back() < vertex_count_, ErrorKind::Precondition,
                "community member out of range: " + std::to_string(c.back()));
    }
    std::sort(communities_.begin(), communities_.end());
    communities_.erase(std::unique(communities_.begin(), communities_.end()), communities_.end());
}

bool Cover::contains(std::size_t c, VertexId v) const {
    const auto& members = communities_[c];
    return std::binary_search(members.begin(), members.end(), v);
}

std::vector<std::size_t> Cover::multiplicities() const {
    std::vector<std::size_t> k(vertex_count_, 0);
    for (const auto& c : communities_)
        for (VertexId v : c) ++k[v];
    return k;
}

bool Cover::is_partition() const {
    auto k = multiplicities();
    return std::all_of(k.begin(), k.end(), [](std::size_t x) { return x == 1; });
}

Cover load_cover(const Graph& g, std::string_view text) {
    std::unordered_map<std::string_view, VertexId> ids;
    const auto& labels = g.labels();
    std::vector<std::string> numeric;
    if (labels.empty()) {
        numeric.reserve(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) numeric.push_back(std::to_string(v));
    }
    const auto& table = labels.empty() ? numeric : labels;
    for (VertexId v = 0; v < table.size(); ++v) ids.emplace(table[v], v);

    std::vector<Community> communities;
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        Community community;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == start) break;
            std::string_view token = line.substr(start, i - start);
            if (community.empty() && (token.front() == '#' || token.front() == '%')) break;
            auto it = ids.find(token);
            if (it == ids.end()) throw ParseError(line_no, "unknown vertex label '" + std::string(token) + "'");
            community.push_back(it->second);
        }
        if (!community.empty()) communities.push_back(std::move(community));
    }
    return Cover(g.vertex_count(), std::move(communities));
}

std::string save_cover(const Graph& g, const Cover& cover) {
    std::string out;
    for (const auto& c : cover) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += g.label(c[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace locsep
