#include "locsep/edge_list.hpp"

#include "locsep/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace locsep {

namespace {

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t{e.first} << 32) | e.second);
    }
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

} // namespace

std::pair<Graph, PreprocessReport> load_edge_list(std::string_view text) {
    PreprocessReport report;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::unordered_set<Edge, EdgeHash> seen;

    auto intern = [&](std::string_view token) {
        auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<VertexId>(labels.size()));
        if (inserted) labels.emplace_back(token);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '%' || tokens[0].front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 2 vertex tokens, found " + std::to_string(tokens.size()));

        VertexId u = intern(tokens[0]);
        VertexId v = intern(tokens[1]);
        if (u == v) {
            ++report.dropped_self_loops;
            continue;
        }
        Edge key = u < v ? Edge{u, v} : Edge{v, u};
        if (!seen.insert(key).second) {
            ++report.collapsed_parallel_edges;
            continue;
        }
        edges.push_back(key);
    }
    if (!labels.empty()) report.rounds = 1;
    const std::size_t n = labels.size();
    return {Graph(n, edges, std::move(labels)), report};
}

std::pair<Graph, PreprocessReport> load_edge_list_file(const std::filesystem::path& path) {
    return load_edge_list(read_text_file(path));
}

std::string write_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += g.label(u);
        out += ' ';
        out += g.label(v);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

} // namespace locsep
