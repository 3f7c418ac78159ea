#pragma once

#include "locsep/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

namespace locsep {

/// Parses a whitespace-separated edge list. Lines starting with '%' or '#'
/// are comments. Vertex tokens are remapped to dense ids in order of first
/// appearance and kept as labels. Self-loops are dropped and repeated edges
/// collapsed; both are counted in the report.
///
/// Throws ParseError for any line that does not hold exactly two tokens.
std::pair<Graph, PreprocessReport> load_edge_list(std::string_view text);

std::pair<Graph, PreprocessReport> load_edge_list_file(const std::filesystem::path& path);

/// One "label label" line per edge, ascending by vertex id. Isolated
/// vertices cannot be represented and are dropped.
std::string write_edge_list(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace locsep
