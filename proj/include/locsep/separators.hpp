#pragma once

#include "locsep/cover.hpp"
#include "locsep/graph.hpp"

#include <string>
#include <vector>

namespace locsep {

/// Local separators found at a given radius.
///
/// A vertex v is a local 1-separator at radius d when two of its
/// neighbors are more than d apart in G - v. A pair {u, v} with
/// dist(u, v) <= d, neither of them a local 1-separator, is a local
/// 2-separator when two vertices of N(u) + N(v) - {u, v} are more than d
/// apart in G - {u, v}.
struct SeparatorSet {
    int order = 1;
    std::size_t radius = 1;
    std::vector<VertexId> vertices;  // order 1, sorted
    std::vector<Edge> pairs;         // order 2, (min, max), sorted

    /// Every vertex occurring in the set, sorted and unique.
    std::vector<VertexId> separator_vertices() const;
};

struct SearchOptions {
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

SeparatorSet find_local_1_separators(const Graph& g, std::size_t radius, const SearchOptions& opts = {});
SeparatorSet find_local_2_separators(const Graph& g, std::size_t radius, const SearchOptions& opts = {});

/// Overlapping bags: components of G minus the separator vertices, each
/// extended by the separator vertices adjacent to it. Bags share only
/// separator vertices; a vertex reached by no bag becomes a singleton.
struct Decomposition {
    std::vector<Community> bags;
    std::vector<VertexId> separator_vertices;  // sorted
    std::vector<VertexId> one_separators;
    std::vector<Edge> two_separators;
    std::vector<std::string> warnings;
};

Decomposition decompose(const Graph& g, const SeparatorSet& seps);

/// Replaces every bag with at least `min_size` vertices by the order-2
/// decomposition of its induced subgraph at radius `radius`.
Decomposition refine_hierarchical(const Graph& g, const Decomposition& deco, std::size_t radius,
                                  std::size_t min_size, const SearchOptions& opts = {});

/// Bags as communities; identical bags collapse into one.
Cover to_cover(const Graph& g, const Decomposition& deco);

/// Sidecar listing: one separator vertex or "u v" pair per line, as labels.
std::string write_separators(const Graph& g, const Decomposition& deco);

/// Checks the structural guarantees of a decomposition: every vertex is in
/// some bag, every bag is connected, and two bags meet only in separator
/// vertices. Returns a description of the first violation, or "" if none.
std::string check_decomposition(const Graph& g, const Decomposition& deco);

} // namespace locsep
