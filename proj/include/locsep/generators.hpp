#pragma once

#include "locsep/graph.hpp"

#include <cstdint>

namespace locsep {

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Connected planar-ish graph with exactly n vertices and m edges: a random
/// spanning tree of a grid plus random grid and diagonal edges. Requires
/// n - 1 <= m <= about 4n.
Graph road_like_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Graph with exactly m edges whose endpoints fall into the same of
/// `groups` blocks with probability `p_inside`.
Graph planted_partition_graph(std::size_t n, std::size_t m, std::size_t groups, double p_inside, std::uint64_t seed);

} // namespace locsep
