#pragma once

#include "locsep/cover.hpp"
#include "locsep/graph.hpp"

#include <cstdint>
#include <vector>

namespace locsep {

struct LabelState {
    std::vector<VertexId> label;
    std::uint64_t rng_seed = 0;
    std::size_t round = 0;
    bool converged = false;
};

/// Asynchronous label propagation. Every round visits the vertices in a
/// seed-derived shuffled order and moves each to the most frequent label
/// among its neighbors, preferring the smallest label on ties. Stops after
/// a round without changes or after `max_rounds` rounds.
LabelState propagate_labels(const Graph& g, std::uint64_t seed, std::size_t max_rounds = 100);

/// Partition of the final labels of propagate_labels.
Cover label_propagation(const Graph& g, std::uint64_t seed, std::size_t max_rounds = 100);

Cover partition_from_labels(std::size_t vertex_count, const std::vector<VertexId>& labels);

} // namespace locsep
