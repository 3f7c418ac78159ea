#include "locsep/label_propagation.hpp"

#include "locsep/error.hpp"

#include <map>
#include <numeric>
#include <random>

namespace locsep {

namespace {

// std::shuffle and the standard distributions are implementation-defined;
// the engine itself is not, so the order is reproducible across toolchains.
void shuffle(std::vector<VertexId>& order, std::mt19937_64& rng) {
    for (std::size_t i = order.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
    }
}

} // namespace

LabelState propagate_labels(const Graph& g, std::uint64_t seed, std::size_t max_rounds) {
    require(max_rounds >= 1, ErrorKind::Precondition, "max_rounds must be at least 1");
    const std::size_t n = g.vertex_count();
    LabelState state;
    state.rng_seed = seed;
    state.label.resize(n);
    std::iota(state.label.begin(), state.label.end(), VertexId{0});

    std::mt19937_64 rng(seed);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::map<VertexId, std::size_t> tally;

    while (state.round < max_rounds) {
        ++state.round;
        shuffle(order, rng);
        bool changed = false;
        for (VertexId v : order) {
            if (g.degree(v) == 0) continue;
            tally.clear();
            for (VertexId w : g.neighbors(v)) ++tally[state.label[w]];
            VertexId best = state.label[v];
            std::size_t best_count = 0;
            for (auto [label, count] : tally) {
                if (count > best_count) {
                    best = label;
                    best_count = count;
                }
            }
            if (best != state.label[v]) {
                state.label[v] = best;
                changed = true;
            }
        }
        if (!changed) {
            state.converged = true;
            break;
        }
    }
    return state;
}

Cover partition_from_labels(std::size_t vertex_count, const std::vector<VertexId>& labels) {
    std::map<VertexId, Community> groups;
    for (VertexId v = 0; v < labels.size(); ++v) groups[labels[v]].push_back(v);
    std::vector<Community> communities;
    communities.reserve(groups.size());
    for (auto& [label, members] : groups) communities.push_back(std::move(members));
    return Cover(vertex_count, std::move(communities));
}

Cover label_propagation(const Graph& g, std::uint64_t seed, std::size_t max_rounds) {
    return partition_from_labels(g.vertex_count(), propagate_labels(g, seed, max_rounds).label);
}

} // namespace locsep
