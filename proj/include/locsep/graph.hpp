#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace locsep {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Radius value meaning "no depth limit".
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Counters produced while loading or reducing a graph.
struct PreprocessReport {
    std::size_t removed_degree1 = 0;
    std::size_t suppressed_degree2 = 0;
    std::size_t removed_isolated = 0;
    std::size_t dropped_self_loops = 0;
    std::size_t collapsed_parallel_edges = 0;
    std::size_t rounds = 0;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, contain no self-loops and no
/// repeated entries. Vertices optionally carry the label they had in the
/// source file; unlabeled graphs report the decimal vertex id instead.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `vertex_count` vertices. Self-loops and repeated
    /// edges are discarded. Throws on out-of-range endpoints.
    Graph(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    bool empty() const noexcept { return vertex_count() == 0; }

    std::span<const VertexId> neighbors(VertexId v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(VertexId u, VertexId v) const noexcept;

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::string label(VertexId v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Every edge once, as (smaller, larger), in ascending order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
    std::vector<std::string> labels_;
};

/// Vertices within distance `radius` of `center`, sorted ascending.
std::vector<VertexId> ball(const Graph& g, VertexId center, std::size_t radius);

/// Connected components of g minus `excluded`, each sorted, listed by
/// ascending minimum vertex id.
std::vector<std::vector<VertexId>> components(const Graph& g, std::span<const VertexId> excluded = {});

/// Cut vertices of g (sorted).
std::vector<VertexId> articulation_points(const Graph& g);

/// Shortest-path distances from `source`; unreachable vertices get kUnbounded.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

/// Largest finite eccentricity over all vertices (0 for graphs without edges).
std::size_t diameter(const Graph& g);

/// Repeatedly deletes vertices of degree at most one and suppresses
/// degree-two vertices until every remaining vertex has degree >= 3.
/// A suppressed vertex whose neighbors are already adjacent is deleted
/// without adding an edge, so the output stays simple.
std::pair<Graph, PreprocessReport> preprocess_reduce(const Graph& g);

/// Graph on 2n vertices where copy v' (id v + n) is adjacent to N(v) and
/// to the copies of N(v). Labels of copies get a trailing apostrophe.
Graph duplicate_graph(const Graph& g);

/// Subgraph induced by `vertices` (sorted, unique). Vertex i of the result
/// corresponds to vertices[i]; labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

} // namespace locsep
