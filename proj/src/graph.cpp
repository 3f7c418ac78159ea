#include "locsep/graph.hpp"

#include "locsep/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace locsep {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    require(labels_.empty() || labels_.size() == vertex_count, ErrorKind::Precondition,
            "label table size does not match vertex count");
    require(vertex_count < std::numeric_limits<VertexId>::max(), ErrorKind::Precondition, "too many vertices");

    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        require(u < vertex_count && v < vertex_count, ErrorKind::Precondition,
                "edge endpoint out of range: " + std::to_string(std::max(u, v)));
        if (u == v) continue;
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    offsets_.assign(vertex_count + 1, 0);
    for (const auto& arc : arcs) ++offsets_[arc.first + 1];
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.reserve(arcs.size());
    for (const auto& arc : arcs) targets_.push_back(arc.second);
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<VertexId> ball(const Graph& g, VertexId center, std::size_t radius) {
    std::vector<std::size_t> dist(g.vertex_count(), kUnbounded);
    std::vector<VertexId> out{center};
    dist[center] = 0;
    for (std::size_t head = 0; head < out.size(); ++head) {
        VertexId u = out[head];
        if (dist[u] >= radius) continue;
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] != kUnbounded) continue;
            dist[w] = dist[u] + 1;
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g, std::span<const VertexId> excluded) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (VertexId v : excluded) seen[v] = 1;

    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (VertexId w : g.neighbors(queue[head])) {
                if (seen[w]) continue;
                seen[w] = 1;
                queue.push_back(w);
            }
        }
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

std::vector<VertexId> articulation_points(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = kUnbounded;
    std::vector<std::size_t> order(n, unvisited), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::size_t clock = 0;

    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next; // index into neighbor list
    };
    std::vector<Frame> stack;

    for (VertexId root = 0; root < n; ++root) {
        if (order[root] != unvisited) continue;
        std::size_t root_children = 0;
        order[root] = low[root] = clock++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                VertexId w = nb[f.next++];
                if (order[w] == unvisited) {
                    order[w] = low[w] = clock++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
                continue;
            }
            VertexId v = f.v, parent = f.parent;
            stack.pop_back();
            if (v == root) break;
            low[parent] = std::min(low[parent], low[v]);
            if (parent != root && low[v] >= order[parent]) is_cut[parent] = 1;
        }
        if (root_children > 1) is_cut[root] = 1;
    }

    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
    std::vector<std::size_t> dist(g.vertex_count(), kUnbounded);
    std::vector<VertexId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] != kUnbounded) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

std::size_t diameter(const Graph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (std::size_t d : bfs_distances(g, v))
            if (d != kUnbounded) best = std::max(best, d);
    return best;
}

namespace {

void erase_neighbor(std::vector<VertexId>& list, VertexId v) {
    auto it = std::find(list.begin(), list.end(), v);
    if (it != list.end()) list.erase(it);
}

} // namespace

std::pair<Graph, PreprocessReport> preprocess_reduce(const Graph& g) {
    const std::size_t n = g.vertex_count();
    PreprocessReport report;
    std::vector<std::vector<VertexId>> adj(n);
    for (VertexId v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    std::vector<char> alive(n, 1), queued(n, 0);

    std::vector<VertexId> current(n), next;
    std::iota(current.begin(), current.end(), VertexId{0});
    auto schedule = [&](VertexId v) {
        if (!queued[v]) {
            queued[v] = 1;
            next.push_back(v);
        }
    };

    while (!current.empty()) {
        ++report.rounds;
        for (VertexId v : current) {
            if (!alive[v]) continue;
            auto& nb = adj[v];
            if (nb.empty()) {
                ++report.removed_isolated;
            } else if (nb.size() == 1) {
                erase_neighbor(adj[nb[0]], v);
                schedule(nb[0]);
                ++report.removed_degree1;
            } else if (nb.size() == 2) {
                VertexId a = nb[0], b = nb[1];
                erase_neighbor(adj[a], v);
                erase_neighbor(adj[b], v);
                if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
                schedule(a);
                schedule(b);
                ++report.suppressed_degree2;
            } else {
                continue;
            }
            alive[v] = 0;
            nb.clear();
        }
        std::sort(next.begin(), next.end());
        for (VertexId v : next) queued[v] = 0;
        current.swap(next);
        next.clear();
    }

    std::vector<VertexId> remap(n, 0);
    std::vector<std::string> labels;
    VertexId kept = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        remap[v] = kept++;
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (VertexId w : adj[v])
            if (v < w) edges.emplace_back(remap[v], remap[w]);
    }
    // Unlabeled inputs only gain labels (their old ids) once renumbering happens.
    if (!g.has_labels() && kept == n) labels.clear();
    return {Graph(kept, edges, std::move(labels)), report};
}

Graph duplicate_graph(const Graph& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * 4);
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u, v + n);
        edges.emplace_back(u + n, v);
        edges.emplace_back(u + n, v + n);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        for (VertexId v = 0; v < n; ++v) labels.push_back(g.labels()[v] + "'");
    }
    return Graph(2 * std::size_t{n}, edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    constexpr VertexId absent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> index(g.vertex_count(), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<VertexId>(i);

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        VertexId v = vertices[i];
        labels.push_back(g.label(v));
        for (VertexId w : g.neighbors(v))
            if (index[w] != absent && v < w) edges.emplace_back(static_cast<VertexId>(i), index[w]);
    }
    return Graph(vertices.size(), edges, std::move(labels));
}

} // namespace locsep
