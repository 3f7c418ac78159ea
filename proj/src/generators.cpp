#include "locsep/generators.hpp"

#include "locsep/error.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace locsep {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(rng, i)]);
}

struct DisjointSets {
    std::vector<VertexId> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexId{0}); }
    VertexId find(VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (unit(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph road_like_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0) return Graph();
    const auto width = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    auto id = [&](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * width + x); };

    std::vector<Edge> axis, diagonal;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t x = v % width, y = v / width;
        if (x + 1 < width && v + 1 < n) axis.emplace_back(id(x, y), id(x + 1, y));
        if (v + width < n) axis.emplace_back(id(x, y), id(x, y + 1));
        if (x + 1 < width && v + width + 1 < n) diagonal.emplace_back(id(x, y), id(x + 1, y + 1));
        if (x > 0 && v + width - 1 < n) diagonal.emplace_back(id(x, y), id(x - 1, y + 1));
    }
    require(m + 1 >= n && m <= axis.size() + diagonal.size(), ErrorKind::Precondition,
            "road_like_graph: edge count out of range");

    std::mt19937_64 rng(seed);
    shuffle(axis, rng);
    DisjointSets sets(n);
    std::vector<Edge> chosen, rest;
    for (auto e : axis) (sets.unite(e.first, e.second) ? chosen : rest).push_back(e);
    rest.insert(rest.end(), diagonal.begin(), diagonal.end());
    shuffle(rest, rng);
    for (std::size_t i = 0; chosen.size() < m; ++i) chosen.push_back(rest[i]);
    return Graph(n, chosen);
}

Graph planted_partition_graph(std::size_t n, std::size_t m, std::size_t groups, double p_inside, std::uint64_t seed) {
    require(groups >= 1 && n >= 2 && m <= n * (n - 1) / 2, ErrorKind::Precondition,
            "planted_partition_graph: parameters out of range");
    std::mt19937_64 rng(seed);
    auto group_of = [&](VertexId v) { return v * groups / n; };
    std::set<Edge> edges;
    std::size_t attempts = 0;
    while (edges.size() < m) {
        auto u = static_cast<VertexId>(below(rng, n));
        VertexId v;
        if (unit(rng) < p_inside && ++attempts < 100 * m) {
            std::size_t g = group_of(u);
            std::size_t lo = (g * n + groups - 1) / groups, hi = ((g + 1) * n + groups - 1) / groups;
            v = static_cast<VertexId>(lo + below(rng, hi - lo));
        } else {
            v = static_cast<VertexId>(below(rng, n));
        }
        if (u == v) continue;
        edges.insert(u < v ? Edge{u, v} : Edge{v, u});
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(n, list);
}

} // namespace locsep
