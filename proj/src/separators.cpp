#include "locsep/separators.hpp"

#include "locsep/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

namespace locsep {

namespace {

/// Depth-limited breadth-first searches that reuse their visit marks.
class LocalSearch {
public:
    explicit LocalSearch(const Graph& g) : g_(&g), visit_(g.vertex_count(), 0), target_(g.vertex_count(), 0) {}

    /// True when every two terminals are joined by a path of length at
    /// most `radius` avoiding `blocked`. Terminals must be distinct and
    /// not blocked.
    bool pairwise_within(std::span<const VertexId> terminals, std::span<const VertexId> blocked, std::size_t radius) {
        const std::size_t k = terminals.size();
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const std::uint32_t wanted = next_epoch();
            for (std::size_t j = i + 1; j < k; ++j) target_[terminals[j]] = wanted;
            std::size_t remaining = k - 1 - i;

            const std::uint32_t seen = next_epoch();
            for (VertexId b : blocked) visit_[b] = seen;
            visit_[terminals[i]] = seen;
            frontier_.assign(1, terminals[i]);
            for (std::size_t depth = 0; depth < radius && remaining && !frontier_.empty(); ++depth) {
                next_.clear();
                for (VertexId u : frontier_) {
                    for (VertexId w : g_->neighbors(u)) {
                        if (visit_[w] == seen) continue;
                        visit_[w] = seen;
                        if (target_[w] == wanted && --remaining == 0) break;
                        next_.push_back(w);
                    }
                    if (!remaining) break;
                }
                frontier_.swap(next_);
            }
            if (remaining) return false;
        }
        return true;
    }

    /// Vertices w > source with dist(source, w) <= radius, ascending.
    void later_vertices_within(VertexId source, std::size_t radius, std::vector<VertexId>& out) {
        out.clear();
        const std::uint32_t seen = next_epoch();
        visit_[source] = seen;
        frontier_.assign(1, source);
        for (std::size_t depth = 0; depth < radius && !frontier_.empty(); ++depth) {
            next_.clear();
            for (VertexId u : frontier_) {
                for (VertexId w : g_->neighbors(u)) {
                    if (visit_[w] == seen) continue;
                    visit_[w] = seen;
                    next_.push_back(w);
                    if (w > source) out.push_back(w);
                }
            }
            frontier_.swap(next_);
        }
        std::sort(out.begin(), out.end());
    }

private:
    std::uint32_t next_epoch() {
        if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
            std::fill(visit_.begin(), visit_.end(), 0);
            std::fill(target_.begin(), target_.end(), 0);
            epoch_ = 0;
        }
        return ++epoch_;
    }

    const Graph* g_;
    std::vector<std::uint32_t> visit_, target_;
    std::uint32_t epoch_ = 0;
    std::vector<VertexId> frontier_, next_;
};

std::vector<LocalSearch> make_workspaces(const Graph& g, unsigned threads) {
    std::vector<LocalSearch> ws;
    for (unsigned t = 0; t < detail::resolve_threads(threads); ++t) ws.emplace_back(g);
    return ws;
}

std::vector<char> local_cut_flags(const Graph& g, std::size_t radius, std::vector<LocalSearch>& ws, unsigned threads) {
    std::vector<char> flag(g.vertex_count(), 0);
    detail::parallel_for(g.vertex_count(), threads, [&](std::size_t i, unsigned worker) {
        auto v = static_cast<VertexId>(i);
        if (g.degree(v) < 2) return;
        const VertexId blocked[] = {v};
        flag[i] = !ws[worker].pairwise_within(g.neighbors(v), blocked, radius);
    });
    return flag;
}

} // namespace

std::vector<VertexId> SeparatorSet::separator_vertices() const {
    std::vector<VertexId> out = vertices;
    for (auto [u, v] : pairs) {
        out.push_back(u);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SeparatorSet find_local_1_separators(const Graph& g, std::size_t radius, const SearchOptions& opts) {
    require(radius >= 1, ErrorKind::Precondition, "separator radius must be at least 1");
    auto ws = make_workspaces(g, opts.threads);
    auto flag = local_cut_flags(g, radius, ws, opts.threads);
    SeparatorSet out{1, radius, {}, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (flag[v]) out.vertices.push_back(v);
    return out;
}

SeparatorSet find_local_2_separators(const Graph& g, std::size_t radius, const SearchOptions& opts) {
    require(radius >= 1, ErrorKind::Precondition, "separator radius must be at least 1");
    auto ws = make_workspaces(g, opts.threads);
    const auto is_cut = local_cut_flags(g, radius, ws, opts.threads);

    std::vector<std::vector<VertexId>> partners(g.vertex_count());
    std::vector<std::vector<VertexId>> scratch(ws.size()), terminals(ws.size());
    detail::parallel_for(g.vertex_count(), opts.threads, [&](std::size_t i, unsigned worker) {
        auto u = static_cast<VertexId>(i);
        if (is_cut[u]) return;
        auto& search = ws[worker];
        auto& candidates = scratch[worker];
        auto& x = terminals[worker];
        search.later_vertices_within(u, radius, candidates);
        for (VertexId v : candidates) {
            if (is_cut[v]) continue;
            x.clear();
            auto nu = g.neighbors(u), nv = g.neighbors(v);
            std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(x));
            std::erase_if(x, [&](VertexId w) { return w == u || w == v; });
            if (x.size() < 2) continue;
            const VertexId blocked[] = {u, v};
            if (!search.pairwise_within(x, blocked, radius)) partners[i].push_back(v);
        }
    });

    SeparatorSet out{2, radius, {}, {}};
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : partners[u]) out.pairs.emplace_back(u, v);
    return out;
}

namespace {

Decomposition decompose_with(const Graph& g, std::vector<VertexId> separators) {
    const std::size_t n = g.vertex_count();
    Decomposition deco;
    std::vector<char> is_sep(n, 0), in_bag(n, 0);
    for (VertexId s : separators) is_sep[s] = 1;

    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t epoch = 0;
    for (auto& comp : components(g, separators)) {
        ++epoch;
        Community bag = comp;
        for (VertexId v : comp) {
            in_bag[v] = 1;
            for (VertexId w : g.neighbors(v)) {
                if (!is_sep[w] || stamp[w] == epoch) continue;
                stamp[w] = epoch;
                bag.push_back(w);
                in_bag[w] = 1;
            }
        }
        std::sort(bag.begin(), bag.end());
        deco.bags.push_back(std::move(bag));
    }
    for (VertexId v = 0; v < n; ++v)
        if (!in_bag[v]) deco.bags.push_back({v});

    if (n > 0 && separators.size() == n)
        deco.warnings.push_back("every vertex is a separator at this radius; all bags are singletons");
    deco.separator_vertices = std::move(separators);
    return deco;
}

} // namespace

Decomposition decompose(const Graph& g, const SeparatorSet& seps) {
    Decomposition deco = decompose_with(g, seps.separator_vertices());
    deco.one_separators = seps.vertices;
    deco.two_separators = seps.pairs;
    return deco;
}

Decomposition refine_hierarchical(const Graph& g, const Decomposition& deco, std::size_t radius,
                                  std::size_t min_size, const SearchOptions& opts) {
    require(min_size >= 1, ErrorKind::Precondition, "min_size must be at least 1");
    Decomposition out;
    out.one_separators = deco.one_separators;
    out.two_separators = deco.two_separators;
    out.warnings = deco.warnings;
    std::vector<VertexId> separators = deco.separator_vertices;

    for (const auto& bag : deco.bags) {
        if (bag.size() < min_size) {
            out.bags.push_back(bag);
            continue;
        }
        Graph sub = induced_subgraph(g, bag);
        auto seps = find_local_2_separators(sub, radius, opts);
        auto inner = decompose(sub, seps);
        for (auto& b : inner.bags) {
            for (auto& v : b) v = bag[v];
            out.bags.push_back(std::move(b));
        }
        for (auto [a, b] : seps.pairs) out.two_separators.emplace_back(bag[a], bag[b]);
        for (VertexId s : inner.separator_vertices) separators.push_back(bag[s]);
        for (auto& w : inner.warnings) out.warnings.push_back("refining bag of " + std::to_string(bag.size()) + " vertices: " + w);
    }
    std::sort(separators.begin(), separators.end());
    separators.erase(std::unique(separators.begin(), separators.end()), separators.end());
    std::sort(out.two_separators.begin(), out.two_separators.end());
    out.two_separators.erase(std::unique(out.two_separators.begin(), out.two_separators.end()), out.two_separators.end());
    out.separator_vertices = std::move(separators);
    return out;
}

Cover to_cover(const Graph& g, const Decomposition& deco) { return Cover(g.vertex_count(), deco.bags); }

std::string write_separators(const Graph& g, const Decomposition& deco) {
    std::string out;
    for (VertexId v : deco.one_separators) out += g.label(v) + '\n';
    for (auto [u, v] : deco.two_separators) out += g.label(u) + ' ' + g.label(v) + '\n';
    return out;
}

std::string check_decomposition(const Graph& g, const Decomposition& deco) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> hits(n, 0);
    std::vector<std::uint32_t> member(n, 0), reached(n, 0);
    std::uint32_t epoch = 0;
    std::vector<VertexId> queue;

    for (std::size_t b = 0; b < deco.bags.size(); ++b) {
        const auto& bag = deco.bags[b];
        if (bag.empty()) return "bag " + std::to_string(b) + " is empty";
        ++epoch;
        for (VertexId v : bag) {
            if (v >= n) return "bag " + std::to_string(b) + " references vertex " + std::to_string(v) + " out of range";
            member[v] = epoch;
            ++hits[v];
        }
        queue.assign(1, bag.front());
        reached[bag.front()] = epoch;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (VertexId w : g.neighbors(queue[head]))
                if (member[w] == epoch && reached[w] != epoch) {
                    reached[w] = epoch;
                    queue.push_back(w);
                }
        if (queue.size() != bag.size()) return "bag " + std::to_string(b) + " is not connected";
    }
    for (VertexId v = 0; v < n; ++v) {
        if (hits[v] == 0) return "vertex " + g.label(v) + " is in no bag";
        if (hits[v] > 1 && !std::binary_search(deco.separator_vertices.begin(), deco.separator_vertices.end(), v))
            return "vertex " + g.label(v) + " is shared by " + std::to_string(hits[v]) + " bags but is no separator";
    }
    return {};
}

} // namespace locsep
