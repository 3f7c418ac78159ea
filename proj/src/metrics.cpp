#include "locsep/metrics.hpp"

#include "locsep/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace locsep {

BelongingTable::BelongingTable(const Cover& cover) : cover_(cover), multiplicity_(cover.multiplicities()) {}

double BelongingTable::weight(VertexId i, std::size_t c) const {
    if (!cover_.contains(c, i)) return 0.0;
    return 1.0 / static_cast<double>(multiplicity_[i]);
}

BelongingTable belonging_coefficients(const Cover& cover) { return BelongingTable(cover); }

namespace {

void require_compatible(const Graph& g, const Cover& cover) {
    require(cover.vertex_count() == g.vertex_count(), ErrorKind::Precondition,
            "cover was built for " + std::to_string(cover.vertex_count()) + " vertices, graph has " +
                std::to_string(g.vertex_count()));
}

void require_edges(const Graph& g) {
    if (g.edge_count() == 0) throw Error(ErrorKind::UndefinedMetric, "modularity is undefined on a graph without edges");
}

} // namespace

std::vector<CommunityTerms> community_terms(const Graph& g, const Cover& cover) {
    require_compatible(g, cover);
    const auto k = cover.multiplicities();
    std::vector<double> inv_k(k.size(), 0.0);
    for (std::size_t v = 0; v < k.size(); ++v)
        if (k[v]) inv_k[v] = 1.0 / static_cast<double>(k[v]);

    std::vector<char> in_c(g.vertex_count(), 0);
    std::vector<CommunityTerms> terms;
    terms.reserve(cover.size());
    for (const auto& c : cover) {
        for (VertexId v : c) in_c[v] = 1;
        // Ordered endpoint pairs (i, j): pairs inside c contribute a_ic a_jc to
        // the doubled internal count; a neighbor j contributes to the outer
        // term through every other community d containing it, which sums to
        // 1 - [j in c] a_jc when j is covered.
        double inner2 = 0, outer = 0;
        for (VertexId i : c) {
            double inside = 0, outside = 0;
            for (VertexId j : g.neighbors(i)) {
                if (in_c[j]) {
                    inside += inv_k[j];
                    outside += 1.0 - inv_k[j];
                } else if (k[j]) {
                    outside += 1.0;
                }
            }
            inner2 += inv_k[i] * inside;
            outer += inv_k[i] * outside;
        }
        for (VertexId v : c) in_c[v] = 0;
        terms.push_back({inner2 / 2.0, outer});
    }
    return terms;
}

double overlapping_modularity(const Graph& g, const Cover& cover) {
    require_edges(g);
    const double m = static_cast<double>(g.edge_count());
    double q = 0;
    for (const auto& t : community_terms(g, cover)) {
        double share = (2.0 * t.inner + t.outer) / (2.0 * m);
        q += t.inner / m - share * share;
    }
    return q;
}

double standard_modularity(const Graph& g, const Cover& partition) {
    require_compatible(g, partition);
    const auto k = partition.multiplicities();
    for (VertexId v = 0; v < k.size(); ++v) {
        if (k[v] == 0)
            throw Error(ErrorKind::Precondition, "not a partition: vertex " + g.label(v) + " is in no community");
        if (k[v] > 1)
            throw Error(ErrorKind::Precondition,
                        "not a partition: vertex " + g.label(v) + " is in " + std::to_string(k[v]) + " communities");
    }
    require_edges(g);

    const double m = static_cast<double>(g.edge_count());
    std::vector<std::size_t> owner(g.vertex_count());
    for (std::size_t c = 0; c < partition.size(); ++c)
        for (VertexId v : partition[c]) owner[v] = c;

    double q = 0;
    for (std::size_t c = 0; c < partition.size(); ++c) {
        std::size_t internal_arcs = 0, volume = 0;
        for (VertexId v : partition[c]) {
            volume += g.degree(v);
            for (VertexId w : g.neighbors(v))
                if (owner[w] == c) ++internal_arcs;
        }
        double share = static_cast<double>(volume) / (2.0 * m);
        q += static_cast<double>(internal_arcs) / (2.0 * m) - share * share;
    }
    return q;
}

double density(const Graph& g, const Cover& cover, std::size_t community) {
    require(community < cover.size(), ErrorKind::Precondition, "community index out of range");
    require_compatible(g, cover);
    const auto k = cover.multiplicities();
    const auto& c = cover[community];
    double sum = 0;
    for (VertexId i : c)
        for (VertexId j : g.neighbors(i))
            if (cover.contains(community, j))
                sum += 1.0 / static_cast<double>(k[i] * k[j]);
    return sum / (2.0 * static_cast<double>(c.size()));
}

std::vector<double> densities(const Graph& g, const Cover& cover) {
    auto terms = community_terms(g, cover);
    std::vector<double> out(terms.size());
    for (std::size_t c = 0; c < terms.size(); ++c) out[c] = terms[c].inner / static_cast<double>(cover[c].size());
    return out;
}

std::size_t count_at_threshold(const std::vector<double>& betas, double delta) {
    require(delta >= 0, ErrorKind::Precondition, "delta must be nonnegative");
    return static_cast<std::size_t>(std::count_if(betas.begin(), betas.end(), [&](double b) { return b >= delta; }));
}

std::size_t count_at_threshold(const Graph& g, const Cover& cover, double delta) {
    return count_at_threshold(densities(g, cover), delta);
}

double MetricsReport::beta_min() const {
    return densities.empty() ? 0.0 : *std::min_element(densities.begin(), densities.end());
}

double MetricsReport::beta_max() const {
    return densities.empty() ? 0.0 : *std::max_element(densities.begin(), densities.end());
}

double MetricsReport::beta_mean() const {
    if (densities.empty()) return 0.0;
    return std::accumulate(densities.begin(), densities.end(), 0.0) / static_cast<double>(densities.size());
}

MetricsReport evaluate(const Graph& g, const Cover& cover, std::string method, std::optional<std::size_t> radius,
                       double delta) {
    MetricsReport r;
    r.method = std::move(method);
    r.radius = radius;
    r.bag_count = cover.size();
    r.q_ov = overlapping_modularity(g, cover);
    if (cover.is_partition()) r.q_standard = standard_modularity(g, cover);
    r.densities = densities(g, cover);
    r.delta = delta;
    r.count_at_delta = count_at_threshold(r.densities, delta);
    return r;
}

std::string format_real(double x) {
    if (x == 0) return "0";  // folds -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string to_csv_row(const MetricsReport& r) {
    std::string row = r.method;
    row += ',' + (r.radius ? std::to_string(*r.radius) : std::string("n/a"));
    row += ',' + std::to_string(r.bag_count);
    row += ',' + format_real(r.q_ov);
    row += ',' + (r.q_standard ? format_real(*r.q_standard) : std::string("n/a"));
    row += ',' + format_real(r.beta_min());
    row += ',' + format_real(r.beta_mean());
    row += ',' + format_real(r.beta_max());
    row += ',' + std::to_string(r.count_at_delta);
    row += ',' + format_real(r.delta);
    return row;
}

} // namespace locsep
