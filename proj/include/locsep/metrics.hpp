#pragma once

#include "locsep/cover.hpp"
#include "locsep/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace locsep {

/// Belonging coefficients a(i, c): 1/k_i when i is in c, where k_i counts
/// the communities containing i; zero otherwise.
class BelongingTable {
public:
    explicit BelongingTable(const Cover& cover);

    double weight(VertexId i, std::size_t c) const;
    std::size_t multiplicity(VertexId i) const { return multiplicity_[i]; }
    std::size_t community_count() const noexcept { return cover_.size(); }

private:
    Cover cover_;
    std::vector<std::size_t> multiplicity_;
};

BelongingTable belonging_coefficients(const Cover& cover);

/// Per-community contributions to the overlapping modularity.
struct CommunityTerms {
    double inner = 0;  // belonging-weighted internal edge count
    double outer = 0;  // belonging-weighted edges leaving towards other communities
};

std::vector<CommunityTerms> community_terms(const Graph& g, const Cover& cover);

/// Overlapping modularity. Throws UndefinedMetric when g has no edges.
double overlapping_modularity(const Graph& g, const Cover& cover);

/// Newman modularity of a partition. Throws Precondition naming the first
/// vertex that is uncovered or covered twice; UndefinedMetric without edges.
double standard_modularity(const Graph& g, const Cover& partition);

/// beta(c): belonging-weighted internal edge count divided by |c|.
double density(const Graph& g, const Cover& cover, std::size_t community);
std::vector<double> densities(const Graph& g, const Cover& cover);

/// Number of communities with density at least `delta` (delta >= 0).
std::size_t count_at_threshold(const Graph& g, const Cover& cover, double delta);
std::size_t count_at_threshold(const std::vector<double>& betas, double delta);

struct MetricsReport {
    std::string method;
    std::optional<std::size_t> radius;
    std::size_t bag_count = 0;
    double q_ov = 0;
    std::optional<double> q_standard;
    std::vector<double> densities;
    std::size_t count_at_delta = 0;
    double delta = 1.0;

    double beta_min() const;
    double beta_mean() const;
    double beta_max() const;
};

/// Evaluates every metric of `cover`. q_standard is filled only when the
/// cover is a partition.
MetricsReport evaluate(const Graph& g, const Cover& cover, std::string method, std::optional<std::size_t> radius,
                       double delta);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double x);

inline constexpr const char* kReportCsvHeader =
    "method,d,bags,q_ov,q_standard,beta_min,beta_mean,beta_max,count_at_delta,delta";

/// Row in kReportCsvHeader column order; absent values are written as "n/a".
std::string to_csv_row(const MetricsReport& report);

} // namespace locsep
