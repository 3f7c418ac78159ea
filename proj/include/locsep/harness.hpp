#pragma once

#include "locsep/graph.hpp"
#include "locsep/metrics.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locsep {

enum class Method { Local1, Local2, Local1Refine, LabelPropagation, External };

std::string_view method_tag(Method m);
std::optional<Method> parse_method(std::string_view tag);

enum class ReportFormat { Csv, Markdown, Json };

std::optional<ReportFormat> parse_format(std::string_view name);

/// One benchmark run. Keys of the flat config format match the CLI flag
/// names without the leading dashes.
struct RunConfig {
    std::string name;  // dataset name in reports; defaults to the input file stem
    std::filesystem::path input;
    Method method = Method::Local1;
    bool method_set = false;
    std::optional<std::size_t> radius;
    std::optional<std::size_t> refine_radius;
    std::optional<std::size_t> min_size;
    double delta = 1.0;
    std::uint64_t seed = 1;
    std::size_t max_rounds = 100;
    bool preprocess = false;
    std::optional<std::filesystem::path> cover;   // external cover to evaluate
    std::optional<std::filesystem::path> out;     // where the produced cover goes
    std::optional<std::filesystem::path> report;  // where the report goes
    ReportFormat format = ReportFormat::Csv;
    unsigned threads = 0;

    std::string dataset_name() const;
};

inline constexpr std::size_t kDefaultMinSize = 10;

/// Applies one key/value setting. Throws Config on unknown keys or values
/// that do not parse.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat "key = value" lines ('#' comments, blank lines ignored), applied in order.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Throws Config when a parameter is missing or does not fit the method.
void validate(const RunConfig& config);

struct RunResult {
    std::string dataset;
    std::size_t raw_vertices = 0, raw_edges = 0;
    std::size_t vertices = 0, edges = 0;
    PreprocessReport load_report;
    std::optional<PreprocessReport> reduce_report;
    MetricsReport metrics;
    std::vector<std::string> warnings;
    std::string cover_text;       // the cover as written to `out`
    std::string separators_text;  // separator sidecar for local methods
};

/// Loads the dataset, builds a cover with the configured method, evaluates
/// it and writes the configured outputs.
RunResult run(const RunConfig& config);

std::string format_report(const RunResult& result, ReportFormat format);

struct ComparisonRow {
    std::string dataset;
    std::string method;
    std::optional<RunResult> result;
    std::string error;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  // sorted by (dataset, method)
};

/// Runs every config; a failing run becomes an error row.
ComparisonTable compare(const std::vector<RunConfig>& configs);

std::string format_table(const ComparisonTable& table, ReportFormat format);

inline constexpr const char* kTableCsvHeader =
    "dataset,n_raw,m_raw,n,m,method,d,bags,q_ov,q_standard,beta_min,beta_mean,beta_max,count_at_delta,delta,error";

/// Reference figures for one published dataset.
struct DatasetInfo {
    std::string key;
    std::string name;
    std::size_t vertices;
    std::size_t edges;
    std::string description;
    std::string source;  // where to obtain the edge list
    struct Row {
        std::optional<std::size_t> radius;
        std::size_t bags;
        double score;
    };
    Row local1, local2, infomap, label_propagation, best_multilevel, leiden;
};

const std::vector<DatasetInfo>& dataset_registry();
const DatasetInfo* find_dataset(std::string_view key);

/// Seeded synthetic graph with the dataset's vertex and edge counts, for
/// when the real file is unavailable.
Graph stand_in_graph(const DatasetInfo& info);

} // namespace locsep
