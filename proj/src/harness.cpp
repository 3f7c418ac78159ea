#include "locsep/harness.hpp"

#include "locsep/cover.hpp"
#include "locsep/edge_list.hpp"
#include "locsep/error.hpp"
#include "locsep/generators.hpp"
#include "locsep/label_propagation.hpp"
#include "locsep/separators.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <tuple>
#include <charconv>
#include <cstdio>

namespace locsep {

namespace {

constexpr std::pair<Method, std::string_view> kMethodTags[] = {
    {Method::Local1, "local1"},
    {Method::Local2, "local2"},
    {Method::Local1Refine, "local1+refine"},
    {Method::LabelPropagation, "lp"},
    {Method::External, "external"},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view value) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw Error(ErrorKind::Config, std::string(key) + ": expected a nonnegative integer, got '" + std::string(value) + "'");
    return out;
}

double parse_real(std::string_view key, std::string_view value) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw Error(ErrorKind::Config, std::string(key) + ": expected a number, got '" + std::string(value) + "'");
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
    if (value == "0" || value == "false" || value == "no" || value == "off") return false;
    throw Error(ErrorKind::Config, std::string(key) + ": expected true or false, got '" + std::string(value) + "'");
}

bool uses_radius(Method m) { return m == Method::Local1 || m == Method::Local2 || m == Method::Local1Refine; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + '"';
}

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    return s == "-0.0000" ? "0.0000" : s;
}

nlohmann::ordered_json report_json(const RunResult& r) {
    const auto& m = r.metrics;
    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["n_raw"] = r.raw_vertices;
    j["m_raw"] = r.raw_edges;
    j["n"] = r.vertices;
    j["m"] = r.edges;
    j["method"] = m.method;
    j["d"] = m.radius ? nlohmann::ordered_json(*m.radius) : nlohmann::ordered_json(nullptr);
    j["bags"] = m.bag_count;
    j["q_ov"] = m.q_ov;
    j["q_standard"] = m.q_standard ? nlohmann::ordered_json(*m.q_standard) : nlohmann::ordered_json(nullptr);
    j["beta_min"] = m.beta_min();
    j["beta_mean"] = m.beta_mean();
    j["beta_max"] = m.beta_max();
    j["count_at_delta"] = m.count_at_delta;
    j["delta"] = m.delta;
    j["densities"] = m.densities;
    j["load"] = {{"dropped_self_loops", r.load_report.dropped_self_loops},
                 {"collapsed_parallel_edges", r.load_report.collapsed_parallel_edges}};
    if (r.reduce_report) {
        const auto& p = *r.reduce_report;
        j["preprocess"] = {{"removed_degree1", p.removed_degree1},
                           {"suppressed_degree2", p.suppressed_degree2},
                           {"removed_isolated", p.removed_isolated},
                           {"rounds", p.rounds}};
    }
    j["warnings"] = r.warnings;
    return j;
}

constexpr const char* kMarkdownHeader =
    "| Name | n | m | Method | d | \\|B\\| | Ov Mod | Mod | beta min | beta mean | beta max | #beta>=delta | delta |\n"
    "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";

std::string markdown_row(const std::string& dataset, const RunResult* r, const std::string& method,
                         const std::string& error) {
    if (!r) return "| " + dataset + " | | | " + method + " | error: " + error + " | | | | | | | | |\n";
    const auto& m = r->metrics;
    std::string row = "| " + dataset + " | " + std::to_string(r->vertices) + " | " + std::to_string(r->edges) + " | " +
                      m.method + " | " + (m.radius ? std::to_string(*m.radius) : "-") + " | " +
                      std::to_string(m.bag_count) + " | " + fixed4(m.q_ov) + " | " +
                      (m.q_standard ? fixed4(*m.q_standard) : "-") + " | " + fixed4(m.beta_min()) + " | " +
                      fixed4(m.beta_mean()) + " | " + fixed4(m.beta_max()) + " | " + std::to_string(m.count_at_delta) +
                      " | " + format_real(m.delta) + " |\n";
    return row;
}

} // namespace

std::string_view method_tag(Method m) {
    for (auto [method, tag] : kMethodTags)
        if (method == m) return tag;
    return "unknown";
}

std::optional<Method> parse_method(std::string_view tag) {
    for (auto [method, name] : kMethodTags)
        if (name == tag) return method;
    return std::nullopt;
}

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "md") return ReportFormat::Markdown;
    if (name == "json") return ReportFormat::Json;
    return std::nullopt;
}

std::string RunConfig::dataset_name() const { return name.empty() ? input.stem().string() : name; }

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "name") {
        c.name = value;
    } else if (key == "input") {
        c.input = std::string(value);
    } else if (key == "method") {
        auto m = parse_method(value);
        if (!m)
            throw Error(ErrorKind::Config, "method: unknown method '" + std::string(value) +
                                               "' (expected local1, local2, local1+refine, lp or external)");
        c.method = *m;
        c.method_set = true;
    } else if (key == "radius") {
        c.radius = parse_unsigned<std::size_t>(key, value);
    } else if (key == "refine-radius") {
        c.refine_radius = parse_unsigned<std::size_t>(key, value);
    } else if (key == "min-size") {
        c.min_size = parse_unsigned<std::size_t>(key, value);
    } else if (key == "delta") {
        c.delta = parse_real(key, value);
    } else if (key == "seed") {
        c.seed = parse_unsigned<std::uint64_t>(key, value);
    } else if (key == "max-rounds") {
        c.max_rounds = parse_unsigned<std::size_t>(key, value);
    } else if (key == "preprocess") {
        c.preprocess = parse_bool(key, value);
    } else if (key == "cover") {
        c.cover = std::string(value);
    } else if (key == "out") {
        c.out = std::string(value);
    } else if (key == "report") {
        c.report = std::string(value);
    } else if (key == "format") {
        auto f = parse_format(value);
        if (!f) throw Error(ErrorKind::Config, "format: expected csv, md or json, got '" + std::string(value) + "'");
        c.format = *f;
    } else if (key == "threads") {
        c.threads = parse_unsigned<unsigned>(key, value);
    } else {
        throw Error(ErrorKind::Config, "unknown setting '" + std::string(key) + "'");
    }
}

void apply_config_text(RunConfig& config, std::string_view text) {
    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::Config, "config line " + std::to_string(line_no) + ": expected key = value");
        apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    apply_config_text(config, read_text_file(path));
}

void validate(const RunConfig& c) {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::Config, what); };
    if (c.input.empty()) fail("input is required");
    if (!c.method_set) fail("method is required");
    const std::string tag(method_tag(c.method));
    if (uses_radius(c.method)) {
        if (!c.radius) fail("method " + tag + " requires radius");
        if (*c.radius < 1) fail("radius must be at least 1");
    } else if (c.radius) {
        fail("method " + tag + " does not take radius");
    }
    if (c.method == Method::Local1Refine) {
        if (!c.refine_radius) fail("method local1+refine requires refine-radius");
        if (*c.refine_radius < 1) fail("refine-radius must be at least 1");
        if (c.min_size && *c.min_size < 1) fail("min-size must be at least 1");
    } else {
        if (c.refine_radius) fail("method " + tag + " does not take refine-radius");
        if (c.min_size) fail("method " + tag + " does not take min-size");
    }
    if (c.method == Method::External) {
        if (!c.cover) fail("method external requires cover");
    } else if (c.cover) {
        fail("method " + tag + " does not read a cover");
    }
    if (!(c.delta >= 0)) fail("delta must be nonnegative");
    if (c.max_rounds < 1) fail("max-rounds must be at least 1");
}

RunResult run(const RunConfig& config) {
    validate(config);
    RunResult result;
    result.dataset = config.dataset_name();

    auto [raw, load_report] = load_edge_list_file(config.input);
    result.load_report = load_report;
    result.raw_vertices = raw.vertex_count();
    result.raw_edges = raw.edge_count();
    if (raw.empty()) throw Error(ErrorKind::Config, "empty graph");

    Graph g = std::move(raw);
    if (config.preprocess) {
        auto [reduced, report] = preprocess_reduce(g);
        result.reduce_report = report;
        g = std::move(reduced);
        if (g.empty()) throw Error(ErrorKind::Config, "empty graph after preprocessing");
    }
    result.vertices = g.vertex_count();
    result.edges = g.edge_count();

    const SearchOptions search{config.threads};
    std::optional<Decomposition> deco;
    Cover cover;
    switch (config.method) {
    case Method::Local1:
        deco = decompose(g, find_local_1_separators(g, *config.radius, search));
        break;
    case Method::Local2:
        deco = decompose(g, find_local_2_separators(g, *config.radius, search));
        break;
    case Method::Local1Refine:
        deco = refine_hierarchical(g, decompose(g, find_local_1_separators(g, *config.radius, search)),
                                   *config.refine_radius, config.min_size.value_or(kDefaultMinSize), search);
        break;
    case Method::LabelPropagation: {
        auto state = propagate_labels(g, config.seed, config.max_rounds);
        if (!state.converged)
            result.warnings.push_back("label propagation did not converge within " +
                                      std::to_string(config.max_rounds) + " rounds");
        cover = partition_from_labels(g.vertex_count(), state.label);
        break;
    }
    case Method::External:
        cover = load_cover(g, read_text_file(*config.cover));
        if (cover.empty()) throw Error(ErrorKind::Config, "cover file holds no communities");
        break;
    }
    if (deco) {
        if (auto problem = check_decomposition(g, *deco); !problem.empty())
            throw Error(ErrorKind::Invariant, "decomposition invariant violated: " + problem);
        result.warnings.insert(result.warnings.end(), deco->warnings.begin(), deco->warnings.end());
        cover = to_cover(g, *deco);
        result.separators_text = write_separators(g, *deco);
    }

    result.cover_text = save_cover(g, cover);
    if (!(load_cover(g, result.cover_text) == cover))
        throw Error(ErrorKind::Invariant, "cover does not survive a save/load round trip");

    result.metrics = evaluate(g, cover, std::string(method_tag(config.method)), config.radius, config.delta);

    if (config.out) {
        write_text_file(*config.out, result.cover_text);
        if (deco) write_text_file(config.out->string() + ".separators", result.separators_text);
    }
    if (config.report) write_text_file(*config.report, format_report(result, config.format));
    return result;
}

std::string format_report(const RunResult& r, ReportFormat format) {
    switch (format) {
    case ReportFormat::Csv:
        return std::string(kReportCsvHeader) + '\n' + to_csv_row(r.metrics) + '\n';
    case ReportFormat::Markdown:
        return kMarkdownHeader + markdown_row(r.dataset, &r, r.metrics.method, {});
    case ReportFormat::Json:
        return report_json(r).dump(2) + '\n';
    }
    return {};
}

ComparisonTable compare(const std::vector<RunConfig>& configs) {
    ComparisonTable table;
    for (const auto& config : configs) {
        ComparisonRow row;
        row.dataset = config.dataset_name();
        row.method = config.method_set ? std::string(method_tag(config.method)) : std::string("?");
        try {
            row.result = run(config);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        return std::tie(a.dataset, a.method) < std::tie(b.dataset, b.method);
    });
    return table;
}

std::string format_table(const ComparisonTable& table, ReportFormat format) {
    std::string out;
    switch (format) {
    case ReportFormat::Csv:
        out = std::string(kTableCsvHeader) + '\n';
        for (const auto& row : table.rows) {
            out += csv_quote(row.dataset) + ',';
            if (row.result) {
                const auto& r = *row.result;
                out += std::to_string(r.raw_vertices) + ',' + std::to_string(r.raw_edges) + ',' +
                       std::to_string(r.vertices) + ',' + std::to_string(r.edges) + ',' + to_csv_row(r.metrics) + ",\n";
            } else {
                out += ",,,," + csv_quote(row.method) + ",,,,,,,,,," + csv_quote(row.error) + '\n';
            }
        }
        return out;
    case ReportFormat::Markdown:
        out = kMarkdownHeader;
        for (const auto& row : table.rows)
            out += markdown_row(row.dataset, row.result ? &*row.result : nullptr, row.method, row.error);
        return out;
    case ReportFormat::Json: {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            if (row.result) {
                rows.push_back(report_json(*row.result));
            } else {
                rows.push_back({{"dataset", row.dataset}, {"method", row.method}, {"error", row.error}});
            }
        }
        return rows.dump(2) + '\n';
    }
    }
    return out;
}

const std::vector<DatasetInfo>& dataset_registry() {
    static const std::vector<DatasetInfo> registry = {
        {"dolphins", "Dolphins", 62, 159, "Social network of bottlenose dolphins",
         "http://konect.cc/networks/dolphins/",
         {3, 4, 0.4632}, {4, 16, 0.3592}, {{}, 5, 0.5277}, {{}, 5, 0.5047}, {{}, 5, 0.5233}, {{}, 5, 0.5241}},
        {"euroroads", "Euroroads", 1174, 1417, "Road network connecting cities in Europe",
         "http://konect.cc/networks/subelj_euroroad/",
         {6, 27, 0.5355}, {9, 85, 0.3697}, {{}, 160, 0.7880}, {{}, 118, 0.8124}, {{}, 46, 0.8802}, {{}, 47, 0.8863}},
        {"netscience", "Netscience", 1461, 2742, "Co-authorship network in the field of network science",
         "http://konect.cc/networks/dimacs10-netscience/",
         {5, 124, 0.8779}, {7, 155, 0.8122}, {{}, 314, 0.9299}, {{}, 330, 0.9104}, {{}, 277, 0.9587},
         {{}, 279, 0.9594}},
        {"powergrid", "Powergrid", 4941, 13188, "Power grid of parts of the United States",
         "http://konect.cc/networks/opsahl-powergrid/",
         {7, 95, 0.7274}, {14, 145, 0.7232}, {{}, 1785, 0.4762}, {{}, 503, 0.7999}, {{}, 42, 0.9353},
         {{}, 41, 0.9388}},
        {"nrw", "Nrw", 9133, 14125, "Road network of parts of Germany (North Rhine-Westphalia)",
         "user-supplied; no public source is given",
         {10, 567, 0.9002}, {17, 2246, 0.6273}, {{}, 911, 0.8631}, {{}, 1458, 0.7799}, {{}, 62, 0.9523},
         {{}, 66, 0.9558}},
    };
    return registry;
}

const DatasetInfo* find_dataset(std::string_view key) {
    for (const auto& info : dataset_registry())
        if (info.key == key) return &info;
    return nullptr;
}

Graph stand_in_graph(const DatasetInfo& info) {
    std::uint64_t seed = 0;
    for (char c : info.key) seed = seed * 131 + static_cast<unsigned char>(c);
    if (info.vertices < 100) return planted_partition_graph(info.vertices, info.edges, 4, 0.85, seed);
    return road_like_graph(info.vertices, info.edges, seed);
}

} // namespace locsep
