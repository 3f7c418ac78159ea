// Command-line front end. Talks to the library exclusively through the C API.

#include "locsep/locsep.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

enum ExitCode { kSuccess = 0, kConfigError = 1, kIoError = 2, kInternalError = 3 };

int exit_code(locsep_status s) {
    switch (s) {
    case LOCSEP_OK: return kSuccess;
    case LOCSEP_ERROR_IO:
    case LOCSEP_ERROR_PARSE: return kIoError;
    case LOCSEP_ERROR_INVARIANT:
    case LOCSEP_ERROR_INTERNAL: return kInternalError;
    default: return kConfigError;
    }
}

struct Failure {
    locsep_status status;
    std::string message;
};

void check(locsep_status s) {
    if (s != LOCSEP_OK) throw Failure{s, locsep_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { locsep_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(locsep_graph* g) const { locsep_graph_free(g); }
};
struct CoverDeleter {
    void operator()(locsep_cover* c) const { locsep_cover_free(c); }
};
struct DecompositionDeleter {
    void operator()(locsep_decomposition* d) const { locsep_decomposition_free(d); }
};
struct ConfigDeleter {
    void operator()(locsep_config* c) const { locsep_config_free(c); }
};
using GraphPtr = std::unique_ptr<locsep_graph, GraphDeleter>;
using CoverPtr = std::unique_ptr<locsep_cover, CoverDeleter>;
using DecompositionPtr = std::unique_ptr<locsep_decomposition, DecompositionDeleter>;
using ConfigPtr = std::unique_ptr<locsep_config, ConfigDeleter>;

void emit(const std::string& path, const char* text) {
    if (path.empty()) {
        std::fputs(text, stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!(out << text)) throw Failure{LOCSEP_ERROR_IO, "cannot write " + path};
}

locsep_format parse_format(const std::string& name) {
    if (name == "csv") return LOCSEP_FORMAT_CSV;
    if (name == "md") return LOCSEP_FORMAT_MARKDOWN;
    if (name == "json") return LOCSEP_FORMAT_JSON;
    if (name == "dot") return LOCSEP_FORMAT_DOT;
    throw Failure{LOCSEP_ERROR_CONFIG, "unknown format '" + name + "'"};
}

/// Flags that map one-to-one onto run configuration keys.
class RunFlags {
public:
    void add(CLI::App* cmd, const std::vector<std::string>& keys) {
        static const std::map<std::string, std::string> help = {
            {"input", "edge list file"},
            {"method", "local1, local2, local1+refine, lp or external"},
            {"radius", "separator radius d"},
            {"refine-radius", "radius of the order-2 refinement"},
            {"min-size", "smallest bag size that gets refined"},
            {"delta", "density threshold (default 1)"},
            {"seed", "label propagation seed (default 1)"},
            {"max-rounds", "label propagation round limit (default 100)"},
            {"cover", "cover file to evaluate"},
            {"out", "output path"},
            {"report", "also write the report to this path"},
            {"name", "dataset name used in reports"},
            {"threads", "worker threads (0 = all cores)"},
        };
        for (const auto& key : keys) {
            auto* opt = cmd->add_option("--" + key, values_[key], help.at(key));
            options_[key] = opt;
        }
        preprocess_ = cmd->add_flag("--preprocess", "drop degree-1 and suppress degree-2 vertices first");
    }

    bool given(const std::string& key) const {
        auto it = options_.find(key);
        return it != options_.end() && it->second->count() > 0;
    }
    const std::string& value(const std::string& key) const { return values_.at(key); }

    void apply(locsep_config* config, const std::vector<std::string>& skip = {}) const {
        for (const auto& [key, opt] : options_) {
            if (!opt->count() || std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
            check(locsep_config_set(config, key.c_str(), values_.at(key).c_str()));
        }
        if (preprocess_->count()) check(locsep_config_set(config, "preprocess", "true"));
    }

    bool preprocess() const { return preprocess_->count() > 0; }

private:
    std::map<std::string, std::string> values_;
    std::map<std::string, CLI::Option*> options_;
    CLI::Option* preprocess_ = nullptr;
};

ConfigPtr make_config(const std::vector<std::string>& files) {
    locsep_config* raw = nullptr;
    check(locsep_config_create(&raw));
    ConfigPtr config(raw);
    for (const auto& f : files) check(locsep_config_load_file(config.get(), f.c_str()));
    return config;
}

GraphPtr load_graph(const std::string& path, bool preprocess) {
    locsep_graph* raw = nullptr;
    check(locsep_graph_load_file(path.c_str(), &raw));
    GraphPtr g(raw);
    if (locsep_graph_vertex_count(g.get()) == 0) throw Failure{LOCSEP_ERROR_CONFIG, "empty graph"};
    if (preprocess) {
        locsep_graph* reduced = nullptr;
        check(locsep_graph_preprocess(g.get(), &reduced));
        g.reset(reduced);
    }
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local separator community detection and cover evaluation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(locsep_version()));

    const std::vector<std::string> run_keys = {"input", "method", "radius", "refine-radius", "min-size", "delta",
                                               "seed", "max-rounds", "out", "report", "name", "threads"};

    // preprocess
    auto* pre = app.add_subcommand("preprocess", "reduce a graph to minimum degree 3 and write its edge list");
    std::string pre_input, pre_out;
    pre->add_option("--input", pre_input, "edge list file")->required();
    pre->add_option("--out", pre_out, "output edge list (default stdout)");

    // detect
    auto* detect = app.add_subcommand("detect", "build a cover and report its metrics");
    RunFlags detect_flags;
    detect_flags.add(detect, run_keys);
    std::vector<std::string> detect_configs;
    std::string detect_format = "csv";
    detect->add_option("--config", detect_configs, "key = value config file; flags override it");
    detect->add_option("--format", detect_format, "csv, md or json");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "evaluate an existing cover file");
    RunFlags metrics_flags;
    metrics_flags.add(metrics, {"input", "cover", "delta", "report", "name"});
    std::vector<std::string> metrics_configs;
    std::string metrics_format = "csv";
    metrics->add_option("--config", metrics_configs, "key = value config file; flags override it");
    metrics->add_option("--format", metrics_format, "csv, md or json");

    // compare
    auto* cmp = app.add_subcommand("compare", "run several configurations and tabulate them");
    RunFlags compare_flags;
    compare_flags.add(cmp, {"input", "method", "radius", "refine-radius", "min-size", "delta", "seed",
                            "max-rounds", "cover", "threads"});
    std::vector<std::string> compare_configs;
    std::string compare_format = "csv", compare_out;
    cmp->add_option("--config", compare_configs, "one config file per run")->required();
    cmp->add_option("--format", compare_format, "csv, md or json");
    cmp->add_option("--out", compare_out, "table output (default stdout)");

    // export
    auto* exp = app.add_subcommand("export", "write plot-ready graph documents with bag tags");
    RunFlags export_flags;
    export_flags.add(exp, {"input", "method", "radius", "refine-radius", "min-size", "cover", "out", "threads"});
    std::string export_format = "json";
    exp->add_option("--format", export_format, "json or dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*pre) {
            auto raw = load_graph(pre_input, false);
            locsep_graph* reduced_raw = nullptr;
            check(locsep_graph_preprocess(raw.get(), &reduced_raw));
            GraphPtr reduced(reduced_raw);
            locsep_preprocess_stats stats{};
            check(locsep_graph_stats(reduced.get(), &stats));
            char* text = nullptr;
            check(locsep_graph_write_edge_list(reduced.get(), &text));
            OwnedString owned(text);
            emit(pre_out, text);
            std::fprintf(stderr,
                         "n_raw=%zu m_raw=%zu n=%zu m=%zu removed_degree1=%zu suppressed_degree2=%zu "
                         "removed_isolated=%zu rounds=%zu\n",
                         locsep_graph_vertex_count(raw.get()), locsep_graph_edge_count(raw.get()),
                         locsep_graph_vertex_count(reduced.get()), locsep_graph_edge_count(reduced.get()),
                         stats.removed_degree1, stats.suppressed_degree2, stats.removed_isolated, stats.rounds);
            return kSuccess;
        }

        if (*detect || *metrics) {
            const bool is_detect = static_cast<bool>(*detect);
            auto config = make_config(is_detect ? detect_configs : metrics_configs);
            const auto& flags = is_detect ? detect_flags : metrics_flags;
            const auto& format = is_detect ? detect_format : metrics_format;
            if (!is_detect) check(locsep_config_set(config.get(), "method", "external"));
            if (is_detect && flags.given("method") && flags.value("method") == "external")
                throw Failure{LOCSEP_ERROR_CONFIG, "use the metrics subcommand to evaluate an external cover"};
            flags.apply(config.get());
            check(locsep_config_set(config.get(), "format", format.c_str()));
            char* report = nullptr;
            check(locsep_run(config.get(), parse_format(format), &report));
            OwnedString owned(report);
            std::fputs(report, stdout);
            return kSuccess;
        }

        if (*cmp) {
            std::vector<ConfigPtr> configs;
            std::vector<const locsep_config*> handles;
            for (const auto& file : compare_configs) {
                configs.push_back(make_config({file}));
                compare_flags.apply(configs.back().get());
                handles.push_back(configs.back().get());
            }
            char* table = nullptr;
            check(locsep_compare(handles.data(), handles.size(), parse_format(compare_format), &table));
            OwnedString owned(table);
            emit(compare_out, table);
            return kSuccess;
        }

        if (*exp) {
            const auto format = parse_format(export_format);
            if (format != LOCSEP_FORMAT_JSON && format != LOCSEP_FORMAT_DOT)
                throw Failure{LOCSEP_ERROR_CONFIG, "export supports json and dot"};
            if (!export_flags.given("input")) throw Failure{LOCSEP_ERROR_CONFIG, "--input is required"};
            auto g = load_graph(export_flags.value("input"), export_flags.preprocess());

            DecompositionPtr deco;
            if (export_flags.given("method")) {
                const auto& method = export_flags.value("method");
                if (!export_flags.given("radius")) throw Failure{LOCSEP_ERROR_CONFIG, "--radius is required"};
                const std::size_t radius = std::stoul(export_flags.value("radius"));
                const unsigned threads = export_flags.given("threads") ? std::stoul(export_flags.value("threads")) : 0;
                locsep_decomposition* raw = nullptr;
                if (method == "local1" || method == "local1+refine")
                    check(locsep_detect(g.get(), 1, radius, threads, &raw));
                else if (method == "local2")
                    check(locsep_detect(g.get(), 2, radius, threads, &raw));
                else
                    throw Failure{LOCSEP_ERROR_CONFIG, "export computes local1, local2 or local1+refine bags; "
                                                       "pass --cover for other covers"};
                deco.reset(raw);
                if (method == "local1+refine") {
                    if (!export_flags.given("refine-radius"))
                        throw Failure{LOCSEP_ERROR_CONFIG, "--refine-radius is required"};
                    const std::size_t min_size =
                        export_flags.given("min-size") ? std::stoul(export_flags.value("min-size")) : 10;
                    locsep_decomposition* refined = nullptr;
                    check(locsep_refine(g.get(), deco.get(), std::stoul(export_flags.value("refine-radius")),
                                        min_size, threads, &refined));
                    deco.reset(refined);
                }
            } else if (export_flags.given("cover")) {
                locsep_cover* raw_cover = nullptr;
                check(locsep_cover_load_file(g.get(), export_flags.value("cover").c_str(), &raw_cover));
                CoverPtr cover(raw_cover);
                locsep_decomposition* raw = nullptr;
                check(locsep_decomposition_from_cover(g.get(), cover.get(), &raw));
                deco.reset(raw);
            }

            char* text = nullptr;
            check(locsep_graph_export(g.get(), deco.get(), format, &text));
            OwnedString owned(text);
            emit(export_flags.given("out") ? export_flags.value("out") : std::string(), text);
            return kSuccess;
        }
    } catch (const Failure& f) {
        std::fprintf(stderr, "error: %s\n", f.message.c_str());
        return exit_code(f.status);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConfigError;
    }
    return kSuccess;
}
