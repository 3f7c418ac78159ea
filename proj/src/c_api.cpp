#include "locsep/locsep.h"

#include "locsep/cover.hpp"
#include "locsep/edge_list.hpp"
#include "locsep/error.hpp"
#include "locsep/export.hpp"
#include "locsep/harness.hpp"
#include "locsep/label_propagation.hpp"
#include "locsep/metrics.hpp"
#include "locsep/separators.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct locsep_graph {
    locsep::Graph graph;
    locsep::PreprocessReport stats;
};

struct locsep_cover {
    locsep::Cover cover;
};

struct locsep_decomposition {
    locsep::Decomposition deco;
};

struct locsep_config {
    locsep::RunConfig config;
};

namespace {

thread_local std::string last_error;

locsep_status status_of(locsep::ErrorKind kind) {
    switch (kind) {
    case locsep::ErrorKind::Config: return LOCSEP_ERROR_CONFIG;
    case locsep::ErrorKind::Io: return LOCSEP_ERROR_IO;
    case locsep::ErrorKind::Parse: return LOCSEP_ERROR_PARSE;
    case locsep::ErrorKind::Precondition: return LOCSEP_ERROR_PRECONDITION;
    case locsep::ErrorKind::UndefinedMetric: return LOCSEP_ERROR_UNDEFINED_METRIC;
    case locsep::ErrorKind::Invariant: return LOCSEP_ERROR_INVARIANT;
    }
    return LOCSEP_ERROR_INTERNAL;
}

template <class F>
locsep_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return LOCSEP_OK;
    } catch (const locsep::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return LOCSEP_ERROR_INTERNAL;
}

void require_args(bool ok) {
    if (!ok) throw locsep::Error(locsep::ErrorKind::Precondition, "null argument");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

locsep::ReportFormat report_format(locsep_format f) {
    switch (f) {
    case LOCSEP_FORMAT_CSV: return locsep::ReportFormat::Csv;
    case LOCSEP_FORMAT_MARKDOWN: return locsep::ReportFormat::Markdown;
    case LOCSEP_FORMAT_JSON: return locsep::ReportFormat::Json;
    default: break;
    }
    throw locsep::Error(locsep::ErrorKind::Config, "reports support csv, md and json only");
}

} // namespace

extern "C" {

const char* locsep_version(void) { return "1.0.0"; }

const char* locsep_last_error(void) { return last_error.c_str(); }

void locsep_string_free(char* s) { std::free(s); }

locsep_status locsep_graph_load_file(const char* path, locsep_graph** out) {
    return guarded([&] {
        require_args(path && out);
        auto [g, stats] = locsep::load_edge_list_file(path);
        *out = new locsep_graph{std::move(g), stats};
    });
}

locsep_status locsep_graph_load_text(const char* text, locsep_graph** out) {
    return guarded([&] {
        require_args(text && out);
        auto [g, stats] = locsep::load_edge_list(text);
        *out = new locsep_graph{std::move(g), stats};
    });
}

void locsep_graph_free(locsep_graph* g) { delete g; }

size_t locsep_graph_vertex_count(const locsep_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t locsep_graph_edge_count(const locsep_graph* g) { return g ? g->graph.edge_count() : 0; }

locsep_status locsep_graph_stats(const locsep_graph* g, locsep_preprocess_stats* out) {
    return guarded([&] {
        require_args(g && out);
        const auto& s = g->stats;
        *out = {s.removed_degree1, s.suppressed_degree2, s.removed_isolated,
                s.dropped_self_loops, s.collapsed_parallel_edges, s.rounds};
    });
}

locsep_status locsep_graph_preprocess(const locsep_graph* g, locsep_graph** out) {
    return guarded([&] {
        require_args(g && out);
        auto [reduced, stats] = locsep::preprocess_reduce(g->graph);
        *out = new locsep_graph{std::move(reduced), stats};
    });
}

locsep_status locsep_graph_duplicate(const locsep_graph* g, locsep_graph** out) {
    return guarded([&] {
        require_args(g && out);
        *out = new locsep_graph{locsep::duplicate_graph(g->graph), {}};
    });
}

locsep_status locsep_graph_write_edge_list(const locsep_graph* g, char** out) {
    return guarded([&] {
        require_args(g && out);
        *out = copy_string(locsep::write_edge_list(g->graph));
    });
}

locsep_status locsep_graph_export(const locsep_graph* g, const locsep_decomposition* deco, locsep_format format,
                                  char** out) {
    return guarded([&] {
        require_args(g && out);
        const locsep::Decomposition* d = deco ? &deco->deco : nullptr;
        if (format == LOCSEP_FORMAT_JSON)
            *out = copy_string(locsep::export_json(g->graph, d));
        else if (format == LOCSEP_FORMAT_DOT)
            *out = copy_string(locsep::export_dot(g->graph, d));
        else
            throw locsep::Error(locsep::ErrorKind::Config, "graph export supports json and dot only");
    });
}

locsep_status locsep_detect(const locsep_graph* g, int order, size_t radius, unsigned threads,
                            locsep_decomposition** out) {
    return guarded([&] {
        require_args(g && out);
        const locsep::SearchOptions opts{threads};
        locsep::SeparatorSet seps;
        if (order == 1)
            seps = locsep::find_local_1_separators(g->graph, radius, opts);
        else if (order == 2)
            seps = locsep::find_local_2_separators(g->graph, radius, opts);
        else
            throw locsep::Error(locsep::ErrorKind::Config, "separator order must be 1 or 2");
        *out = new locsep_decomposition{locsep::decompose(g->graph, seps)};
    });
}

locsep_status locsep_refine(const locsep_graph* g, const locsep_decomposition* deco, size_t radius, size_t min_size,
                            unsigned threads, locsep_decomposition** out) {
    return guarded([&] {
        require_args(g && deco && out);
        *out = new locsep_decomposition{
            locsep::refine_hierarchical(g->graph, deco->deco, radius, min_size, locsep::SearchOptions{threads})};
    });
}

locsep_status locsep_decomposition_from_cover(const locsep_graph* g, const locsep_cover* cover,
                                              locsep_decomposition** out) {
    return guarded([&] {
        require_args(g && cover && out);
        locsep::Decomposition deco;
        deco.bags = cover->cover.communities();
        auto k = cover->cover.multiplicities();
        for (locsep::VertexId v = 0; v < k.size(); ++v)
            if (k[v] > 1) deco.separator_vertices.push_back(v);
        *out = new locsep_decomposition{std::move(deco)};
    });
}

void locsep_decomposition_free(locsep_decomposition* deco) { delete deco; }

size_t locsep_decomposition_bag_count(const locsep_decomposition* deco) { return deco ? deco->deco.bags.size() : 0; }

size_t locsep_decomposition_separator_count(const locsep_decomposition* deco) {
    return deco ? deco->deco.separator_vertices.size() : 0;
}

locsep_status locsep_decomposition_separators(const locsep_graph* g, const locsep_decomposition* deco, char** out) {
    return guarded([&] {
        require_args(g && deco && out);
        *out = copy_string(locsep::write_separators(g->graph, deco->deco));
    });
}

locsep_status locsep_decomposition_to_cover(const locsep_graph* g, const locsep_decomposition* deco,
                                            locsep_cover** out) {
    return guarded([&] {
        require_args(g && deco && out);
        *out = new locsep_cover{locsep::to_cover(g->graph, deco->deco)};
    });
}

locsep_status locsep_cover_load_text(const locsep_graph* g, const char* text, locsep_cover** out) {
    return guarded([&] {
        require_args(g && text && out);
        *out = new locsep_cover{locsep::load_cover(g->graph, text)};
    });
}

locsep_status locsep_cover_load_file(const locsep_graph* g, const char* path, locsep_cover** out) {
    return guarded([&] {
        require_args(g && path && out);
        *out = new locsep_cover{locsep::load_cover(g->graph, locsep::read_text_file(path))};
    });
}

locsep_status locsep_cover_save(const locsep_graph* g, const locsep_cover* cover, char** out) {
    return guarded([&] {
        require_args(g && cover && out);
        *out = copy_string(locsep::save_cover(g->graph, cover->cover));
    });
}

void locsep_cover_free(locsep_cover* cover) { delete cover; }

size_t locsep_cover_size(const locsep_cover* cover) { return cover ? cover->cover.size() : 0; }

int locsep_cover_is_partition(const locsep_cover* cover) { return cover && cover->cover.is_partition() ? 1 : 0; }

locsep_status locsep_label_propagation(const locsep_graph* g, uint64_t seed, size_t max_rounds, locsep_cover** out) {
    return guarded([&] {
        require_args(g && out);
        *out = new locsep_cover{locsep::label_propagation(g->graph, seed, max_rounds)};
    });
}

locsep_status locsep_belonging(const locsep_cover* cover, size_t vertex, size_t community, double* out) {
    return guarded([&] {
        require_args(cover && out);
        if (vertex >= cover->cover.vertex_count() || community >= cover->cover.size())
            throw locsep::Error(locsep::ErrorKind::Precondition, "vertex or community index out of range");
        *out = locsep::BelongingTable(cover->cover).weight(static_cast<locsep::VertexId>(vertex), community);
    });
}

locsep_status locsep_overlapping_modularity(const locsep_graph* g, const locsep_cover* cover, double* out) {
    return guarded([&] {
        require_args(g && cover && out);
        *out = locsep::overlapping_modularity(g->graph, cover->cover);
    });
}

locsep_status locsep_standard_modularity(const locsep_graph* g, const locsep_cover* cover, double* out) {
    return guarded([&] {
        require_args(g && cover && out);
        *out = locsep::standard_modularity(g->graph, cover->cover);
    });
}

locsep_status locsep_density(const locsep_graph* g, const locsep_cover* cover, size_t community, double* out) {
    return guarded([&] {
        require_args(g && cover && out);
        *out = locsep::density(g->graph, cover->cover, community);
    });
}

locsep_status locsep_count_at_threshold(const locsep_graph* g, const locsep_cover* cover, double delta, size_t* out) {
    return guarded([&] {
        require_args(g && cover && out);
        *out = locsep::count_at_threshold(g->graph, cover->cover, delta);
    });
}

locsep_status locsep_config_create(locsep_config** out) {
    return guarded([&] {
        require_args(out);
        *out = new locsep_config{};
    });
}

void locsep_config_free(locsep_config* config) { delete config; }

locsep_status locsep_config_set(locsep_config* config, const char* key, const char* value) {
    return guarded([&] {
        require_args(config && key && value);
        locsep::apply_setting(config->config, key, value);
    });
}

locsep_status locsep_config_load_file(locsep_config* config, const char* path) {
    return guarded([&] {
        require_args(config && path);
        locsep::apply_config_file(config->config, path);
    });
}

locsep_status locsep_config_validate(const locsep_config* config) {
    return guarded([&] {
        require_args(config);
        locsep::validate(config->config);
    });
}

locsep_status locsep_run(const locsep_config* config, locsep_format format, char** report) {
    return guarded([&] {
        require_args(config && report);
        auto fmt = report_format(format);
        *report = copy_string(locsep::format_report(locsep::run(config->config), fmt));
    });
}

locsep_status locsep_compare(const locsep_config* const* configs, size_t count, locsep_format format, char** table) {
    return guarded([&] {
        require_args(configs && table && count > 0);
        auto fmt = report_format(format);
        std::vector<locsep::RunConfig> list;
        for (size_t i = 0; i < count; ++i) {
            require_args(configs[i] != nullptr);
            list.push_back(configs[i]->config);
        }
        *table = copy_string(locsep::format_table(locsep::compare(list), fmt));
    });
}

} // extern "C"
