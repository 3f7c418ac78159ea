/*
 * locsep C API.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Functions return a locsep_status; on failure the message is
 * available from locsep_last_error() on the same thread until the next
 * call. Strings handed out through char** parameters are heap copies the
 * caller releases with locsep_string_free().
 */
#ifndef LOCSEP_LOCSEP_H_
#define LOCSEP_LOCSEP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LOCSEP_BUILDING_LIBRARY)
#define LOCSEP_API __declspec(dllexport)
#else
#define LOCSEP_API __declspec(dllimport)
#endif
#else
#define LOCSEP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum locsep_status {
    LOCSEP_OK = 0,
    LOCSEP_ERROR_CONFIG = 1,
    LOCSEP_ERROR_IO = 2,
    LOCSEP_ERROR_PARSE = 3,
    LOCSEP_ERROR_PRECONDITION = 4,
    LOCSEP_ERROR_UNDEFINED_METRIC = 5,
    LOCSEP_ERROR_INVARIANT = 6,
    LOCSEP_ERROR_INTERNAL = 7
} locsep_status;

typedef enum locsep_format {
    LOCSEP_FORMAT_CSV = 0,
    LOCSEP_FORMAT_MARKDOWN = 1,
    LOCSEP_FORMAT_JSON = 2,
    LOCSEP_FORMAT_DOT = 3
} locsep_format;

typedef struct locsep_graph locsep_graph;
typedef struct locsep_cover locsep_cover;
typedef struct locsep_decomposition locsep_decomposition;
typedef struct locsep_config locsep_config;

typedef struct locsep_preprocess_stats {
    size_t removed_degree1;
    size_t suppressed_degree2;
    size_t removed_isolated;
    size_t dropped_self_loops;
    size_t collapsed_parallel_edges;
    size_t rounds;
} locsep_preprocess_stats;

LOCSEP_API const char* locsep_version(void);
LOCSEP_API const char* locsep_last_error(void);
LOCSEP_API void locsep_string_free(char* s);

/* Graphs */
LOCSEP_API locsep_status locsep_graph_load_file(const char* path, locsep_graph** out);
LOCSEP_API locsep_status locsep_graph_load_text(const char* text, locsep_graph** out);
LOCSEP_API void locsep_graph_free(locsep_graph* g);
LOCSEP_API size_t locsep_graph_vertex_count(const locsep_graph* g);
LOCSEP_API size_t locsep_graph_edge_count(const locsep_graph* g);
/* Counters gathered while loading (or reducing, for preprocessed graphs). */
LOCSEP_API locsep_status locsep_graph_stats(const locsep_graph* g, locsep_preprocess_stats* out);
LOCSEP_API locsep_status locsep_graph_preprocess(const locsep_graph* g, locsep_graph** out);
LOCSEP_API locsep_status locsep_graph_duplicate(const locsep_graph* g, locsep_graph** out);
LOCSEP_API locsep_status locsep_graph_write_edge_list(const locsep_graph* g, char** out);
/* deco may be NULL. format is LOCSEP_FORMAT_JSON or LOCSEP_FORMAT_DOT. */
LOCSEP_API locsep_status locsep_graph_export(const locsep_graph* g, const locsep_decomposition* deco,
                                             locsep_format format, char** out);

/* Local separator decompositions; order is 1 or 2, threads 0 means all cores. */
LOCSEP_API locsep_status locsep_detect(const locsep_graph* g, int order, size_t radius, unsigned threads,
                                       locsep_decomposition** out);
LOCSEP_API locsep_status locsep_refine(const locsep_graph* g, const locsep_decomposition* deco, size_t radius,
                                       size_t min_size, unsigned threads, locsep_decomposition** out);
/* Decomposition whose bags are the communities of a cover. */
LOCSEP_API locsep_status locsep_decomposition_from_cover(const locsep_graph* g, const locsep_cover* cover,
                                                         locsep_decomposition** out);
LOCSEP_API void locsep_decomposition_free(locsep_decomposition* deco);
LOCSEP_API size_t locsep_decomposition_bag_count(const locsep_decomposition* deco);
LOCSEP_API size_t locsep_decomposition_separator_count(const locsep_decomposition* deco);
LOCSEP_API locsep_status locsep_decomposition_separators(const locsep_graph* g, const locsep_decomposition* deco,
                                                         char** out);
LOCSEP_API locsep_status locsep_decomposition_to_cover(const locsep_graph* g, const locsep_decomposition* deco,
                                                       locsep_cover** out);

/* Covers */
LOCSEP_API locsep_status locsep_cover_load_text(const locsep_graph* g, const char* text, locsep_cover** out);
LOCSEP_API locsep_status locsep_cover_load_file(const locsep_graph* g, const char* path, locsep_cover** out);
LOCSEP_API locsep_status locsep_cover_save(const locsep_graph* g, const locsep_cover* cover, char** out);
LOCSEP_API void locsep_cover_free(locsep_cover* cover);
LOCSEP_API size_t locsep_cover_size(const locsep_cover* cover);
LOCSEP_API int locsep_cover_is_partition(const locsep_cover* cover);
LOCSEP_API locsep_status locsep_label_propagation(const locsep_graph* g, uint64_t seed, size_t max_rounds,
                                                  locsep_cover** out);

/* Metrics */
LOCSEP_API locsep_status locsep_belonging(const locsep_cover* cover, size_t vertex, size_t community, double* out);
LOCSEP_API locsep_status locsep_overlapping_modularity(const locsep_graph* g, const locsep_cover* cover, double* out);
LOCSEP_API locsep_status locsep_standard_modularity(const locsep_graph* g, const locsep_cover* cover, double* out);
LOCSEP_API locsep_status locsep_density(const locsep_graph* g, const locsep_cover* cover, size_t community,
                                        double* out);
LOCSEP_API locsep_status locsep_count_at_threshold(const locsep_graph* g, const locsep_cover* cover, double delta,
                                                   size_t* out);

/* Benchmark runs. Keys mirror the CLI flags without dashes: input, method,
 * radius, refine-radius, min-size, delta, seed, max-rounds, preprocess,
 * cover, out, report, format, name, threads. */
LOCSEP_API locsep_status locsep_config_create(locsep_config** out);
LOCSEP_API void locsep_config_free(locsep_config* config);
LOCSEP_API locsep_status locsep_config_set(locsep_config* config, const char* key, const char* value);
LOCSEP_API locsep_status locsep_config_load_file(locsep_config* config, const char* path);
LOCSEP_API locsep_status locsep_config_validate(const locsep_config* config);
/* Executes one run; the report in `format` (csv, md or json) goes to *report. */
LOCSEP_API locsep_status locsep_run(const locsep_config* config, locsep_format format, char** report);
/* Executes every run and formats the comparison table. Failed runs become
 * error rows; the status reflects only table assembly. */
LOCSEP_API locsep_status locsep_compare(const locsep_config* const* configs, size_t count, locsep_format format,
                                        char** table);

#ifdef __cplusplus
}
#endif

#endif /* LOCSEP_LOCSEP_H_ */
