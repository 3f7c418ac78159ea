// Exercises the shared library through its C header only.
#include "doctest.h"

#include "locsep/locsep.h"

#include <cstdio>
#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    locsep_string_free(s);
    return out;
}

constexpr const char* kBowtie = "a b\nb c\nc a\nc d\nd e\ne c\n";

} // namespace

TEST_CASE("graph handles") {
    locsep_graph* g = nullptr;
    REQUIRE(locsep_graph_load_text("1 2\n2 1\n1 1\n2 3\n", &g) == LOCSEP_OK);
    CHECK(locsep_graph_vertex_count(g) == 3);
    CHECK(locsep_graph_edge_count(g) == 2);
    locsep_preprocess_stats stats{};
    REQUIRE(locsep_graph_stats(g, &stats) == LOCSEP_OK);
    CHECK(stats.dropped_self_loops == 1);
    CHECK(stats.collapsed_parallel_edges == 1);

    locsep_graph* reduced = nullptr;
    REQUIRE(locsep_graph_preprocess(g, &reduced) == LOCSEP_OK);
    CHECK(locsep_graph_vertex_count(reduced) == 0);
    locsep_graph_free(reduced);

    locsep_graph* dup = nullptr;
    REQUIRE(locsep_graph_duplicate(g, &dup) == LOCSEP_OK);
    CHECK(locsep_graph_edge_count(dup) == 8);
    locsep_graph_free(dup);

    char* text = nullptr;
    REQUIRE(locsep_graph_write_edge_list(g, &text) == LOCSEP_OK);
    CHECK(take(text) == "1 2\n2 3\n");
    locsep_graph_free(g);
}

TEST_CASE("error codes and messages") {
    locsep_graph* g = nullptr;
    CHECK(locsep_graph_load_text("a b\nc\n", &g) == LOCSEP_ERROR_PARSE);
    CHECK(std::string(locsep_last_error()).find("line 2") != std::string::npos);
    CHECK(g == nullptr);
    CHECK(locsep_graph_load_file("/nonexistent/x.txt", &g) == LOCSEP_ERROR_IO);
    CHECK(locsep_graph_load_text(nullptr, &g) == LOCSEP_ERROR_PRECONDITION);

    REQUIRE(locsep_graph_load_text("a b\n", &g) == LOCSEP_OK);
    CHECK(std::string(locsep_last_error()).empty());
    locsep_decomposition* deco = nullptr;
    CHECK(locsep_detect(g, 3, 2, 1, &deco) == LOCSEP_ERROR_CONFIG);
    locsep_graph_free(g);

    REQUIRE(locsep_graph_load_text("% only a comment\n", &g) == LOCSEP_OK);
    locsep_cover* cover = nullptr;
    CHECK(locsep_cover_load_text(g, "", &cover) == LOCSEP_OK);
    double q = 0;
    CHECK(locsep_overlapping_modularity(g, cover, &q) == LOCSEP_ERROR_UNDEFINED_METRIC);
    locsep_cover_free(cover);
    locsep_graph_free(g);
    CHECK(std::string(locsep_version()).size() > 0);
}

TEST_CASE("detection, covers and metrics") {
    locsep_graph* g = nullptr;
    REQUIRE(locsep_graph_load_text(kBowtie, &g) == LOCSEP_OK);
    locsep_decomposition* deco = nullptr;
    REQUIRE(locsep_detect(g, 1, 2, 2, &deco) == LOCSEP_OK);
    CHECK(locsep_decomposition_bag_count(deco) == 2);
    CHECK(locsep_decomposition_separator_count(deco) == 1);
    char* seps = nullptr;
    REQUIRE(locsep_decomposition_separators(g, deco, &seps) == LOCSEP_OK);
    CHECK(take(seps) == "c\n");

    locsep_cover* cover = nullptr;
    REQUIRE(locsep_decomposition_to_cover(g, deco, &cover) == LOCSEP_OK);
    CHECK(locsep_cover_size(cover) == 2);
    CHECK(locsep_cover_is_partition(cover) == 0);
    double a = 0;
    REQUIRE(locsep_belonging(cover, 2, 0, &a) == LOCSEP_OK);
    CHECK(a == 0.5);
    CHECK(locsep_belonging(cover, 9, 0, &a) == LOCSEP_ERROR_PRECONDITION);
    double q = 0;
    REQUIRE(locsep_overlapping_modularity(g, cover, &q) == LOCSEP_OK);
    CHECK(q == doctest::Approx(1.0 / 6));
    CHECK(locsep_standard_modularity(g, cover, &q) == LOCSEP_ERROR_PRECONDITION);
    double beta = 0;
    REQUIRE(locsep_density(g, cover, 0, &beta) == LOCSEP_OK);
    CHECK(beta == doctest::Approx(2.0 / 3));
    size_t count = 9;
    REQUIRE(locsep_count_at_threshold(g, cover, 1.0, &count) == LOCSEP_OK);
    CHECK(count == 0);
    char* saved = nullptr;
    REQUIRE(locsep_cover_save(g, cover, &saved) == LOCSEP_OK);
    CHECK(take(saved) == "a b c\nc d e\n");

    char* doc = nullptr;
    REQUIRE(locsep_graph_export(g, deco, LOCSEP_FORMAT_DOT, &doc) == LOCSEP_OK);
    CHECK(take(doc).find("bags=\"0;1\"") != std::string::npos);
    CHECK(locsep_graph_export(g, deco, LOCSEP_FORMAT_CSV, &doc) == LOCSEP_ERROR_CONFIG);

    locsep_decomposition* refined = nullptr;
    REQUIRE(locsep_refine(g, deco, 2, 100, 1, &refined) == LOCSEP_OK);
    CHECK(locsep_decomposition_bag_count(refined) == 2);
    locsep_decomposition_free(refined);

    locsep_cover* lp = nullptr;
    REQUIRE(locsep_label_propagation(g, 1, 100, &lp) == LOCSEP_OK);
    CHECK(locsep_cover_is_partition(lp) == 1);
    locsep_cover_free(lp);

    locsep_decomposition* from = nullptr;
    REQUIRE(locsep_decomposition_from_cover(g, cover, &from) == LOCSEP_OK);
    CHECK(locsep_decomposition_separator_count(from) == 1);
    locsep_decomposition_free(from);

    locsep_cover_free(cover);
    locsep_decomposition_free(deco);
    locsep_graph_free(g);
}

TEST_CASE("configs, runs and comparisons") {
    const std::string path = "locsep_c_api_bowtie.txt";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f);
        std::fputs(kBowtie, f);
        std::fclose(f);
    }
    locsep_config* c = nullptr;
    REQUIRE(locsep_config_create(&c) == LOCSEP_OK);
    REQUIRE(locsep_config_set(c, "input", path.c_str()) == LOCSEP_OK);
    REQUIRE(locsep_config_set(c, "method", "local1") == LOCSEP_OK);
    CHECK(locsep_config_validate(c) == LOCSEP_ERROR_CONFIG);
    CHECK(locsep_config_set(c, "radius", "x") == LOCSEP_ERROR_CONFIG);
    REQUIRE(locsep_config_set(c, "radius", "2") == LOCSEP_OK);
    CHECK(locsep_config_validate(c) == LOCSEP_OK);

    char* report = nullptr;
    REQUIRE(locsep_run(c, LOCSEP_FORMAT_CSV, &report) == LOCSEP_OK);
    CHECK(take(report).find("local1,2,2,") != std::string::npos);
    CHECK(locsep_run(c, LOCSEP_FORMAT_DOT, &report) == LOCSEP_ERROR_CONFIG);

    locsep_config* lp = nullptr;
    REQUIRE(locsep_config_create(&lp) == LOCSEP_OK);
    REQUIRE(locsep_config_set(lp, "input", path.c_str()) == LOCSEP_OK);
    REQUIRE(locsep_config_set(lp, "method", "lp") == LOCSEP_OK);
    const locsep_config* both[] = {lp, c};
    char* table = nullptr;
    REQUIRE(locsep_compare(both, 2, LOCSEP_FORMAT_MARKDOWN, &table) == LOCSEP_OK);
    auto text = take(table);
    CHECK(text.find("local1") < text.find("| lp |"));

    REQUIRE(locsep_config_set(c, "input", "missing-file.txt") == LOCSEP_OK);
    CHECK(locsep_run(c, LOCSEP_FORMAT_CSV, &report) == LOCSEP_ERROR_IO);

    locsep_config_free(lp);
    locsep_config_free(c);
    std::remove(path.c_str());
}
