#include "doctest.h"

#include "locsep/cover.hpp"
#include "locsep/edge_list.hpp"
#include "locsep/error.hpp"
#include "locsep/generators.hpp"
#include "locsep/metrics.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace locsep;

TEST_CASE("belonging coefficients") {
    Cover c(4, {{0, 1}, {1, 2}});
    BelongingTable a(c);
    CHECK(a.weight(0, 0) == 1.0);
    CHECK(a.weight(1, 0) == 0.5);
    CHECK(a.weight(1, 1) == 0.5);
    CHECK(a.weight(0, 1) == 0.0);
    CHECK(a.weight(3, 0) == 0.0);
    CHECK(a.weight(3, 1) == 0.0);
    CHECK(a.multiplicity(3) == 0);
}

TEST_CASE("belonging rows sum to zero or one") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 12;
        std::vector<Community> cs(1 + rng() % 5);
        for (auto& c : cs) {
            for (VertexId v = 0; v < n; ++v)
                if (rng() % 3 == 0) c.push_back(v);
            if (c.empty()) c.push_back(static_cast<VertexId>(rng() % n));
        }
        Cover cover(n, cs);
        BelongingTable a(cover);
        for (VertexId v = 0; v < n; ++v) {
            double sum = 0;
            for (std::size_t c = 0; c < cover.size(); ++c) sum += a.weight(v, c);
            CHECK((std::abs(sum) < 1e-12 || std::abs(sum - 1) < 1e-12));
        }
    }
}

TEST_CASE("overlapping modularity reference values") {
    auto p3 = oracle::path(3);
    CHECK(overlapping_modularity(p3, Cover(3, {{0, 1}, {2}})) == doctest::Approx(-0.125).epsilon(1e-12));
    auto k3 = oracle::complete(3);
    CHECK(overlapping_modularity(k3, Cover(3, {{0, 1}, {1, 2}})) == doctest::Approx(-1.0 / 6).epsilon(1e-12));
    CHECK(standard_modularity(oracle::path(2), Cover(2, {{0}, {1}})) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("overlapping modularity matches the brute-force oracle on overlapping covers") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 4 + rng() % 12;
        auto g = oracle::random_connected(n, 0.25, rng);
        std::vector<Community> cs(1 + rng() % 4);
        for (auto& c : cs) {
            for (VertexId v = 0; v < n; ++v)
                if (rng() % 2) c.push_back(v);
            if (c.empty()) c.push_back(0);
        }
        Cover cover(n, cs);
        const double q = overlapping_modularity(g, cover);
        CHECK(std::abs(q - oracle::overlapping_modularity(g, cover)) <= 1e-12);
        CHECK(q <= 1.0);
    }
}

TEST_CASE("partition equivalence") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 31;
        auto g = random_graph(n, 0.1 + 0.1 * static_cast<double>(rng() % 5), rng());
        if (g.edge_count() == 0) continue;
        auto owner = oracle::random_assignment(n, 1 + rng() % 6, rng);
        auto cover = oracle::partition_cover(n, owner);
        const double q = standard_modularity(g, cover);
        CHECK(std::abs(q - overlapping_modularity(g, cover)) <= 1e-10);
        CHECK(std::abs(q - oracle::newman_modularity(g, owner)) <= 1e-10);
    }
}

TEST_CASE("modularity of the whole vertex set is zero") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        auto g = oracle::random_connected(5 + rng() % 20, 0.2, rng);
        std::vector<VertexId> all(g.vertex_count());
        for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
        CHECK(std::abs(standard_modularity(g, Cover(g.vertex_count(), {all}))) <= 1e-12);
    }
}

TEST_CASE("merging two non-adjacent communities lowers modularity") {
    // Two disjoint triangles, each its own community, merged into one.
    auto g = oracle::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const double split = standard_modularity(g, Cover(6, {{0, 1, 2}, {3, 4, 5}}));
    const double merged = standard_modularity(g, Cover(6, {{0, 1, 2, 3, 4, 5}}));
    CHECK(split == doctest::Approx(0.5));
    CHECK(merged < split);
}

TEST_CASE("metric errors") {
    Graph edgeless(3, {});
    try {
        (void)overlapping_modularity(edgeless, Cover(3, {{0, 1, 2}}));
        FAIL("expected undefined metric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UndefinedMetric);
    }
    auto [g, r] = load_edge_list("a b\nb c\n");
    try {
        (void)standard_modularity(g, Cover(3, {{0, 1}, {1, 2}}));
        FAIL("expected precondition error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
        CHECK(std::string(e.what()).find("b") != std::string::npos);
    }
    try {
        (void)standard_modularity(g, Cover(3, {{0, 1}}));
        FAIL("expected precondition error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("c") != std::string::npos);
    }
    CHECK_THROWS((void)Cover(3, {{}}));
    CHECK_THROWS((void)Cover(3, {{3}}));
    CHECK_THROWS((void)count_at_threshold(g, Cover(3, {{0}}), -0.5));
}

TEST_CASE("density reference values") {
    CHECK(density(oracle::complete(3), Cover(3, {{0, 1, 2}}), 0) == doctest::Approx(1.0));
    CHECK(density(oracle::complete(4), Cover(4, {{0, 1, 2, 3}}), 0) == doctest::Approx(1.5));
    auto dup = duplicate_graph(oracle::complete(4));
    CHECK(density(dup, Cover(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), 0) == doctest::Approx(3.0));
    // Shared vertex: internal weight of {0,1} in a triangle with cover {{0,1},{1,2}} is 1 * 1/2.
    CHECK(density(oracle::complete(3), Cover(3, {{0, 1}, {1, 2}}), 0) == doctest::Approx(0.25));
}

TEST_CASE("density agrees with the unit-belonging oracle and doubles under duplication") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 20;
        auto g = random_graph(n, 0.3, rng());
        Community c;
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 2) c.push_back(v);
        if (c.empty()) c.push_back(0);
        const double beta = density(g, Cover(n, {c}), 0);
        CHECK(std::abs(beta - oracle::density_unit(g, c)) <= 1e-12);
        Community doubled = c;
        for (auto v : c) doubled.push_back(static_cast<VertexId>(v + n));
        const double beta2 = density(duplicate_graph(g), Cover(2 * n, {doubled}), 0);
        CHECK(std::abs(beta2 - 2 * beta) <= 1e-12);
    }
}

TEST_CASE("count_at_threshold") {
    auto g = oracle::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {5, 6}, {4, 6}});
    Cover cover(7, {{0, 1, 2, 3}, {4, 5, 6}});
    CHECK(count_at_threshold(g, cover, 0.0) == 2);
    CHECK(count_at_threshold(g, cover, 1.0) == 2);
    CHECK(count_at_threshold(g, cover, 1.2) == 1);
    CHECK(count_at_threshold(g, cover, 1e9) == 0);
    auto betas = densities(g, cover);
    std::size_t prev = betas.size();
    for (double delta = 0; delta < 2; delta += 0.01) {
        auto now = count_at_threshold(betas, delta);
        CHECK(now <= prev);
        prev = now;
    }
}

TEST_CASE("metrics do not depend on community order") {
    auto g = oracle::bowtie();
    Cover a(5, {{2, 3, 4}, {0, 1, 2}});
    Cover b(5, {{0, 1, 2}, {4, 3, 2}});
    CHECK(a == b);
    CHECK(overlapping_modularity(g, a) == overlapping_modularity(g, b));
}

TEST_CASE("cover text round trip") {
    auto [g, r] = load_edge_list("a b\nb c\n");
    auto cover = load_cover(g, "a b\n\n# note\nc\n");
    CHECK(cover.size() == 2);
    CHECK(cover.is_partition());
    CHECK(save_cover(g, cover) == "a b\nc\n");
    CHECK(load_cover(g, save_cover(g, cover)) == cover);
    try {
        (void)load_cover(g, "a b\nzz\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("evaluate and CSV row") {
    auto g = oracle::bowtie();
    auto report = evaluate(g, Cover(5, {{0, 1, 2}, {2, 3, 4}}), "local1", 2, 1.0);
    CHECK(report.bag_count == 2);
    CHECK_FALSE(report.q_standard.has_value());
    CHECK(report.q_ov == doctest::Approx(oracle::overlapping_modularity(g, Cover(5, {{0, 1, 2}, {2, 3, 4}}))));
    auto row = to_csv_row(report);
    CHECK(row.rfind("local1,2,2,", 0) == 0);
    CHECK(row.find("n/a") != std::string::npos);
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(-0.0) == "0");
}
