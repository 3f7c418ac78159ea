#include "doctest.h"

#include "locsep/metrics.hpp"
#include "locsep/separators.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace locsep;

namespace {

std::vector<Edge> c8_pairs() {
    return {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
            {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 7}};
}

} // namespace

TEST_CASE("local 1-separators: reference examples") {
    CHECK(find_local_1_separators(oracle::star(5), 1).vertices == std::vector<VertexId>{0});
    for (std::size_t d = 1; d <= 5; ++d) {
        CHECK(find_local_1_separators(oracle::bowtie(), d).vertices == std::vector<VertexId>{2});
        CHECK(find_local_1_separators(oracle::complete(4), d).vertices.empty());
    }
    auto two = oracle::two_k4_bridged();
    CHECK(find_local_1_separators(two, 2).vertices == std::vector<VertexId>{0, 1, 4, 5});
    CHECK(find_local_1_separators(two, 3).vertices.empty());
}

TEST_CASE("local 1-separators on cycles") {
    auto c8 = oracle::cycle(8);
    CHECK(find_local_1_separators(c8, 2).vertices.size() == 8);
    CHECK(find_local_1_separators(c8, 5).vertices.size() == 8);
    CHECK(find_local_1_separators(c8, 6).vertices.empty());
    CHECK(find_local_1_separators(c8, 7).vertices.empty());
    // C6 has diameter 3 but removing a vertex leaves its neighbors 4 apart,
    // so at d = diameter every vertex is still a local cutvertex while the
    // cycle has no articulation points.
    auto c6 = oracle::cycle(6);
    CHECK(diameter(c6) == 3);
    CHECK(find_local_1_separators(c6, 3).vertices.size() == 6);
    CHECK(articulation_points(c6).empty());
    CHECK(find_local_1_separators(c6, 5).vertices.empty());
}

TEST_CASE("local 2-separators: reference examples") {
    auto c8 = oracle::cycle(8);
    CHECK(find_local_2_separators(c8, 2).pairs.empty());
    CHECK(find_local_2_separators(c8, 6).pairs == c8_pairs());
    CHECK(find_local_2_separators(c8, 7).pairs == c8_pairs());
    for (std::size_t d = 1; d <= 4; ++d) CHECK(find_local_2_separators(oracle::complete(4), d).pairs.empty());

    auto two = oracle::two_k4_bridged();
    const std::vector<Edge> bottleneck{{0, 1}, {0, 5}, {1, 4}, {4, 5}};
    CHECK(find_local_2_separators(two, 2).pairs.empty());
    CHECK(find_local_2_separators(two, 3).pairs == bottleneck);
    CHECK(find_local_2_separators(two, 4).pairs == bottleneck);
    auto set = find_local_2_separators(two, 3);
    CHECK(set.order == 2);
    CHECK(set.separator_vertices() == std::vector<VertexId>{0, 1, 4, 5});
}

TEST_CASE("both finders match the brute-force predicates") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 3 + rng() % 8;
        auto g = oracle::random_connected(n, 0.05 * static_cast<double>(rng() % 7), rng);
        for (std::size_t d = 1; d <= 4; ++d) {
            CHECK(find_local_1_separators(g, d).vertices == oracle::local_1_separators(g, d));
            CHECK(find_local_2_separators(g, d).pairs == oracle::local_2_separators(g, d));
        }
    }
}

TEST_CASE("articulation points are local 1-separators at every radius and the limit") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 2 + rng() % 11;
        auto g = oracle::random_connected(n, 0.04 * static_cast<double>(rng() % 8), rng);
        auto cut = articulation_points(g);
        for (std::size_t d = 1; d <= 4; ++d) {
            auto local = find_local_1_separators(g, d).vertices;
            CHECK(std::includes(local.begin(), local.end(), cut.begin(), cut.end()));
        }
        CHECK(find_local_1_separators(g, n - 1 + (n == 1)).vertices == cut);
        CHECK(find_local_1_separators(g, kUnbounded).vertices == cut);
    }
}

TEST_CASE("detection is independent of the thread count") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        auto g = oracle::random_connected(200, 0.008, rng);
        for (std::size_t d : {2, 4}) {
            auto base1 = find_local_1_separators(g, d, {1});
            auto base2 = find_local_2_separators(g, d, {1});
            for (unsigned threads : {2u, 3u, 8u}) {
                CHECK(find_local_1_separators(g, d, {threads}).vertices == base1.vertices);
                CHECK(find_local_2_separators(g, d, {threads}).pairs == base2.pairs);
            }
        }
    }
}

TEST_CASE("decompose") {
    auto bow = oracle::bowtie();
    auto deco = decompose(bow, find_local_1_separators(bow, 2));
    REQUIRE(deco.bags.size() == 2);
    CHECK(deco.bags[0] == Community{0, 1, 2});
    CHECK(deco.bags[1] == Community{2, 3, 4});
    CHECK(deco.separator_vertices == std::vector<VertexId>{2});
    CHECK(check_decomposition(bow, deco).empty());
    CHECK(deco.warnings.empty());

    auto k4 = oracle::complete(4);
    auto whole = decompose(k4, find_local_1_separators(k4, 2));
    REQUIRE(whole.bags.size() == 1);
    CHECK(whole.bags[0].size() == 4);

    auto cover = to_cover(bow, deco);
    BelongingTable a(cover);
    CHECK(a.weight(2, 0) == 0.5);
    CHECK(a.weight(2, 1) == 0.5);

    auto two = oracle::two_k4_bridged();
    auto split = decompose(two, find_local_2_separators(two, 3));
    REQUIRE(split.bags.size() == 2);
    CHECK(split.bags[0] == Community{0, 1, 2, 3});
    CHECK(split.bags[1] == Community{4, 5, 6, 7});
    CHECK(check_decomposition(two, split).empty());
}

TEST_CASE("all-separator decompositions fall back to singletons with a warning") {
    auto c8 = oracle::cycle(8);
    auto deco = decompose(c8, find_local_1_separators(c8, 2));
    CHECK(deco.bags.size() == 8);
    CHECK_FALSE(deco.warnings.empty());
    CHECK(check_decomposition(c8, deco).empty());
}

TEST_CASE("to_cover merges identical bags") {
    auto k3 = oracle::complete(3);
    Decomposition deco;
    deco.bags = {{0, 1, 2}, {0, 1, 2}};
    CHECK(to_cover(k3, deco).size() == 1);
}

TEST_CASE("check_decomposition reports violations") {
    auto p = oracle::path(4);
    Decomposition missing;
    missing.bags = {{0, 1, 2}};
    CHECK_FALSE(check_decomposition(p, missing).empty());
    Decomposition disconnected;
    disconnected.bags = {{0, 2}, {1, 3}};
    CHECK_FALSE(check_decomposition(p, disconnected).empty());
    Decomposition overlap;
    overlap.bags = {{0, 1, 2}, {1, 2, 3}};
    CHECK_FALSE(check_decomposition(p, overlap).empty());
    overlap.separator_vertices = {1, 2};
    CHECK(check_decomposition(p, overlap).empty());
}

TEST_CASE("decomposition invariants on random graphs") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 60; ++t) {
        auto g = oracle::random_connected(10 + rng() % 60, 0.03, rng);
        for (std::size_t d = 1; d <= 5; ++d) {
            CHECK(check_decomposition(g, decompose(g, find_local_1_separators(g, d))) == "");
            CHECK(check_decomposition(g, decompose(g, find_local_2_separators(g, d))) == "");
        }
    }
}

TEST_CASE("hierarchical refinement") {
    auto two = oracle::two_k4_bridged();
    auto single = decompose(two, find_local_1_separators(two, 3));
    REQUIRE(single.bags.size() == 1);

    // Bags below min_size pass through.
    auto same = refine_hierarchical(two, single, 3, 9);
    CHECK(same.bags == single.bags);

    // min_size 1 on a single bag equals the direct order-2 decomposition.
    auto refined = refine_hierarchical(two, single, 3, 1);
    auto direct = decompose(two, find_local_2_separators(two, 3));
    CHECK(refined.bags == direct.bags);
    CHECK(refined.separator_vertices == direct.separator_vertices);
    CHECK(check_decomposition(two, refined).empty());

    // A bowtie whose right triangle is replaced by the bridged K4 pair: the
    // 1-separator splits off the left triangle, refinement splits the rest.
    std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
    for (auto [u, v] : two.edges()) e.emplace_back(u + 2, v + 2);
    Graph g(10, e);
    auto deco = decompose(g, find_local_1_separators(g, 3));
    REQUIRE(deco.bags.size() == 2);
    auto layered = refine_hierarchical(g, deco, 3, 5);
    CHECK(layered.bags.size() == 3);
    CHECK(check_decomposition(g, layered).empty());
}

TEST_CASE("separator sidecar lists labels") {
    auto bow = oracle::bowtie();
    CHECK(write_separators(bow, decompose(bow, find_local_1_separators(bow, 1))) == "2\n");
    auto two = oracle::two_k4_bridged();
    auto text = write_separators(two, decompose(two, find_local_2_separators(two, 3)));
    CHECK(text == "0 1\n0 5\n1 4\n4 5\n");
}
