#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/error.hpp"
#include "core/global_metrics.hpp"
#include "support/oracles.hpp"

using namespace topo;

TEST_CASE("distance stats on closed-form graphs") {
    const auto p3 = path_stats(oracle::path(3));
    CHECK(p3.mean_distance == doctest::Approx(4.0 / 3.0));
    CHECK(p3.sigma == doctest::Approx(std::sqrt(2.0 / 9.0)));

    const auto k4 = path_stats(oracle::k4());
    CHECK(k4.mean_distance == doctest::Approx(1.0));
    CHECK(k4.sigma == doctest::Approx(0.0));

    CHECK_THROWS_AS((void)path_stats(Graph::build({{1, 1}})), Error);
}

TEST_CASE("eccentricity on closed-form graphs") {
    const auto p3 = path_stats(oracle::path(3));
    CHECK(p3.ecc.at(1) == 2);
    CHECK(p3.ecc.at(2) == 1);
    CHECK(p3.ecc.at(3) == 2);
    CHECK(p3.radius == 1);
    CHECK(p3.diameter == 2);
    CHECK(p3.center == std::vector<NodeId>{2});
    CHECK(p3.periphery == std::vector<NodeId>{1, 3});

    const auto c5 = path_stats(oracle::cycle(5));
    CHECK(c5.radius == 2);
    CHECK(c5.diameter == 2);
    CHECK(c5.center.size() == 5);
    CHECK(c5.periphery.size() == 5);

    const auto k4 = path_stats(oracle::k4());
    CHECK(k4.radius == 1);
    CHECK(k4.diameter == 1);
}

TEST_CASE("distance stats run on the largest component") {
    const Graph g = Graph::build({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {10, 11}});
    const auto st = path_stats(g);
    CHECK(st.component_n == 4);
    CHECK(st.coverage == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("metric space bounds and symmetry on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_connected_graph(seed, 10 + seed % 90, 2 * seed % 60);
        const auto st = path_stats(g);
        CHECK(st.radius <= st.diameter);
        CHECK(st.diameter <= 2 * st.radius);
        for (const auto& [id, e] : st.ecc) {
            (void)id;
            CHECK(e >= st.radius);
            CHECK(e <= st.diameter);
        }
        CHECK(st.mean_distance >= 1.0);
        // triangle inequality on sampled triples
        const auto d = oracle::all_distances(g);
        const std::size_t n = g.node_count();
        for (std::size_t i = 0; i < n; i += 3) {
            for (std::size_t j = 1; j < n; j += 4) {
                for (std::size_t k = 2; k < n; k += 5) {
                    CHECK(d[i][k] <= d[i][j] + d[j][k]);
                }
            }
        }
    }
}

TEST_CASE("distance histogram counts ordered pairs") {
    const auto p3 = path_stats(oracle::path(3));
    REQUIRE(p3.distance_histogram.size() == 3);
    CHECK(p3.distance_histogram[1] == 4);  // (1,2),(2,1),(2,3),(3,2)
    CHECK(p3.distance_histogram[2] == 2);  // (1,3),(3,1)
}

TEST_CASE("betweenness on closed-form graphs") {
    const auto p3 = betweenness(oracle::path(3));
    CHECK(p3.node_raw.at(2) == doctest::Approx(2.0));
    CHECK(p3.node_raw.at(2) / p3.normalization == doctest::Approx(1.0 / 3.0));
    CHECK(p3.node_raw.at(1) == 0.0);
    CHECK(p3.node_raw.at(3) == 0.0);
    CHECK(p3.edge_raw.at({1, 2}) == doctest::Approx(4.0));  // 2(n-1)
    CHECK(p3.edge_raw.at({2, 3}) == doctest::Approx(4.0));
    CHECK(p3.edge_raw_sum == doctest::Approx(8.0));  // sum of ordered distances

    const auto s5 = betweenness(oracle::star(5));
    CHECK(s5.node_raw.at(1) == doctest::Approx(12.0));
    CHECK(s5.node_raw.at(1) / s5.normalization == doctest::Approx(0.6));

    const auto k4 = betweenness(oracle::k4());
    for (const auto& [id, b] : k4.node_raw) {
        (void)id;
        CHECK(b == 0.0);
    }
}

TEST_CASE("betweenness matches exhaustive path enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::uint32_t n = 4 + seed % 7;  // 4..10
        const Graph g = oracle::random_connected_graph(seed, n, seed % 6);
        const auto fast = betweenness(g);
        const auto brute = oracle::betweenness(g);
        for (const auto& [id, b] : brute.node) {
            CHECK(fast.node_raw.at(id) == doctest::Approx(b).epsilon(1e-9));
        }
        for (const auto& [edge, b] : brute.edge) {
            CHECK(fast.edge_raw.at(edge) == doctest::Approx(b).epsilon(1e-9));
        }
    }
}

TEST_CASE("betweenness sum identities") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = oracle::random_connected_graph(seed, 100, 150);
        const auto bw = betweenness(g);
        const auto d = oracle::all_distances(g);
        double pair_dist = 0.0, interior = 0.0;
        for (std::uint32_t s = 0; s < g.node_count(); ++s) {
            for (std::uint32_t t = 0; t < g.node_count(); ++t) {
                if (s == t) continue;
                pair_dist += d[s][t];
                interior += d[s][t] - 1.0;
            }
        }
        CHECK(bw.node_raw_sum == doctest::Approx(interior).epsilon(1e-6));
        CHECK(bw.edge_raw_sum == doctest::Approx(pair_dist).epsilon(1e-6));
        for (const auto& [id, b] : bw.node_raw) {
            (void)id;
            CHECK(b >= 0.0);
            CHECK(b / bw.normalization <= 1.0);
        }
    }
}

TEST_CASE("betweenness by degree") {
    const Graph s5 = oracle::star(5);
    const auto by_deg = betweenness_by_degree(betweenness(s5), s5);
    CHECK(by_deg.b_of_k.at(4) == doctest::Approx(0.6));
    CHECK(by_deg.b_of_k.at(1) == 0.0);

    const Graph k4 = oracle::k4();
    CHECK(betweenness_by_degree(betweenness(k4), k4).b_of_k.at(3) == 0.0);

    const Graph p3 = oracle::path(3);
    const auto grid = betweenness_by_degree(betweenness(p3), p3).b_of_kk;
    REQUIRE(grid.size() == 2);  // (1,2) and its mirror
    CHECK(std::get<0>(grid[0]) == doctest::Approx(1.0));
    CHECK(std::get<1>(grid[0]) == doctest::Approx(2.0));
    CHECK(std::get<2>(grid[0]) == doctest::Approx(2.0 / 3.0 / 6.0 * 6.0).epsilon(1e-12));  // 4/6
    CHECK(std::get<2>(grid[0]) == doctest::Approx(4.0 / 6.0));
    CHECK(std::get<0>(grid[1]) == doctest::Approx(2.0));
    CHECK(std::get<1>(grid[1]) == doctest::Approx(1.0));
}
