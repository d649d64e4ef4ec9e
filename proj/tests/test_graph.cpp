#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "support/oracles.hpp"

using namespace topo;

namespace {

// Structural invariants every built graph must satisfy.
void check_invariants(const Graph& g) {
    std::uint64_t degree_sum = 0;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        auto nb = g.neighbors(v);
        degree_sum += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            CHECK(nb[i] != v);                       // no self-loops
            if (i > 0) CHECK(nb[i] > nb[i - 1]);     // sorted, no parallel edges
            CHECK(g.has_edge(nb[i], v));             // symmetry
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("build collapses duplicates") {
    BuildReport report;
    const Graph g = Graph::build({{1, 2}, {2, 1}, {2, 3}}, &report);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(report.duplicate_edges_dropped == 1);
    check_invariants(g);
}

TEST_CASE("build drops self-loops") {
    BuildReport report;
    const Graph g = Graph::build({{1, 1}}, &report);
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(report.self_loops_dropped == 1);
}

TEST_CASE("complete graph K4") {
    const Graph g = oracle::k4();
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 6);
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    check_invariants(g);
}

TEST_CASE("degree sequence") {
    const auto star = oracle::star(5);
    auto degs = degree_sequence(star);
    REQUIRE(degs.size() == 5);
    CHECK(degs[0] == std::pair<NodeId, std::uint32_t>{1, 4});
    for (std::size_t i = 1; i < 5; ++i) CHECK(degs[i].second == 1);

    for (const auto& [id, k] : degree_sequence(oracle::k4())) {
        (void)id;
        CHECK(k == 3);
    }
    const auto p3 = degree_sequence(oracle::path(3));
    CHECK(p3[0].second == 1);
    CHECK(p3[1].second == 2);
    CHECK(p3[2].second == 1);
}

TEST_CASE("connected components") {
    const Graph two = Graph::build({{1, 2}, {3, 4}});
    auto labels = connected_components(two);
    REQUIRE(labels.sizes.size() == 2);
    CHECK(labels.sizes[0] == 2);
    CHECK(labels.sizes[1] == 2);
    CHECK(labels.largest == 0);  // tie broken by smallest contained id

    CHECK(connected_components(oracle::k4()).sizes.size() == 1);
    CHECK(connected_components(Graph{}).sizes.empty());
}

TEST_CASE("component labels are consistent") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_graph(seed, 30, 0.05);
        const auto labels = connected_components(g);
        std::uint64_t total = 0;
        for (auto s : labels.sizes) total += s;
        CHECK(total == g.node_count());
        g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
            CHECK(labels.component_of[u] == labels.component_of[v]);
        });
    }
}

TEST_CASE("bfs distances") {
    const Graph p3 = oracle::path(3);
    const auto d = bfs_distances(p3, 1);
    CHECK(d.at(1) == 0);
    CHECK(d.at(2) == 1);
    CHECK(d.at(3) == 2);

    const auto dk4 = bfs_distances(oracle::k4(), 2);
    for (NodeId v = 1; v <= 4; ++v) CHECK(dk4.at(v) == (v == 2 ? 0 : 1));

    const Graph two = Graph::build({{1, 2}, {3, 4}});
    const auto d2 = bfs_distances(two, 1);
    CHECK(d2.size() == 2);
    CHECK(d2.count(3) == 0);
    CHECK(d2.count(4) == 0);

    CHECK_THROWS_AS((void)bfs_distances(p3, 99), Error);
}

TEST_CASE("bfs distance symmetry on random graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_graph(seed, 50, 0.08);
        const auto d = oracle::all_distances(g);
        for (std::uint32_t s = 0; s < g.node_count(); s += 7) {
            const auto bfs = bfs_distances_from(g, s);
            for (std::uint32_t t = 0; t < g.node_count(); ++t) {
                CHECK(bfs[t] == d[s][t]);
                CHECK(d[s][t] == d[t][s]);
            }
        }
    }
}

TEST_CASE("induced subgraph") {
    const Graph k4 = oracle::k4();
    const std::vector<NodeId> keep3 = {1, 2, 3};
    const Graph k3 = induced_subgraph(k4, keep3);
    CHECK(k3.node_count() == 3);
    CHECK(k3.edge_count() == 3);

    const Graph p3 = oracle::path(3);
    const std::vector<NodeId> ends = {1, 3};
    const Graph iso = induced_subgraph(p3, ends);
    CHECK(iso.node_count() == 2);
    CHECK(iso.edge_count() == 0);

    // keep = nodes(g) is the identity; unknown ids are ignored
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_graph(seed, 25, 0.1);
        std::vector<NodeId> keep(g.nodes().begin(), g.nodes().end());
        keep.push_back(10'000);
        CHECK(induced_subgraph(g, keep) == g);
    }
}

TEST_CASE("largest component subgraph") {
    const Graph g = Graph::build({{1, 2}, {2, 3}, {10, 11}});
    double coverage = 0.0;
    const Graph lcc = largest_component_subgraph(g, &coverage);
    CHECK(lcc.node_count() == 3);
    CHECK(lcc.edge_count() == 2);
    CHECK(coverage == doctest::Approx(3.0 / 5.0));
}

TEST_CASE("serialization round-trips exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_graph(seed, 40, 0.05);  // usually has isolated nodes
        const std::string once = graph_to_string(g);
        std::istringstream in(once);
        const Graph back = load_graph(in);
        CHECK(back == g);
        CHECK(graph_to_string(back) == once);
    }
}

TEST_CASE("serialized form is canonical") {
    const Graph g = Graph::build({{5, 3}, {2, 9}, {3, 2}});
    const std::string text = graph_to_string(g);
    CHECK(text.find("2\t3\n2\t9\n3\t5\n") != std::string::npos);
}

TEST_CASE("loader rejects bad lines") {
    std::istringstream bad("1\t2\nx\ty\n");
    CHECK_THROWS_AS((void)load_graph(bad), Error);
    std::istringstream wide("1\t2\t3\n");
    CHECK_THROWS_AS((void)load_graph(wide), Error);
}

TEST_CASE("random graphs satisfy invariants") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        check_invariants(oracle::random_connected_graph(seed, 4 + seed % 20, seed % 13));
    }
}
