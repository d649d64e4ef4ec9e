// Exercises the shared-library C API surface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "topo/topo.h"

namespace {

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name)
        : path(std::filesystem::temp_directory_path() / ("topo_capi_" + name)) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

topo_graph* make_k4() {
    const uint32_t us[] = {1, 1, 1, 2, 2, 3};
    const uint32_t vs[] = {2, 3, 4, 3, 4, 4};
    topo_graph* g = nullptr;
    REQUIRE(topo_graph_from_edges(us, vs, 6, &g) == TOPO_OK);
    return g;
}

}  // namespace

TEST_CASE("graph construction and counters") {
    topo_graph* g = make_k4();
    CHECK(topo_graph_node_count(g) == 4);
    CHECK(topo_graph_edge_count(g) == 6);
    double kbar = 0.0;
    CHECK(topo_avg_degree(g, &kbar) == TOPO_OK);
    CHECK(kbar == doctest::Approx(3.0));
    topo_graph_free(g);
}

TEST_CASE("save and load round-trip") {
    TempDir dir("roundtrip");
    const auto path = (dir.path / "g.txt").string();
    topo_graph* g = make_k4();
    REQUIRE(topo_graph_save(g, path.c_str()) == TOPO_OK);
    topo_graph* back = nullptr;
    REQUIRE(topo_graph_load(path.c_str(), &back) == TOPO_OK);
    CHECK(topo_graph_equal(g, back) == 1);
    topo_graph_free(g);
    topo_graph_free(back);
}

TEST_CASE("missing file reports an io error") {
    topo_graph* g = nullptr;
    CHECK(topo_graph_load("/nonexistent/topo.txt", &g) == TOPO_ERR_IO);
    CHECK(std::string(topo_last_error()).find("cannot open") != std::string::npos);
}

TEST_CASE("edge list parsing with policy") {
    TempDir dir("parse");
    const auto path = (dir.path / "edges.txt").string();
    std::ofstream(path) << "# header\n1 2\n1 {2,3}\n1 64512\n3 4 i\n3 5 d\n";
    topo_filter_policy policy;
    topo_filter_policy_defaults(&policy);
    topo_graph* g = nullptr;
    char* rejects = nullptr;
    REQUIRE(topo_parse_edge_list_file(path.c_str(), &policy, &g, &rejects) == TOPO_OK);
    CHECK(topo_graph_edge_count(g) == 2);  // 1-2 and 3-5
    const std::string report = rejects;
    CHECK(report.find("ambiguous_token\t1") != std::string::npos);
    CHECK(report.find("private_asn\t1") != std::string::npos);
    CHECK(report.find("indirect_link\t1") != std::string::npos);
    topo_string_free(rejects);
    topo_graph_free(g);
}

TEST_CASE("rpsl parsing") {
    TempDir dir("rpsl");
    const auto path = (dir.path / "whois.txt").string();
    std::ofstream(path) << "aut-num: AS1\nimport: from AS2 accept ANY\n\naut-num: AS2\n";
    topo_filter_policy policy;
    topo_filter_policy_defaults(&policy);
    topo_graph* g = nullptr;
    REQUIRE(topo_parse_rpsl_file(path.c_str(), &policy, &g, nullptr) == TOPO_OK);
    CHECK(topo_graph_node_count(g) == 2);
    CHECK(topo_graph_edge_count(g) == 1);
    topo_graph_free(g);
}

TEST_CASE("merge and overlap") {
    const uint32_t ua[] = {1, 2};
    const uint32_t va[] = {2, 3};
    const uint32_t ub[] = {2, 3};
    const uint32_t vb[] = {3, 4};
    topo_graph* a = nullptr;
    topo_graph* b = nullptr;
    REQUIRE(topo_graph_from_edges(ua, va, 2, &a) == TOPO_OK);
    REQUIRE(topo_graph_from_edges(ub, vb, 2, &b) == TOPO_OK);

    const topo_graph* both[] = {a, b};
    topo_graph* merged = nullptr;
    REQUIRE(topo_merge(both, 2, &merged) == TOPO_OK);
    CHECK(topo_graph_node_count(merged) == 4);
    CHECK(topo_graph_edge_count(merged) == 3);

    char* tsv = nullptr;
    REQUIRE(topo_overlap_tsv(a, b, "a", "b", &tsv) == TOPO_OK);
    const std::string text = tsv;
    CHECK(text.find("nodes_both\t2") != std::string::npos);
    CHECK(text.find("edges_both\t1") != std::string::npos);
    topo_string_free(tsv);
    topo_graph_free(a);
    topo_graph_free(b);
    topo_graph_free(merged);
}

TEST_CASE("summary and metric getters") {
    topo_graph* g = make_k4();
    topo_summary_options opts;
    topo_summary_options_defaults(&opts);
    char* tsv = nullptr;
    REQUIRE(topo_summary_tsv(g, &opts, "k4", &tsv) == TOPO_OK);
    const std::string text = tsv;
    CHECK(text.find("Number of nodes\t4\n") != std::string::npos);
    CHECK(text.find("Mean clustering\t1\n") != std::string::npos);
    topo_string_free(tsv);

    double mean_local = 0.0, global = 0.0;
    REQUIRE(topo_clustering(g, &mean_local, &global) == TOPO_OK);
    CHECK(mean_local == doctest::Approx(1.0));
    CHECK(global == doctest::Approx(1.0));
    int kappa = -1;
    REQUIRE(topo_coreness_max(g, &kappa) == TOPO_OK);
    CHECK(kappa == 2);

    // K4 is regular: assortativity undefined -> domain error
    double r = 0.0;
    CHECK(topo_assortativity(g, &r) == TOPO_ERR_DOMAIN);
    CHECK(std::string(topo_last_error()).find("undefined") != std::string::npos);
    topo_graph_free(g);
}

TEST_CASE("plots through the C API") {
    TempDir dir("plots");
    topo_graph* g = make_k4();
    topo_summary_options opts;
    topo_summary_options_defaults(&opts);
    REQUIRE(topo_emit_plots(g, "k4", dir.path.string().c_str(), &opts) == TOPO_OK);
    CHECK(std::filesystem::exists(dir.path / "k4.pk_pdf.tsv"));
    CHECK(std::filesystem::exists(dir.path / "k4.spectrum.tsv"));
    topo_graph_free(g);
}

TEST_CASE("generation through the C API is deterministic") {
    TempDir dir("gen");
    // seed graph: two triangles joined by a path
    const uint32_t us[] = {1, 2, 3, 4, 5, 6, 3};
    const uint32_t vs[] = {2, 3, 1, 5, 6, 4, 4};
    topo_graph* seed = nullptr;
    REQUIRE(topo_graph_from_edges(us, vs, 7, &seed) == TOPO_OK);

    topo_model_spec spec;
    spec.level = 1;
    spec.rng_seed = 42;
    spec.swap_factor = 5.0;
    topo_graph* a = nullptr;
    topo_graph* b = nullptr;
    char* warn_a = nullptr;
    char* warn_b = nullptr;
    REQUIRE(topo_generate(seed, &spec, &a, &warn_a) == TOPO_OK);
    REQUIRE(topo_generate(seed, &spec, &b, &warn_b) == TOPO_OK);
    CHECK(topo_graph_equal(a, b) == 1);
    topo_string_free(warn_a);
    topo_string_free(warn_b);

    spec.level = 3;
    topo_graph* bad = nullptr;
    CHECK(topo_generate(seed, &spec, &bad, nullptr) == TOPO_ERR_INVALID_ARGUMENT);

    topo_graph_free(a);
    topo_graph_free(b);
    topo_graph_free(seed);
}

TEST_CASE("model compare and compare write under out_dir") {
    TempDir dir("mc");
    const uint32_t us[] = {1, 2, 3, 1, 2, 3, 4};
    const uint32_t vs[] = {2, 3, 4, 3, 4, 5, 5};
    topo_graph* g = nullptr;
    REQUIRE(topo_graph_from_edges(us, vs, 7, &g) == TOPO_OK);
    REQUIRE(topo_model_compare(g, "g", "1k,2k", 3, 7, 3.0, dir.path.string().c_str()) == TOPO_OK);
    CHECK(std::filesystem::exists(dir.path / "g.ensembles.tsv"));

    topo_graph* h = make_k4();
    REQUIRE(topo_compare(g, h, "g", "k4", 1, nullptr, dir.path.string().c_str()) == TOPO_OK);
    CHECK(std::filesystem::exists(dir.path / "g_vs_k4.overlap.tsv"));
    topo_graph_free(g);
    topo_graph_free(h);
}

TEST_CASE("status strings") {
    CHECK(std::string(topo_status_message(TOPO_OK)) == "ok");
    CHECK(std::string(topo_status_message(TOPO_ERR_IO)) == "i/o error");
    CHECK(std::string(topo_version()).find('.') != std::string::npos);
}
