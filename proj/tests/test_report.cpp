#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/report.hpp"
#include "core/text.hpp"
#include "support/oracles.hpp"

using namespace topo;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("topo_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("summary of K4") {
    const auto s = summary(oracle::k4());
    CHECK(*s.value("Number of nodes") == 4.0);
    CHECK(*s.value("Number of edges") == 6.0);
    CHECK(*s.value("Avg node degree") == 3.0);
    CHECK(*s.value("Max node degree") == 3.0);
    CHECK(*s.value("Mean clustering") == 1.0);
    CHECK(*s.value("Clustering coefficient") == 1.0);
    CHECK(*s.value("Graph radius") == 1.0);
    CHECK(*s.value("Graph diameter") == 1.0);
    CHECK(*s.value("Max node coreness") == 2.0);
    CHECK(*s.value("Largest eigenvalue") == doctest::Approx(3.0));
    CHECK(*s.value("Second largest eigenvalue") == doctest::Approx(-1.0));
    CHECK(*s.value("Third largest eigenvalue") == doctest::Approx(-1.0));
    CHECK(!s.value("Assortative coefficient").has_value());  // regular graph
    CHECK(!s.value("Exponent of P(k)").has_value());         // single-point distribution
}

TEST_CASE("summary of star S5") {
    const auto s = summary(oracle::star(5));
    CHECK(*s.value("Assortative coefficient") == doctest::Approx(-1.0));
    CHECK(*s.value("Mean clustering") == 0.0);
    CHECK(*s.value("Clustering coefficient") == 0.0);
    CHECK(*s.value("Max node coreness") == 0.0);
    CHECK(*s.value("Largest eigenvalue") == doctest::Approx(2.0));
    CHECK(*s.value("Second largest eigenvalue") == doctest::Approx(-2.0));
    CHECK(*s.value("Third largest eigenvalue") == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("summary values are consistent with direct module calls") {
    const Graph g = oracle::random_connected_graph(21, 80, 160);
    const auto s = summary(g);
    CHECK(*s.value("Avg node degree") == basic_stats(g).avg_degree);
    CHECK(*s.value("Mean clustering") == clustering(g).mean_local);
    CHECK(*s.value("Avg node coreness") == coreness(g).mean);
    CHECK(*s.value("Avg distance") == path_stats(g).mean_distance);
    const auto r = assortativity(g);
    REQUIRE(r.has_value());
    CHECK(*s.value("Assortative coefficient") == *r);
}

TEST_CASE("summary TSV renders dashes and notes") {
    const auto s = summary(oracle::cycle(5));
    const auto tsv = s.to_tsv("c5");
    CHECK(tsv.find("Assortative coefficient\t-\n") != std::string::npos);
    CHECK(tsv.find("# Assortative coefficient: undefined") != std::string::npos);
    CHECK(tsv.find("Avg node degree\t2\n") != std::string::npos);
    CHECK(tsv.find("Avg edge betweeness\t") != std::string::npos);
}

TEST_CASE("emit_plots writes K4 degree pdf exactly") {
    const auto dir = temp_dir("k4_plots");
    emit_plots(oracle::k4(), "k4", dir.string());
    const auto pk = slurp(dir / "k4.pk_pdf.tsv");
    CHECK(pk.find("3\t1.0\n") != std::string::npos);
    // zero-valued betweenness rows still appear
    const auto bk = slurp(dir / "k4.bk.tsv");
    CHECK(bk.find("3\t0.0\n") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("emission is deterministic") {
    const Graph g = oracle::random_connected_graph(31, 60, 120);
    const auto dir1 = temp_dir("emit_a");
    const auto dir2 = temp_dir("emit_b");
    const auto series1 = emit_plots(g, "g", dir1.string());
    const auto series2 = emit_plots(g, "g", dir2.string());
    REQUIRE(series1.size() == series2.size());
    for (std::size_t i = 0; i < series1.size(); ++i) {
        CHECK(series1[i].to_tsv() == series2[i].to_tsv());
        CHECK(slurp(dir1 / series1[i].file_name()) == slurp(dir2 / series2[i].file_name()));
    }
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("emitted series reparse to the in-memory values") {
    const Graph g = oracle::random_connected_graph(13, 40, 60);
    const auto series = emit_plots(g, "g", "");
    for (const auto& s : series) {
        std::istringstream in(s.to_tsv());
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream fields(line);
            double x = 0, y = 0, z = 0;
            fields >> x >> y;
            if (s.arity == 3) fields >> z;
            REQUIRE(row < s.rows.size());
            CHECK(x == doctest::Approx(s.rows[row][0]).epsilon(1e-8));
            CHECK(y == doctest::Approx(s.rows[row][1]).epsilon(1e-8));
            if (s.arity == 3) CHECK(z == doctest::Approx(s.rows[row][2]).epsilon(1e-8));
            ++row;
        }
        CHECK(row == s.rows.size());
    }
}

TEST_CASE("compare identical graphs") {
    const Graph g = oracle::random_connected_graph(17, 30, 40);
    CompareOptions opts;
    opts.induced = true;
    const auto rep = compare(g, g, "a", "b", opts);
    CHECK(rep.overlap.nodes_only_a == 0);
    CHECK(rep.overlap.edges_only_a == 0);
    CHECK(rep.only_a_degree_pdf.empty());
    REQUIRE(rep.induced_summary_a.has_value());
    REQUIRE(rep.induced_summary_b.has_value());
    const auto full = summary(g);
    for (std::size_t i = 0; i < full.rows.size(); ++i) {
        CHECK(full.rows[i].value == rep.induced_summary_a->rows[i].value);
        CHECK(full.rows[i].value == rep.induced_summary_b->rows[i].value);
    }
}

TEST_CASE("compare reports only-in-A degrees") {
    const Graph a = Graph::build({{1, 2}, {2, 3}});
    const Graph b = Graph::build({{2, 3}, {3, 4}});
    const auto rep = compare(a, b, "a", "b");
    CHECK(rep.avg_degree_only_a == doctest::Approx(1.0));
    CHECK(rep.only_a_degree_pdf.at(1) == doctest::Approx(1.0));
}

TEST_CASE("compare writes its files") {
    const auto dir = temp_dir("compare");
    const Graph a = Graph::build({{1, 2}, {2, 3}, {1, 3}});
    const Graph b = Graph::build({{2, 3}, {3, 4}, {2, 4}});
    CompareOptions opts;
    opts.induced = true;
    compare(a, b, "left", "right", opts, dir.string());
    CHECK(std::filesystem::exists(dir / "left_vs_right.overlap.tsv"));
    CHECK(std::filesystem::exists(dir / "left_vs_right.only_a_pk.tsv"));
    CHECK(std::filesystem::exists(dir / "left.common_summary.tsv"));
    CHECK(std::filesystem::exists(dir / "right.common_summary.tsv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("model compare emits grids, series and ensembles") {
    const auto dir = temp_dir("model_compare");
    const Graph g = oracle::random_connected_graph(23, 60, 180);
    ModelCompareOptions opts;
    opts.samples = 5;
    opts.swap_factor = 3.0;
    model_compare(g, "g", dir.string(), opts);
    CHECK(std::filesystem::exists(dir / "g.jdd_ratio.tsv"));
    CHECK(std::filesystem::exists(dir / "g.ck_observed.tsv"));
    CHECK(std::filesystem::exists(dir / "g.c2k_k.tsv"));
    CHECK(std::filesystem::exists(dir / "g.model_constants.tsv"));
    CHECK(std::filesystem::exists(dir / "g.ensembles.tsv"));
    const auto ens = slurp(dir / "g.ensembles.tsv");
    CHECK(ens.find("# rng: mt19937_64") != std::string::npos);
    CHECK(ens.find("0k\tmean_knn\t") != std::string::npos);
    CHECK(ens.find("2k\tassortativity\t") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("log-binned emission aggregates per-degree series") {
    const Graph g = oracle::random_connected_graph(37, 400, 1200);
    SummaryOptions opts;
    const auto plain = emit_plots(g, "g", "", opts);
    opts.log_bin_series = true;
    const auto binned = emit_plots(g, "g", "", opts);
    REQUIRE(plain.size() == binned.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
        REQUIRE(plain[i].metric == binned[i].metric);
        if (plain[i].metric == "pk_pdf" || plain[i].metric == "knn") {
            CHECK(binned[i].rows.size() <= plain[i].rows.size());
            // bin centers are increasing
            for (std::size_t r = 1; r < binned[i].rows.size(); ++r) {
                CHECK(binned[i].rows[r][0] > binned[i].rows[r - 1][0]);
            }
            // fits stay identical (computed from unbinned points)
            REQUIRE(plain[i].fit.has_value() == binned[i].fit.has_value());
            if (plain[i].fit) CHECK(plain[i].fit->slope == binned[i].fit->slope);
        }
        if (plain[i].metric == "dx") CHECK(binned[i].rows.size() == plain[i].rows.size());
    }
}

TEST_CASE("value formatting keeps nine significant digits") {
    CHECK(format_g9(1.0 / 3.0) == "0.333333333");
    CHECK(format_g9(12345.0) == "12345");
    CHECK(format_value(1.0) == "1.0");
    CHECK(format_value(0.25) == "0.25");
    CHECK(format_value(-2.0) == "-2.0");
}
