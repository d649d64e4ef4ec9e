#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/dk_models.hpp"
#include "core/global_metrics.hpp"
#include "core/graph.hpp"
#include "core/ingest.hpp"
#include "core/local_metrics.hpp"
#include "core/spectrum.hpp"

namespace topo {

struct SummaryOptions {
    double r2_threshold = 0.8;  // power-law rows go absent below this
    std::size_t dense_threshold = 2000;
    std::size_t spectrum_top_k = 3;
    std::uint64_t rng_seed = 1;
    // Keys: pk, knn, ck, rc, kappa, dk, bk. Unset metrics use their
    // defaults (rc: 0.1 <= rho/n <= 1, kappa: k <= 100, otherwise full).
    std::map<std::string, FitRange> fit_ranges;
    // Emit per-degree series aggregated into logarithmic bins (10 per
    // decade, geometric-mean bin centers). Fits always use unbinned points.
    bool log_bin_series = false;
};

// One scalar per summary-table row; absent values carry a reason.
struct SummaryStatistics {
    struct Row {
        std::string name;
        std::optional<double> value;
        std::string note;  // set when absent (or to annotate)
    };
    std::vector<Row> rows;

    std::optional<double> value(const std::string& name) const;
    std::string to_tsv(const std::string& label) const;  // name<TAB>value, '-' when absent
};

SummaryStatistics summary(const Graph& g, const SummaryOptions& opts = {});

// One tagged data series; written as "<label>.<metric>.tsv".
struct PlotSeries {
    std::string metric;
    std::string graph_label;
    int arity = 2;  // 2 or 3 used columns
    std::vector<std::array<double, 3>> rows;
    std::optional<PowerLawFit> fit;
    std::vector<std::string> extra_header;

    std::string to_tsv() const;
    std::string file_name() const { return graph_label + "." + metric + ".tsv"; }
};

// All per-metric data files for one graph; returns the emitted series in
// file order. Writes nothing when out_dir is empty.
std::vector<PlotSeries> emit_plots(const Graph& g, const std::string& graph_label,
                                   const std::string& out_dir, const SummaryOptions& opts = {});

struct CompareOptions {
    bool induced = false;  // also compare the V_A ∩ V_B induced subgraphs
    SummaryOptions summary;
};

struct CompareReport {
    OverlapStats overlap;
    // Degree distribution, within A, of the nodes absent from B.
    std::map<std::uint32_t, double> only_a_degree_pdf;
    double avg_degree_only_a = 0.0;
    std::optional<SummaryStatistics> induced_summary_a, induced_summary_b;
};

CompareReport compare(const Graph& a, const Graph& b, const std::string& label_a,
                      const std::string& label_b, const CompareOptions& opts = {},
                      const std::string& out_dir = "");

struct ModelCompareOptions {
    std::vector<DkLevel> models = {DkLevel::zero_k, DkLevel::one_k, DkLevel::two_k};
    std::uint32_t samples = 50;
    std::uint64_t rng_seed = 1;
    double swap_factor = 10.0;
};

// Emits the observed-vs-model comparison data (JDD ratio grid, clustering
// vs randomness series, per-model ensemble statistics).
void model_compare(const Graph& g, const std::string& graph_label, const std::string& out_dir,
                   const ModelCompareOptions& opts);

}  // namespace topo
