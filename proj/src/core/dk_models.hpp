#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/local_metrics.hpp"

namespace topo {

enum class DkLevel { zero_k, one_k, two_k };

struct DkModelSpec {
    DkLevel level = DkLevel::one_k;
    std::uint64_t rng_seed = 1;
    double swap_factor = 10.0;  // Q: target accepted swaps per edge (1K/2K)
    std::uint32_t samples = 1;
};

struct GenerateResult {
    Graph graph;
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    bool budget_exhausted = false;  // proposal budget hit before Q*m acceptances
    std::string warning;            // empty when clean
};

// Erdos-Renyi G(n, p) with n and p = kbar/n taken from the seed graph; the
// seed's node ids are reused so outputs are comparable to the original.
GenerateResult generate_0k(const Graph& seed, std::uint64_t rng_seed);

// Degree-preserving double edge swaps: pick two distinct edges, random
// orientation, rewire (u,v),(x,y) -> (u,y),(x,v); reject self-loops and
// existing edges. Runs until Q*m accepted or the 100*Q*m proposal budget.
GenerateResult generate_1k(const Graph& seed, std::uint64_t rng_seed, double swap_factor = 10.0);

// Same chain with the extra acceptance constraint deg(v) == deg(y), which
// preserves the joint degree matrix exactly.
GenerateResult generate_2k(const Graph& seed, std::uint64_t rng_seed, double swap_factor = 10.0);

GenerateResult generate(const Graph& seed, const DkModelSpec& spec);

// Stub-matching construction from a bare degree sequence; collisions are
// erased, so the realized degrees can deviate (reported as L1 distance).
struct StubMatchResult {
    Graph graph;
    std::uint64_t degree_l1_deviation = 0;
};
StubMatchResult stub_matching(std::span<const std::uint32_t> degrees, std::uint64_t rng_seed);

// Closed forms for uncorrelated graphs, evaluated from n, kbar, <k^2>.
struct AnalyticalPredictions {
    double knn_0k = 0.0;  // kbar + 1
    double knn_1k = 0.0;  // <k^2>/kbar
    double c_0k = 0.0;    // kbar/n
    double c_1k = 0.0;    // (<k^2> - kbar^2) / (n kbar^3)
};
AnalyticalPredictions analytical_predictions(const Graph& g);  // m >= 1

// (k1,k2) -> log10(P(k1,k2) / Ptilde(k1) Ptilde(k2)) for observed cells,
// with Ptilde(k) = (k/kbar) P(k). Cells never observed are absent.
std::map<std::pair<std::uint32_t, std::uint32_t>, double> jdd_ratio_matrix(const Graph& g);

struct ClusteringVsRandomness {
    std::map<std::uint32_t, double> observed_c_of_k;
    double observed_mean = 0.0;               // C-bar
    std::map<std::uint32_t, double> c2k_of_k;  // Monte Carlo mean over 2K ensemble
    double c2k_mean = 0.0;                     // C-bar over the ensemble
    double c_1k = 0.0, c_0k = 0.0;             // constants
    double ratio_2k = 0.0;                     // C-bar_2K / C-bar
    double ratio_0k_1k = 0.0;                  // C_0K / C_1K
    std::uint32_t samples_used = 0;
};

ClusteringVsRandomness clustering_vs_randomness(const Graph& g, const DkModelSpec& spec);

struct EnsembleStatistic {
    std::string metric;
    std::vector<double> values;  // one per successful sample
    double mean = 0.0;
    double stddev = 0.0;
    std::uint32_t missing = 0;  // samples where the metric was undefined
};

using ScalarMetric = std::function<std::optional<double>(const Graph&)>;

// Generates spec.samples graphs with seeds rng_seed, rng_seed+1, ... and
// evaluates the metric on each.
EnsembleStatistic ensemble_statistic(const Graph& seed, const DkModelSpec& spec,
                                     const std::string& metric_name, const ScalarMetric& metric);

}  // namespace topo
