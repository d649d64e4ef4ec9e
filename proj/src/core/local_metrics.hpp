#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace topo {

struct BasicStats {
    std::size_t n = 0;
    std::uint64_t m = 0;
    double avg_degree = 0.0;  // 2m/n
};

BasicStats basic_stats(const Graph& g);  // n >= 1

struct DegreeDistribution {
    std::map<std::uint32_t, std::uint64_t> counts;  // k -> n(k)
    std::size_t n = 0;
    std::uint32_t k_min = 0, k_max = 0;
    double mean = 0.0;           // == 2m/n
    double second_moment = 0.0;  // <k^2>

    double pdf(std::uint32_t k) const;
    // (k, P(degree >= k)) for every present k, ascending; ccdf(k_min) == 1.
    std::vector<std::pair<std::uint32_t, double>> ccdf() const;
};

DegreeDistribution degree_distribution(const Graph& g);  // n >= 1

// Natural power-law cutoff n^(1/(gamma-1)); gamma must exceed 1.
double power_law_max_degree(std::size_t n, double gamma);

struct FitRange {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

struct PowerLawFit {
    double slope = 0.0;      // of log10 y vs log10 x
    double intercept = 0.0;  // log10 y at log10 x = 0
    double r_squared = 0.0;
    double x_lo = 0.0, x_hi = 0.0;  // realized fit range
    std::size_t points_used = 0;
    std::size_t zeros_skipped = 0;
};

// Unweighted least squares on (log10 x, log10 y) restricted to range; points
// with y <= 0 are excluded and counted. Needs >= 2 distinct x in range.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> series, FitRange range = {});

// Edge counts by endpoint-degree pair, (k1 <= k2) stored once.
class JointDegreeMatrix {
public:
    static JointDegreeMatrix from_graph(const Graph& g);  // m >= 1

    const std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>& counts() const {
        return counts_;
    }
    std::uint64_t total_edges() const { return m_; }

    // P(k1,k2) = m(k1,k2)/m over unordered degree pairs; sums to 1.
    double prob_unordered(std::uint32_t k1, std::uint32_t k2) const;
    // Symmetric edge-endpoint convention: off-diagonal cells carry half of
    // the unordered mass in each orientation, so the full (k1,k2) grid sums
    // to 1 and the conditional P(k2|k1) = kbar/k1 * P(k1,k2)/P(k1) holds.
    double prob_sym(std::uint32_t k1, std::uint32_t k2) const;

    // k_nn(k) computed from the conditional distribution.
    std::map<std::uint32_t, double> knn(const DegreeDistribution& dd) const;

private:
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts_;
    std::uint64_t m_ = 0;
};

JointDegreeMatrix joint_degree_distribution(const Graph& g);

// k -> mean over k-degree nodes of their mean neighbor degree (direct form;
// must agree with JointDegreeMatrix::knn). Absent classes are absent.
std::map<std::uint32_t, double> avg_neighbor_degree(const Graph& g);  // m >= 1

// Pearson correlation of (deg u, deg v) over both orientations of every
// edge. Empty when the endpoint-degree variance is zero (regular graph).
std::optional<double> assortativity(const Graph& g);  // m >= 1

struct ClusteringResult {
    std::vector<double> local;                 // per dense index; 0 for deg < 2
    std::vector<std::uint64_t> triangles_at;   // triangles through each node
    std::map<std::uint32_t, double> c_of_k;    // C(k), every present degree class
    double mean_local = 0.0;                   // C-bar = sum_k C(k) P(k)
    double global = 0.0;                       // C = 3*triangles / connected triples
    std::uint64_t triangles = 0;               // each triangle counted once
    std::uint64_t connected_triples = 0;       // sum_v deg(v) choose 2
};

ClusteringResult clustering(const Graph& g);  // n >= 1

// (rho, phi(rho/n)) for rho = 2..n; nodes ordered by non-increasing degree,
// ties by ascending node id.
std::vector<std::pair<std::uint32_t, double>> rich_club(const Graph& g);  // n >= 2

struct CorenessResult {
    // Coreness convention: max k such that the node survives iterative
    // removal of all nodes of degree <= k. Equals the standard peeling core
    // number minus one; isolated nodes get -1.
    std::vector<int> kappa;  // per dense index
    int kappa_max = 0;
    int kappa_min = 0;
    double mean = 0.0;
    std::vector<NodeId> core;    // kappa == kappa_max
    std::vector<NodeId> fringe;  // kappa == kappa_min
    double core_ratio = 0.0, fringe_ratio = 0.0;
    std::uint32_t min_degree_in_core = 0;
    std::uint32_t max_degree_in_fringe = 0;
};

CorenessResult coreness(const Graph& g);  // n >= 1

// k -> mean coreness of k-degree nodes.
std::map<std::uint32_t, double> coreness_by_degree(const Graph& g);

}  // namespace topo
