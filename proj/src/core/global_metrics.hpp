#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace topo {

// Distance and eccentricity statistics from one all-sources BFS sweep over
// the largest connected component. Pair counts use ordered pairs.
struct PathStats {
    std::vector<std::uint64_t> distance_histogram;  // index = hops, [0] unused
    double mean_distance = 0.0;
    double sigma = 0.0;  // distance distribution width
    std::map<std::uint32_t, double> d_of_k;  // k -> mean distance from k-degree nodes

    std::map<NodeId, std::uint32_t> ecc;  // nodes of the largest component
    std::uint32_t radius = 0, diameter = 0;
    double mean_ecc = 0.0;
    std::vector<std::uint64_t> ecc_histogram;  // index = eccentricity
    std::vector<NodeId> center, periphery;
    double center_ratio = 0.0, periphery_ratio = 0.0;  // vs full n
    std::uint32_t min_degree_in_center = 0;
    std::uint32_t max_degree_in_periphery = 0;
    std::map<std::uint32_t, double> ecc_of_k;

    double coverage = 0.0;  // component size / n
    std::size_t component_n = 0;
};

PathStats path_stats(const Graph& g);  // m >= 1

// Node and edge betweenness, Brandes accumulation extended to edges.
// Ordered-pair convention: every source-target pair (s,t), s != t, in the
// largest component; endpoints are not credited for their own pairs.
struct BetweennessScores {
    std::map<NodeId, double> node_raw;
    std::map<std::pair<NodeId, NodeId>, double> edge_raw;  // id pairs, u < v
    double normalization = 0.0;                            // n(n-1), full graph n
    double node_raw_sum = 0.0;                             // == sum over pairs of (d(s,t)-1)
    double edge_raw_sum = 0.0;                             // == sum over pairs of d(s,t)
    double coverage = 0.0;
    std::size_t component_n = 0;
};

BetweennessScores betweenness(const Graph& g);  // m >= 1

struct BetweennessByDegree {
    std::map<std::uint32_t, double> b_of_k;  // mean normalized node betweenness
    // Log-binned edge grid: representative (k1, k2) -> mean normalized edge
    // betweenness; symmetric, bin centers are geometric means of members.
    std::vector<std::tuple<double, double, double>> b_of_kk;
};

BetweennessByDegree betweenness_by_degree(const BetweennessScores& scores, const Graph& g,
                                          int bins_per_decade = 10);

}  // namespace topo
