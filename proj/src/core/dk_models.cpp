#include "core/dk_models.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace topo {

namespace {

std::uint64_t edge_key(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

GenerateResult generate_0k(const Graph& seed, std::uint64_t rng_seed) {
    if (seed.node_count() == 0) fail(ErrorKind::invalid_argument, "generate_0k: empty seed graph");
    const std::size_t n = seed.node_count();
    const double p = 2.0 * static_cast<double>(seed.edge_count()) /
                     (static_cast<double>(n) * static_cast<double>(n));  // kbar/n
    if (p > 1.0) fail(ErrorKind::domain, "generate_0k: kbar/n > 1");

    GenerateResult res;
    std::vector<NodeId> node_ids(seed.nodes().begin(), seed.nodes().end());
    EdgeList edges;
    if (p > 0.0) {
        // Geometric jumps between successive present pairs (linear in n+m).
        Rng rng(rng_seed);
        const double log1mp = std::log1p(-p);
        std::uint64_t v = 1, w = static_cast<std::uint64_t>(-1);
        while (v < n) {
            const double r = rng.unit();
            w += 1 + static_cast<std::uint64_t>(std::floor(std::log1p(-r) / log1mp));
            while (w >= v && v < n) {
                w -= v;
                ++v;
            }
            if (v < n) edges.emplace_back(node_ids[w], node_ids[v]);
        }
    }
    res.graph = Graph::build(std::move(edges), nullptr, node_ids);
    return res;
}

namespace {

GenerateResult rewire_chain(const Graph& seed, std::uint64_t rng_seed, double swap_factor,
                            bool match_degrees) {
    if (seed.edge_count() < 2)
        fail(ErrorKind::invalid_argument, "rewire: seed graph needs at least 2 edges");
    if (swap_factor <= 0.0) fail(ErrorKind::invalid_argument, "rewire: swap factor must be positive");

    const std::uint64_t m = seed.edge_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // dense indices
    edges.reserve(m);
    seed.for_each_edge([&](std::uint32_t u, std::uint32_t v) { edges.emplace_back(u, v); });

    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    for (auto [u, v] : edges) present.insert(edge_key(u, v));

    const auto target = static_cast<std::uint64_t>(std::llround(swap_factor * static_cast<double>(m)));
    const std::uint64_t budget = 100 * target;

    GenerateResult res;
    Rng rng(rng_seed);
    while (res.accepted < target && res.proposals < budget) {
        ++res.proposals;
        const std::uint64_t i = rng.below(m);
        const std::uint64_t j = rng.below(m);
        if (i == j) continue;
        auto [u, v] = edges[i];
        auto [x, y] = edges[j];
        if (rng.coin()) std::swap(u, v);
        if (rng.coin()) std::swap(x, y);
        // Shared endpoints always yield a self-loop or a no-op.
        if (u == x || u == y || v == x || v == y) continue;
        if (match_degrees && seed.degree(v) != seed.degree(y)) continue;
        if (present.count(edge_key(u, y)) || present.count(edge_key(x, v))) continue;
        present.erase(edge_key(u, v));
        present.erase(edge_key(x, y));
        present.insert(edge_key(u, y));
        present.insert(edge_key(x, v));
        edges[i] = {u, y};
        edges[j] = {x, v};
        ++res.accepted;
    }
    if (res.accepted < target) {
        res.budget_exhausted = true;
        res.warning = "proposal budget exhausted after " + std::to_string(res.accepted) + "/" +
                      std::to_string(target) + " accepted swaps";
    }

    EdgeList id_edges;
    id_edges.reserve(m);
    for (auto [u, v] : edges) id_edges.emplace_back(seed.id_of(u), seed.id_of(v));
    std::vector<NodeId> node_ids(seed.nodes().begin(), seed.nodes().end());
    res.graph = Graph::build(std::move(id_edges), nullptr, node_ids);
    return res;
}

}  // namespace

GenerateResult generate_1k(const Graph& seed, std::uint64_t rng_seed, double swap_factor) {
    return rewire_chain(seed, rng_seed, swap_factor, false);
}

GenerateResult generate_2k(const Graph& seed, std::uint64_t rng_seed, double swap_factor) {
    return rewire_chain(seed, rng_seed, swap_factor, true);
}

GenerateResult generate(const Graph& seed, const DkModelSpec& spec) {
    switch (spec.level) {
        case DkLevel::zero_k:
            return generate_0k(seed, spec.rng_seed);
        case DkLevel::one_k:
            return generate_1k(seed, spec.rng_seed, spec.swap_factor);
        case DkLevel::two_k:
            return generate_2k(seed, spec.rng_seed, spec.swap_factor);
    }
    fail(ErrorKind::invalid_argument, "generate: unknown model level");
}

StubMatchResult stub_matching(std::span<const std::uint32_t> degrees, std::uint64_t rng_seed) {
    std::vector<std::uint32_t> stubs;
    for (std::uint32_t v = 0; v < degrees.size(); ++v) {
        for (std::uint32_t i = 0; i < degrees[v]; ++i) stubs.push_back(v);
    }
    if (stubs.size() % 2 != 0)
        fail(ErrorKind::invalid_argument, "stub_matching: degree sequence sum must be even");

    Rng rng(rng_seed);
    for (std::size_t i = stubs.size(); i > 1; --i) {  // Fisher-Yates
        std::swap(stubs[i - 1], stubs[rng.below(i)]);
    }
    EdgeList edges;
    edges.reserve(stubs.size() / 2);
    std::vector<NodeId> nodes(degrees.size());
    for (std::uint32_t v = 0; v < degrees.size(); ++v) nodes[v] = v;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);

    StubMatchResult res;
    res.graph = Graph::build(std::move(edges), nullptr, nodes);
    for (std::uint32_t v = 0; v < degrees.size(); ++v) {
        const std::uint32_t got = res.graph.degree(*res.graph.index_of(v));
        res.degree_l1_deviation += got > degrees[v] ? got - degrees[v] : degrees[v] - got;
    }
    return res;
}

AnalyticalPredictions analytical_predictions(const Graph& g) {
    if (g.edge_count() == 0)
        fail(ErrorKind::invalid_argument, "analytical_predictions: edgeless graph");
    const auto dd = degree_distribution(g);
    const double n = static_cast<double>(g.node_count());
    const double kbar = dd.mean;
    const double k2 = dd.second_moment;
    AnalyticalPredictions p;
    p.knn_0k = kbar + 1.0;
    p.knn_1k = k2 / kbar;
    p.c_0k = kbar / n;
    p.c_1k = (k2 - kbar * kbar) / (n * kbar * kbar * kbar);
    return p;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, double> jdd_ratio_matrix(const Graph& g) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "jdd_ratio_matrix: edgeless graph");
    const auto dd = degree_distribution(g);
    const auto jdm = joint_degree_distribution(g);
    const double kbar = dd.mean;
    auto p_tilde = [&](std::uint32_t k) {
        return static_cast<double>(k) / kbar * dd.pdf(k);
    };
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> out;
    for (const auto& [cell, cnt] : jdm.counts()) {
        (void)cnt;
        const auto [k1, k2] = cell;
        const double observed = jdm.prob_sym(k1, k2);
        const double model = p_tilde(k1) * p_tilde(k2);
        out[cell] = std::log10(observed / model);
    }
    return out;
}

ClusteringVsRandomness clustering_vs_randomness(const Graph& g, const DkModelSpec& spec) {
    if (g.edge_count() == 0)
        fail(ErrorKind::invalid_argument, "clustering_vs_randomness: edgeless graph");
    ClusteringVsRandomness out;
    const auto observed = clustering(g);
    out.observed_c_of_k = observed.c_of_k;
    out.observed_mean = observed.mean_local;

    const auto analytic = analytical_predictions(g);
    out.c_1k = analytic.c_1k;
    out.c_0k = analytic.c_0k;
    out.ratio_0k_1k = analytic.c_1k == 0.0 ? 0.0 : analytic.c_0k / analytic.c_1k;

    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
    double mean_acc = 0.0;
    const std::uint32_t samples = std::max<std::uint32_t>(1, spec.samples);
    for (std::uint32_t s = 0; s < samples; ++s) {
        const auto sample = generate_2k(g, spec.rng_seed + s, spec.swap_factor);
        const auto ck = clustering(sample.graph);
        for (const auto& [k, c] : ck.c_of_k) {
            auto& slot = acc[k];
            slot.first += c;
            ++slot.second;
        }
        mean_acc += ck.mean_local;
    }
    for (const auto& [k, slot] : acc) out.c2k_of_k[k] = slot.first / static_cast<double>(slot.second);
    out.c2k_mean = mean_acc / static_cast<double>(samples);
    out.ratio_2k = out.observed_mean == 0.0 ? 0.0 : out.c2k_mean / out.observed_mean;
    out.samples_used = samples;
    return out;
}

EnsembleStatistic ensemble_statistic(const Graph& seed, const DkModelSpec& spec,
                                     const std::string& metric_name, const ScalarMetric& metric) {
    if (spec.samples < 1) fail(ErrorKind::invalid_argument, "ensemble_statistic: samples must be >= 1");
    EnsembleStatistic stat;
    stat.metric = metric_name;
    for (std::uint32_t s = 0; s < spec.samples; ++s) {
        DkModelSpec one = spec;
        one.rng_seed = spec.rng_seed + s;
        const auto sample = generate(seed, one);
        const auto value = metric(sample.graph);
        if (value) {
            stat.values.push_back(*value);
        } else {
            ++stat.missing;
        }
    }
    if (!stat.values.empty()) {
        double sum = 0.0;
        for (double v : stat.values) sum += v;
        stat.mean = sum / static_cast<double>(stat.values.size());
        double sq = 0.0;
        for (double v : stat.values) sq += (v - stat.mean) * (v - stat.mean);
        stat.stddev = std::sqrt(sq / static_cast<double>(stat.values.size()));
    }
    return stat;
}

}  // namespace topo
