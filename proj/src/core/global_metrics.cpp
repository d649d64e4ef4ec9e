#include "core/global_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace topo {

PathStats path_stats(const Graph& g) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "path_stats: edgeless graph");
    PathStats st;
    const Graph lcc = largest_component_subgraph(g, &st.coverage);
    const std::size_t n = lcc.node_count();
    st.component_n = n;

    std::vector<std::uint64_t> hist;
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> d_acc, e_acc;
    std::vector<std::uint32_t> ecc_val(n, 0);

    for (std::uint32_t s = 0; s < n; ++s) {
        const auto dist = bfs_distances_from(lcc, s);
        std::uint64_t sum = 0;
        std::uint32_t ecc = 0;
        for (std::uint32_t t = 0; t < n; ++t) {
            if (t == s) continue;
            const std::uint32_t d = dist[t];
            if (d >= hist.size()) hist.resize(d + 1, 0);
            ++hist[d];
            sum += d;
            ecc = std::max(ecc, d);
        }
        ecc_val[s] = ecc;
        const std::uint32_t k = lcc.degree(s);
        auto& ds = d_acc[k];
        ds.first += static_cast<double>(sum) / static_cast<double>(n - 1);
        ++ds.second;
        auto& es = e_acc[k];
        es.first += ecc;
        ++es.second;
    }

    st.distance_histogram = std::move(hist);
    std::uint64_t pairs = 0;
    double total = 0.0, total_sq = 0.0;
    for (std::uint32_t d = 1; d < st.distance_histogram.size(); ++d) {
        const auto c = st.distance_histogram[d];
        pairs += c;
        total += static_cast<double>(c) * d;
        total_sq += static_cast<double>(c) * d * d;
    }
    st.mean_distance = total / static_cast<double>(pairs);
    st.sigma = std::sqrt(std::max(0.0, total_sq / static_cast<double>(pairs) -
                                           st.mean_distance * st.mean_distance));
    for (const auto& [k, slot] : d_acc) st.d_of_k[k] = slot.first / static_cast<double>(slot.second);
    for (const auto& [k, slot] : e_acc) st.ecc_of_k[k] = slot.first / static_cast<double>(slot.second);

    st.radius = *std::min_element(ecc_val.begin(), ecc_val.end());
    st.diameter = *std::max_element(ecc_val.begin(), ecc_val.end());
    st.ecc_histogram.assign(st.diameter + 1, 0);
    double ecc_sum = 0.0;
    std::uint32_t center_min_deg = UINT32_MAX, periph_max_deg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        st.ecc.emplace(lcc.id_of(v), ecc_val[v]);
        ++st.ecc_histogram[ecc_val[v]];
        ecc_sum += ecc_val[v];
        if (ecc_val[v] == st.radius) {
            st.center.push_back(lcc.id_of(v));
            center_min_deg = std::min(center_min_deg, lcc.degree(v));
        }
        if (ecc_val[v] == st.diameter) {
            st.periphery.push_back(lcc.id_of(v));
            periph_max_deg = std::max(periph_max_deg, lcc.degree(v));
        }
    }
    st.mean_ecc = ecc_sum / static_cast<double>(n);
    st.center_ratio = static_cast<double>(st.center.size()) / static_cast<double>(g.node_count());
    st.periphery_ratio =
        static_cast<double>(st.periphery.size()) / static_cast<double>(g.node_count());
    st.min_degree_in_center = center_min_deg == UINT32_MAX ? 0 : center_min_deg;
    st.max_degree_in_periphery = periph_max_deg;
    return st;
}

BetweennessScores betweenness(const Graph& g) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "betweenness: edgeless graph");
    BetweennessScores out;
    const Graph lcc = largest_component_subgraph(g, &out.coverage);
    const std::size_t n = lcc.node_count();
    out.component_n = n;
    const double nf = static_cast<double>(g.node_count());
    out.normalization = nf * (nf - 1.0);

    std::vector<double> node_b(n, 0.0);
    // Edge scores accumulated per adjacency slot (v, slot index in adj of v).
    std::vector<double> half_edge_b(2 * lcc.edge_count(), 0.0);
    std::vector<std::uint64_t> slot_base(n + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) slot_base[v + 1] = slot_base[v] + lcc.degree(v);

    std::vector<std::uint32_t> dist(n), order(n);
    std::vector<double> sigma(n), delta(n);
    // Predecessors stored as (node, adjacency slot) so edge accumulation
    // never has to search the neighbor list.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> preds(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();

        // BFS in order[]; a vector works as the queue since hops are unit.
        std::size_t head = 0, tail = 0;
        order[tail++] = s;
        dist[s] = 0;
        sigma[s] = 1.0;
        while (head < tail) {
            const std::uint32_t v = order[head++];
            const auto nb = lcc.neighbors(v);
            for (std::size_t si = 0; si < nb.size(); ++si) {
                const std::uint32_t w = nb[si];
                if (dist[w] == kUnreached) {
                    dist[w] = dist[v] + 1;
                    order[tail++] = w;
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].emplace_back(v, slot_base[v] + si);
                }
            }
        }

        // Dependency accumulation in reverse BFS order; the contribution
        // along predecessor edge (v,w) is also the edge's dependency.
        for (std::size_t i = tail; i-- > 1;) {
            const std::uint32_t w = order[i];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            for (const auto& [v, slot] : preds[w]) {
                const double c = sigma[v] * coeff;
                delta[v] += c;
                half_edge_b[slot] += c;
            }
            node_b[w] += delta[w];
        }
    }

    for (std::uint32_t v = 0; v < n; ++v) {
        out.node_raw.emplace(lcc.id_of(v), node_b[v]);
        out.node_raw_sum += node_b[v];
    }
    lcc.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        auto nu = lcc.neighbors(u);
        auto nv = lcc.neighbors(v);
        const auto su = std::lower_bound(nu.begin(), nu.end(), v) - nu.begin();
        const auto sv = std::lower_bound(nv.begin(), nv.end(), u) - nv.begin();
        const double b = half_edge_b[slot_base[u] + su] + half_edge_b[slot_base[v] + sv];
        out.edge_raw.emplace(std::make_pair(lcc.id_of(u), lcc.id_of(v)), b);
        out.edge_raw_sum += b;
    });
    return out;
}

BetweennessByDegree betweenness_by_degree(const BetweennessScores& scores, const Graph& g,
                                          int bins_per_decade) {
    BetweennessByDegree out;
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
    for (const auto& [id, b] : scores.node_raw) {
        const std::uint32_t k = g.degree(*g.index_of(id));
        auto& slot = acc[k];
        slot.first += b / scores.normalization;
        ++slot.second;
    }
    for (const auto& [k, slot] : acc) out.b_of_k[k] = slot.first / static_cast<double>(slot.second);

    auto bin_of = [&](std::uint32_t k) {
        return static_cast<int>(std::lround(bins_per_decade * std::log10(static_cast<double>(k))));
    };
    struct Cell {
        double sum = 0.0, log_k1 = 0.0, log_k2 = 0.0;
        std::uint64_t count = 0;
    };
    std::map<std::pair<int, int>, Cell> grid;
    for (const auto& [edge, b] : scores.edge_raw) {
        std::uint32_t k1 = g.degree(*g.index_of(edge.first));
        std::uint32_t k2 = g.degree(*g.index_of(edge.second));
        if (k1 > k2) std::swap(k1, k2);
        auto& cell = grid[{bin_of(k1), bin_of(k2)}];
        cell.sum += b / scores.normalization;
        cell.log_k1 += std::log10(static_cast<double>(k1));
        cell.log_k2 += std::log10(static_cast<double>(k2));
        ++cell.count;
    }
    for (const auto& [bin, cell] : grid) {
        const double cnt = static_cast<double>(cell.count);
        const double k1 = std::pow(10.0, cell.log_k1 / cnt);
        const double k2 = std::pow(10.0, cell.log_k2 / cnt);
        const double mean = cell.sum / cnt;
        out.b_of_kk.emplace_back(k1, k2, mean);
        if (bin.first != bin.second) out.b_of_kk.emplace_back(k2, k1, mean);
    }
    std::sort(out.b_of_kk.begin(), out.b_of_kk.end());
    return out;
}

}  // namespace topo
