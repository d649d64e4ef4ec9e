#include "core/local_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace topo {

BasicStats basic_stats(const Graph& g) {
    if (g.node_count() == 0) fail(ErrorKind::invalid_argument, "basic_stats: empty graph");
    BasicStats s;
    s.n = g.node_count();
    s.m = g.edge_count();
    s.avg_degree = 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
    return s;
}

double DegreeDistribution::pdf(std::uint32_t k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
}

std::vector<std::pair<std::uint32_t, double>> DegreeDistribution::ccdf() const {
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(counts.size());
    std::uint64_t at_least = n;
    for (const auto& [k, cnt] : counts) {
        out.emplace_back(k, static_cast<double>(at_least) / static_cast<double>(n));
        at_least -= cnt;
    }
    return out;
}

DegreeDistribution degree_distribution(const Graph& g) {
    if (g.node_count() == 0) fail(ErrorKind::invalid_argument, "degree_distribution: empty graph");
    DegreeDistribution dd;
    dd.n = g.node_count();
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        const std::uint32_t k = g.degree(i);
        ++dd.counts[k];
        sum += k;
        sum_sq += static_cast<double>(k) * k;
    }
    dd.k_min = dd.counts.begin()->first;
    dd.k_max = dd.counts.rbegin()->first;
    dd.mean = sum / static_cast<double>(dd.n);
    dd.second_moment = sum_sq / static_cast<double>(dd.n);
    return dd;
}

double power_law_max_degree(std::size_t n, double gamma) {
    if (gamma <= 1.0) fail(ErrorKind::domain, "power_law_max_degree: gamma must exceed 1");
    if (n == 0) fail(ErrorKind::invalid_argument, "power_law_max_degree: n must be positive");
    return std::pow(static_cast<double>(n), 1.0 / (gamma - 1.0));
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> series, FitRange range) {
    PowerLawFit fit;
    std::vector<std::pair<double, double>> pts;  // (log10 x, log10 y)
    for (const auto& [x, y] : series) {
        if (x < range.lo || x > range.hi || x <= 0.0) continue;
        if (y <= 0.0) {
            ++fit.zeros_skipped;
            continue;
        }
        pts.emplace_back(std::log10(x), std::log10(y));
    }
    double x_lo = 0.0, x_hi = 0.0;
    bool distinct_x = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double x = std::pow(10.0, pts[i].first);
        if (i == 0) {
            x_lo = x_hi = x;
        } else {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            if (pts[i].first != pts[0].first) distinct_x = true;
        }
    }
    if (pts.size() < 2 || !distinct_x)
        fail(ErrorKind::invalid_argument, "fit_power_law: need >= 2 points with distinct x in range");

    const double inv_n = 1.0 / static_cast<double>(pts.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [lx, ly] : pts) mx += lx, my += ly;
    mx *= inv_n, my *= inv_n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& [lx, ly] : pts) {
        sxx += (lx - mx) * (lx - mx);
        syy += (ly - my) * (ly - my);
        sxy += (lx - mx) * (ly - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    fit.x_lo = x_lo;
    fit.x_hi = x_hi;
    fit.points_used = pts.size();
    return fit;
}

JointDegreeMatrix JointDegreeMatrix::from_graph(const Graph& g) {
    if (g.edge_count() == 0)
        fail(ErrorKind::invalid_argument, "joint_degree_distribution: edgeless graph");
    JointDegreeMatrix jdm;
    jdm.m_ = g.edge_count();
    g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        std::uint32_t k1 = g.degree(u), k2 = g.degree(v);
        if (k1 > k2) std::swap(k1, k2);
        ++jdm.counts_[{k1, k2}];
    });
    return jdm;
}

JointDegreeMatrix joint_degree_distribution(const Graph& g) {
    return JointDegreeMatrix::from_graph(g);
}

double JointDegreeMatrix::prob_unordered(std::uint32_t k1, std::uint32_t k2) const {
    if (k1 > k2) std::swap(k1, k2);
    auto it = counts_.find({k1, k2});
    return it == counts_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(m_);
}

double JointDegreeMatrix::prob_sym(std::uint32_t k1, std::uint32_t k2) const {
    const double p = prob_unordered(k1, k2);
    return k1 == k2 ? p : p / 2.0;
}

std::map<std::uint32_t, double> JointDegreeMatrix::knn(const DegreeDistribution& dd) const {
    // sum_k' k' P(k'|k) with P(k'|k) = (kbar/k) P(k,k')/P(k); expanding the
    // probabilities gives sum_k' k' * endpoints(k,k') / (k n(k)).
    std::map<std::uint32_t, double> weighted;  // k -> sum k' * endpoint count
    for (const auto& [pair, cnt] : counts_) {
        const auto [k1, k2] = pair;
        if (k1 == k2) {
            weighted[k1] += 2.0 * static_cast<double>(cnt) * k1;
        } else {
            weighted[k1] += static_cast<double>(cnt) * k2;
            weighted[k2] += static_cast<double>(cnt) * k1;
        }
    }
    std::map<std::uint32_t, double> out;
    for (auto& [k, sum] : weighted) {
        const double nk = static_cast<double>(dd.counts.at(k));
        out[k] = sum / (static_cast<double>(k) * nk);
    }
    return out;
}

std::map<std::uint32_t, double> avg_neighbor_degree(const Graph& g) {
    if (g.edge_count() == 0)
        fail(ErrorKind::invalid_argument, "avg_neighbor_degree: edgeless graph");
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;  // k -> (sum of node means, count)
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        const std::uint32_t k = g.degree(i);
        if (k == 0) continue;
        double sum = 0.0;
        for (std::uint32_t w : g.neighbors(i)) sum += g.degree(w);
        auto& slot = acc[k];
        slot.first += sum / static_cast<double>(k);
        ++slot.second;
    }
    std::map<std::uint32_t, double> out;
    for (const auto& [k, slot] : acc) out[k] = slot.first / static_cast<double>(slot.second);
    return out;
}

std::optional<double> assortativity(const Graph& g) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "assortativity: edgeless graph");
    // Both orientations of each edge; x and y are then identically
    // distributed, so a single mean/variance serves both coordinates.
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    double sum = 0.0, sum_sq = 0.0, sum_prod = 0.0;
    g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        const double ku = g.degree(u), kv = g.degree(v);
        sum += ku + kv;
        sum_sq += ku * ku + kv * kv;
        sum_prod += 2.0 * ku * kv;
    });
    const double mean = sum / two_m;
    const double var = sum_sq / two_m - mean * mean;
    const double cov = sum_prod / two_m - mean * mean;
    if (var <= 0.0) return std::nullopt;  // regular graph: undefined, not an error
    return cov / var;
}

ClusteringResult clustering(const Graph& g) {
    if (g.node_count() == 0) fail(ErrorKind::invalid_argument, "clustering: empty graph");
    const std::size_t n = g.node_count();
    ClusteringResult res;
    res.triangles_at.assign(n, 0);

    // Each triangle u < v < w found once at edge (u,v) via neighbors > v.
    g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        auto iu = std::lower_bound(nu.begin(), nu.end(), v + 1);
        auto iv = std::lower_bound(nv.begin(), nv.end(), v + 1);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) {
                ++iu;
            } else if (*iv < *iu) {
                ++iv;
            } else {
                ++res.triangles;
                ++res.triangles_at[u];
                ++res.triangles_at[v];
                ++res.triangles_at[*iu];
                ++iu, ++iv;
            }
        }
    });

    res.local.assign(n, 0.0);
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> by_k;
    double local_sum = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t k = g.degree(i);
        res.connected_triples += static_cast<std::uint64_t>(k) * (k - 1) / 2;
        if (k >= 2) {
            res.local[i] = static_cast<double>(res.triangles_at[i]) /
                           (static_cast<double>(k) * (k - 1) / 2.0);
        }
        auto& slot = by_k[k];
        slot.first += res.local[i];
        ++slot.second;
        local_sum += res.local[i];
    }
    for (const auto& [k, slot] : by_k) res.c_of_k[k] = slot.first / static_cast<double>(slot.second);
    res.mean_local = local_sum / static_cast<double>(n);
    res.global = res.connected_triples == 0
                     ? 0.0
                     : 3.0 * static_cast<double>(res.triangles) /
                           static_cast<double>(res.connected_triples);
    return res;
}

std::vector<std::pair<std::uint32_t, double>> rich_club(const Graph& g) {
    if (g.node_count() < 2) fail(ErrorKind::invalid_argument, "rich_club: need n >= 2");
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return g.id_of(a) < g.id_of(b);  // ascending id breaks degree ties
    });

    std::vector<char> in_club(n, 0);
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(n - 1);
    std::uint64_t edges_within = 0;
    for (std::uint32_t rho = 1; rho <= n; ++rho) {
        const std::uint32_t v = order[rho - 1];
        for (std::uint32_t w : g.neighbors(v)) edges_within += in_club[w];
        in_club[v] = 1;
        if (rho >= 2) {
            const double possible = static_cast<double>(rho) * (rho - 1) / 2.0;
            out.emplace_back(rho, static_cast<double>(edges_within) / possible);
        }
    }
    return out;
}

CorenessResult coreness(const Graph& g) {
    if (g.node_count() == 0) fail(ErrorKind::invalid_argument, "coreness: empty graph");
    const std::size_t n = g.node_count();

    // Peeling core numbers (Batagelj-Zaversnik bucket algorithm).
    std::vector<std::uint32_t> deg(n), pos(n), order(n);
    std::uint32_t max_deg = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        deg[i] = g.degree(i);
        max_deg = std::max(max_deg, deg[i]);
    }
    std::vector<std::uint32_t> bucket(max_deg + 2, 0);
    for (std::uint32_t i = 0; i < n; ++i) ++bucket[deg[i]];
    std::uint32_t start = 0;
    for (std::uint32_t d = 0; d <= max_deg; ++d) {
        const std::uint32_t cnt = bucket[d];
        bucket[d] = start;
        start += cnt;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        pos[i] = bucket[deg[i]]++;
        order[pos[i]] = i;
    }
    for (std::uint32_t d = max_deg; d > 0; --d) bucket[d] = bucket[d - 1];
    bucket[0] = 0;

    std::vector<std::uint32_t> core_num(deg);
    for (std::uint32_t s = 0; s < n; ++s) {
        const std::uint32_t v = order[s];
        for (std::uint32_t w : g.neighbors(v)) {
            if (core_num[w] > core_num[v]) {
                // Move w to the front of its bucket, then shrink its degree.
                const std::uint32_t dw = core_num[w];
                const std::uint32_t pw = pos[w];
                const std::uint32_t px = bucket[dw];
                const std::uint32_t x = order[px];
                if (w != x) {
                    std::swap(order[pw], order[px]);
                    pos[w] = px;
                    pos[x] = pw;
                }
                ++bucket[dw];
                --core_num[w];
            }
        }
    }

    CorenessResult res;
    res.kappa.resize(n);
    double sum = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        res.kappa[i] = static_cast<int>(core_num[i]) - 1;
        sum += res.kappa[i];
    }
    res.mean = sum / static_cast<double>(n);
    res.kappa_max = *std::max_element(res.kappa.begin(), res.kappa.end());
    res.kappa_min = *std::min_element(res.kappa.begin(), res.kappa.end());

    std::uint32_t core_min_deg = UINT32_MAX, fringe_max_deg = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (res.kappa[i] == res.kappa_max) {
            res.core.push_back(g.id_of(i));
            core_min_deg = std::min(core_min_deg, g.degree(i));
        }
        if (res.kappa[i] == res.kappa_min) {
            res.fringe.push_back(g.id_of(i));
            fringe_max_deg = std::max(fringe_max_deg, g.degree(i));
        }
    }
    res.core_ratio = static_cast<double>(res.core.size()) / static_cast<double>(n);
    res.fringe_ratio = static_cast<double>(res.fringe.size()) / static_cast<double>(n);
    res.min_degree_in_core = core_min_deg == UINT32_MAX ? 0 : core_min_deg;
    res.max_degree_in_fringe = fringe_max_deg;
    return res;
}

std::map<std::uint32_t, double> coreness_by_degree(const Graph& g) {
    if (g.node_count() == 0) return {};
    const auto res = coreness(g);
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        auto& slot = acc[g.degree(i)];
        slot.first += res.kappa[i];
        ++slot.second;
    }
    std::map<std::uint32_t, double> out;
    for (const auto& [k, slot] : acc) out[k] = slot.first / static_cast<double>(slot.second);
    return out;
}

}  // namespace topo
