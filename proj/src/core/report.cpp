#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/text.hpp"

namespace topo {

namespace {

FitRange fit_range_for(const SummaryOptions& opts, const std::string& key) {
    auto it = opts.fit_ranges.find(key);
    if (it != opts.fit_ranges.end()) return it->second;
    if (key == "kappa") return FitRange{0.0, 100.0};
    if (key == "rc") return FitRange{0.1, std::numeric_limits<double>::infinity()};
    return FitRange{};
}

std::optional<PowerLawFit> try_fit(const std::vector<std::pair<double, double>>& series,
                                   FitRange range) {
    try {
        return fit_power_law(series, range);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<std::pair<double, double>> to_series(const std::map<std::uint32_t, double>& m) {
    std::vector<std::pair<double, double>> out;
    out.reserve(m.size());
    for (const auto& [k, v] : m) out.emplace_back(static_cast<double>(k), v);
    return out;
}

}  // namespace

std::optional<double> SummaryStatistics::value(const std::string& name) const {
    for (const auto& row : rows) {
        if (row.name == name) return row.value;
    }
    return std::nullopt;
}

std::string SummaryStatistics::to_tsv(const std::string& label) const {
    std::ostringstream out;
    out << "# summary of " << label << '\n';
    for (const auto& row : rows) {
        if (!row.value && !row.note.empty()) out << "# " << row.name << ": " << row.note << '\n';
    }
    for (const auto& row : rows) {
        out << row.name << '\t' << (row.value ? format_g9(*row.value) : "-") << '\n';
    }
    return out.str();
}

SummaryStatistics summary(const Graph& g, const SummaryOptions& opts) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "summary: graph has no edges");
    SummaryStatistics out;
    auto put = [&](const std::string& name, std::optional<double> v, std::string note = "") {
        out.rows.push_back({name, v, std::move(note)});
    };
    // Exponent rows: value by the summary table's sign convention (gamma
    // positive for clean fits of the expected direction), absent when the
    // fit fails or is poor.
    auto put_exponent = [&](const std::string& name, const std::optional<PowerLawFit>& fit,
                            double sign) {
        if (!fit) {
            put(name, std::nullopt, "fit unavailable (too few usable points)");
        } else if (fit->r_squared < opts.r2_threshold) {
            put(name, std::nullopt,
                "fit rejected (r^2 = " + format_g9(fit->r_squared) + " below threshold)");
        } else {
            put(name, sign * fit->slope);
        }
        return fit && fit->r_squared >= opts.r2_threshold;
    };

    const auto stats = basic_stats(g);
    put("Number of nodes", static_cast<double>(stats.n));
    put("Number of edges", static_cast<double>(stats.m));
    put("Avg node degree", stats.avg_degree);

    const auto dd = degree_distribution(g);
    put("Max node degree", static_cast<double>(dd.k_max));
    std::vector<std::pair<double, double>> pk;
    for (const auto& [k, cnt] : dd.counts) {
        if (k > 0) pk.emplace_back(k, static_cast<double>(cnt) / static_cast<double>(dd.n));
    }
    const auto pk_fit = try_fit(pk, fit_range_for(opts, "pk"));
    const bool pk_ok = pk_fit && pk_fit->r_squared >= opts.r2_threshold && -pk_fit->slope > 1.0;
    if (pk_ok) {
        put("Power-law max degree", power_law_max_degree(stats.n, -pk_fit->slope));
        put("Exponent of P(k)", -pk_fit->slope);
    } else {
        const std::string why = "degree distribution not power-law by fit criterion";
        put("Power-law max degree", std::nullopt, why);
        put("Exponent of P(k)", std::nullopt, why);
    }

    const auto knn = avg_neighbor_degree(g);
    double knn_mean = 0.0;
    std::uint64_t knn_nodes = 0;
    for (const auto& [k, v] : knn) {
        const auto cnt = dd.counts.at(k);
        knn_mean += v * static_cast<double>(cnt);
        knn_nodes += cnt;
    }
    knn_mean /= static_cast<double>(knn_nodes);
    put("Avg neighbor degree", knn_mean / static_cast<double>(stats.n - 1));
    put_exponent("Exponent of k_nn(k)", try_fit(to_series(knn), fit_range_for(opts, "knn")), -1.0);

    const auto r = assortativity(g);
    put("Assortative coefficient", r,
        r ? "" : "undefined: endpoint degrees have zero variance (regular graph)");

    const auto cl = clustering(g);
    put("Mean clustering", cl.mean_local);
    put("Clustering coefficient", cl.global);
    put_exponent("Exponent of C(k)", try_fit(to_series(cl.c_of_k), fit_range_for(opts, "ck")), -1.0);

    {
        const auto rc = rich_club(g);
        std::vector<std::pair<double, double>> series;
        series.reserve(rc.size());
        for (const auto& [rho, phi] : rc) {
            series.emplace_back(static_cast<double>(rho) / static_cast<double>(stats.n), phi);
        }
        put_exponent("Exponent of phi(rho/n)", try_fit(series, fit_range_for(opts, "rc")), -1.0);
    }

    const auto cores = coreness(g);
    put("Avg node coreness", cores.mean);
    put("Max node coreness", static_cast<double>(cores.kappa_max));
    put("Core size ratio", cores.core_ratio);
    put("Min degree in core", static_cast<double>(cores.min_degree_in_core));
    put("Fringe size ratio", cores.fringe_ratio);
    put("Max degree in fringe", static_cast<double>(cores.max_degree_in_fringe));
    put_exponent("Exponent of kappa(k)", try_fit(to_series(coreness_by_degree(g)), fit_range_for(opts, "kappa")),
                 1.0);

    // The remaining blocks are heavy; a failure in one leaves its rows
    // absent (with the reason) instead of losing the whole table.
    try {
        const auto paths = path_stats(g);
        put("Avg distance", paths.mean_distance);
        put("Std deviation of distance", paths.sigma);
        put_exponent("Exponent of d(k)", try_fit(to_series(paths.d_of_k), fit_range_for(opts, "dk")),
                     -1.0);
        put("Graph radius", static_cast<double>(paths.radius));
        put("Avg eccentricity", paths.mean_ecc);
        put("Graph diameter", static_cast<double>(paths.diameter));
        put("Center size ratio", paths.center_ratio);
        put("Min degree in center", static_cast<double>(paths.min_degree_in_center));
        put("Periphery size ratio", paths.periphery_ratio);
        put("Max degree in periphery", static_cast<double>(paths.max_degree_in_periphery));
    } catch (const Error& e) {
        for (const char* name : {"Avg distance", "Std deviation of distance", "Exponent of d(k)",
                                 "Graph radius", "Avg eccentricity", "Graph diameter",
                                 "Center size ratio", "Min degree in center", "Periphery size ratio",
                                 "Max degree in periphery"}) {
            put(name, std::nullopt, e.what());
        }
    }

    try {
        const auto bw = betweenness(g);
        put("Avg node betweenness",
            bw.node_raw_sum / static_cast<double>(bw.component_n) / bw.normalization);
        const auto by_deg = betweenness_by_degree(bw, g);
        put_exponent("Exponent of B(k)", try_fit(to_series(by_deg.b_of_k), fit_range_for(opts, "bk")),
                     1.0);
        put("Avg edge betweeness",
            bw.edge_raw.empty()
                ? 0.0
                : bw.edge_raw_sum / static_cast<double>(bw.edge_raw.size()) / bw.normalization);
    } catch (const Error& e) {
        for (const char* name : {"Avg node betweenness", "Exponent of B(k)", "Avg edge betweeness"}) {
            put(name, std::nullopt, e.what());
        }
    }

    const char* const eig_names[3] = {"Largest eigenvalue", "Second largest eigenvalue",
                                      "Third largest eigenvalue"};
    try {
        SpectrumOptions sopts;
        sopts.dense_threshold = opts.dense_threshold;
        sopts.rng_seed = opts.rng_seed;
        const auto spec = spectrum(g, opts.spectrum_top_k, sopts);
        for (std::size_t i = 0; i < 3; ++i) {
            if (i < spec.eigenvalues.size()) {
                put(eig_names[i], spec.eigenvalues[i]);
            } else {
                put(eig_names[i], std::nullopt, "graph too small");
            }
        }
    } catch (const Error& e) {
        for (const char* name : eig_names) put(name, std::nullopt, e.what());
    }
    return out;
}

std::string PlotSeries::to_tsv() const {
    std::ostringstream out;
    out << "# graph: " << graph_label << '\n';
    out << "# metric: " << metric << '\n';
    for (const auto& line : extra_header) out << "# " << line << '\n';
    if (fit) {
        out << "# fit: slope=" << format_g9(fit->slope) << " intercept=" << format_g9(fit->intercept)
            << " r2=" << format_g9(fit->r_squared) << " range=[" << format_g9(fit->x_lo) << ","
            << format_g9(fit->x_hi) << "] points=" << fit->points_used << '\n';
    }
    for (const auto& row : rows) {
        if (arity == 3) {
            out << format_g9(row[0]) << '\t' << format_g9(row[1]) << '\t' << format_value(row[2]);
        } else {
            out << format_g9(row[0]) << '\t' << format_value(row[1]);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path);
    if (!out) fail(ErrorKind::io, "cannot open for writing: " + path.string());
    out << content;
    if (!out.good()) fail(ErrorKind::io, "write failed: " + path.string());
}

PlotSeries make_series(const std::string& label, const std::string& metric,
                       const std::vector<std::pair<double, double>>& points,
                       std::optional<PowerLawFit> fit = std::nullopt) {
    PlotSeries s;
    s.metric = metric;
    s.graph_label = label;
    s.fit = std::move(fit);
    s.rows.reserve(points.size());
    for (const auto& [x, y] : points) s.rows.push_back({x, y, 0.0});
    return s;
}

int log_bin_of(std::uint32_t k, int bins_per_decade) {
    return static_cast<int>(std::lround(bins_per_decade * std::log10(static_cast<double>(k))));
}

// Mean-in-bin aggregation with geometric-mean bin centers (x > 0 only).
std::vector<std::pair<double, double>> log_binned(
    const std::vector<std::pair<double, double>>& points, int bins_per_decade = 10) {
    std::map<int, std::array<double, 3>> bins;  // bin -> (sum log x, sum y, count)
    for (const auto& [x, y] : points) {
        if (x <= 0.0) continue;
        auto& b = bins[static_cast<int>(std::lround(bins_per_decade * std::log10(x)))];
        b[0] += std::log10(x);
        b[1] += y;
        b[2] += 1.0;
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(bins.size());
    for (const auto& [bin, b] : bins) {
        (void)bin;
        out.emplace_back(std::pow(10.0, b[0] / b[2]), b[1] / b[2]);
    }
    return out;
}

// Binned Fig-13 style grid: within each (bin1, bin2) cell, observed
// probability mass over the model mass of every degree pair with support.
std::vector<std::array<double, 3>> binned_jdd_ratio(const Graph& g, int bins_per_decade = 10) {
    const auto dd = degree_distribution(g);
    const auto jdm = joint_degree_distribution(g);
    const double kbar = dd.mean;
    auto p_tilde = [&](std::uint32_t k) { return static_cast<double>(k) / kbar * dd.pdf(k); };

    struct Cell {
        double observed = 0.0, model = 0.0, log_k1 = 0.0, log_k2 = 0.0;
        std::uint64_t weight = 0;
        bool populated = false;
    };
    std::map<std::pair<int, int>, Cell> grid;
    for (const auto& [cell, cnt] : jdm.counts()) {
        const auto [k1, k2] = cell;
        auto& c = grid[{log_bin_of(k1, bins_per_decade), log_bin_of(k2, bins_per_decade)}];
        const double mass = jdm.prob_unordered(k1, k2);  // full unordered mass of the cell
        c.observed += mass;
        c.populated = true;
        c.log_k1 += static_cast<double>(cnt) * std::log10(static_cast<double>(k1));
        c.log_k2 += static_cast<double>(cnt) * std::log10(static_cast<double>(k2));
        c.weight += cnt;
    }
    // Model mass of every supported degree pair, observed or not.
    std::vector<std::uint32_t> degrees;
    degrees.reserve(dd.counts.size());
    for (const auto& [k, cnt] : dd.counts) {
        (void)cnt;
        if (k > 0) degrees.push_back(k);
    }
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        for (std::size_t j = i; j < degrees.size(); ++j) {
            const std::uint32_t k1 = degrees[i], k2 = degrees[j];
            auto it = grid.find({log_bin_of(k1, bins_per_decade), log_bin_of(k2, bins_per_decade)});
            if (it == grid.end()) continue;
            const double pm = p_tilde(k1) * p_tilde(k2);
            it->second.model += k1 == k2 ? pm : 2.0 * pm;
        }
    }
    std::vector<std::array<double, 3>> rows;
    for (const auto& [bin, c] : grid) {
        (void)bin;
        if (!c.populated || c.model <= 0.0) continue;
        const double w = static_cast<double>(c.weight);
        const double k1 = std::pow(10.0, c.log_k1 / w);
        const double k2 = std::pow(10.0, c.log_k2 / w);
        const double v = std::log10(c.observed / c.model);
        rows.push_back({k1, k2, v});
        if (std::abs(k1 - k2) > 1e-12) rows.push_back({k2, k1, v});
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

std::vector<PlotSeries> emit_plots(const Graph& g, const std::string& graph_label,
                                   const std::string& out_dir, const SummaryOptions& opts) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "emit_plots: graph has no edges");
    std::vector<PlotSeries> series;
    const auto stats = basic_stats(g);
    const auto dd = degree_distribution(g);

    // Optional binning applies to per-degree series only; fits always see
    // the unbinned points.
    auto per_k = [&](const std::vector<std::pair<double, double>>& pts) {
        return opts.log_bin_series ? log_binned(pts) : pts;
    };

    {
        std::vector<std::pair<double, double>> pdf, ccdf;
        for (const auto& [k, cnt] : dd.counts) {
            pdf.emplace_back(k, static_cast<double>(cnt) / static_cast<double>(dd.n));
        }
        for (const auto& [k, v] : dd.ccdf()) ccdf.emplace_back(k, v);
        std::vector<std::pair<double, double>> pk_pos(pdf);
        std::erase_if(pk_pos, [](const auto& p) { return p.first <= 0.0; });
        series.push_back(make_series(graph_label, "pk_pdf", per_k(pdf),
                                     try_fit(pk_pos, fit_range_for(opts, "pk"))));
        series.push_back(make_series(graph_label, "pk_ccdf", per_k(ccdf)));
    }
    {
        std::vector<std::pair<double, double>> knn_norm;
        for (const auto& [k, v] : avg_neighbor_degree(g)) {
            knn_norm.emplace_back(k, v / static_cast<double>(stats.n - 1));
        }
        series.push_back(make_series(graph_label, "knn", per_k(knn_norm),
                                     try_fit(knn_norm, fit_range_for(opts, "knn"))));
    }
    {
        const auto cl = clustering(g);
        auto pts = to_series(cl.c_of_k);
        auto s = make_series(graph_label, "ck", per_k(pts), try_fit(pts, fit_range_for(opts, "ck")));
        s.extra_header.push_back("mean_local=" + format_g9(cl.mean_local) +
                                 " clustering_coefficient=" + format_g9(cl.global));
        series.push_back(std::move(s));
    }
    {
        std::vector<std::pair<double, double>> rc;
        for (const auto& [rho, phi] : rich_club(g)) {
            rc.emplace_back(static_cast<double>(rho) / static_cast<double>(stats.n), phi);
        }
        series.push_back(
            make_series(graph_label, "rich_club", rc, try_fit(rc, fit_range_for(opts, "rc"))));
    }
    {
        auto pts = to_series(coreness_by_degree(g));
        series.push_back(make_series(graph_label, "kappa_k", per_k(pts),
                                     try_fit(pts, fit_range_for(opts, "kappa"))));
    }

    const auto paths = path_stats(g);
    {
        std::uint64_t pairs = 0;
        for (auto c : paths.distance_histogram) pairs += c;
        std::vector<std::pair<double, double>> dx;
        for (std::uint32_t d = 1; d < paths.distance_histogram.size(); ++d) {
            dx.emplace_back(d, static_cast<double>(paths.distance_histogram[d]) /
                                   static_cast<double>(pairs));
        }
        auto s = make_series(graph_label, "dx", dx);
        s.extra_header.push_back("mean=" + format_g9(paths.mean_distance) +
                                 " sigma=" + format_g9(paths.sigma) +
                                 " coverage=" + format_g9(paths.coverage));
        series.push_back(std::move(s));
        series.push_back(make_series(graph_label, "dk", per_k(to_series(paths.d_of_k)),
                                     try_fit(to_series(paths.d_of_k), fit_range_for(opts, "dk"))));

        std::vector<std::pair<double, double>> ex;
        for (std::uint32_t e = 0; e < paths.ecc_histogram.size(); ++e) {
            if (paths.ecc_histogram[e] == 0 && e < paths.radius) continue;
            ex.emplace_back(e, static_cast<double>(paths.ecc_histogram[e]) /
                                   static_cast<double>(paths.component_n));
        }
        auto se = make_series(graph_label, "ecc_x", ex);
        se.extra_header.push_back("radius=" + std::to_string(paths.radius) +
                                  " diameter=" + std::to_string(paths.diameter));
        series.push_back(std::move(se));
        series.push_back(make_series(graph_label, "ecc_k", per_k(to_series(paths.ecc_of_k))));
    }
    {
        const auto bw = betweenness(g);
        const auto by_deg = betweenness_by_degree(bw, g);
        series.push_back(make_series(graph_label, "bk", per_k(to_series(by_deg.b_of_k)),
                                     try_fit(to_series(by_deg.b_of_k), fit_range_for(opts, "bk"))));
        PlotSeries grid;
        grid.metric = "bkk";
        grid.graph_label = graph_label;
        grid.arity = 3;
        grid.extra_header.push_back("columns: k1 k2 log10(mean normalized edge betweenness)");
        for (const auto& [k1, k2, v] : by_deg.b_of_kk) grid.rows.push_back({k1, k2, std::log10(v)});
        series.push_back(std::move(grid));
    }
    {
        PlotSeries grid;
        grid.metric = "jdd_ratio";
        grid.graph_label = graph_label;
        grid.arity = 3;
        grid.extra_header.push_back(
            "columns: k1 k2 log10(P(k1,k2)/P1K(k1,k2)), log-binned, model mass over full support");
        grid.rows = binned_jdd_ratio(g);
        series.push_back(std::move(grid));
    }
    {
        SpectrumOptions sopts;
        sopts.dense_threshold = opts.dense_threshold;
        sopts.rng_seed = opts.rng_seed;
        // Dense solves carry the whole spectrum and emit the top 10%; the
        // iterative path emits the top_k it was asked for.
        const auto spec = spectrum(g, opts.spectrum_top_k, sopts);
        PlotSeries s;
        s.metric = "spectrum";
        s.graph_label = graph_label;
        s.extra_header.push_back("columns: rank/total |lambda|");
        s.extra_header.push_back(std::string("method: ") +
                                 (spec.method == SpectrumMethod::dense ? "dense" : "iterative"));
        const std::size_t total = spec.eigenvalues.size();
        const std::size_t keep = spec.method == SpectrumMethod::dense
                                     ? std::max<std::size_t>(1, total / 10)
                                     : total;
        for (std::size_t i = 0; i < keep; ++i) {
            s.rows.push_back({static_cast<double>(i + 1) / static_cast<double>(total),
                              std::abs(spec.eigenvalues[i]), 0.0});
        }
        series.push_back(std::move(s));
    }

    for (const auto& s : series) write_file(out_dir, s.file_name(), s.to_tsv());
    return series;
}

CompareReport compare(const Graph& a, const Graph& b, const std::string& label_a,
                      const std::string& label_b, const CompareOptions& opts,
                      const std::string& out_dir) {
    CompareReport rep;
    rep.overlap = overlap_stats(a, b);

    std::map<std::uint32_t, std::uint64_t> only_a_counts;
    std::uint64_t only_a_n = 0, only_a_deg_sum = 0;
    for (std::uint32_t i = 0; i < a.node_count(); ++i) {
        if (!b.index_of(a.id_of(i))) {
            ++only_a_counts[a.degree(i)];
            ++only_a_n;
            only_a_deg_sum += a.degree(i);
        }
    }
    for (const auto& [k, cnt] : only_a_counts) {
        rep.only_a_degree_pdf[k] = static_cast<double>(cnt) / static_cast<double>(only_a_n);
    }
    rep.avg_degree_only_a =
        only_a_n == 0 ? 0.0 : static_cast<double>(only_a_deg_sum) / static_cast<double>(only_a_n);

    if (opts.induced) {
        std::vector<NodeId> common;
        for (std::uint32_t i = 0; i < a.node_count(); ++i) {
            if (b.index_of(a.id_of(i))) common.push_back(a.id_of(i));
        }
        const Graph ia = induced_subgraph(a, common);
        const Graph ib = induced_subgraph(b, common);
        if (ia.edge_count() > 0) rep.induced_summary_a = summary(ia, opts.summary);
        if (ib.edge_count() > 0) rep.induced_summary_b = summary(ib, opts.summary);
    }

    if (!out_dir.empty()) {
        const std::string stem = label_a + "_vs_" + label_b;
        write_file(out_dir, stem + ".overlap.tsv", rep.overlap.to_tsv(label_a, label_b));
        std::ostringstream pk;
        pk << "# degree distribution within " << label_a << " of nodes absent from " << label_b
           << '\n';
        pk << "# avg_degree=" << format_g9(rep.avg_degree_only_a) << '\n';
        for (const auto& [k, p] : rep.only_a_degree_pdf) pk << k << '\t' << format_value(p) << '\n';
        write_file(out_dir, stem + ".only_a_pk.tsv", pk.str());
        if (rep.induced_summary_a) {
            write_file(out_dir, label_a + ".common_summary.tsv",
                       rep.induced_summary_a->to_tsv(label_a + " (common nodes)"));
        }
        if (rep.induced_summary_b) {
            write_file(out_dir, label_b + ".common_summary.tsv",
                       rep.induced_summary_b->to_tsv(label_b + " (common nodes)"));
        }
    }
    return rep;
}

void model_compare(const Graph& g, const std::string& graph_label, const std::string& out_dir,
                   const ModelCompareOptions& opts) {
    if (g.edge_count() == 0) fail(ErrorKind::invalid_argument, "model_compare: graph has no edges");
    const std::string rng_line = std::string("rng: ") + Rng::kAlgorithm +
                                 " seed=" + std::to_string(opts.rng_seed) +
                                 " swap_factor=" + format_g9(opts.swap_factor) +
                                 " samples=" + std::to_string(opts.samples);
    const bool want_0k = std::count(opts.models.begin(), opts.models.end(), DkLevel::zero_k) > 0;
    const bool want_1k = std::count(opts.models.begin(), opts.models.end(), DkLevel::one_k) > 0;
    const bool want_2k = std::count(opts.models.begin(), opts.models.end(), DkLevel::two_k) > 0;

    {
        PlotSeries grid;
        grid.metric = "jdd_ratio";
        grid.graph_label = graph_label;
        grid.arity = 3;
        grid.extra_header.push_back(
            "columns: k1 k2 log10(P(k1,k2)/P1K(k1,k2)), log-binned, model mass over full support");
        grid.rows = binned_jdd_ratio(g);
        write_file(out_dir, grid.file_name(), grid.to_tsv());
    }

    const auto analytic = analytical_predictions(g);
    std::ostringstream consts;
    consts << "# model constants for " << graph_label << '\n';
    consts << "# " << rng_line << '\n';
    consts << "knn_0k\t" << format_g9(analytic.knn_0k) << '\n';
    consts << "knn_1k\t" << format_g9(analytic.knn_1k) << '\n';
    consts << "c_0k\t" << format_g9(analytic.c_0k) << '\n';
    consts << "c_1k\t" << format_g9(analytic.c_1k) << '\n';

    if (want_2k) {
        DkModelSpec spec;
        spec.level = DkLevel::two_k;
        spec.rng_seed = opts.rng_seed;
        spec.swap_factor = opts.swap_factor;
        spec.samples = opts.samples;
        const auto cvr = clustering_vs_randomness(g, spec);
        auto observed = make_series(graph_label, "ck_observed", to_series(cvr.observed_c_of_k));
        observed.extra_header.push_back("mean_local=" + format_g9(cvr.observed_mean));
        write_file(out_dir, observed.file_name(), observed.to_tsv());
        auto mc = make_series(graph_label, "c2k_k", to_series(cvr.c2k_of_k));
        mc.extra_header.push_back(rng_line);
        mc.extra_header.push_back("monte carlo over 2K ensemble; mean_local=" +
                                  format_g9(cvr.c2k_mean));
        write_file(out_dir, mc.file_name(), mc.to_tsv());
        consts << "cbar_observed\t" << format_g9(cvr.observed_mean) << '\n';
        consts << "cbar_2k\t" << format_g9(cvr.c2k_mean) << '\n';
        consts << "ratio_cbar_2k_over_observed\t" << format_g9(cvr.ratio_2k) << '\n';
        consts << "ratio_c0k_over_c1k\t" << format_g9(cvr.ratio_0k_1k) << '\n';
    }

    std::ostringstream ens;
    ens << "# ensemble statistics for " << graph_label << '\n';
    ens << "# " << rng_line << '\n';
    ens << "# columns: model metric samples_used mean stddev missing\n";
    auto run_ensemble = [&](DkLevel level, const char* name) {
        DkModelSpec spec;
        spec.level = level;
        spec.rng_seed = opts.rng_seed;
        spec.swap_factor = opts.swap_factor;
        spec.samples = opts.samples;
        const std::vector<std::pair<std::string, ScalarMetric>> metrics = {
            {"mean_knn",
             [](const Graph& s) -> std::optional<double> {
                 if (s.edge_count() == 0) return std::nullopt;
                 const auto knn = avg_neighbor_degree(s);
                 const auto dd = degree_distribution(s);
                 double sum = 0.0;
                 std::uint64_t cnt = 0;
                 for (const auto& [k, v] : knn) {
                     sum += v * static_cast<double>(dd.counts.at(k));
                     cnt += dd.counts.at(k);
                 }
                 return sum / static_cast<double>(cnt);
             }},
            {"mean_clustering",
             [](const Graph& s) -> std::optional<double> { return clustering(s).mean_local; }},
            {"clustering_coefficient",
             [](const Graph& s) -> std::optional<double> { return clustering(s).global; }},
            {"assortativity",
             [](const Graph& s) -> std::optional<double> {
                 if (s.edge_count() == 0) return std::nullopt;
                 return assortativity(s);
             }},
        };
        for (const auto& [mname, fn] : metrics) {
            const auto stat = ensemble_statistic(g, spec, mname, fn);
            ens << name << '\t' << mname << '\t' << stat.values.size() << '\t'
                << format_g9(stat.mean) << '\t' << format_g9(stat.stddev) << '\t' << stat.missing
                << '\n';
        }
    };
    if (want_0k) run_ensemble(DkLevel::zero_k, "0k");
    if (want_1k) run_ensemble(DkLevel::one_k, "1k");
    if (want_2k) run_ensemble(DkLevel::two_k, "2k");

    write_file(out_dir, graph_label + ".model_constants.tsv", consts.str());
    write_file(out_dir, graph_label + ".ensembles.tsv", ens.str());
}

}  // namespace topo
