// Command-line front end; everything goes through the C API in topo/topo.h.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topo/topo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInternalError = 2;

struct GraphDeleter {
    void operator()(topo_graph* g) const { topo_graph_free(g); }
};
using GraphPtr = std::unique_ptr<topo_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { topo_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Failures surface as exit codes: internal errors 2, everything else 1.
class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

void check(topo_status status, const std::string& context) {
    if (status == TOPO_OK) return;
    const int code = status == TOPO_ERR_INTERNAL ? kExitInternalError : kExitInputError;
    throw CliError(code, context + ": " + topo_status_message(status) + " (" + topo_last_error() + ")");
}

GraphPtr load(const std::string& path) {
    topo_graph* g = nullptr;
    check(topo_graph_load(path.c_str(), &g), "loading " + path);
    return GraphPtr(g);
}

void write_text(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError(kExitInputError, "cannot open for writing: " + path);
    out << text;
    if (!out.good()) throw CliError(kExitInputError, "write failed: " + path);
}

struct PolicyFlags {
    // Filtering is on by default, matching the library's policy defaults.
    bool drop_private = true;
    bool drop_ambiguous = true;
    bool drop_indirect = true;
    std::string private_range;
    std::string direct_token;

    void add_to(CLI::App& cmd) {
        cmd.add_flag("--drop-private,!--no-drop-private", drop_private,
                     "Drop edges touching private AS numbers (default on)");
        cmd.add_option("--private-range", private_range, "Private range as LO:HI (default 64512:65535)");
        cmd.add_flag("--drop-ambiguous,!--no-drop-ambiguous", drop_ambiguous,
                     "Drop lines with AS-set / multi-origin tokens (default on)");
        cmd.add_flag("--drop-indirect,!--no-drop-indirect", drop_indirect,
                     "Drop three-column lines not marked direct (default on)");
        cmd.add_option("--direct-token", direct_token, "Token marking a direct link (default: d or direct)");
    }

    topo_filter_policy to_policy() const {
        topo_filter_policy p;
        topo_filter_policy_defaults(&p);
        p.drop_private = drop_private;
        p.drop_ambiguous = drop_ambiguous;
        p.drop_indirect = drop_indirect;
        if (!private_range.empty()) {
            const auto colon = private_range.find(':');
            if (colon == std::string::npos)
                throw CliError(kExitInputError, "--private-range expects LO:HI");
            try {
                p.private_lo = static_cast<uint32_t>(std::stoul(private_range.substr(0, colon)));
                p.private_hi = static_cast<uint32_t>(std::stoul(private_range.substr(colon + 1)));
            } catch (const std::exception&) {
                throw CliError(kExitInputError, "--private-range bounds must be AS numbers");
            }
            if (p.private_lo > p.private_hi)
                throw CliError(kExitInputError, "--private-range is empty (LO > HI)");
        }
        if (!direct_token.empty()) p.direct_token = direct_token.c_str();
        return p;
    }
};

struct SummaryFlags {
    double r2_threshold = 0.8;
    std::uint64_t dense_threshold = 2000;
    std::uint32_t spectrum_top_k = 3;
    std::uint64_t rng_seed = 1;
    std::vector<std::string> fit_ranges;
    std::string joined_ranges;
    std::string format = "tsv";
    bool log_bin = false;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--r2-threshold", r2_threshold, "Fit quality below which exponent rows are dashed");
        cmd.add_option("--dense-threshold", dense_threshold, "Max component size for the dense eigensolver");
        cmd.add_option("--spectrum-top-k", spectrum_top_k, "Eigenvalues to compute iteratively");
        cmd.add_option("--rng-seed", rng_seed, "Seed for iterative eigensolver start vectors");
        cmd.add_option("--fit-range", fit_ranges,
                       "Override a fit range, METRIC=LO:HI (pk,knn,ck,rc,kappa,dk,bk)");
        cmd.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv"}));
        cmd.add_flag("--log-bin", log_bin, "Aggregate per-degree series into logarithmic bins");
    }

    topo_summary_options to_options() {
        topo_summary_options o;
        topo_summary_options_defaults(&o);
        o.r2_threshold = r2_threshold;
        o.dense_threshold = dense_threshold;
        o.spectrum_top_k = spectrum_top_k;
        o.rng_seed = rng_seed;
        o.log_bin_series = log_bin ? 1 : 0;
        joined_ranges.clear();
        for (const auto& r : fit_ranges) {
            if (!joined_ranges.empty()) joined_ranges += ',';
            joined_ranges += r;
        }
        if (!joined_ranges.empty()) o.fit_ranges = joined_ranges.c_str();
        return o;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"AS-level topology analysis toolkit"};
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Parse a raw source file into a canonical graph");
    std::string in_path, out_path, rejects_path, format = "edgelist";
    PolicyFlags ingest_policy;
    ingest->add_option("input", in_path, "Input file")->required();
    ingest->add_option("-o,--output", out_path, "Canonical edge list to write")->required();
    ingest->add_option("-f,--format", format, "Input format: edgelist or rpsl")
        ->check(CLI::IsMember({"edgelist", "rpsl"}));
    ingest->add_option("--rejects", rejects_path, "Write the rejection report TSV here");
    ingest_policy.add_to(*ingest);

    // merge
    auto* merge = app.add_subcommand("merge", "Union of several canonical graphs");
    std::vector<std::string> merge_inputs;
    std::string merge_out;
    merge->add_option("inputs", merge_inputs, "Graph files")->required()->expected(-1);
    merge->add_option("-o,--output", merge_out, "Merged graph file")->required();

    // overlap
    auto* overlap = app.add_subcommand("overlap", "Node/edge overlap statistics of two graphs");
    std::string ov_a, ov_b, ov_out, ov_la = "A", ov_lb = "B";
    overlap->add_option("a", ov_a, "First graph")->required();
    overlap->add_option("b", ov_b, "Second graph")->required();
    overlap->add_option("-o,--output", ov_out, "Output TSV (default stdout)");
    overlap->add_option("--label-a", ov_la, "Label for the first graph");
    overlap->add_option("--label-b", ov_lb, "Label for the second graph");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Emit every per-metric data file for a graph");
    std::string me_graph, me_dir = ".", me_label;
    SummaryFlags me_flags;
    metrics->add_option("graph", me_graph, "Graph file")->required();
    metrics->add_option("--out-dir", me_dir, "Output directory");
    metrics->add_option("--label", me_label, "Graph label used in file names");
    me_flags.add_to(*metrics);

    // summary
    auto* summary = app.add_subcommand("summary", "Summary-statistics table for a graph");
    std::string su_graph, su_out, su_label;
    SummaryFlags su_flags;
    summary->add_option("graph", su_graph, "Graph file")->required();
    summary->add_option("-o,--output", su_out, "Output TSV (default stdout)");
    summary->add_option("--label", su_label, "Graph label");
    su_flags.add_to(*summary);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a dK-random counterpart of a graph");
    std::string ge_seed_graph, ge_out, ge_model = "1k";
    std::uint64_t ge_seed = 1;
    double ge_q = 10.0;
    generate->add_option("--model", ge_model, "Model level: 0k, 1k or 2k")
        ->check(CLI::IsMember({"0k", "1k", "2k"}));
    generate->add_option("--seed-graph", ge_seed_graph, "Seed graph file")->required();
    generate->add_option("--rng-seed", ge_seed, "RNG seed");
    generate->add_option("--swap-factor", ge_q, "Accepted swaps per edge (1k/2k)")
        ->check(CLI::PositiveNumber);
    generate->add_option("-o,--output", ge_out, "Output graph file")->required();

    // model-compare
    auto* mc = app.add_subcommand("model-compare", "Observed graph vs dK-random ensembles");
    std::string mc_graph, mc_dir = ".", mc_label, mc_models = "0k,1k,2k", mc_format = "tsv";
    std::uint32_t mc_samples = 50;
    std::uint64_t mc_seed = 1;
    double mc_q = 10.0;
    mc->add_option("graph", mc_graph, "Graph file")->required();
    mc->add_option("--models", mc_models, "Comma-separated subset of 0k,1k,2k");
    mc->add_option("--samples", mc_samples, "Ensemble size")->check(CLI::PositiveNumber);
    mc->add_option("--rng-seed", mc_seed, "RNG seed");
    mc->add_option("--swap-factor", mc_q, "Accepted swaps per edge")->check(CLI::PositiveNumber);
    mc->add_option("--out-dir", mc_dir, "Output directory");
    mc->add_option("--label", mc_label, "Graph label used in file names");
    mc->add_option("--format", mc_format, "Output format")->check(CLI::IsMember({"tsv"}));

    // compare
    auto* compare = app.add_subcommand("compare", "Compare two graphs (overlap + summaries)");
    std::string cp_a, cp_b, cp_dir = ".", cp_la = "A", cp_lb = "B";
    bool cp_induced = false;
    SummaryFlags cp_flags;
    compare->add_option("a", cp_a, "First graph")->required();
    compare->add_option("b", cp_b, "Second graph")->required();
    compare->add_option("--out-dir", cp_dir, "Output directory");
    compare->add_option("--label-a", cp_la, "Label for the first graph");
    compare->add_option("--label-b", cp_lb, "Label for the second graph");
    compare->add_flag("--induced", cp_induced, "Also summarize the common-node induced subgraphs");
    cp_flags.add_to(*compare);

    CLI11_PARSE(app, argc, argv);

    if (*ingest) {
        const auto policy = ingest_policy.to_policy();
        topo_graph* g = nullptr;
        char* rejects = nullptr;
        const auto status =
            format == "rpsl"
                ? topo_parse_rpsl_file(in_path.c_str(), &policy, &g, rejects_path.empty() ? nullptr : &rejects)
                : topo_parse_edge_list_file(in_path.c_str(), &policy, &g,
                                            rejects_path.empty() ? nullptr : &rejects);
        check(status, "parsing " + in_path);
        GraphPtr graph(g);
        StringPtr rejects_owner(rejects);
        check(topo_graph_save(graph.get(), out_path.c_str()), "writing " + out_path);
        if (!rejects_path.empty()) write_text(rejects_path, rejects ? rejects : "");
        std::cerr << "ingested " << in_path << ": n=" << topo_graph_node_count(graph.get())
                  << " m=" << topo_graph_edge_count(graph.get()) << "\n";
    } else if (*merge) {
        std::vector<GraphPtr> graphs;
        std::vector<const topo_graph*> raw;
        for (const auto& path : merge_inputs) {
            graphs.push_back(load(path));
            raw.push_back(graphs.back().get());
        }
        topo_graph* merged = nullptr;
        check(topo_merge(raw.data(), raw.size(), &merged), "merging");
        GraphPtr owner(merged);
        check(topo_graph_save(merged, merge_out.c_str()), "writing " + merge_out);
    } else if (*overlap) {
        const auto a = load(ov_a), b = load(ov_b);
        char* tsv = nullptr;
        check(topo_overlap_tsv(a.get(), b.get(), ov_la.c_str(), ov_lb.c_str(), &tsv), "overlap");
        StringPtr owner(tsv);
        write_text(ov_out, tsv);
    } else if (*metrics) {
        const auto g = load(me_graph);
        const auto opts = me_flags.to_options();
        if (me_label.empty()) me_label = std::filesystem::path(me_graph).stem().string();
        check(topo_emit_plots(g.get(), me_label.c_str(), me_dir.c_str(), &opts), "emitting plots");
    } else if (*summary) {
        const auto g = load(su_graph);
        const auto opts = su_flags.to_options();
        if (su_label.empty()) su_label = std::filesystem::path(su_graph).stem().string();
        char* tsv = nullptr;
        check(topo_summary_tsv(g.get(), &opts, su_label.c_str(), &tsv), "summary");
        StringPtr owner(tsv);
        write_text(su_out, tsv);
    } else if (*generate) {
        const auto seed = load(ge_seed_graph);
        topo_model_spec spec;
        spec.level = ge_model == "0k" ? 0 : ge_model == "1k" ? 1 : 2;
        spec.rng_seed = ge_seed;
        spec.swap_factor = ge_q;
        topo_graph* out = nullptr;
        char* warning = nullptr;
        check(topo_generate(seed.get(), &spec, &out, &warning), "generating");
        GraphPtr owner(out);
        StringPtr warning_owner(warning);
        if (warning) std::cerr << "warning: " << warning << "\n";
        check(topo_graph_save(out, ge_out.c_str()), "writing " + ge_out);
    } else if (*mc) {
        const auto g = load(mc_graph);
        if (mc_label.empty()) mc_label = std::filesystem::path(mc_graph).stem().string();
        check(topo_model_compare(g.get(), mc_label.c_str(), mc_models.c_str(), mc_samples, mc_seed,
                                 mc_q, mc_dir.c_str()),
              "model-compare");
    } else if (*compare) {
        const auto a = load(cp_a), b = load(cp_b);
        const auto opts = cp_flags.to_options();
        check(topo_compare(a.get(), b.get(), cp_la.c_str(), cp_lb.c_str(), cp_induced ? 1 : 0,
                           &opts, cp_dir.c_str()),
              "compare");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
