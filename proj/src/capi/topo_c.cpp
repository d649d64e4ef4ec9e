#include "topo/topo.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "core/dk_models.hpp"
#include "core/error.hpp"
#include "core/global_metrics.hpp"
#include "core/graph.hpp"
#include "core/ingest.hpp"
#include "core/local_metrics.hpp"
#include "core/report.hpp"

using topo::Error;
using topo::ErrorKind;
using topo::Graph;

struct topo_graph {
    Graph graph;
};

namespace {

thread_local std::string t_last_error;

topo_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return TOPO_ERR_INVALID_ARGUMENT;
        case ErrorKind::domain: return TOPO_ERR_DOMAIN;
        case ErrorKind::parse: return TOPO_ERR_PARSE;
        case ErrorKind::io: return TOPO_ERR_IO;
        case ErrorKind::internal: return TOPO_ERR_INTERNAL;
    }
    return TOPO_ERR_INTERNAL;
}

template <typename F>
topo_status guarded(F&& f) {
    try {
        f();
        t_last_error.clear();
        return TOPO_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return TOPO_ERR_INTERNAL;
    }
}

topo_status invalid(const char* message) {
    t_last_error = message;
    return TOPO_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

topo::FilterPolicy to_policy(const topo_filter_policy* p) {
    topo::FilterPolicy out;
    if (!p) return out;
    out.drop_private = p->drop_private != 0;
    out.private_lo = p->private_lo;
    out.private_hi = p->private_hi;
    out.drop_ambiguous = p->drop_ambiguous != 0;
    out.drop_indirect = p->drop_indirect != 0;
    if (p->direct_token) out.direct_tokens = {p->direct_token};
    return out;
}

// "pk=1:100,kappa=1:50" -> per-metric fit ranges.
std::map<std::string, topo::FitRange> parse_fit_ranges(const char* text) {
    std::map<std::string, topo::FitRange> out;
    if (!text || !*text) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        const auto colon = item.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || colon == std::string::npos) {
            topo::fail(ErrorKind::invalid_argument, "bad fit range spec: " + item);
        }
        topo::FitRange range;
        try {
            range.lo = std::stod(item.substr(eq + 1, colon - eq - 1));
            range.hi = std::stod(item.substr(colon + 1));
        } catch (const std::exception&) {
            topo::fail(ErrorKind::invalid_argument, "bad fit range bounds: " + item);
        }
        out[item.substr(0, eq)] = range;
    }
    return out;
}

topo::SummaryOptions to_summary_options(const topo_summary_options* o) {
    topo::SummaryOptions out;
    if (!o) return out;
    out.r2_threshold = o->r2_threshold;
    out.dense_threshold = o->dense_threshold;
    out.spectrum_top_k = o->spectrum_top_k;
    out.rng_seed = o->rng_seed;
    out.fit_ranges = parse_fit_ranges(o->fit_ranges);
    out.log_bin_series = o->log_bin_series != 0;
    return out;
}

}  // namespace

extern "C" {

const char* topo_status_message(topo_status status) {
    switch (status) {
        case TOPO_OK: return "ok";
        case TOPO_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TOPO_ERR_DOMAIN: return "domain error";
        case TOPO_ERR_PARSE: return "parse error";
        case TOPO_ERR_IO: return "i/o error";
        case TOPO_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* topo_last_error(void) { return t_last_error.c_str(); }

const char* topo_version(void) { return "0.1.0"; }

void topo_string_free(char* s) { std::free(s); }

void topo_graph_free(topo_graph* g) { delete g; }

topo_status topo_graph_from_edges(const uint32_t* u, const uint32_t* v, size_t count,
                                  topo_graph** out) {
    if (!out || (count > 0 && (!u || !v))) return invalid("topo_graph_from_edges: null argument");
    return guarded([&] {
        topo::EdgeList edges;
        edges.reserve(count);
        for (size_t i = 0; i < count; ++i) edges.emplace_back(u[i], v[i]);
        *out = new topo_graph{Graph::build(std::move(edges))};
    });
}

topo_status topo_graph_load(const char* path, topo_graph** out) {
    if (!path || !out) return invalid("topo_graph_load: null argument");
    return guarded([&] { *out = new topo_graph{topo::load_graph_file(path)}; });
}

topo_status topo_graph_save(const topo_graph* g, const char* path) {
    if (!g || !path) return invalid("topo_graph_save: null argument");
    return guarded([&] { topo::save_graph_file(g->graph, path); });
}

uint64_t topo_graph_node_count(const topo_graph* g) { return g ? g->graph.node_count() : 0; }

uint64_t topo_graph_edge_count(const topo_graph* g) { return g ? g->graph.edge_count() : 0; }

int topo_graph_equal(const topo_graph* a, const topo_graph* b) {
    if (!a || !b) return 0;
    return a->graph == b->graph ? 1 : 0;
}

void topo_filter_policy_defaults(topo_filter_policy* policy) {
    if (!policy) return;
    policy->drop_private = 1;
    policy->private_lo = 64512;
    policy->private_hi = 65535;
    policy->drop_ambiguous = 1;
    policy->drop_indirect = 1;
    policy->direct_token = nullptr;
}

topo_status topo_parse_edge_list_file(const char* path, const topo_filter_policy* policy,
                                      topo_graph** out, char** rejects_tsv) {
    if (!path || !out) return invalid("topo_parse_edge_list_file: null argument");
    return guarded([&] {
        auto result = topo::parse_edge_list_file(path, to_policy(policy));
        *out = new topo_graph{std::move(result.graph)};
        if (rejects_tsv) *rejects_tsv = copy_string(result.rejects.to_tsv());
    });
}

topo_status topo_parse_rpsl_file(const char* path, const topo_filter_policy* policy,
                                 topo_graph** out, char** rejects_tsv) {
    if (!path || !out) return invalid("topo_parse_rpsl_file: null argument");
    return guarded([&] {
        auto result = topo::parse_whois_rpsl_file(path, to_policy(policy));
        *out = new topo_graph{std::move(result.graph)};
        if (rejects_tsv) *rejects_tsv = copy_string(result.rejects.to_tsv());
    });
}

topo_status topo_merge(const topo_graph* const* graphs, size_t count, topo_graph** out) {
    if (!out || (count > 0 && !graphs)) return invalid("topo_merge: null argument");
    return guarded([&] {
        std::vector<Graph> inputs;
        inputs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!graphs[i]) topo::fail(ErrorKind::invalid_argument, "topo_merge: null graph");
            inputs.push_back(graphs[i]->graph);
        }
        *out = new topo_graph{topo::merge_graphs(inputs)};
    });
}

topo_status topo_overlap_tsv(const topo_graph* a, const topo_graph* b, const char* label_a,
                             const char* label_b, char** out_tsv) {
    if (!a || !b || !out_tsv) return invalid("topo_overlap_tsv: null argument");
    return guarded([&] {
        const auto stats = topo::overlap_stats(a->graph, b->graph);
        *out_tsv = copy_string(stats.to_tsv(label_a ? label_a : "A", label_b ? label_b : "B"));
    });
}

void topo_summary_options_defaults(topo_summary_options* opts) {
    if (!opts) return;
    opts->r2_threshold = 0.8;
    opts->dense_threshold = 2000;
    opts->spectrum_top_k = 3;
    opts->rng_seed = 1;
    opts->fit_ranges = nullptr;
    opts->log_bin_series = 0;
}

topo_status topo_summary_tsv(const topo_graph* g, const topo_summary_options* opts,
                             const char* label, char** out_tsv) {
    if (!g || !out_tsv) return invalid("topo_summary_tsv: null argument");
    return guarded([&] {
        const auto stats = topo::summary(g->graph, to_summary_options(opts));
        *out_tsv = copy_string(stats.to_tsv(label ? label : "graph"));
    });
}

topo_status topo_emit_plots(const topo_graph* g, const char* label, const char* out_dir,
                            const topo_summary_options* opts) {
    if (!g || !label || !out_dir) return invalid("topo_emit_plots: null argument");
    return guarded([&] { topo::emit_plots(g->graph, label, out_dir, to_summary_options(opts)); });
}

topo_status topo_avg_degree(const topo_graph* g, double* out) {
    if (!g || !out) return invalid("topo_avg_degree: null argument");
    return guarded([&] { *out = topo::basic_stats(g->graph).avg_degree; });
}

topo_status topo_assortativity(const topo_graph* g, double* out) {
    if (!g || !out) return invalid("topo_assortativity: null argument");
    return guarded([&] {
        const auto r = topo::assortativity(g->graph);
        if (!r) topo::fail(ErrorKind::domain, "assortativity undefined: zero degree variance");
        *out = *r;
    });
}

topo_status topo_clustering(const topo_graph* g, double* mean_local, double* global_coeff) {
    if (!g || !mean_local || !global_coeff) return invalid("topo_clustering: null argument");
    return guarded([&] {
        const auto c = topo::clustering(g->graph);
        *mean_local = c.mean_local;
        *global_coeff = c.global;
    });
}

topo_status topo_coreness_max(const topo_graph* g, int* out) {
    if (!g || !out) return invalid("topo_coreness_max: null argument");
    return guarded([&] { *out = topo::coreness(g->graph).kappa_max; });
}

topo_status topo_generate(const topo_graph* seed, const topo_model_spec* spec, topo_graph** out,
                          char** warning) {
    if (!seed || !spec || !out) return invalid("topo_generate: null argument");
    if (spec->level < 0 || spec->level > 2) return invalid("topo_generate: level must be 0, 1 or 2");
    return guarded([&] {
        topo::DkModelSpec s;
        s.level = spec->level == 0   ? topo::DkLevel::zero_k
                  : spec->level == 1 ? topo::DkLevel::one_k
                                     : topo::DkLevel::two_k;
        s.rng_seed = spec->rng_seed;
        s.swap_factor = spec->swap_factor > 0 ? spec->swap_factor : 10.0;
        auto result = topo::generate(seed->graph, s);
        *out = new topo_graph{std::move(result.graph)};
        if (warning) *warning = result.warning.empty() ? nullptr : copy_string(result.warning);
    });
}

topo_status topo_model_compare(const topo_graph* g, const char* label, const char* models,
                               uint32_t samples, uint64_t rng_seed, double swap_factor,
                               const char* out_dir) {
    if (!g || !label || !out_dir) return invalid("topo_model_compare: null argument");
    return guarded([&] {
        topo::ModelCompareOptions opts;
        opts.samples = samples > 0 ? samples : 50;
        opts.rng_seed = rng_seed;
        opts.swap_factor = swap_factor > 0 ? swap_factor : 10.0;
        if (models && *models) {
            opts.models.clear();
            std::istringstream in(models);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (item == "0k" || item == "0K") {
                    opts.models.push_back(topo::DkLevel::zero_k);
                } else if (item == "1k" || item == "1K") {
                    opts.models.push_back(topo::DkLevel::one_k);
                } else if (item == "2k" || item == "2K") {
                    opts.models.push_back(topo::DkLevel::two_k);
                } else {
                    topo::fail(ErrorKind::invalid_argument, "unknown model: " + item);
                }
            }
        }
        topo::model_compare(g->graph, label, out_dir, opts);
    });
}

topo_status topo_compare(const topo_graph* a, const topo_graph* b, const char* label_a,
                         const char* label_b, int induced, const topo_summary_options* opts,
                         const char* out_dir) {
    if (!a || !b || !out_dir) return invalid("topo_compare: null argument");
    return guarded([&] {
        topo::CompareOptions copts;
        copts.induced = induced != 0;
        copts.summary = to_summary_options(opts);
        topo::compare(a->graph, b->graph, label_a ? label_a : "A", label_b ? label_b : "B", copts,
                      out_dir);
    });
}

}  // extern "C"
