/* topo: AS-level Internet topology analysis toolkit.
 *
 * C API of the shared library. Graphs are opaque handles; every function
 * returns a status code and writes results through out parameters. Strings
 * returned through char** are heap-allocated; release them with
 * topo_string_free. A human-readable message for the most recent failure
 * on the calling thread is available from topo_last_error.
 */
#ifndef TOPO_TOPO_H
#define TOPO_TOPO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct topo_graph topo_graph;

typedef enum topo_status {
    TOPO_OK = 0,
    TOPO_ERR_INVALID_ARGUMENT = 1,
    TOPO_ERR_DOMAIN = 2,
    TOPO_ERR_PARSE = 3,
    TOPO_ERR_IO = 4,
    TOPO_ERR_INTERNAL = 5
} topo_status;

const char* topo_status_message(topo_status status);
const char* topo_last_error(void); /* thread-local; empty when no failure yet */
const char* topo_version(void);

void topo_string_free(char* s);
void topo_graph_free(topo_graph* g);

/* ---- construction and serialization ------------------------------------ */

/* Simple graph from `count` id pairs; self-loops dropped, duplicates
 * collapsed. */
topo_status topo_graph_from_edges(const uint32_t* u, const uint32_t* v, size_t count,
                                  topo_graph** out);

/* Canonical edge-list file: "u<TAB>v" per line, u < v, sorted, '#' headers. */
topo_status topo_graph_load(const char* path, topo_graph** out);
topo_status topo_graph_save(const topo_graph* g, const char* path);

uint64_t topo_graph_node_count(const topo_graph* g);
uint64_t topo_graph_edge_count(const topo_graph* g);
int topo_graph_equal(const topo_graph* a, const topo_graph* b);

/* ---- ingestion ---------------------------------------------------------- */

typedef struct topo_filter_policy {
    int drop_private;
    uint32_t private_lo;
    uint32_t private_hi;
    int drop_ambiguous;
    int drop_indirect;
    const char* direct_token; /* NULL keeps the default "d"/"direct" pair */
} topo_filter_policy;

void topo_filter_policy_defaults(topo_filter_policy* policy);

/* Two/three-column edge lists with the policy's filtering rules applied.
 * rejects_tsv (optional) receives a "reason<TAB>count" report. */
topo_status topo_parse_edge_list_file(const char* path, const topo_filter_policy* policy,
                                      topo_graph** out, char** rejects_tsv);

/* RPSL dump (aut-num / import / export subset). */
topo_status topo_parse_rpsl_file(const char* path, const topo_filter_policy* policy,
                                 topo_graph** out, char** rejects_tsv);

/* Node and edge set union of `count` graphs. */
topo_status topo_merge(const topo_graph* const* graphs, size_t count, topo_graph** out);

topo_status topo_overlap_tsv(const topo_graph* a, const topo_graph* b, const char* label_a,
                             const char* label_b, char** out_tsv);

/* ---- metrics ------------------------------------------------------------ */

typedef struct topo_summary_options {
    double r2_threshold;     /* power-law rows dashed below this fit quality */
    uint64_t dense_threshold; /* dense eigensolver at or below this size */
    uint32_t spectrum_top_k;
    uint64_t rng_seed;
    const char* fit_ranges; /* "metric=lo:hi,..." for pk,knn,ck,rc,kappa,dk,bk */
    int log_bin_series;     /* emit per-degree series in logarithmic bins */
} topo_summary_options;

void topo_summary_options_defaults(topo_summary_options* opts);

/* Summary-statistics table as "row<TAB>value" TSV ('-' marks absent). */
topo_status topo_summary_tsv(const topo_graph* g, const topo_summary_options* opts,
                             const char* label, char** out_tsv);

/* One "<label>.<metric>.tsv" per metric series under out_dir. */
topo_status topo_emit_plots(const topo_graph* g, const char* label, const char* out_dir,
                            const topo_summary_options* opts);

/* Scalar getters used by bindings and tests. */
topo_status topo_avg_degree(const topo_graph* g, double* out);
topo_status topo_assortativity(const topo_graph* g, double* out); /* DOMAIN when undefined */
topo_status topo_clustering(const topo_graph* g, double* mean_local, double* global_coeff);
topo_status topo_coreness_max(const topo_graph* g, int* out);

/* ---- dK models ---------------------------------------------------------- */

typedef struct topo_model_spec {
    int level;          /* 0, 1 or 2 */
    uint64_t rng_seed;
    double swap_factor; /* accepted swaps per edge (1K/2K chains) */
} topo_model_spec;

/* dK-random counterpart of `seed`. `warning` (optional) receives a message
 * when the swap chain stops short of its target. */
topo_status topo_generate(const topo_graph* seed, const topo_model_spec* spec, topo_graph** out,
                          char** warning);

/* Observed-vs-model comparison data files (JDD ratio grid, clustering vs
 * randomness series, ensemble statistics). models is e.g. "0k,1k,2k". */
topo_status topo_model_compare(const topo_graph* g, const char* label, const char* models,
                               uint32_t samples, uint64_t rng_seed, double swap_factor,
                               const char* out_dir);

/* Overlap report, only-in-A degree data and (optionally) summaries of the
 * common-node induced subgraphs, written under out_dir. */
topo_status topo_compare(const topo_graph* a, const topo_graph* b, const char* label_a,
                         const char* label_b, int induced, const topo_summary_options* opts,
                         const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* TOPO_TOPO_H */
