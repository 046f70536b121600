/* C interface to the amoeba library.
 *
 * Graphs are opaque handles created from graph6 text, edge lists, or
 * construction expressions. Analysis calls return machine-readable JSON in
 * malloc'd strings released with amoeba_string_free. Every call reports an
 * amoeba_status; amoeba_last_error() holds the detail message of the most
 * recent failure on the calling thread.
 */
#ifndef AMOEBA_H
#define AMOEBA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct amoeba_graph_s amoeba_graph;

typedef enum amoeba_status {
    AMOEBA_OK = 0,
    AMOEBA_ERR_INVALID = 1,  /* invalid argument or handle */
    AMOEBA_ERR_PARSE = 2,    /* malformed graph6 / edge list / expression */
    AMOEBA_ERR_CAP = 3,      /* a size cap or state budget was exceeded */
    AMOEBA_ERR_MISMATCH = 4, /* classifier and oracle disagree */
    AMOEBA_ERR_INTERNAL = 5
} amoeba_status;

const char* amoeba_version(void);
const char* amoeba_status_name(amoeba_status status);
/* Detail message of the last failing call on this thread ("" if none). */
const char* amoeba_last_error(void);

/* ---- graph lifecycle ---------------------------------------------------- */

amoeba_status amoeba_graph_from_graph6(const char* text, amoeba_graph** out);
/* 2*m endpoints, 1-based, pairwise (u1, v1, u2, v2, ...). */
amoeba_status amoeba_graph_from_edge_list(int n, const int* endpoints, int m,
                                          amoeba_graph** out);
/* "n m" header plus m lines "i j"; the plain text file format. */
amoeba_status amoeba_graph_from_edge_list_text(const char* text, amoeba_graph** out);
/* Construction expression, e.g. "union(path(4), cycle(4))". */
amoeba_status amoeba_graph_from_expression(const char* expression, amoeba_graph** out);
void amoeba_graph_free(amoeba_graph* graph);

int amoeba_graph_order(const amoeba_graph* graph);
int amoeba_graph_size(const amoeba_graph* graph);
amoeba_status amoeba_graph_to_graph6(const amoeba_graph* graph, char** out);
amoeba_status amoeba_graph_to_edge_list_text(const amoeba_graph* graph, char** out);

/* ---- analysis (JSON out) ------------------------------------------------ */

/* max_n <= 0 selects the default group cap (14 points). */
amoeba_status amoeba_classify(const amoeba_graph* graph, int max_n, int with_witnesses,
                              char** json_out);
amoeba_status amoeba_replacements(const amoeba_graph* graph, char** json_out);
amoeba_status amoeba_group_info(const amoeba_graph* graph, int max_n, char** json_out);
amoeba_status amoeba_bounds(const amoeba_graph* graph, int max_n, char** json_out);

/* Copy-reachability oracle in K_host_order (host_order <= 0 selects the
 * graph's own order) compared against the classifier; returns
 * AMOEBA_ERR_MISMATCH, with the JSON still filled in, if they disagree. */
amoeba_status amoeba_oracle(const amoeba_graph* graph, int host_order, long long budget,
                            int max_n, char** json_out);

/* Classifier-vs-oracle census over all isomorphism classes on n vertices
 * (n <= 6); JSON lines, one class per line. */
amoeba_status amoeba_sweep(int n, long long budget, char** json_lines_out);

/* Census probe: extremal global amoebas (min degree 1, maximal edge count)
 * for orders up to max_n, each compared against the staircase graph, plus
 * local/global status of the Fibonacci trees up to fib_max_index. */
amoeba_status amoeba_probe_conjecture(int max_n, int fib_max_index, char** json_out);

void amoeba_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* AMOEBA_H */
