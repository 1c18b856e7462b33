/* C interface to the saturated-graph spectral toolkit.
 *
 * Conventions:
 *   - Every fallible call returns a satspec_status; SATSPEC_OK is 0.
 *   - On failure, satspec_last_error() describes the problem. The message
 *     is thread-local and stays valid until the next failing call on the
 *     same thread.
 *   - Graph handles are opaque; release them with satspec_graph_free.
 *   - Strings returned through char** out-parameters are heap-allocated;
 *     release them with satspec_string_free.
 */
#ifndef SATSPEC_H
#define SATSPEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SATSPEC_API __attribute__((visibility("default")))

typedef enum satspec_status {
  SATSPEC_OK = 0,
  SATSPEC_ERR_INVALID_ARGUMENT = 1, /* input outside a documented domain */
  SATSPEC_ERR_PARSE = 2,            /* malformed graph6 text */
  SATSPEC_ERR_NUMERIC = 3,          /* eigensolver failed to converge */
  SATSPEC_ERR_NOMEM = 4,
  SATSPEC_ERR_INTERNAL = 5
} satspec_status;

typedef struct satspec_graph satspec_graph;

/* Library version as a static string, e.g. "0.1.0". */
SATSPEC_API const char* satspec_version(void);

/* Message of the most recent failure on the calling thread. */
SATSPEC_API const char* satspec_last_error(void);

SATSPEC_API void satspec_string_free(char* s);
SATSPEC_API void satspec_graph_free(satspec_graph* g);

/* One graph from one graph6 line (no trailing newline required). */
SATSPEC_API satspec_status satspec_graph_from_g6(const char* text,
                                                 satspec_graph** out);
SATSPEC_API satspec_status satspec_graph_to_g6(const satspec_graph* g,
                                               char** out);
/* graph6 of the canonically relabeled graph (small orders, n <= 16). */
SATSPEC_API satspec_status satspec_graph_canonical_g6(const satspec_graph* g,
                                                      char** out);

/* S_{n,r}: an r-clique joined to n-r independent vertices. */
SATSPEC_API satspec_status satspec_split_star(size_t n, size_t r,
                                              satspec_graph** out);
/* kind: "c5", "petersen", or "hoffman-singleton". */
SATSPEC_API satspec_status satspec_moore_graph(const char* kind,
                                               satspec_graph** out);

SATSPEC_API satspec_status satspec_graph_order(const satspec_graph* g,
                                               size_t* out);
SATSPEC_API satspec_status satspec_graph_edge_count(const satspec_graph* g,
                                                    size_t* out);

/* Largest adjacency eigenvalue. */
SATSPEC_API satspec_status satspec_spectral_radius(const satspec_graph* g,
                                                   double* out);

/* *out = 1 iff g is K_{r+1}-free and every missing edge would create a
 * K_{r+1}. Requires n > r >= 2. */
SATSPEC_API satspec_status satspec_is_saturated(const satspec_graph* g,
                                                size_t r, int* out);

/* Completes a K_{r+1}-free graph to a saturated one. seeded = 0 adds
 * admissible edges in lexicographic slot order; otherwise the order is
 * shuffled deterministically from seed. */
SATSPEC_API satspec_status satspec_saturate(const satspec_graph* g, size_t r,
                                            int seeded, uint64_t seed,
                                            satspec_graph** out);

/* Closed forms: rho(S_{n,k}) for 1 <= k < n, and the degree-based lower
 * bound sqrt(((n-1)^2 (r-1) + (r-1)^2 (n-r+1)) / n) for n > r >= 3. */
SATSPEC_API satspec_status satspec_rho_split_star(size_t n, size_t k,
                                                  double* out);
SATSPEC_API satspec_status satspec_kkko_lower_bound(size_t n, size_t r,
                                                    double* out);

typedef struct satspec_run_options {
  double tolerance; /* <= 0 selects the default 1e-8 */
  const char* stamp; /* report timestamp override; NULL = current UTC time */
  int allow_n8;      /* unlock the 2^28-leaf exhaustive enumeration */
} satspec_run_options;

/* The satspec_run_* calls produce a JSON report document in *json_out
 * (release with satspec_string_free):
 *   {header: {version, config, timestamp},
 *    records: [...], reports: [...],
 *    summary: {counts, min_rho, violations}}
 * Where present, *violations receives the number of failed theorem
 * verdicts (pass NULL to ignore). opt may be NULL for defaults.
 * g6_lines holds one graph6 string per line. */
SATSPEC_API satspec_status satspec_run_check(const char* g6_lines, size_t r,
                                             const satspec_run_options* opt,
                                             char** json_out,
                                             size_t* violations);
SATSPEC_API satspec_status satspec_run_spectra(const char* g6_lines,
                                               const satspec_run_options* opt,
                                               char** json_out);
SATSPEC_API satspec_status satspec_run_enumerate(size_t n, size_t r,
                                                 const satspec_run_options* opt,
                                                 char** json_out,
                                                 size_t* violations);
SATSPEC_API satspec_status satspec_run_sample(size_t n, size_t r,
                                              size_t trials, uint64_t seed,
                                              const satspec_run_options* opt,
                                              char** json_out,
                                              size_t* violations);
SATSPEC_API satspec_status satspec_run_bounds(size_t n, size_t r,
                                              const satspec_run_options* opt,
                                              char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SATSPEC_H */
