/* orisearch — partite-clique solvers, arrangement verifiers, and instance
 * generators behind a C ABI.
 *
 * All payloads travel as JSON documents (see README for the formats). The
 * library never prints; failures come back as a status code, with a
 * human-readable message available from ors_last_error() until the next
 * call on the same thread. Returned documents and strings are owned by the
 * caller and released with ors_document_free / ors_string_free.
 */
#ifndef ORISEARCH_H
#define ORISEARCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ors_status {
  ORS_OK = 0,
  ORS_ERR_INVALID_ARGUMENT = 1, /* precondition or malformed value */
  ORS_ERR_PARSE = 2,            /* unreadable or unknown-format document */
  ORS_ERR_BUDGET = 3,           /* exact search space above the cap */
  ORS_ERR_DEGENERATE = 4,       /* geometric degeneracy (equator, parallel) */
  ORS_ERR_UNSUPPORTED = 5,      /* unknown solver/target for this input */
  ORS_ERR_INTERNAL = 6
} ors_status;

/* Opaque parsed document: an instance, witness, outcome, or table. */
typedef struct ors_document ors_document;

typedef struct ors_options {
  uint64_t budget;  /* assignment cap for exact solvers (default 10^7) */
  double tol;       /* verification tolerance (default 1e-6) */
  double q;         /* arrangement-error exponent (default 2) */
  uint64_t seed;    /* generator seed (default 0) */
  int gap_exponent; /* k of the 2^(n^k) gap weighting (default 1) */
} ors_options;

/* Fills every field with its default. */
void ors_options_init(ors_options* opts);

const char* ors_version(void);
int ors_format_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* ors_last_error(void);

ors_status ors_document_parse(const char* json_text, ors_document** out);
ors_status ors_document_to_json(const ors_document* doc, char** json_out);
/* Kind tag, e.g. "partite_graph"; owned by the document. */
const char* ors_document_kind(const ors_document* doc);
void ors_document_free(ors_document* doc);
void ors_string_free(char* text);

/* Runs the named solver:
 *   "exact"   — n-clique decision / minimum-weight clique (by input kind)
 *   "star"    — minimum-weight star approximation (weighted graphs)
 *   "m2"      — 2-SAT path (graphs with groups <= 2, or CNF with width <= 2)
 *   "partial" — maximum partial clique
 * The outcome document carries status, witness, and objective. */
ors_status ors_solve(const ors_document* instance, const char* solver,
                     const ors_options* opts, ors_document** outcome);

/* Rewrites an instance into another problem:
 *   coloring -> "partite"        cnf(w<=2) -> "partite"
 *   partite  -> "twosat"         weighted graph(m=2) -> "w2sat"
 *   cnf(w<=2) -> "wclique"       partite -> "gap" (uses opts->gap_exponent)
 *   partite  -> "lines"          cnf -> "lines"
 * The output embeds a "mapping" block for pulling witnesses back. */
ors_status ors_reduce(const ors_document* instance, const char* target,
                      const ors_options* opts, ors_document** out);

/* Builds a fresh instance. kind is one of "planted-circle",
 * "planted-partite", "metric", "random-partite", "random-cnf",
 * "orientations", "points"; params_json is an object like
 * {"n":4,"l":5,"noise":0.0,"seed":7} whose accepted keys depend on the kind.
 * Planted outputs embed their ground truth and provenance. */
ors_status ors_generate(const char* kind, const char* params_json,
                        ors_document** out);

/* Checks a witness against an instance (clique, line arrangement at
 * opts->tol, or common-line angles at opts->tol). witness may be NULL when
 * the instance document embeds a ground_truth block. *verdict becomes 1 on
 * acceptance, 0 on rejection; report_json (optional) lists violations. */
ors_status ors_verify(const ors_document* instance,
                      const ors_document* witness, const ors_options* opts,
                      int* verdict, char** report_json);

/* Runs the star-vs-exact ratio sweep and returns a CSV table with header
 * n,m,beta,seed,opt,star,ratio,bound,micros. params_json keys: n_min, n_max,
 * m_min, m_max, dim, power, seeds, seed, budget (all optional). */
ors_status ors_bench(const char* params_json, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* ORISEARCH_H */
