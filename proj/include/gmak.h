/* C interface to the reaction-network analysis library.
 *
 * All functions are thread-compatible (no shared mutable state); a single
 * gmak_network may be used from one thread at a time. Strings returned
 * through out parameters are heap-allocated and must be released with
 * gmak_string_free.
 */
#ifndef GMAK_H
#define GMAK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gmak_network gmak_network;

typedef enum {
    GMAK_OK = 0,
    GMAK_ERR_PARSE = 1,   /* input text rejected; message in errbuf */
    GMAK_ERR_INVALID = 2, /* bad argument (unknown condition, bad rates, ...) */
    GMAK_ERR_INTERNAL = 3
} gmak_status;

/* Parse the network DSL. Returns NULL on failure with a message (and
 * "line:col: " prefix for syntax errors) in errbuf. `names`/`values` rebind
 * declared parameters; pass nparams = 0 for none. Values are rationals like
 * "1/2" or "3". */
gmak_network* gmak_parse(const char* text, const char* const* names,
                         const char* const* values, size_t nparams,
                         char* errbuf, size_t errbuf_len);

void gmak_network_free(gmak_network* net);

/* Full analysis report as a JSON document (schema "gmak-report/1").
 * options_json may be NULL or an object with any of: max_omega, max_cycles,
 * max_subspace_dim, samples, seed, tol_stable. */
gmak_status gmak_analyze_json(const gmak_network* net, const char* options_json,
                              char** out_json, char* errbuf, size_t errbuf_len);

/* Run a single condition (existence, uniqueness, robust, noother,
 * prop-pmatrix, prop-s, carlson, p0plus, cycle-stability).
 * out_verdict: 0 = holds, 1 = fails, 2 = inconclusive or not applicable. */
gmak_status gmak_check_json(const gmak_network* net, const char* condition,
                            const char* options_json, int* out_verdict,
                            char** out_json, char* errbuf, size_t errbuf_len);

/* Equilibrium for concrete rates. `names` are edge rate symbols, `values`
 * positive rationals; every edge must be covered. */
gmak_status gmak_cbe_json(const gmak_network* net, const char* const* names,
                          const char* const* values, size_t nrates,
                          char** out_json, char* errbuf, size_t errbuf_len);

void gmak_string_free(char* s);

const char* gmak_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GMAK_H */
