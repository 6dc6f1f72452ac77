/*
 * qadc - capacity toolkit for AWGN channels observed through low-resolution
 * ADCs with polynomial analog front-ends.
 *
 * C API: opaque handles plus status codes. Strings returned through char**
 * are heap-allocated and must be released with qadc_string_free(). All calls
 * are thread-safe; the last-error message is thread-local.
 */
#ifndef QADC_H
#define QADC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qadc_status {
    QADC_OK = 0,
    QADC_ERR_INVALID_ARGUMENT = 1,
    QADC_ERR_ZERO_POLYNOMIAL = 2,
    QADC_ERR_INFEASIBLE_SPEC = 3,
    QADC_ERR_LENGTH_MISMATCH = 4,
    QADC_ERR_ODD_TRANSITION_COUNT = 5,
    QADC_ERR_UNSORTED_INPUT = 6,
    QADC_ERR_TOO_LARGE = 7,
    QADC_ERR_NO_FEASIBLE_INPUT = 8,
    QADC_ERR_NON_STOCHASTIC = 9,
    QADC_ERR_EMPTY_SEARCH_SPACE = 10,
    QADC_ERR_PARSE = 11,
    QADC_ERR_INTERNAL = 12
} qadc_status;

typedef struct qadc_quantizer qadc_quantizer;
typedef struct qadc_code qadc_code;

const char* qadc_status_name(qadc_status s);
/* Message of the most recent failure on this thread; empty string if none. */
const char* qadc_last_error(void);
void qadc_string_free(char* s);

/* ---- quantizer ---------------------------------------------------------- */

/* JSON schema: {n_q, ell, delta, polys: [[a0, a1, ...]], thresholds: [[...]]} */
qadc_status qadc_quantizer_from_json(const char* json, qadc_quantizer** out);
qadc_status qadc_quantizer_to_json(const qadc_quantizer* q, char** json_out);
void qadc_quantizer_free(qadc_quantizer* q);

qadc_status qadc_quantizer_info(const qadc_quantizer* q, int* n_q, int* ell, int* delta);
/* out_levels must hold n_q ints. */
qadc_status qadc_quantizer_quantize(const qadc_quantizer* q, double y, int* out_levels);
/* Pass out == NULL to query the root count via out_len. */
qadc_status qadc_quantizer_transition_points(const qadc_quantizer* q, double tol, double* out,
                                             int capacity, int* out_len, int* repeated_roots);
qadc_status qadc_quantizer_code(const qadc_quantizer* q, qadc_code** out);

/* ---- associated codes ---------------------------------------------------- */

/* JSON schema: array of integer arrays. */
qadc_status qadc_code_from_json(const char* json, qadc_code** out);
qadc_status qadc_code_to_json(const qadc_code* c, char** json_out);
void qadc_code_free(qadc_code* c);

qadc_status qadc_code_length(const qadc_code* c, int* num_words, int* width);
/* out must hold width ints. */
qadc_status qadc_code_word(const qadc_code* c, int index, int* out);
qadc_status qadc_code_size(const qadc_code* c, int* distinct);
/* out must hold width ints. */
qadc_status qadc_code_transition_counts(const qadc_code* c, int* out);
qadc_status qadc_code_repeated_roots(const qadc_code* c, int* flag);
/* Structural property report, JSON object keyed item1..item6. */
qadc_status qadc_code_validate(const qadc_code* c, int ell, int delta, int n_q,
                               char** report_json);

qadc_status qadc_reflected_gray(int n, qadc_code** out);
qadc_status qadc_balanced_gray(int n, qadc_code** out);
/* kappas: n_q even per-position transition counts, max-min <= 2 (ell = 2). */
qadc_status qadc_construct_code(int n_q, const int* kappas, int ell, qadc_code** out);
/* roots: strictly increasing, one per transition of the code. */
qadc_status qadc_synthesize_quantizer(const qadc_code* c, const double* roots, int n_roots,
                                      qadc_quantizer** out);
/* thresholds: strictly increasing, even length 2 n_q. */
qadc_status qadc_synthesize_quantizer_theorem1(const double* thresholds, int n,
                                               qadc_quantizer** out);
/* Exact maximum code size under the structural properties; witness optional. */
qadc_status qadc_search_max_code(int n_q, int ell, int delta, int* gamma, qadc_code** witness);

/* ---- capacity ------------------------------------------------------------ */

qadc_status qadc_gamma_bounds(int n_q, int ell, int delta, int* lower, int* upper);
qadc_status qadc_high_snr_capacity(int n_q, int ell, int delta, double* bits_lower,
                                   double* bits_upper);

/*
 * config JSON (all fields optional unless noted):
 *   {
 *     "n_q": 2, "ell": 2, "delta": 2, "h": 1.0,
 *     "snr_db": [0, 2, ...]            -- or "snr": {"start","stop","step"}
 *     "input_grid": {"step_scale": 0.1, "range_scale": 4.0},   -- x sqrt(P)
 *     "threshold_grid": {"step_scale": 0.1, "range_scale": 3.0}, -- x h sqrt(P)
 *     "ba": {"tol_bits": 1e-7, "max_iter": 10000,
 *            "coarse_tol_bits": 1e-4, "coarse_max_iter": 2000,
 *            "refine_margin_bits": 5e-3},
 *     "threads": 0,
 *     "labeling": "bounded" | "merged"
 *   }
 */

/* Best rate at one SNR point; result as CapacityResult JSON. */
qadc_status qadc_capacity_point(const char* config_json, double snr_db, char** result_json);
/* Rate table for every SNR in the config, as CSV text
 * (snr_db,rate_bits_lower,rate_bits_upper,gamma,thresholds_json). */
qadc_status qadc_rate_curve(const char* config_json, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* QADC_H */
