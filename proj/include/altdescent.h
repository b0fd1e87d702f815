#ifndef ALTDESCENT_H
#define ALTDESCENT_H

/*
 * C interface to the alternating-descent toolkit. Every entry point returns
 * an ad_status and, on request, an opaque ad_result holding the rendered
 * output in three formats. Results must be released with ad_result_free.
 *
 * Status codes double as process exit codes for the bundled CLI:
 *   AD_OK             everything ran and every check passed
 *   AD_CHECK_FAILED   a verification or asymptotic check failed
 *   AD_USAGE_ERROR    unknown name, malformed argument, bad bound
 *   AD_RESOURCE_ERROR a cap was exceeded or a numeric routine gave up
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ad_status {
    AD_OK = 0,
    AD_CHECK_FAILED = 1,
    AD_USAGE_ERROR = 2,
    AD_RESOURCE_ERROR = 3
} ad_status;

typedef struct ad_result ad_result;

const char* ad_version(void);

/*
 * Integer and polynomial sequences.
 *   name: f | g | c | d | euler | eulerian | alt-eulerian | beta | beta-hat
 *   n_max: largest index tabulated (ignored for beta and beta-hat)
 *   composition: comma-separated parts, required for beta and beta-hat,
 *                ignored otherwise (may be NULL)
 */
ad_status ad_seq(const char* name, int n_max, const char* composition,
                 ad_result** out);

/*
 * Power series from the catalog, truncated at `order`.
 *   egf: nonzero multiplies coefficient n by n!
 *   basis: NULL for plain coefficients; "h" or "r" renders the preimage of
 *          F, C, or D in the graded algebra instead (other names reject it)
 */
ad_status ad_series(const char* name, int order, int egf, const char* basis,
                    ad_result** out);

/*
 * Cross-validation suites.
 *   suite: oracle | recurrences | series-identities | ncsf | qt | all
 *   n_max: 0 keeps the per-check defaults, positive values clamp the
 *          brute-force enumeration bounds
 */
ad_status ad_verify(const char* suite, int n_max, unsigned long long seed,
                    ad_result** out);

/*
 * Dominant-pole analysis and the error table for the coefficient estimate.
 *   n_max: last row of the table
 *   tol: zero-finder tolerance, at least 1e-12
 */
ad_status ad_asym(int n_max, double tol, ad_result** out);

ad_status ad_result_status(const ad_result* r);
const char* ad_result_plain(const ad_result* r);
const char* ad_result_json(const ad_result* r);
const char* ad_result_csv(const ad_result* r);
/* empty string when the call succeeded */
const char* ad_result_error(const ad_result* r);
void ad_result_free(ad_result* r);

#ifdef __cplusplus
}
#endif

#endif /* ALTDESCENT_H */
