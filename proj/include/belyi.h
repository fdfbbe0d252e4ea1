/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * C API of libbelyi: conservative dynamical Belyi polynomials, their
 * reduction behaviour at primes, and their Mahler measures and heights.
 *
 * Conventions:
 *   - Every function returns a belyi_status; results travel through out
 *     parameters. On failure the out parameters are untouched and
 *     belyi_last_error() describes the problem (thread-local storage).
 *   - Strings returned through char** are heap-allocated; release them
 *     with belyi_string_free(). Reports are UTF-8 JSON unless noted.
 *   - belyi_poly is an opaque handle on an exact rational polynomial;
 *     release with belyi_poly_free().
 */
#ifndef BELYI_H
#define BELYI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum belyi_status {
  BELYI_OK = 0,
  BELYI_ERR_USAGE = 1,      /* invalid arguments or parameter ranges */
  BELYI_ERR_VERIFY = 2,     /* a verification or internal assertion failed */
  BELYI_ERR_PARSE = 3,      /* unreadable polynomial input */
  BELYI_ERR_NOCONVERGE = 4, /* root finder could not certify its residual */
  BELYI_ERR_INTERNAL = 5,
} belyi_status;

typedef struct belyi_poly belyi_poly;

const char* belyi_version(void);

/* Message for the most recent failure on this thread ("" when none). */
const char* belyi_last_error(void);

void belyi_string_free(char* s);
void belyi_poly_free(belyi_poly* p);

/* Accepts the text form ("-3z^4 + 4z^3", "(1/5)z^2 - z") or the JSON form
 * (list of [exponent, "numerator", "denominator"]). */
belyi_status belyi_poly_parse(const char* input, belyi_poly** out);
belyi_status belyi_poly_format(const belyi_poly* p, int as_json, char** out);

/* B_{d,k}: degree d >= 3, 1 <= k <= d-2. */
belyi_status belyi_gen(long d, long k, belyi_poly** out);

/* B_{d,d-1-k}, checked against the conjugation by z -> 1-z. */
belyi_status belyi_mirror(long d, long k, belyi_poly** out);

/* Certifies that the polynomial is the conservative dynamical Belyi
 * polynomial B_{d,k}: fixes 0 and 1 and its derivative factors as
 * (-1)^k d C(d-1,k) z^{d-k-1} (z-1)^k. With poly == NULL the freshly
 * generated B_{d,k} is checked (a self test). Returns BELYI_ERR_VERIFY on
 * failure; *json_out carries the report either way. */
belyi_status belyi_verify(long d, long k, const belyi_poly* poly,
                          char** json_out);

/* Reduction verdict of B_{d,k} at the prime p with the coefficient
 * valuations of the monic 0-fixing conjugate as evidence. */
belyi_status belyi_reduce(long d, long k, long p, char** json_out);

/* Existence of a degree-d PCF polynomial with persistent bad reduction at
 * p: decomposes d = p^n l, l = pq + r, and reports the witness index
 * k = p^n r when l > p. */
belyi_status belyi_classify(long d, long p, char** json_out);

/* The witness B_{d, p^n r} together with its reduction report.
 * BELYI_ERR_USAGE when the classifier rules a witness out. */
belyi_status belyi_witness(long d, long p, char** json_out);

/* Primes where B_{d,k} has persistent bad reduction: exactly the prime
 * divisors of C(d-1, k). */
belyi_status belyi_bad_primes(long d, long k, char** json_out);

/* Degree-18 witness table for p in {2, 5, 7, 11, 13, 17}; byte-stable
 * text when as_json == 0. */
belyi_status belyi_table1(int as_json, char** out);

/* Newton-polygon certificate that the bicritical PCF family
 * a(-(d-1)z^d + d z^{d-1}) + d/(d-1) admits a member with good reduction
 * at p. */
belyi_status belyi_prop32(long d, long p, char** json_out);

/* Mahler measure, height and growth ratios of B_{d,k}. precision_bits = 0
 * selects max(128, bits(C(d,k)) + 64), overridable through the
 * BELYI_PRECISION_BITS environment variable. */
belyi_status belyi_height(long d, long k, long precision_bits,
                          char** json_out);

/* Height sweep over all (d, k) pairs, rows in ascending (d, k) order.
 * Returns CSV with header
 * d,k,height,ratio_binom,ratio_logd,interval_lo,interval_hi,precision_bits.
 * threads = 0 uses the hardware concurrency. */
belyi_status belyi_sweep_heights(const long* ks, size_t nks, const long* ds,
                                 size_t nds, long precision_bits, int threads,
                                 char** csv_out);

/* Newton-polygon counting stage of the persistent-bad-reduction
 * obstruction for a monic polynomial fixing 0. */
belyi_status belyi_diagnose(const belyi_poly* f, long p, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* BELYI_H */
