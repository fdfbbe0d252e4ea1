/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_HEIGHTS_HPP
#define BELYI_HEIGHTS_HPP

#include <vector>

#include "belyi/roots.hpp"

namespace belyi {

// Mahler measure |lead| * prod_{|root| >= 1} |root| of a content-1 integer
// polynomial. Roots within 1e-20 of the unit circle contribute exactly 1.
// Throws on non-integer coefficients or content != 1.
double mahler_measure(const Polynomial& f);

// h(B_{d,k}) and the growth diagnostics around it. All floating-point
// fields are computed in MPFR at `precision_bits` and rounded once at the
// end. The conjugate interval is the enclosure for the height of the monic
// 0-fixing conjugate: |h(B) - h(B^phi)| < ((k-1)/d) log 2.
struct HeightReport {
  long d = 0;
  long k = 0;
  double mahler = 0.0;      // M(F_{d,k}); +inf when it overflows a double
  double log_mahler = 0.0;  // always finite
  double height = 0.0;      // h(B_{d,k}) = (1/d) log M(F_{d,k})
  double ratio_binom = 0.0; // height / ((1/d) log C(d,k))
  double ratio_logd = 0.0;  // height / (log(d)/d)
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  long precision_bits = 0;
  double residual_bound = 0.0;
};

// Default working precision: max(128, bits(C(d,k)) + 64), overridable via
// the BELYI_PRECISION_BITS environment variable.
long default_precision_bits(long d, long k);

// precision_bits = 0 selects the default policy.
HeightReport height_belyi(long d, long k, long precision_bits = 0);

// One report per (d, k), rows ordered by (d, k) ascending; rows are
// computed by a worker pool but the output is scheduling-independent.
// threads = 0 picks the hardware concurrency.
std::vector<HeightReport> asymptotic_sweep(const std::vector<long>& ks,
                                           const std::vector<long>& ds,
                                           long precision_bits = 0,
                                           int threads = 0);

}  // namespace belyi

#endif  // BELYI_HEIGHTS_HPP
