/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_BELYI_POLY_HPP
#define BELYI_BELYI_POLY_HPP

#include <string>

#include "belyi/polynomial.hpp"

namespace belyi {

// Degree-d polynomial whose only finite critical points are 0 and 1, both
// fixed, with ramification d-k at 0 and k+1 at 1. Unique for each (d, k)
// with d >= 3 and 1 <= k <= d-2, and always has integer coefficients.
struct BelyiPoly {
  long d = 0;
  long k = 0;
  Polynomial poly;

  long ramification_at_zero() const { return d - k; }  // e_0
  long ramification_at_one() const { return k + 1; }   // e_1
};

// Builds B_{d,k} from the closed-form coefficients
//   a_i = (-1)^i d (d-1) ... (d-k) / (i! (k-i)! (d-k+i)),  i = 0..k,
// where a_i is the coefficient of z^{d-k+i}. Each division is performed in
// exact rational arithmetic and asserted integral. Throws std::domain_error
// outside the parameter range.
BelyiPoly generate(long d, long k);

struct ConservativeReport {
  bool pass = false;
  std::string first_violation;  // empty when pass
};

// Full exactness certificate: B(0) = 0, B(1) = 1, and
// B' = (-1)^k d C(d-1,k) z^{d-k-1} (z-1)^k expanded and compared term by
// term. The derivative identity pins both critical points, their
// multiplicities, and the absence of any other critical point.
ConservativeReport verify_conservative(const BelyiPoly& B);

// Returns B_{d,d-1-k} and checks it equals the conjugate of B by
// phi(z) = 1 - z (the coordinate swap of 0 and 1).
BelyiPoly mirror(const BelyiPoly& B);

}  // namespace belyi

#endif  // BELYI_BELYI_POLY_HPP
