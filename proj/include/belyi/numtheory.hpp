/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_NUMTHEORY_HPP
#define BELYI_NUMTHEORY_HPP

#include <vector>

#include "belyi/numbers.hpp"

namespace belyi {

// C(n, m) for n >= 0; returns 0 when m < 0 or m > n.
Integer binomial(const Integer& n, const Integer& m);

bool is_probable_prime(const Integer& n);

// p-adic valuation of a nonzero integer: the largest e with p^e | x.
// Throws on x = 0 (the valuation would be infinite) and on non-prime p.
long vp_int(const Integer& x, const Integer& p);

// v_p(num) - v_p(den); same error contract as vp_int.
long vp_rat(const Rational& x, const Integer& p);

// v_p(C(n, m)) as the number of carries when adding m and n-m in base p
// (Kummer). Requires 0 <= m <= n.
long vp_binomial_kummer(const Integer& n, const Integer& m, const Integer& p);

// v_p(n!) = sum_{i>=1} floor(n / p^i)  (Legendre). Requires n >= 0.
long vp_factorial_legendre(const Integer& n, const Integer& p);

// Distinct prime divisors of |x|, sorted ascending. x = +-1 gives the empty
// set; x = 0 is an error. Trial division by all primes below 10^6, then
// Pollard-Brent rho on whatever is left.
std::vector<Integer> prime_factors(const Integer& x);

}  // namespace belyi

#endif  // BELYI_NUMTHEORY_HPP
