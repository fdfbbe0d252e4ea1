/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_NUMBERS_HPP
#define BELYI_NUMBERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace belyi {

// Exact arbitrary-precision arithmetic. mpq_class values are kept canonical
// (lowest terms, positive denominator) by construction.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0 && sgn(base) == 0)
    throw std::invalid_argument("pow_rational: negative power of zero");
  Rational r;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), ae);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), ae);
  if (e < 0) {
    mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  }
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Bit length of |x|; 0 for x = 0.
inline long bit_length(const Integer& x) {
  if (sgn(x) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

}  // namespace belyi

#endif  // BELYI_NUMBERS_HPP
