/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/belyi_poly.hpp"

#include "belyi/numtheory.hpp"

namespace belyi {

namespace {

void require_range(long d, long k) {
  if (d < 3 || k < 1 || k > d - 2)
    throw std::domain_error("BelyiPoly: need d >= 3 and 1 <= k <= d-2, got d=" +
                            std::to_string(d) + " k=" + std::to_string(k));
}

}  // namespace

BelyiPoly generate(long d, long k) {
  require_range(d, k);
  Integer numerator = 1;  // d (d-1) ... (d-k)
  for (long t = d - k; t <= d; ++t) numerator *= t;

  Polynomial::TermMap terms;
  Integer fact_i = 1;           // i!
  Integer fact_ki = factorial(static_cast<unsigned long>(k));  // (k-i)!
  Rational sum(0);
  for (long i = 0; i <= k; ++i) {
    if (i > 0) {
      fact_i *= i;
      mpz_divexact_ui(fact_ki.get_mpz_t(), fact_ki.get_mpz_t(),
                      static_cast<unsigned long>(k - i + 1));
    }
    Integer denominator = fact_i * fact_ki * (d - k + i);
    Rational a = make_rational(numerator, denominator);
    if (!is_integral(a))
      throw std::logic_error("generate: non-integral coefficient at i=" +
                             std::to_string(i));
    if (i % 2 == 1) a = -a;
    sum += a;
    terms[d - k + i] = a;
  }
  if (sum != 1) throw std::logic_error("generate: B(1) != 1");
  return BelyiPoly{d, k, Polynomial(std::move(terms))};
}

ConservativeReport verify_conservative(const BelyiPoly& B) {
  if (B.d < 3 || B.k < 1 || B.k > B.d - 2)
    return {false, "parameter range (need d >= 3, 1 <= k <= d-2)"};
  if (sgn(B.poly.coefficient(0)) != 0) return {false, "B(0) = 0"};
  if (B.poly.evaluate(Rational(1)) != 1) return {false, "B(1) = 1"};

  // (-1)^k d C(d-1,k) z^{d-k-1} (z-1)^k, expanded exactly.
  Integer scale = Integer(B.d) * binomial(B.d - 1, B.k);
  if (B.k % 2 == 1) scale = -scale;
  Polynomial expected =
      Polynomial::monomial(B.d - B.k - 1, Rational(scale)) *
      pow(Polynomial::identity() - Polynomial(Rational(1)),
          static_cast<unsigned long>(B.k));
  if (!(B.poly.derivative() == expected))
    return {false, "derivative factorization"};
  return {true, ""};
}

BelyiPoly mirror(const BelyiPoly& B) {
  require_range(B.d, B.k);
  BelyiPoly M = generate(B.d, B.d - 1 - B.k);
  AffineMap swap01(Rational(-1), Rational(1));  // z -> 1 - z
  if (!(B.poly.conjugate(swap01) == M.poly))
    throw std::logic_error("mirror: conjugation identity failed");
  return M;
}

}  // namespace belyi
