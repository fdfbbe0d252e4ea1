/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/roots.hpp"

#include <algorithm>

namespace belyi {

namespace {

// Dense ascending coefficient vector at the working precision.
std::vector<BigFloat> to_floats(const Polynomial& f, mpfr_prec_t prec) {
  std::vector<BigFloat> cs(static_cast<std::size_t>(f.degree()) + 1,
                           BigFloat::of_long(0, prec));
  for (const auto& [e, c] : f.terms())
    cs[static_cast<std::size_t>(e)] = BigFloat::of(c, prec);
  return cs;
}

BigComplex horner(const std::vector<BigFloat>& cs, const BigComplex& z) {
  mpfr_prec_t prec = z.re.precision();
  BigComplex acc(BigFloat(cs.back()), BigFloat::of_long(0, prec));
  for (std::size_t i = cs.size() - 1; i-- > 0;) {
    acc = acc * z;
    acc.re += cs[i];
  }
  return acc;
}

}  // namespace

RootSet find_roots(const Polynomial& f, long precision_bits) {
  if (f.degree() < 1)
    throw std::invalid_argument("find_roots: degree must be >= 1");
  if (sgn(f.coefficient(0)) == 0)
    throw std::invalid_argument("find_roots: f(0) = 0; strip zero roots first");
  if (precision_bits < 64) precision_bits = 64;

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<BigFloat> coeffs = to_floats(f, prec);
  std::vector<BigFloat> monic(coeffs);
  for (auto& c : monic) c /= coeffs.back();

  // Cauchy radius of the monic polynomial.
  BigFloat radius = BigFloat::of_long(1, prec);
  for (std::size_t i = 0; i < n; ++i) radius += abs(monic[i]);

  // Fixed starting configuration: equally spaced points on the Cauchy
  // circle with a 0.4 rad twist so no initial point is real.
  std::vector<BigComplex> z;
  z.reserve(n);
  BigFloat two_pi = BigFloat::of_long(2, prec) * BigFloat::pi(prec);
  for (std::size_t j = 0; j < n; ++j) {
    BigFloat theta = two_pi * BigFloat::of_long(static_cast<long>(j), prec) /
                         BigFloat::of_long(static_cast<long>(n), prec) +
                     BigFloat::of(0.4, prec);
    z.emplace_back(radius * cos(theta), radius * sin(theta));
  }

  const BigFloat step_tol = BigFloat::pow2(-(precision_bits - 16), prec);
  const int max_iterations = 1000;
  for (int iter = 0; iter < max_iterations; ++iter) {
    BigFloat worst = BigFloat::of_long(0, prec);
    for (std::size_t j = 0; j < n; ++j) {
      BigComplex denom(BigFloat::of_long(1, prec), BigFloat::of_long(0, prec));
      for (std::size_t l = 0; l < n; ++l)
        if (l != j) denom = denom * (z[j] - z[l]);
      BigComplex delta = horner(monic, z[j]) / denom;
      z[j] = z[j] - delta;
      BigFloat rel = abs(delta) / (BigFloat::of_long(1, prec) + abs(z[j]));
      if (rel > worst) worst = rel;
    }
    if (worst < step_tol) break;
  }

  // Residual certificate against the original coefficients.
  BigFloat max_coeff = BigFloat::of_long(0, prec);
  for (const auto& c : coeffs) {
    BigFloat a = abs(c);
    if (a > max_coeff) max_coeff = a;
  }
  BigFloat threshold =
      max_coeff * exp10(BigFloat::of(-0.15 * static_cast<double>(precision_bits),
                                     prec));
  BigFloat worst_residual = BigFloat::of_long(0, prec);
  for (const auto& root : z) {
    BigFloat res = abs(horner(coeffs, root));
    if (res > worst_residual) worst_residual = res;
  }
  if (!(worst_residual <= threshold))
    throw RootFindingError("find_roots: residual certificate failed",
                           worst_residual.to_double());

  RootSet out{std::move(z), worst_residual.to_double(), precision_bits};
  return out;
}

std::pair<double, double> cauchy_bounds(const Polynomial& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("cauchy_bounds: degree must be >= 1");
  const Rational& lead = f.leading_coefficient();
  Rational upper(1);
  Rational sum_top(0);
  for (const auto& [e, c] : f.terms())
    if (e < f.degree()) sum_top += abs(c / lead);
  if (sum_top > upper) upper = sum_top;

  double lower = 0.0;
  if (sgn(f.coefficient(0)) != 0) {
    const Rational& c0 = f.coefficient(0);
    Rational sum_bot(0);
    for (const auto& [e, c] : f.terms())
      if (e > 0) sum_bot += abs(c / c0);
    Rational denom = sum_bot > 1 ? sum_bot : Rational(1);
    lower = Rational(1 / denom).get_d();
  }
  return {lower, upper.get_d()};
}

}  // namespace belyi
