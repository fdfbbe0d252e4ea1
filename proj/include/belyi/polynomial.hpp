/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_POLYNOMIAL_HPP
#define BELYI_POLYNOMIAL_HPP

#include <map>
#include <utility>

#include "belyi/numbers.hpp"

namespace belyi {

// Affine change of coordinates z -> scale*z + shift, scale != 0.
struct AffineMap {
  Rational scale;
  Rational shift;

  AffineMap(Rational a, Rational b) : scale(std::move(a)), shift(std::move(b)) {
    if (sgn(scale) == 0)
      throw std::invalid_argument("AffineMap: scale must be nonzero");
  }

  static AffineMap identity() { return AffineMap(Rational(1), Rational(0)); }

  AffineMap inverse() const {
    Rational inv_a = pow_rational(scale, -1);
    return AffineMap(inv_a, Rational(-shift * inv_a));
  }

  Rational operator()(const Rational& x) const { return scale * x + shift; }
};

// Dense-semantics univariate polynomial over the rationals. Internally a
// sparse exponent -> coefficient map; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<long, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(TermMap terms);

  static Polynomial monomial(long exponent, Rational coefficient);
  // z
  static Polynomial identity() { return monomial(1, Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  // Order of vanishing at 0; error for the zero polynomial.
  long order_at_zero() const;
  const TermMap& terms() const { return terms_; }
  // Coefficient of z^e (zero when absent).
  const Rational& coefficient(long exponent) const;
  const Rational& leading_coefficient() const;
  bool is_monic() const;
  bool has_integer_coefficients() const;
  std::size_t term_count() const { return terms_.size(); }

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  // this(g(z))
  Polynomial compose(const Polynomial& g) const;
  // phi^{-1} . f . phi
  Polynomial conjugate(const AffineMap& phi) const;
  // gcd of the (integer) coefficients, >= 0; zero polynomial has content 0.
  Integer content() const;
  // f = z^m * g with g(0) != 0; returns (g, m). Error on the zero polynomial.
  std::pair<Polynomial, long> strip_zero_root() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  friend Polynomial pow(const Polynomial& base, unsigned long e);

 private:
  void set(long exponent, Rational coefficient);

  TermMap terms_;
};

}  // namespace belyi

#endif  // BELYI_POLYNOMIAL_HPP
