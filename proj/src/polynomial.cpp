/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/polynomial.hpp"

namespace belyi {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_[0] = constant;
}

Polynomial::Polynomial(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0)
      throw std::invalid_argument("Polynomial: negative exponent");
    it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::monomial(long exponent, Rational coefficient) {
  Polynomial f;
  f.set(exponent, std::move(coefficient));
  return f;
}

void Polynomial::set(long exponent, Rational coefficient) {
  if (exponent < 0) throw std::invalid_argument("Polynomial: negative exponent");
  if (sgn(coefficient) == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = std::move(coefficient);
}

long Polynomial::order_at_zero() const {
  if (terms_.empty())
    throw std::invalid_argument("order_at_zero: zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? kZero : it->second;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) return kZero;
  return terms_.rbegin()->second;
}

bool Polynomial::is_monic() const {
  return !terms_.empty() && leading_coefficient() == 1;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!is_integral(c)) return false;
  return true;
}

Rational Polynomial::evaluate(const Rational& x) const {
  if (terms_.empty()) return Rational(0);
  // Horner over the nonzero terms, bridging exponent gaps with powers of x.
  auto it = terms_.rbegin();
  Rational acc = it->second;
  long prev = it->first;
  for (++it; it != terms_.rend(); ++it) {
    acc *= pow_rational(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= pow_rational(x, prev);
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (const auto& [e, c] : terms_) {
    if (e == 0) continue;
    d.set(e - 1, Rational(c * e));
  }
  return d;
}

Polynomial pow(const Polynomial& base, unsigned long e) {
  Polynomial result(Rational(1));
  Polynomial b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  if (terms_.empty()) return Polynomial();
  auto it = terms_.rbegin();
  Polynomial acc(it->second);
  long prev = it->first;
  for (++it; it != terms_.rend(); ++it) {
    acc = acc * pow(g, static_cast<unsigned long>(prev - it->first));
    acc += Polynomial(it->second);
    prev = it->first;
  }
  if (prev > 0) acc = acc * pow(g, static_cast<unsigned long>(prev));
  return acc;
}

Polynomial Polynomial::conjugate(const AffineMap& phi) const {
  Polynomial inner = Polynomial::monomial(1, phi.scale);
  inner += Polynomial(phi.shift);
  Polynomial t = compose(inner);
  t -= Polynomial(phi.shift);
  return pow_rational(phi.scale, -1) * t;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    if (!is_integral(c))
      throw std::invalid_argument("content: non-integer coefficient");
    g = gcd(g, c.get_num());
  }
  return abs(g);
}

std::pair<Polynomial, long> Polynomial::strip_zero_root() const {
  if (terms_.empty())
    throw std::invalid_argument("strip_zero_root: zero polynomial");
  long m = order_at_zero();
  Polynomial g;
  for (const auto& [e, c] : terms_) g.terms_[e - m] = c;
  return {g, m};
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto it = r.terms_.find(ea + eb);
      if (it == r.terms_.end()) {
        r.terms_[ea + eb] = ca * cb;
      } else {
        it->second += ca * cb;
        if (sgn(it->second) == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, coef] : f.terms_) r.terms_[e] = c * coef;
  return r;
}

}  // namespace belyi
