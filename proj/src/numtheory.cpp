/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/numtheory.hpp"

#include <algorithm>
#include <cstdint>

namespace belyi {

namespace {

constexpr uint32_t kTrialDivisionBound = 1000000;

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<uint32_t> ps;
    for (uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= kTrialDivisionBound; j += i)
        composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

void require_prime(const Integer& p) {
  if (p < 2 || !is_probable_prime(p))
    throw std::invalid_argument("expected a prime, got " + p.get_str());
}

// Pollard-Brent cycle finding; n odd composite, not a prime power guard is
// not needed (rho handles prime powers fine). Deterministic parameter sweep.
Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        Integer lim = std::min(m, Integer(r - k));
        for (Integer i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    // Cycle degenerated for this c; retry with the next increment.
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Integer binomial(const Integer& n, const Integer& m) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (m < 0 || m > n) return 0;
  Integer small = std::min(m, Integer(n - m));
  if (!mpz_fits_ulong_p(small.get_mpz_t()))
    throw std::overflow_error("binomial: arguments out of supported range");
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), small.get_ui());
  return r;
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

long vp_int(const Integer& x, const Integer& p) {
  require_prime(p);
  if (sgn(x) == 0)
    throw std::invalid_argument("vp_int: valuation of 0 is infinite");
  Integer rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long vp_rat(const Rational& x, const Integer& p) {
  if (sgn(x) == 0)
    throw std::invalid_argument("vp_rat: valuation of 0 is infinite");
  return vp_int(x.get_num(), p) - vp_int(x.get_den(), p);
}

long vp_binomial_kummer(const Integer& n, const Integer& m, const Integer& p) {
  require_prime(p);
  if (m < 0 || m > n)
    throw std::invalid_argument("vp_binomial_kummer: need 0 <= m <= n");
  Integer a = m, b = n - m, da, db;
  long carries = 0;
  int carry = 0;
  while (sgn(a) != 0 || sgn(b) != 0) {
    mpz_fdiv_qr(a.get_mpz_t(), da.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_qr(b.get_mpz_t(), db.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
    carry = (da + db + carry >= p) ? 1 : 0;
    carries += carry;
  }
  return carries;
}

long vp_factorial_legendre(const Integer& n, const Integer& p) {
  require_prime(p);
  if (n < 0)
    throw std::invalid_argument("vp_factorial_legendre: n must be >= 0");
  Integer total = 0;
  Integer t = n / p;
  while (sgn(t) != 0) {
    total += t;
    t /= p;
  }
  if (!mpz_fits_slong_p(total.get_mpz_t()))
    throw std::overflow_error("vp_factorial_legendre: valuation overflow");
  return total.get_si();
}

std::vector<Integer> prime_factors(const Integer& x) {
  if (sgn(x) == 0)
    throw std::invalid_argument("prime_factors: 0 has no factorization");
  Integer n = abs(x);
  std::vector<Integer> out;
  if (n == 1) return out;
  for (uint32_t p : small_primes()) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
    }
  }
  if (n > 1) {
    std::vector<Integer> rest;
    factor_into(n, rest);
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace belyi
