/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "belyi/numtheory.hpp"

using namespace belyi;

TEST_CASE("binomial values") {
  CHECK(binomial(17, 2) == 136);
  CHECK(binomial(17, 7) == 19448);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(100, 0) == 1);
  CHECK(binomial(18, 2) == 153);
  CHECK(binomial(4, 2) == 6);
}

TEST_CASE("binomial outside range is zero") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dn(1, 400);
  for (int trial = 0; trial < 300; ++trial) {
    long n = dn(rng);
    long m = std::uniform_int_distribution<long>(0, n)(rng);
    CHECK(binomial(n, m) == binomial(n - 1, m - 1) + binomial(n - 1, m));
  }
}

TEST_CASE("vp_int") {
  CHECK(vp_int(136, 2) == 3);
  CHECK(vp_int(1, 7) == 0);
  CHECK(vp_int(-19448, 11) == 1);
  CHECK(vp_int(Integer(-19448), 2) == 3);
  CHECK(vp_int(Integer("1000000000000000000000"), 5) == 21);
  CHECK_THROWS_AS(vp_int(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(vp_int(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(vp_int(10, 1), std::invalid_argument);
}

TEST_CASE("vp_rat") {
  CHECK(vp_rat(make_rational(18, 17), 17) == -1);
  CHECK(vp_rat(Rational(1), 13) == 0);
  CHECK(vp_rat(make_rational(4, 3), 3) == -1);
  CHECK_THROWS_AS(vp_rat(Rational(0), 3), std::invalid_argument);
}

TEST_CASE("vp_rat is a valuation") {
  std::mt19937_64 rng(11);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<long> di(-200, 200);
  for (int trial = 0; trial < 500; ++trial) {
    Integer p = primes[trial % 6];
    long a = di(rng), b = di(rng), c = di(rng), d = di(rng);
    if (a == 0 || c == 0 || b == 0 || d == 0) continue;
    Rational x = make_rational(a, b), y = make_rational(c, d);
    CHECK(vp_rat(x * y, p) == vp_rat(x, p) + vp_rat(y, p));
    if (sgn(x + y) != 0) {
      long vs = vp_rat(x + y, p);
      long lo = std::min(vp_rat(x, p), vp_rat(y, p));
      CHECK(vs >= lo);
      if (vp_rat(x, p) != vp_rat(y, p)) CHECK(vs == lo);
    }
  }
}

TEST_CASE("Kummer carry count") {
  CHECK(vp_binomial_kummer(17, 2, 2) == 3);
  CHECK(vp_binomial_kummer(4, 2, 3) == 1);
  // k = p^n r with d-k = p^{n+1} q adds without carries: d=18, p=2, k=2.
  CHECK(vp_binomial_kummer(18, 2, 2) == 0);
  CHECK(vp_binomial_kummer(17, 2, 5) == 0);
  CHECK_THROWS_AS(vp_binomial_kummer(3, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(vp_binomial_kummer(3, -1, 2), std::invalid_argument);
}

TEST_CASE("Legendre formula") {
  CHECK(vp_factorial_legendre(5, 2) == 3);
  CHECK(vp_factorial_legendre(0, 3) == 0);
  CHECK(vp_factorial_legendre(7, 7) == 1);
  CHECK(vp_factorial_legendre(25, 5) == 6);
  CHECK_THROWS_AS(vp_factorial_legendre(-1, 3), std::invalid_argument);
}

TEST_CASE("Kummer = Legendre = direct factorization") {
  std::mt19937_64 rng(42);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 97};
  std::uniform_int_distribution<long> dn(0, 2000);
  for (int trial = 0; trial < 1000; ++trial) {
    long n = dn(rng);
    long m = std::uniform_int_distribution<long>(0, n)(rng);
    Integer p = primes[trial % 10];
    long carries = vp_binomial_kummer(n, m, p);
    long legendre = vp_factorial_legendre(n, p) - vp_factorial_legendre(m, p) -
                    vp_factorial_legendre(n - m, p);
    CHECK(carries == legendre);
    Integer b = binomial(n, m);
    CHECK(carries == vp_int(b, p));
  }
}

TEST_CASE("prime_factors") {
  CHECK(prime_factors(19448) == std::vector<Integer>{2, 11, 13, 17});
  CHECK(prime_factors(680) == std::vector<Integer>{2, 5, 17});
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(-1).empty());
  CHECK(prime_factors(-680) == std::vector<Integer>{2, 5, 17});
  CHECK(prime_factors(Integer("1000003")) == std::vector<Integer>{1000003});
  CHECK_THROWS_AS(prime_factors(0), std::invalid_argument);
}

TEST_CASE("prime_factors beyond the trial-division bound") {
  // 1000003 and 1000033 are primes above 10^6; rho must split them apart.
  Integer n = Integer("1000003") * Integer("1000033") * 8;
  CHECK(prime_factors(n) == std::vector<Integer>{2, 1000003, 1000033});
  Integer square = Integer("1000003") * Integer("1000003");
  CHECK(prime_factors(square) == std::vector<Integer>{1000003});
}

TEST_CASE("prime_factors recombines") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dx(2, 1000000);
  for (int trial = 0; trial < 50; ++trial) {
    Integer x = Integer(dx(rng)) * dx(rng);
    Integer rest = x;
    for (const Integer& p : prime_factors(x)) {
      CHECK(is_probable_prime(p));
      CHECK(mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()));
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
    }
    CHECK(rest == 1);
  }
}
