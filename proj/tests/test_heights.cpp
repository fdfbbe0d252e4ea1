/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "belyi/belyi_poly.hpp"
#include "belyi/heights.hpp"
#include "belyi/numtheory.hpp"
#include "belyi/serialize.hpp"

using namespace belyi;

namespace {

Polynomial from_list(std::initializer_list<std::pair<long, long>> terms) {
  Polynomial::TermMap m;
  for (auto [e, c] : terms) m[e] = Rational(c);
  return Polynomial(std::move(m));
}

std::complex<double> to_std(const BigComplex& z) {
  return {z.re.to_double(), z.im.to_double()};
}

Polynomial nonzero_factor(long d, long k) {
  return generate(d, k).poly.strip_zero_root().first;
}

}  // namespace

TEST_CASE("find_roots on a linear polynomial") {
  RootSet rs = find_roots(from_list({{1, -3}, {0, 4}}), 128);
  REQUIRE(rs.roots.size() == 1);
  std::complex<double> root = to_std(rs.roots[0]);
  CHECK(root.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(root.imag()) < 1e-30);
}

TEST_CASE("find_roots on 3z^2 - 8z + 6") {
  RootSet rs = find_roots(from_list({{2, 3}, {1, -8}, {0, 6}}), 128);
  REQUIRE(rs.roots.size() == 2);
  // roots (4 +- i sqrt 2)/3, both of modulus sqrt 2
  for (const auto& r : rs.roots) {
    CHECK(abs(r).to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(to_std(r).real() - 4.0 / 3.0) < 1e-15);
  }
  CHECK(rs.roots[0].im.to_double() * rs.roots[1].im.to_double() < 0);
}

TEST_CASE("find_roots on z^2 - 1") {
  RootSet rs = find_roots(from_list({{2, 1}, {0, -1}}), 128);
  REQUIRE(rs.roots.size() == 2);
  double a = to_std(rs.roots[0]).real(), b = to_std(rs.roots[1]).real();
  CHECK(std::abs(std::min(a, b) + 1) < 1e-30);
  CHECK(std::abs(std::max(a, b) - 1) < 1e-30);
}

TEST_CASE("find_roots rejects bad inputs") {
  CHECK_THROWS_AS(find_roots(from_list({{2, 1}, {1, 1}}), 128),
                  std::invalid_argument);  // f(0) = 0
  CHECK_THROWS_AS(find_roots(Polynomial(Rational(3)), 128),
                  std::invalid_argument);  // degree 0
}

TEST_CASE("residual certificates hold on the Belyi family") {
  for (long d : {10, 50, 200}) {
    for (long k = 1; k <= std::min(6L, d - 2); ++k) {
      Polynomial F = nonzero_factor(d, k);
      long bits = default_precision_bits(d, k);
      RootSet rs = find_roots(F, bits);
      double max_coeff = 0;
      for (const auto& [e, c] : F.terms())
        max_coeff = std::max(max_coeff, std::abs(Rational(abs(c)).get_d()));
      CHECK(rs.residual_bound <= max_coeff * std::pow(10.0, -0.15 * bits));
    }
  }
}

TEST_CASE("cauchy_bounds") {
  auto [lo, hi] = cauchy_bounds(from_list({{2, 3}, {1, -8}, {0, 6}}));
  CHECK(lo <= std::sqrt(2.0));
  CHECK(std::sqrt(2.0) <= hi);

  auto [lo1, hi1] = cauchy_bounds(from_list({{1, -9}, {0, 10}}));  // F_{10,1}
  CHECK(lo1 <= 10.0 / 9.0);
  CHECK(10.0 / 9.0 <= hi1 * (1 + 1e-15));  // the root sits exactly on the bound

  auto [lo2, hi2] = cauchy_bounds(from_list({{1, 1}, {0, -1}}));  // z - 1
  CHECK(lo2 <= 1.0);
  CHECK(1.0 <= hi2);

  CHECK(cauchy_bounds(from_list({{3, 1}, {1, 2}})).first == 0.0);  // f(0) = 0
  CHECK_THROWS_AS(cauchy_bounds(Polynomial(Rational(1))), std::invalid_argument);
}

TEST_CASE("roots stay inside the annulus [2^-k, 2^k]") {
  for (long d : {6, 30, 121}) {
    for (long k = 1; k <= std::min(8L, d - 2); ++k) {
      Polynomial F = nonzero_factor(d, k);
      auto [lo, hi] = cauchy_bounds(F);
      CHECK(lo >= std::pow(2.0, -double(k)) * (1 - 1e-12));
      for (const auto& r : find_roots(F, 160).roots) {
        double mod = abs(r).to_double();
        CHECK(mod >= lo * (1 - 1e-12));
        CHECK(mod <= hi * (1 + 1e-12));
        CHECK(mod >= std::pow(2.0, -double(k)) * (1 - 1e-12));
        CHECK(mod <= std::pow(2.0, double(k)) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("mahler_measure") {
  CHECK(mahler_measure(Polynomial::monomial(12, Rational(1))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mahler_measure(from_list({{2, 3}, {1, -8}, {0, 6}})) ==
        doctest::Approx(6.0).epsilon(1e-14));
  // F_{d,1} = -(d-1) z + d has measure d
  CHECK(mahler_measure(from_list({{1, -17}, {0, 18}})) ==
        doctest::Approx(18.0).epsilon(1e-14));
  CHECK_THROWS_AS(mahler_measure(from_list({{2, 6}, {1, -4}})),
                  std::invalid_argument);  // content 2
  CHECK_THROWS_AS(mahler_measure(Polynomial::monomial(1, make_rational(1, 2))),
                  std::invalid_argument);  // not integral
  CHECK_THROWS_AS(mahler_measure(Polynomial()), std::invalid_argument);
}

TEST_CASE("height_belyi exact values") {
  HeightReport r = height_belyi(4, 2);
  CHECK(r.mahler == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(r.height == doctest::Approx(std::log(6.0) / 4).epsilon(1e-14));

  for (long d : {3, 18, 301, 1000}) {
    HeightReport h1 = height_belyi(d, 1);
    CHECK(std::abs(h1.height - std::log(double(d)) / d) <= 1e-10);
    CHECK(h1.ratio_logd == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("height_belyi report fields are consistent") {
  HeightReport r = height_belyi(18, 2);
  double logC = std::log(Rational(binomial(18, 2)).get_d());
  CHECK(r.ratio_binom >= 1.0 - 1e-12);
  CHECK(r.ratio_binom <= 1.0 + 4 * std::log(2.0) / logC + 1e-12);
  CHECK(r.interval_hi - r.interval_lo ==
        doctest::Approx(2.0 * std::log(2.0) / 18).epsilon(1e-12));
  CHECK(r.interval_lo <= r.height);
  CHECK(r.height <= r.interval_hi);
  CHECK(r.precision_bits >= 128);
  CHECK(r.log_mahler == doctest::Approx(std::log(r.mahler)).epsilon(1e-12));
}

TEST_CASE("product of root moduli is d/(d-k)") {
  for (long d : {12, 47, 150}) {
    for (long k = 1; k <= std::min(8L, d - 2); ++k) {
      RootSet rs = find_roots(nonzero_factor(d, k), 192);
      double prod = 1;
      for (const auto& r : rs.roots) prod *= abs(r).to_double();
      double expected = double(d) / double(d - k);
      CHECK(std::abs(prod - expected) / expected <= 1e-10);
    }
  }
}

TEST_CASE("precision override parameter") {
  HeightReport r = height_belyi(10, 2, 256);
  CHECK(r.precision_bits == 256);
  CHECK(r.height == doctest::Approx(height_belyi(10, 2).height).epsilon(1e-14));
}

TEST_CASE("asymptotic_sweep rows and determinism") {
  std::vector<long> ks{1, 2};
  std::vector<long> ds{10, 25, 100};
  auto rows = asymptotic_sweep(ks, ds, 0, 3);
  REQUIRE(rows.size() == 6);
  // ascending (d, k) order
  for (std::size_t i = 1; i < rows.size(); ++i) {
    bool ordered = rows[i - 1].d < rows[i].d ||
                   (rows[i - 1].d == rows[i].d && rows[i - 1].k < rows[i].k);
    CHECK(ordered);
  }
  for (const auto& r : rows)
    if (r.k == 1) CHECK(r.ratio_logd == doctest::Approx(1.0).epsilon(1e-12));

  // a parallel and a serial sweep print the same CSV bytes
  auto serial = asymptotic_sweep(ks, ds, 0, 1);
  CHECK(sweep_to_csv(rows) == sweep_to_csv(serial));
}
