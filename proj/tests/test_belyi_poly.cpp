/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "belyi/belyi_poly.hpp"
#include "belyi/numtheory.hpp"

using namespace belyi;

namespace {

Polynomial from_list(std::initializer_list<std::pair<long, long>> terms) {
  Polynomial::TermMap m;
  for (auto [e, c] : terms) m[e] = Rational(c);
  return Polynomial(std::move(m));
}

}  // namespace

TEST_CASE("generate matches the closed form") {
  CHECK(generate(4, 1).poly == from_list({{4, -3}, {3, 4}}));
  CHECK(generate(4, 2).poly == from_list({{4, 3}, {3, -8}, {2, 6}}));
  CHECK(generate(18, 1).poly == from_list({{18, -17}, {17, 18}}));
  CHECK(generate(3, 1).poly == from_list({{3, -2}, {2, 3}}));
  CHECK(generate(6, 2).poly == from_list({{6, 10}, {5, -24}, {4, 15}}));
}

TEST_CASE("generate rejects out-of-range parameters") {
  CHECK_THROWS_AS(generate(2, 1), std::domain_error);
  CHECK_THROWS_AS(generate(4, 0), std::domain_error);
  CHECK_THROWS_AS(generate(4, 3), std::domain_error);
  CHECK_THROWS_AS(generate(10, -1), std::domain_error);
}

TEST_CASE("ramification bookkeeping") {
  BelyiPoly B = generate(18, 7);
  CHECK(B.ramification_at_zero() == 11);
  CHECK(B.ramification_at_one() == 8);
  CHECK(B.ramification_at_zero() + B.ramification_at_one() == B.d + 1);
}

TEST_CASE("verify_conservative") {
  CHECK(verify_conservative(generate(4, 1)).pass);
  CHECK(verify_conservative(generate(18, 7)).pass);
  CHECK(verify_conservative(generate(100, 37)).pass);

  BelyiPoly shifted;
  shifted.d = 4;
  shifted.k = 1;
  shifted.poly = from_list({{4, -3}, {3, 4}, {0, 1}});
  ConservativeReport r = verify_conservative(shifted);
  CHECK(!r.pass);
  CHECK(r.first_violation == "B(0) = 0");

  BelyiPoly wrong_sum;
  wrong_sum.d = 4;
  wrong_sum.k = 1;
  wrong_sum.poly = from_list({{4, -3}, {3, 5}});
  CHECK(verify_conservative(wrong_sum).first_violation == "B(1) = 1");

  BelyiPoly wrong_critical;
  wrong_critical.d = 4;
  wrong_critical.k = 1;
  // fixes 0 and 1 but has the wrong ramification shape
  wrong_critical.poly = from_list({{4, 1}, {3, -1}, {1, 1}});
  CHECK(verify_conservative(wrong_critical).first_violation ==
        "derivative factorization");

  BelyiPoly bad_range;
  bad_range.d = 2;
  bad_range.k = 1;
  bad_range.poly = from_list({{2, 1}});
  CHECK(!verify_conservative(bad_range).pass);
}

TEST_CASE("mirror") {
  CHECK(mirror(generate(4, 1)).poly == generate(4, 2).poly);
  CHECK(mirror(generate(4, 2)).poly == generate(4, 1).poly);
  CHECK(mirror(generate(18, 7)).poly == generate(18, 10).poly);
  // self-mirror when k = (d-1)/2
  CHECK(mirror(generate(5, 2)).poly == generate(5, 2).poly);
}

TEST_CASE("all invariants hold for d <= 200") {
  for (long d = 3; d <= 200; ++d) {
    long checked = 0;
    for (long k = 1; k <= d - 2; ++k) {
      BelyiPoly B = generate(d, k);
      const Polynomial& f = B.poly;
      REQUIRE(f.degree() == d);
      REQUIRE(f.order_at_zero() == d - k);
      REQUIRE(f.term_count() == static_cast<std::size_t>(k + 1));
      REQUIRE(f.has_integer_coefficients());
      REQUIRE(f.content() == 1);

      Integer lead = binomial(d - 1, k);
      if (k % 2 == 1) lead = -lead;
      REQUIRE(f.leading_coefficient() == lead);
      REQUIRE(f.coefficient(d - k) == binomial(d, k));

      // sign alternation: a_i flips sign with each exponent step
      int expected_sign = 1;
      for (const auto& [e, c] : f.terms()) {
        (void)e;
        REQUIRE(sgn(c) == expected_sign);
        expected_sign = -expected_sign;
      }

      // the full PCF certificate
      REQUIRE(verify_conservative(B).pass);
      ++checked;
    }
    REQUIRE(checked == d - 2);  // one polynomial per admissible k
  }
}

TEST_CASE("polynomials are distinct per degree") {
  for (long d : {5, 9, 14}) {
    std::set<std::string> seen;
    for (long k = 1; k <= d - 2; ++k) {
      Polynomial poly = generate(d, k).poly;
      std::string key;
      for (const auto& [e, c] : poly.terms())
        key += std::to_string(e) + ":" + c.get_str() + ";";
      seen.insert(key);
    }
    CHECK(seen.size() == static_cast<std::size_t>(d - 2));
  }
}
