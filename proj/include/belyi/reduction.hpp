/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_REDUCTION_HPP
#define BELYI_REDUCTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "belyi/belyi_poly.hpp"
#include "belyi/newton.hpp"

namespace belyi {

enum class Verdict {
  GoodReduction,
  PotentialGoodReduction,
  PersistentBadReduction,
};

const char* to_string(Verdict v);

struct ValuationEntry {
  long exponent = 0;
  Rational valuation;
};

// Coefficient valuations of the monic 0-fixing conjugate B^phi of B_{d,k},
// where phi(z) = z/beta and beta^{d-1} = a_k. beta itself is never
// constructed: only v(beta) = v_p(a_k)/(d-1) enters any decision, so the
// entry for z^{d-k+i} is v_p(a_i) - (d-k+i-1) * v_beta.
struct NormalizedConjugateValuations {
  Integer p;
  long d = 0;
  long k = 0;
  Rational v_beta;
  std::vector<ValuationEntry> entries;  // ascending exponent
};

// Verdict per Benedetto's criterion applied to the monic conjugate: the
// polynomial has potential good reduction iff no conjugate valuation is
// negative. GoodReduction is reported only when B itself (integer
// coefficients, content 1) already keeps full degree mod p, i.e.
// v_p(a_k) = 0.
struct ReductionReport {
  Verdict verdict = Verdict::PotentialGoodReduction;
  std::optional<ValuationEntry> witness;  // least-valuation entry when bad
  NormalizedConjugateValuations conjugate_valuations;
};

// deg(f mod p) == deg(f) for a p-normalized polynomial: all coefficient
// valuations >= 0 with minimum exactly 0. Throws if f is not normalized.
bool good_reduction(const Polynomial& f, const Integer& p);

NormalizedConjugateValuations normalized_conjugate_valuations(
    const BelyiPoly& B, const Integer& p);

ReductionReport potential_good_reduction(const BelyiPoly& B, const Integer& p);

// Exactly the primes dividing the leading coefficient C(d-1,k); B_{d,k}
// has persistent bad reduction at these primes and good reduction at every
// other prime.
std::vector<Integer> persistent_bad_primes(const BelyiPoly& B);

// Decomposition d = p^n * l with p not dividing l, and l = p*q + r with
// 1 <= r <= p-1. A degree-d PCF polynomial with persistent bad reduction
// at p exists iff l > p; in that case B_{d, p^n r} is one.
struct ClassifierResult {
  bool possible = false;
  long n = 0;
  Integer l;
  Integer q;
  Integer r;
  std::optional<Integer> witness_k;
};

ClassifierResult classify_theorem1(const Integer& d, const Integer& p);

// Builds the witness B_{d, p^n r} and its reduction report, asserting the
// verdict is PersistentBadReduction. Error when the classifier says no
// witness exists.
std::pair<BelyiPoly, ReductionReport> witness_prop25(long d, const Integer& p);

// Good-reduction construction check for the bicritical degree-d family
// f(z) = a(-(d-1) z^d + d z^{d-1}) + d/(d-1): the parameter values making f
// post-critically finite are the roots of
//   g(a) = (d-1) a (a + d/(d-1))^{d-1} + 1.
// With m = v_p(d-1), the polygon of g at p either certifies all roots are
// p-adic units (m = 0) or has leftmost segment (0,0) -> (1, -(d-2)m), in
// which case the chosen root gives v(beta) = m and the monic conjugate
// z^d - (d/(d-1)) beta z^{d-1} + (d/(d-1)) beta has unit coefficients.
struct Prop32Report {
  long d = 0;
  Integer p;
  long m = 0;
  NewtonPolygon polygon;
  bool shape_ok = false;
  std::vector<Rational> conjugate_coefficient_valuations;
};

Prop32Report prop32_verify(long d, const Integer& p);

// Newton-polygon counting stage of the persistent-bad-reduction
// obstruction, for a monic polynomial fixing 0 with some coefficient of
// negative valuation: r is the rightmost slope of the polygon of f(z)-z
// (the largest fixed points have absolute value p^r), fixed_at_max its
// length, and crit_at_max the number of critical points with absolute
// value >= p^r read off the polygon of f'. The necessary condition for
// post-critical boundedness at this stage is that no critical point
// exceeds p^r and at least fixed_at_max critical points reach it.
struct PcfObstructionDiagnostic {
  bool trivial = false;  // no negative-valuation coefficient
  Rational r;
  long fixed_at_max = 0;
  long crit_at_max = 0;
  bool necessary_condition_holds = false;
};

PcfObstructionDiagnostic pcf_newton_diagnostic(const Polynomial& f,
                                               const Integer& p);

// Degree-18 persistent-bad-reduction witness table for the primes
// p < 18 where one exists (p = 3 is impossible since 18 = 3^2 * 2).
struct Table1Row {
  Integer p;
  long n = 0;
  Integer l;
  Integer r;
  long k = 0;
  Polynomial poly;
};

std::vector<Table1Row> table1_rows();

}  // namespace belyi

#endif  // BELYI_REDUCTION_HPP
