/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/reduction.hpp"

#include "belyi/numtheory.hpp"

namespace belyi {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::GoodReduction:
      return "GoodReduction";
    case Verdict::PotentialGoodReduction:
      return "PotentialGoodReduction";
    case Verdict::PersistentBadReduction:
      return "PersistentBadReduction";
  }
  return "?";
}

bool good_reduction(const Polynomial& f, const Integer& p) {
  if (f.is_zero()) throw std::invalid_argument("good_reduction: zero polynomial");
  bool has_unit = false;
  for (const auto& [e, c] : f.terms()) {
    long v = vp_rat(c, p);
    if (v < 0)
      throw std::invalid_argument(
          "good_reduction: polynomial is not p-integral; normalize first");
    if (v == 0) has_unit = true;
  }
  if (!has_unit)
    throw std::invalid_argument(
        "good_reduction: no unit coefficient; normalize first");
  return vp_rat(f.leading_coefficient(), p) == 0;
}

NormalizedConjugateValuations normalized_conjugate_valuations(
    const BelyiPoly& B, const Integer& p) {
  NormalizedConjugateValuations out;
  out.p = p;
  out.d = B.d;
  out.k = B.k;
  long v_ak = vp_rat(B.poly.leading_coefficient(), p);
  out.v_beta = make_rational(Integer(v_ak), Integer(B.d - 1));
  for (const auto& [e, c] : B.poly.terms()) {
    Rational val = Rational(vp_rat(c, p)) - Rational(e - 1) * out.v_beta;
    out.entries.push_back({e, std::move(val)});
  }
  if (out.entries.empty() || out.entries.back().exponent != B.d ||
      sgn(out.entries.back().valuation) != 0)
    throw std::logic_error("conjugate valuations: monic term is not 0");
  return out;
}

ReductionReport potential_good_reduction(const BelyiPoly& B, const Integer& p) {
  ReductionReport report;
  report.conjugate_valuations = normalized_conjugate_valuations(B, p);

  const ValuationEntry* least = nullptr;
  for (const auto& entry : report.conjugate_valuations.entries)
    if (least == nullptr || entry.valuation < least->valuation) least = &entry;

  if (least != nullptr && sgn(least->valuation) < 0) {
    report.verdict = Verdict::PersistentBadReduction;
    report.witness = *least;
  } else if (sgn(report.conjugate_valuations.v_beta) == 0) {
    report.verdict = Verdict::GoodReduction;
  } else {
    report.verdict = Verdict::PotentialGoodReduction;
  }
  return report;
}

std::vector<Integer> persistent_bad_primes(const BelyiPoly& B) {
  Integer lead = binomial(B.d - 1, B.k);
  if (lead == 1) return {};
  return prime_factors(lead);
}

ClassifierResult classify_theorem1(const Integer& d, const Integer& p) {
  if (d < 2) throw std::domain_error("classify_theorem1: need d >= 2");
  if (p < 2 || !is_probable_prime(p))
    throw std::invalid_argument("classify_theorem1: p must be prime");

  ClassifierResult res;
  Integer l = d;
  while (mpz_divisible_p(l.get_mpz_t(), p.get_mpz_t())) {
    l /= p;
    ++res.n;
  }
  res.l = l;
  res.q = l / p;
  res.r = l - res.q * p;
  res.possible = l > p;
  if (res.possible) {
    Integer k = pow_integer(p, static_cast<unsigned long>(res.n)) * res.r;
    res.witness_k = std::move(k);
  }
  return res;
}

std::pair<BelyiPoly, ReductionReport> witness_prop25(long d, const Integer& p) {
  ClassifierResult c = classify_theorem1(Integer(d), p);
  if (!c.possible)
    throw std::domain_error(
        "witness_prop25: no degree-" + std::to_string(d) +
        " PCF polynomial has persistent bad reduction at p=" + p.get_str());
  if (!mpz_fits_slong_p(c.witness_k->get_mpz_t()))
    throw std::overflow_error("witness_prop25: k out of range");
  long k = c.witness_k->get_si();
  BelyiPoly B = generate(d, k);
  ReductionReport report = potential_good_reduction(B, p);
  if (report.verdict != Verdict::PersistentBadReduction)
    throw std::logic_error("witness_prop25: witness verdict is not bad");
  return {std::move(B), std::move(report)};
}

Prop32Report prop32_verify(long d, const Integer& p) {
  if (d < 3) throw std::domain_error("prop32_verify: need d >= 3");
  if (p < 2 || !is_probable_prime(p))
    throw std::invalid_argument("prop32_verify: p must be prime");

  // g(a) = (d-1) a (a + c)^{d-1} + 1 with c = d/(d-1); the a^{j+1}
  // coefficient is (d-1) C(d-1,j) c^{d-1-j}.
  Rational c = make_rational(Integer(d), Integer(d - 1));
  Polynomial::TermMap terms;
  terms[0] = Rational(1);
  Rational cpow = pow_rational(c, d - 1);
  for (long j = 0; j <= d - 1; ++j) {
    terms[j + 1] = Rational(Integer(d - 1) * binomial(d - 1, j)) * cpow;
    if (j < d - 1) cpow /= c;
  }
  Polynomial g(std::move(terms));

  Prop32Report report;
  report.d = d;
  report.p = p;
  report.m = vp_int(Integer(d - 1), p);
  report.polygon = newton_polygon(g, p);

  Rational v_a;  // valuation of the chosen PCF parameter
  if (report.m == 0) {
    bool all_unit_roots = true;
    for (const auto& seg : report.polygon.segments())
      if (sgn(seg.slope) != 0) all_unit_roots = false;
    report.shape_ok = all_unit_roots;
    v_a = 0;
  } else {
    const auto& verts = report.polygon.vertices();
    Rational lowest(-Integer(d - 2) * report.m);
    report.shape_ok = verts.size() >= 2 && verts[0].index == 0 &&
                      sgn(verts[0].valuation) == 0 && verts[1].index == 1 &&
                      verts[1].valuation == lowest;
    v_a = Rational(Integer(d - 2) * report.m);
  }

  // beta^{d-1} = -a(d-1): v(beta) = (v(a) + m)/(d-1). Both non-leading
  // coefficients of the monic conjugate are (d/(d-1)) beta up to sign.
  Rational v_beta = (v_a + Rational(report.m)) / Rational(d - 1);
  Rational conj_val =
      Rational(vp_int(Integer(d), p)) - Rational(report.m) + v_beta;
  report.conjugate_coefficient_valuations = {conj_val, conj_val};
  if (report.m > 0 && sgn(conj_val) != 0) report.shape_ok = false;
  return report;
}

PcfObstructionDiagnostic pcf_newton_diagnostic(const Polynomial& f,
                                               const Integer& p) {
  if (f.degree() < 2)
    throw std::invalid_argument("pcf_newton_diagnostic: need degree >= 2");
  if (!f.is_monic())
    throw std::invalid_argument("pcf_newton_diagnostic: f must be monic");
  if (sgn(f.coefficient(0)) != 0)
    throw std::invalid_argument("pcf_newton_diagnostic: f must fix 0");

  PcfObstructionDiagnostic diag;
  bool has_negative = false;
  for (const auto& [e, c] : f.terms())
    if (vp_rat(c, p) < 0) has_negative = true;
  if (!has_negative) {
    diag.trivial = true;
    diag.r = 0;
    diag.necessary_condition_holds = true;
    return diag;
  }

  Polynomial fixed_points = f - Polynomial::identity();
  NewtonPolygon np_fixed = newton_polygon(fixed_points, p);
  const auto& fsegs = np_fixed.segments();
  if (fsegs.empty() || sgn(fsegs.back().slope) <= 0)
    throw std::logic_error("pcf_newton_diagnostic: expected a positive slope");
  diag.r = fsegs.back().slope;
  diag.fixed_at_max = fsegs.back().length;

  NewtonPolygon np_crit = newton_polygon(f.derivative(), p);
  bool oversized_critical_point = false;
  for (const auto& seg : np_crit.segments()) {
    if (seg.slope > diag.r) oversized_critical_point = true;
    if (seg.slope >= diag.r) diag.crit_at_max += seg.length;
  }
  diag.necessary_condition_holds =
      !oversized_critical_point && diag.crit_at_max >= diag.fixed_at_max;
  return diag;
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (long p : {2, 5, 7, 11, 13, 17}) {
    ClassifierResult c = classify_theorem1(18, p);
    auto [B, report] = witness_prop25(18, p);
    rows.push_back({Integer(p), c.n, c.l, c.r, B.k, B.poly});
  }
  return rows;
}

}  // namespace belyi
