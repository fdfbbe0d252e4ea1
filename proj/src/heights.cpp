/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/heights.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "belyi/belyi_poly.hpp"
#include "belyi/numtheory.hpp"

namespace belyi {

namespace {

// Sum of log|root| over roots on or outside the unit circle, with the
// 1e-20 unit-circle snap.
BigFloat log_outer_product(const RootSet& roots, mpfr_prec_t prec) {
  BigFloat total = BigFloat::of_long(0, prec);
  BigFloat one = BigFloat::of_long(1, prec);
  BigFloat snap = BigFloat::of(1e-20, prec);
  for (const auto& root : roots.roots) {
    BigFloat modulus = abs(root);
    if (abs(modulus - one) <= snap) continue;  // counts as exactly 1
    if (modulus > one) total += log(modulus);
  }
  return total;
}

long env_precision_override() {
  const char* env = std::getenv("BELYI_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return 0;
  long bits = std::strtol(env, nullptr, 10);
  return std::clamp(bits, 64L, 1L << 20);
}

}  // namespace

long default_precision_bits(long d, long k) {
  if (long bits = env_precision_override(); bits != 0) return bits;
  long coeff_bits = bit_length(binomial(d, k));
  return std::max(128L, coeff_bits + 64);
}

double mahler_measure(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
  if (!f.has_integer_coefficients())
    throw std::invalid_argument("mahler_measure: integer coefficients required");
  if (f.content() != 1)
    throw std::invalid_argument("mahler_measure: content must be 1");

  auto [g, zeros] = f.strip_zero_root();
  (void)zeros;  // roots at 0 never contribute to the Mahler product
  Integer lead = g.leading_coefficient().get_num();
  if (g.degree() == 0) {
    Rational a = abs(Rational(lead));
    return a.get_d();
  }

  long coeff_bits = 0;
  for (const auto& [e, c] : g.terms())
    coeff_bits = std::max(coeff_bits, bit_length(c.get_num()));
  long bits = std::max(128L, coeff_bits + 64);

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);
  RootSet roots = find_roots(g, bits);
  BigFloat m = log(abs(BigFloat::of(lead, prec))) + log_outer_product(roots, prec);
  return exp(m).to_double();
}

HeightReport height_belyi(long d, long k, long precision_bits) {
  BelyiPoly B = generate(d, k);
  Polynomial F = B.poly.strip_zero_root().first;
  long bits = precision_bits > 0 ? precision_bits : default_precision_bits(d, k);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);

  RootSet roots = find_roots(F, bits);
  Integer lead = binomial(d - 1, k);
  BigFloat log_mahler =
      log(BigFloat::of(lead, prec)) + log_outer_product(roots, prec);

  BigFloat dd = BigFloat::of_long(d, prec);
  BigFloat height = log_mahler / dd;
  BigFloat log_binom = log(BigFloat::of(binomial(d, k), prec));
  BigFloat half_width = BigFloat::of_long(k - 1, prec) *
                        log(BigFloat::of_long(2, prec)) / dd;

  HeightReport r;
  r.d = d;
  r.k = k;
  r.mahler = exp(log_mahler).to_double();
  r.log_mahler = log_mahler.to_double();
  r.height = height.to_double();
  r.ratio_binom = (log_mahler / log_binom).to_double();
  r.ratio_logd = (log_mahler / log(dd)).to_double();
  r.interval_lo = (height - half_width).to_double();
  r.interval_hi = (height + half_width).to_double();
  r.precision_bits = bits;
  r.residual_bound = roots.residual_bound;
  return r;
}

std::vector<HeightReport> asymptotic_sweep(const std::vector<long>& ks,
                                           const std::vector<long>& ds,
                                           long precision_bits, int threads) {
  std::vector<std::pair<long, long>> tasks;  // (d, k)
  for (long d : ds)
    for (long k : ks) tasks.emplace_back(d, k);
  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

  std::vector<HeightReport> rows(tasks.size());
  unsigned worker_count =
      threads > 0 ? static_cast<unsigned>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min<unsigned>(worker_count, tasks.size() == 0 ? 1 : tasks.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = height_belyi(tasks[i].first, tasks[i].second, precision_bits);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

}  // namespace belyi
