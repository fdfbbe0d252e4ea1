/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include "belyi/numtheory.hpp"
#include "belyi/serialize.hpp"

struct belyi_poly {
  belyi::Polynomial value;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// The CLI contract caps degrees at 10^5; the exact kernels stay correct
// beyond that but generation cost grows with the coefficient sizes.
constexpr long kMaxDegree = 100000;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

void require_out(const void* out) {
  if (out == nullptr)
    throw std::domain_error("output parameter must not be null");
}

template <typename Fn>
belyi_status guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    return fn();
  } catch (const belyi::RootFindingError& e) {
    t_last_error = std::string(e.what()) +
                   " (best residual " + std::to_string(e.best_residual) + ")";
    return BELYI_ERR_NOCONVERGE;
  } catch (const std::domain_error& e) {
    t_last_error = e.what();
    return BELYI_ERR_USAGE;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    // Parse failures are the only invalid_argument raised above the exact
    // kernels with this prefix.
    if (t_last_error.rfind("polynomial parse error", 0) == 0)
      return BELYI_ERR_PARSE;
    return BELYI_ERR_USAGE;
  } catch (const std::logic_error& e) {
    t_last_error = e.what();
    return BELYI_ERR_VERIFY;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return BELYI_ERR_INTERNAL;
  }
}

long checked_degree(long d) {
  require(d >= 0 && d <= kMaxDegree,
          "degree out of range (0 <= d <= 100000)");
  return d;
}

belyi::Integer checked_prime(long p) {
  require(p >= 2, "p must be a prime >= 2");
  belyi::Integer P(p);
  require(belyi::is_probable_prime(P), std::to_string(p) + " is not prime");
  return P;
}

}  // namespace

extern "C" {

const char* belyi_version(void) { return "0.1.0"; }

const char* belyi_last_error(void) { return t_last_error.c_str(); }

void belyi_string_free(char* s) { std::free(s); }

void belyi_poly_free(belyi_poly* p) { delete p; }

belyi_status belyi_poly_parse(const char* input, belyi_poly** out) {
  return guarded([&] {
    require_out(out);
    require(input != nullptr, "input must not be null");
    auto poly = std::make_unique<belyi_poly>();
    poly->value = belyi::poly_parse(input);
    *out = poly.release();
    return BELYI_OK;
  });
}

belyi_status belyi_poly_format(const belyi_poly* p, int as_json, char** out) {
  return guarded([&] {
    require_out(out);
    require(p != nullptr, "polynomial handle must not be null");
    std::string s = as_json ? belyi::poly_to_json(p->value).dump()
                            : belyi::poly_to_text(p->value);
    *out = dup_string(s);
    return BELYI_OK;
  });
}

belyi_status belyi_gen(long d, long k, belyi_poly** out) {
  return guarded([&] {
    require_out(out);
    checked_degree(d);
    auto poly = std::make_unique<belyi_poly>();
    poly->value = belyi::generate(d, k).poly;
    *out = poly.release();
    return BELYI_OK;
  });
}

belyi_status belyi_mirror(long d, long k, belyi_poly** out) {
  return guarded([&] {
    require_out(out);
    checked_degree(d);
    auto poly = std::make_unique<belyi_poly>();
    poly->value = belyi::mirror(belyi::generate(d, k)).poly;
    *out = poly.release();
    return BELYI_OK;
  });
}

belyi_status belyi_verify(long d, long k, const belyi_poly* poly,
                          char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    belyi::BelyiPoly candidate;
    candidate.d = d;
    candidate.k = k;
    candidate.poly = poly != nullptr ? poly->value : belyi::generate(d, k).poly;
    belyi::ConservativeReport report = belyi::verify_conservative(candidate);
    *json_out = dup_string(belyi::to_json(report, d, k).dump(2));
    return report.pass ? BELYI_OK : BELYI_ERR_VERIFY;
  });
}

belyi_status belyi_reduce(long d, long k, long p, char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    belyi::Integer P = checked_prime(p);
    auto report = belyi::potential_good_reduction(belyi::generate(d, k), P);
    *json_out = dup_string(belyi::to_json(report).dump(2));
    return BELYI_OK;
  });
}

belyi_status belyi_classify(long d, long p, char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    belyi::Integer P = checked_prime(p);
    auto result = belyi::classify_theorem1(belyi::Integer(d), P);
    *json_out = dup_string(belyi::to_json(result).dump(2));
    return BELYI_OK;
  });
}

belyi_status belyi_witness(long d, long p, char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    belyi::Integer P = checked_prime(p);
    auto [B, report] = belyi::witness_prop25(d, P);
    belyi::Json j;
    j["d"] = B.d;
    j["p"] = p;
    j["k"] = B.k;
    j["polynomial_text"] = belyi::poly_to_text(B.poly);
    j["polynomial"] = belyi::poly_to_json(B.poly);
    j["report"] = belyi::to_json(report);
    *json_out = dup_string(j.dump(2));
    return BELYI_OK;
  });
}

belyi_status belyi_bad_primes(long d, long k, char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    auto primes = belyi::persistent_bad_primes(belyi::generate(d, k));
    belyi::Json j;
    j["d"] = d;
    j["k"] = k;
    belyi::Json list = belyi::Json::array();
    for (const auto& p : primes) list.push_back(p.get_si());
    j["persistent_bad_primes"] = std::move(list);
    *json_out = dup_string(j.dump(2));
    return BELYI_OK;
  });
}

belyi_status belyi_table1(int as_json, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup_string(as_json ? belyi::table1_json().dump(2)
                              : belyi::table1_text());
    return BELYI_OK;
  });
}

belyi_status belyi_prop32(long d, long p, char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    belyi::Integer P = checked_prime(p);
    auto report = belyi::prop32_verify(d, P);
    *json_out = dup_string(belyi::to_json(report).dump(2));
    return report.shape_ok ? BELYI_OK : BELYI_ERR_VERIFY;
  });
}

belyi_status belyi_height(long d, long k, long precision_bits,
                          char** json_out) {
  return guarded([&] {
    require_out(json_out);
    checked_degree(d);
    require(precision_bits >= 0 && precision_bits <= (1 << 20),
            "precision_bits out of range");
    auto report = belyi::height_belyi(d, k, precision_bits);
    *json_out = dup_string(belyi::to_json(report).dump(2));
    return BELYI_OK;
  });
}

belyi_status belyi_sweep_heights(const long* ks, size_t nks, const long* ds,
                                 size_t nds, long precision_bits, int threads,
                                 char** csv_out) {
  return guarded([&] {
    require_out(csv_out);
    require(ks != nullptr && nks > 0, "at least one k is required");
    require(ds != nullptr && nds > 0, "at least one d is required");
    require(threads >= 0, "threads must be >= 0");
    std::vector<long> kv(ks, ks + nks), dv(ds, ds + nds);
    for (long d : dv) checked_degree(d);
    auto rows = belyi::asymptotic_sweep(kv, dv, precision_bits, threads);
    *csv_out = dup_string(belyi::sweep_to_csv(rows));
    return BELYI_OK;
  });
}

belyi_status belyi_diagnose(const belyi_poly* f, long p, char** json_out) {
  return guarded([&] {
    require_out(json_out);
    require(f != nullptr, "polynomial handle must not be null");
    belyi::Integer P = checked_prime(p);
    auto diag = belyi::pcf_newton_diagnostic(f->value, P);
    *json_out = dup_string(belyi::to_json(diag, P).dump(2));
    return BELYI_OK;
  });
}

}  // extern "C"
