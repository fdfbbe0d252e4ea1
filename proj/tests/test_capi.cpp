/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "belyi.h"

using Json = nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  belyi_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error state") {
  CHECK(belyi_version() != nullptr);
  CHECK(belyi_last_error() != nullptr);
}

TEST_CASE("gen + format") {
  belyi_poly* p = nullptr;
  REQUIRE(belyi_gen(4, 1, &p) == BELYI_OK);
  char* text = nullptr;
  REQUIRE(belyi_poly_format(p, 0, &text) == BELYI_OK);
  CHECK(take(text) == "-3z^4 + 4z^3");
  char* json = nullptr;
  REQUIRE(belyi_poly_format(p, 1, &json) == BELYI_OK);
  CHECK(Json::parse(take(json)) == Json::parse(R"([[3,"4","1"],[4,"-3","1"]])"));
  belyi_poly_free(p);
}

TEST_CASE("gen range error") {
  belyi_poly* p = nullptr;
  CHECK(belyi_gen(2, 1, &p) == BELYI_ERR_USAGE);
  CHECK(std::strlen(belyi_last_error()) > 0);
  CHECK(belyi_gen(200001, 1, &p) == BELYI_ERR_USAGE);
  CHECK(belyi_gen(4, 1, nullptr) == BELYI_ERR_USAGE);
}

TEST_CASE("parse round-trip and parse errors") {
  belyi_poly* p = nullptr;
  REQUIRE(belyi_poly_parse("3z^4 - 8z^3 + 6z^2", &p) == BELYI_OK);
  char* text = nullptr;
  REQUIRE(belyi_poly_format(p, 0, &text) == BELYI_OK);
  CHECK(take(text) == "3z^4 - 8z^3 + 6z^2");
  belyi_poly_free(p);

  belyi_poly* q = nullptr;
  CHECK(belyi_poly_parse("this is not a polynomial", &q) == BELYI_ERR_PARSE);
  CHECK(std::strlen(belyi_last_error()) > 0);
  CHECK(belyi_poly_parse(nullptr, &q) == BELYI_ERR_USAGE);
}

TEST_CASE("mirror") {
  belyi_poly* p = nullptr;
  REQUIRE(belyi_mirror(4, 1, &p) == BELYI_OK);
  char* text = nullptr;
  REQUIRE(belyi_poly_format(p, 0, &text) == BELYI_OK);
  CHECK(take(text) == "3z^4 - 8z^3 + 6z^2");
  belyi_poly_free(p);
}

TEST_CASE("verify") {
  char* json = nullptr;
  REQUIRE(belyi_verify(4, 1, nullptr, &json) == BELYI_OK);
  CHECK(Json::parse(take(json))["pass"] == true);

  belyi_poly* bad = nullptr;
  REQUIRE(belyi_poly_parse("-3z^4 + 4z^3 + 1", &bad) == BELYI_OK);
  REQUIRE(belyi_verify(4, 1, bad, &json) == BELYI_ERR_VERIFY);
  Json report = Json::parse(take(json));
  CHECK(report["pass"] == false);
  CHECK(report["first_violation"] == "B(0) = 0");
  belyi_poly_free(bad);
}

TEST_CASE("reduce") {
  char* json = nullptr;
  REQUIRE(belyi_reduce(18, 2, 2, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["verdict"] == "PersistentBadReduction");
  CHECK(r["v_beta"] == "3/17");
  CHECK(belyi_reduce(18, 2, 4, &json) == BELYI_ERR_USAGE);  // 4 is not prime
}

TEST_CASE("classify") {
  char* json = nullptr;
  REQUIRE(belyi_classify(18, 3, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["possible"] == false);
  REQUIRE(belyi_classify(18, 2, &json) == BELYI_OK);
  CHECK(Json::parse(take(json))["witness_k"] == 2);
}

TEST_CASE("witness") {
  char* json = nullptr;
  REQUIRE(belyi_witness(18, 7, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["k"] == 4);
  CHECK(r["polynomial_text"] ==
        "2380z^18 - 10080z^17 + 16065z^16 - 11424z^15 + 3060z^14");
  CHECK(r["report"]["verdict"] == "PersistentBadReduction");
  CHECK(belyi_witness(16, 2, &json) == BELYI_ERR_USAGE);
}

TEST_CASE("bad primes") {
  char* json = nullptr;
  REQUIRE(belyi_bad_primes(18, 7, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["persistent_bad_primes"] == Json::parse("[2,11,13,17]"));
}

TEST_CASE("table1 text is stable") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(belyi_table1(0, &a) == BELYI_OK);
  REQUIRE(belyi_table1(0, &b) == BELYI_OK);
  std::string sa = take(a), sb = take(b);
  CHECK(sa == sb);
  CHECK(sa.find("136z^18") != std::string::npos);
  char* j = nullptr;
  REQUIRE(belyi_table1(1, &j) == BELYI_OK);
  CHECK(Json::parse(take(j)).size() == 6);
}

TEST_CASE("prop32") {
  char* json = nullptr;
  REQUIRE(belyi_prop32(4, 3, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["shape_ok"] == true);
  CHECK(r["m"] == 1);
}

TEST_CASE("height") {
  char* json = nullptr;
  REQUIRE(belyi_height(4, 2, 0, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["height"].get<double>() == doctest::Approx(0.447939867307).epsilon(1e-10));
  CHECK(belyi_height(4, 2, -5, &json) == BELYI_ERR_USAGE);
}

TEST_CASE("sweep") {
  long ks[] = {1};
  long ds[] = {10, 20};
  char* csv = nullptr;
  REQUIRE(belyi_sweep_heights(ks, 1, ds, 2, 0, 2, &csv) == BELYI_OK);
  std::string s = take(csv);
  CHECK(s.rfind("d,k,", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 3);
  CHECK(belyi_sweep_heights(nullptr, 0, ds, 2, 0, 2, &csv) == BELYI_ERR_USAGE);
}

TEST_CASE("diagnose") {
  belyi_poly* p = nullptr;
  REQUIRE(belyi_poly_parse("z^2 + (1/5)z", &p) == BELYI_OK);
  char* json = nullptr;
  REQUIRE(belyi_diagnose(p, 5, &json) == BELYI_OK);
  Json r = Json::parse(take(json));
  CHECK(r["r"] == "1");
  CHECK(r["necessary_condition_holds"] == true);
  belyi_poly_free(p);
  CHECK(belyi_diagnose(nullptr, 5, &json) == BELYI_ERR_USAGE);
}

TEST_CASE("free functions tolerate null") {
  belyi_string_free(nullptr);
  belyi_poly_free(nullptr);
}
