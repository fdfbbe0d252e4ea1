/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "belyi.h"

namespace {

// 0 = success, 1 = usage, 2 = failed verification/computation.
int exit_code(belyi_status status) {
  switch (status) {
    case BELYI_OK:
      return 0;
    case BELYI_ERR_USAGE:
    case BELYI_ERR_PARSE:
      return 1;
    default:
      return 2;
  }
}

int report_failure(belyi_status status) {
  std::cerr << "error: " << belyi_last_error() << "\n";
  return exit_code(status);
}

int print_string(belyi_status status, char* text, bool always_print = false) {
  if (text != nullptr && (status == BELYI_OK || always_print)) {
    std::cout << text;
    if (*text == '\0' || text[std::strlen(text) - 1] != '\n') std::cout << "\n";
  }
  belyi_string_free(text);
  if (status != BELYI_OK && belyi_last_error()[0] != '\0')
    return report_failure(status);
  return exit_code(status);
}

int print_poly(belyi_status status, belyi_poly* poly, bool as_json) {
  if (status != BELYI_OK) return report_failure(status);
  char* text = nullptr;
  status = belyi_poly_format(poly, as_json ? 1 : 0, &text);
  belyi_poly_free(poly);
  return print_string(status, text);
}

std::vector<long> parse_long_list(const std::string& spec) {
  // "1..4" (inclusive range) or "100,1000,10000"
  std::vector<long> out;
  auto dots = spec.find("..");
  if (dots != std::string::npos) {
    long lo = std::stol(spec.substr(0, dots));
    long hi = std::stol(spec.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("range must be ascending: " + spec);
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stol(item));
  }
  if (out.empty()) throw CLI::ValidationError("empty list: " + spec);
  return out;
}

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Conservative dynamical Belyi polynomials: construction, reduction "
      "classification at primes, and height growth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(belyi_version()));

  long d = 0, k = 0, p = 0, bits = 0;
  int threads = 0;
  std::string format = "text";
  std::string poly_file, out_file, k_spec, d_spec;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Print the Belyi polynomial B_{d,k}");
  gen->add_option("-d,--degree", d, "Degree (3..100000)")->required();
  gen->add_option("-k", k, "Ramification index k (1..d-2)")->required();
  add_format(gen);

  auto* verify = app.add_subcommand(
      "verify", "Check the defining critical-point properties of B_{d,k}");
  verify->add_option("-d,--degree", d)->required();
  verify->add_option("-k", k)->required();
  verify->add_option("--poly", poly_file,
                     "Verify this polynomial file instead of regenerating");

  auto* mirror = app.add_subcommand(
      "mirror", "Print the conjugate partner B_{d,d-1-k}");
  mirror->add_option("-d,--degree", d)->required();
  mirror->add_option("-k", k)->required();
  add_format(mirror);

  auto* reduce = app.add_subcommand(
      "reduce", "Reduction verdict of B_{d,k} at a prime");
  reduce->add_option("-d,--degree", d)->required();
  reduce->add_option("-k", k)->required();
  reduce->add_option("-p,--prime", p)->required();

  auto* classify = app.add_subcommand(
      "classify", "Can a degree-d PCF polynomial have persistent bad "
                  "reduction at p?");
  classify->add_option("-d,--degree", d)->required();
  classify->add_option("-p,--prime", p)->required();

  auto* witness = app.add_subcommand(
      "witness", "Belyi witness with persistent bad reduction at p");
  witness->add_option("-d,--degree", d)->required();
  witness->add_option("-p,--prime", p)->required();

  auto* badprimes = app.add_subcommand(
      "badprimes", "All primes where B_{d,k} has persistent bad reduction");
  badprimes->add_option("-d,--degree", d)->required();
  badprimes->add_option("-k", k)->required();

  auto* table1 = app.add_subcommand(
      "table1", "Degree-18 witness table over the primes below 18");
  add_format(table1);

  auto* prop32 = app.add_subcommand(
      "prop32", "Good-reduction certificate for the bicritical PCF family");
  prop32->add_option("-d,--degree", d)->required();
  prop32->add_option("-p,--prime", p)->required();

  auto* height = app.add_subcommand(
      "height", "Mahler measure and height of B_{d,k}");
  height->add_option("-d,--degree", d)->required();
  height->add_option("-k", k)->required();
  height->add_option("--bits", bits, "Working precision (0 = automatic)");

  auto* sweep = app.add_subcommand(
      "sweep-heights", "Height growth sweep over (d, k) pairs, CSV output");
  sweep->add_option("--k", k_spec, "k values, e.g. 1..4 or 2,3")->required();
  sweep->add_option("--d", d_spec, "d values, e.g. 100,1000,10000")->required();
  sweep->add_option("--out", out_file, "Output file ('-' for stdout)")
      ->required();
  sweep->add_option("--bits", bits, "Working precision (0 = automatic)");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* diagnose = app.add_subcommand(
      "diagnose", "Newton-polygon obstruction counts for a monic polynomial "
                  "fixing 0");
  diagnose->add_option("-p,--prime", p)->required();
  diagnose->add_option("--poly", poly_file, "Polynomial file ('-' for stdin)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  bool as_json = format == "json";
  char* text = nullptr;

  try {
    if (gen->parsed()) {
      belyi_poly* poly = nullptr;
      belyi_status st = belyi_gen(d, k, &poly);
      return print_poly(st, poly, as_json);
    }
    if (mirror->parsed()) {
      belyi_poly* poly = nullptr;
      belyi_status st = belyi_mirror(d, k, &poly);
      return print_poly(st, poly, as_json);
    }
    if (verify->parsed()) {
      belyi_poly* poly = nullptr;
      if (!poly_file.empty()) {
        belyi_status st = belyi_poly_parse(read_input_file(poly_file).c_str(),
                                           &poly);
        if (st != BELYI_OK) return report_failure(st);
      }
      belyi_status st = belyi_verify(d, k, poly, &text);
      belyi_poly_free(poly);
      return print_string(st, text, /*always_print=*/true);
    }
    if (reduce->parsed()) {
      belyi_status st = belyi_reduce(d, k, p, &text);
      return print_string(st, text);
    }
    if (classify->parsed()) {
      belyi_status st = belyi_classify(d, p, &text);
      return print_string(st, text);
    }
    if (witness->parsed()) {
      belyi_status st = belyi_witness(d, p, &text);
      return print_string(st, text);
    }
    if (badprimes->parsed()) {
      belyi_status st = belyi_bad_primes(d, k, &text);
      return print_string(st, text);
    }
    if (table1->parsed()) {
      belyi_status st = belyi_table1(as_json ? 1 : 0, &text);
      return print_string(st, text);
    }
    if (prop32->parsed()) {
      belyi_status st = belyi_prop32(d, p, &text);
      return print_string(st, text, /*always_print=*/true);
    }
    if (height->parsed()) {
      belyi_status st = belyi_height(d, k, bits, &text);
      return print_string(st, text);
    }
    if (sweep->parsed()) {
      std::vector<long> ks = parse_long_list(k_spec);
      std::vector<long> ds = parse_long_list(d_spec);
      belyi_status st = belyi_sweep_heights(ks.data(), ks.size(), ds.data(),
                                            ds.size(), bits, threads, &text);
      if (st != BELYI_OK) {
        belyi_string_free(text);
        return report_failure(st);
      }
      if (out_file == "-") {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) {
          belyi_string_free(text);
          std::cerr << "error: cannot write " << out_file << "\n";
          return 1;
        }
        out << text;
      }
      belyi_string_free(text);
      return 0;
    }
    if (diagnose->parsed()) {
      belyi_poly* poly = nullptr;
      belyi_status st =
          belyi_poly_parse(read_input_file(poly_file).c_str(), &poly);
      if (st != BELYI_OK) return report_failure(st);
      st = belyi_diagnose(poly, p, &text);
      belyi_poly_free(poly);
      return print_string(st, text);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
