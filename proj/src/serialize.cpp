/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "belyi/serialize.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace belyi {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

struct TextCursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return s.substr(start, pos - start);
  }
};

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::invalid_argument("polynomial parse error: " + what);
}

// integer or integer/integer, optionally parenthesized
Rational parse_coefficient(TextCursor& c, bool& found) {
  found = false;
  c.skip_ws();
  bool parens = c.accept('(');
  std::string num = c.digits();
  if (num.empty()) {
    if (parens) parse_fail("empty parentheses");
    return Rational(1);
  }
  found = true;
  Rational q{Integer(num)};
  if (c.accept('/')) {
    std::string den = c.digits();
    if (den.empty()) parse_fail("missing denominator");
    q = make_rational(Integer(num), Integer(den));
  }
  if (parens && !c.accept(')')) parse_fail("missing ')'");
  return q;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

std::string poly_to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = sgn(c) < 0;
    Rational a = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += rational_to_string(a);
      continue;
    }
    if (a != 1) {
      std::string coeff = rational_to_string(a);
      out += is_integral(a) ? coeff : "(" + coeff + ")";
    }
    out += "z";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial poly_from_text(const std::string& text) {
  TextCursor c{text};
  if (c.done()) parse_fail("empty input");
  Polynomial::TermMap terms;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.accept('-')) {
      sign = -1;
    } else if (c.accept('+')) {
      if (first) parse_fail("leading '+'");
    } else if (!first) {
      parse_fail("expected '+' or '-' between terms");
    }
    bool has_coeff = false;
    Rational coeff = parse_coefficient(c, has_coeff);
    c.accept('*');
    long exponent = 0;
    c.skip_ws();
    if (!c.done() && (c.peek() == 'z' || c.peek() == 'Z')) {
      ++c.pos;
      exponent = 1;
      if (c.accept('^')) {
        std::string e = c.digits();
        if (e.empty()) parse_fail("missing exponent");
        exponent = std::stol(e);
      }
    } else if (!has_coeff) {
      parse_fail("expected coefficient or 'z'");
    }
    if (sign < 0) coeff = -coeff;
    auto [it, inserted] = terms.emplace(exponent, coeff);
    if (!inserted) it->second += coeff;
    first = false;
  }
  return Polynomial(std::move(terms));
}

Json poly_to_json(const Polynomial& f) {
  Json list = Json::array();
  for (const auto& [e, c] : f.terms())
    list.push_back(Json::array(
        {e, c.get_num().get_str(), c.get_den().get_str()}));
  return list;
}

Polynomial poly_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected a JSON array of terms");
  Polynomial::TermMap terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3)
      parse_fail("each term must be [exponent, numerator, denominator]");
    long e = entry[0].get<long>();
    auto read_int = [](const Json& v) {
      if (v.is_string()) return Integer(v.get<std::string>());
      return Integer(v.get<long>());
    };
    Rational c = make_rational(read_int(entry[1]), read_int(entry[2]));
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) it->second += c;
  }
  return Polynomial(std::move(terms));
}

Polynomial poly_parse(const std::string& input) {
  std::size_t i = 0;
  while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i])))
    ++i;
  if (i < input.size() && input[i] == '[') {
    Json j = Json::parse(input, nullptr, true);
    return poly_from_json(j);
  }
  return poly_from_text(input);
}

Json to_json(const NewtonPolygon& np, const Integer& p) {
  Json j;
  j["p"] = p.get_si();
  Json vertices = Json::array();
  for (const auto& v : np.vertices())
    vertices.push_back(Json::array({v.index, rational_to_string(v.valuation)}));
  j["vertices"] = std::move(vertices);
  Json segments = Json::array();
  for (const auto& s : np.segments())
    segments.push_back(
        {{"slope", rational_to_string(s.slope)}, {"length", s.length}});
  j["segments"] = std::move(segments);
  return j;
}

NewtonPolygon polygon_from_json(const Json& j) {
  std::vector<ValuedPoint> pts;
  for (const auto& v : j.at("vertices"))
    pts.push_back({v.at(0).get<long>(),
                   rational_from_string(v.at(1).get<std::string>())});
  return NewtonPolygon::from_points(std::move(pts));
}

Json to_json(const ReductionReport& r) {
  const auto& cv = r.conjugate_valuations;
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["p"] = cv.p.get_si();
  j["d"] = cv.d;
  j["k"] = cv.k;
  j["v_beta"] = rational_to_string(cv.v_beta);
  Json entries = Json::array();
  for (const auto& e : cv.entries)
    entries.push_back({{"exponent", e.exponent},
                       {"valuation", rational_to_string(e.valuation)}});
  j["entries"] = std::move(entries);
  if (r.witness) {
    j["witness"] = {{"exponent", r.witness->exponent},
                    {"valuation", rational_to_string(r.witness->valuation)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const ClassifierResult& c) {
  Json j;
  j["possible"] = c.possible;
  j["n"] = c.n;
  j["l"] = c.l.get_si();
  j["q"] = c.q.get_si();
  j["r"] = c.r.get_si();
  if (c.witness_k)
    j["witness_k"] = c.witness_k->get_si();
  else
    j["witness_k"] = nullptr;
  return j;
}

Json to_json(const Prop32Report& r) {
  Json j;
  j["d"] = r.d;
  j["p"] = r.p.get_si();
  j["m"] = r.m;
  j["polygon"] = to_json(r.polygon, r.p);
  j["shape_ok"] = r.shape_ok;
  Json vals = Json::array();
  for (const auto& v : r.conjugate_coefficient_valuations)
    vals.push_back(rational_to_string(v));
  j["conjugate_coefficient_valuations"] = std::move(vals);
  return j;
}

Json to_json(const HeightReport& r) {
  Json j;
  j["d"] = r.d;
  j["k"] = r.k;
  j["mahler"] = r.mahler;
  j["log_mahler"] = r.log_mahler;
  j["height"] = r.height;
  j["ratio_binom"] = r.ratio_binom;
  j["ratio_logd"] = r.ratio_logd;
  j["conjugate_interval"] = Json::array({r.interval_lo, r.interval_hi});
  j["precision_bits"] = r.precision_bits;
  j["residual_bound"] = r.residual_bound;
  return j;
}

Json to_json(const PcfObstructionDiagnostic& d, const Integer& p) {
  Json j;
  j["p"] = p.get_si();
  j["trivial"] = d.trivial;
  j["r"] = rational_to_string(d.r);
  j["fixed_at_max"] = d.fixed_at_max;
  j["crit_at_max"] = d.crit_at_max;
  j["necessary_condition_holds"] = d.necessary_condition_holds;
  return j;
}

Json to_json(const ConservativeReport& r, long d, long k) {
  Json j;
  j["d"] = d;
  j["k"] = k;
  j["pass"] = r.pass;
  if (r.first_violation.empty())
    j["first_violation"] = nullptr;
  else
    j["first_violation"] = r.first_violation;
  return j;
}

std::string sweep_to_csv(const std::vector<HeightReport>& rows) {
  std::string out =
      "d,k,height,ratio_binom,ratio_logd,interval_lo,interval_hi,precision_bits\n";
  for (const auto& r : rows) {
    out += std::to_string(r.d) + "," + std::to_string(r.k) + "," +
           format_double(r.height) + "," + format_double(r.ratio_binom) + "," +
           format_double(r.ratio_logd) + "," + format_double(r.interval_lo) +
           "," + format_double(r.interval_hi) + "," +
           std::to_string(r.precision_bits) + "\n";
  }
  return out;
}

std::string table1_text() {
  auto rows = table1_rows();
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"p", "n", "l", "r", "k", "B_{18,k}"});
  for (const auto& row : rows)
    cells.push_back({row.p.get_str(), std::to_string(row.n), row.l.get_str(),
                     row.r.get_str(), std::to_string(row.k),
                     poly_to_text(row.poly)});
  std::array<std::size_t, 5> width{};
  for (const auto& line : cells)
    for (std::size_t c = 0; c < 5; ++c)
      width[c] = std::max(width[c], line[c].size());
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < 5; ++c) {
      out += line[c];
      out.append(width[c] - line[c].size() + 2, ' ');
    }
    out += line[5];
    out += "\n";
  }
  return out;
}

Json table1_json() {
  Json j = Json::array();
  for (const auto& row : table1_rows()) {
    j.push_back({{"p", row.p.get_si()},
                 {"n", row.n},
                 {"l", row.l.get_si()},
                 {"r", row.r.get_si()},
                 {"k", row.k},
                 {"polynomial_text", poly_to_text(row.poly)},
                 {"polynomial", poly_to_json(row.poly)}});
  }
  return j;
}

}  // namespace belyi
