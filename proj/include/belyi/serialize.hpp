/*
 * (C) Copyright 2026 the libbelyi authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BELYI_SERIALIZE_HPP
#define BELYI_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "belyi/heights.hpp"
#include "belyi/reduction.hpp"

namespace belyi {

using Json = nlohmann::ordered_json;

// "n" for integers, "n/d" otherwise.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// Descending-exponent text form, e.g. "-3z^4 + 4z^3" or "(64/9)z + 1".
std::string poly_to_text(const Polynomial& f);
Polynomial poly_from_text(const std::string& text);

// JSON list-of-[exponent, numerator, denominator] with numerator and
// denominator as decimal strings (coefficients routinely exceed the range
// JSON numbers can carry exactly).
Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j);

// Accepts either the text form or the JSON form.
Polynomial poly_parse(const std::string& input);

Json to_json(const NewtonPolygon& np, const Integer& p);
NewtonPolygon polygon_from_json(const Json& j);

Json to_json(const ReductionReport& r);
Json to_json(const ClassifierResult& c);
Json to_json(const Prop32Report& r);
Json to_json(const HeightReport& r);
Json to_json(const PcfObstructionDiagnostic& d, const Integer& p);
Json to_json(const ConservativeReport& r, long d, long k);

// CSV with header d,k,height,ratio_binom,ratio_logd,interval_lo,interval_hi,precision_bits
std::string sweep_to_csv(const std::vector<HeightReport>& rows);

std::string table1_text();
Json table1_json();

}  // namespace belyi

#endif  // BELYI_SERIALIZE_HPP
