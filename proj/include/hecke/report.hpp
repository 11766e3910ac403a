#pragma once

// JSON and text rendering of classification reports.
//
// JSON schema:
//   { "input":   { "spec": str, "characteristic": int,
//                  "q": { "kind": "one" | "root_of_unity", "e": int? },
//                  "B_Q": { "kind": "equal_q" | "one" | "generic" | "minus_power", "f": int? }? },
//     "factors": [ { "type": str, "status": str, "multiplicity": int?,
//                    "criterion": str, "basis": "theorem" | "conjectural" | "derived" } ],
//     "overall": { "status": str, "basis": str } }
// "B_Q" is present when the spec has a type B factor or Q is not the default.

#include "hecke/classifier.hpp"

#include "json.hpp"

#include <string>

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const ClassificationReport& rep);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
ClassificationReport report_from_json(const Json& j);

std::string to_text(const ClassificationReport& rep);

std::string b_parameter_kind(const BParameter& q);
Json to_json(const IntPolynomial& p);

} // namespace hecke
