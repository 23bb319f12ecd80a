/*
   Copyright 2026 The ihcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IHCALC_COMMANDS_HPP
#define IHCALC_COMMANDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ihcalc/blowup5.hpp"
#include "ihcalc/laurent.hpp"
#include "ihcalc/schubert.hpp"
#include "ihcalc/twostrata.hpp"

namespace ihc::commands {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of one front-end command. `passed()` decides the exit status.
struct RunReport {
  std::string command;
  Json input = Json::object();
  std::vector<std::string> routes;
  Json results = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> assumed_hypotheses;
  double elapsed_ms = 0.0;

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = {});

  Json to_json() const;
  std::string to_text() const;
};

// Structured forms. A polynomial is {"text", "min_degree", "coefficients"};
// integer coefficients are JSON numbers when they fit in 64 bits, strings
// otherwise ("a/b" for non-integers).
Json integer_to_json(const Integer& value);
Json poly_to_json(const LaurentPoly& poly);
/// Accepts a coefficient array from degree 0, a {"min_degree",
/// "coefficients"} object, or the text form. Throws ParseError.
LaurentPoly poly_from_json(const nlohmann::json& value);
Json two_strata_to_json(const TwoStrataData& data);
/// Fields n, m, p, q, fiber, h_resolution, h_delta and the optional
/// projectivity flags (default true). Throws ParseError.
TwoStrataData two_strata_from_json(const nlohmann::json& value);

/// `document` is a two-strata object, or any object embedding one under
/// "two_strata_data", at top level or under "results" as in a structured report. Throws
/// ParseError; validation failures become failed checks.
RunReport cmd_generic(std::string_view document);
/// Throws InvalidDatum.
RunReport cmd_schubert(const schubert::SchubertDatum& datum);
/// Throws InvalidDatum.
RunReport cmd_hypersurface(const Integer& d1, const Integer& d2, const Integer& d3,
                           const Integer& d4);
RunReport cmd_verify_schubert(int max_l);
RunReport cmd_verify_hypersurface(int max_d);

}  // namespace ihc::commands

#endif  // IHCALC_COMMANDS_HPP
