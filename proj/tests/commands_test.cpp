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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ihcalc/commands.hpp"
#include "ihcalc/error.hpp"

using ihc::LaurentPoly;
using namespace ihc::commands;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

LaurentPoly ih_of(const RunReport& r) { return poly_from_json(r.results.at("ih")); }

const Check* find_check(const RunReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

ihc::Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const ihc::Error& e) {
    return e.code();
  }
  FAIL("expected ihc::Error");
  return ihc::Errc::internal_mismatch;
}

constexpr const char* kQuadricFibration = R"({
  "n": 4, "m": 1, "p": 2, "q": 1,
  "fiber": [1, 0, 2, 0, 1],
  "h_resolution": [1, 0, 3, 0, 4, 0, 3, 0, 1],
  "h_delta": [1, 0, 1]
})";

}  // namespace

TEST_CASE("poly json forms") {
  const LaurentPoly p = P("t^-1 + 5/2*t^3");
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(nlohmann::json::parse("[1, 0, 2]")) == P("1 + 2*t^2"));
  CHECK(poly_from_json(nlohmann::json("1 + t")) == P("1 + t"));
  CHECK(poly_from_json(nlohmann::json::parse(R"({"min_degree": -2, "coefficients": [3, "1/2"]})")) ==
        P("3*t^-2 + 1/2*t^-1"));
  CHECK(error_code([] { poly_from_json(nlohmann::json::parse("[1, \"x\"]")); }) ==
        ihc::Errc::parse_error);
  CHECK(integer_to_json(ihc::Integer("123456789012345678901234567890")).is_string());
  CHECK(integer_to_json(ihc::Integer(-7)) == -7);
}

TEST_CASE("generic command") {
  const RunReport r = cmd_generic(kQuadricFibration);
  CHECK(r.passed());
  CHECK(ih_of(r) == P("1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8"));
  CHECK(poly_from_json(r.results.at("g")) == P("t^2 + t^4"));
  CHECK(poly_from_json(r.results.at("f")) == P("t^2 + 2*t^4 + t^6"));
  CHECK(r.results.at("decomposition").at("summands").size() == 2);
  CHECK_FALSE(r.assumed_hypotheses.empty());
  CHECK(r.to_text().find("1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8") != std::string::npos);
  CHECK(r.to_json().at("passed") == true);
}

TEST_CASE("generic command with p < q") {
  const RunReport r = cmd_generic(R"({"n": 5, "m": 0, "p": 2, "q": 3,
    "fiber": [1, 0, 1, 0, 1], "h_resolution": [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    "h_delta": [1]})");
  CHECK(r.passed());
  CHECK(ih_of(r) == P("1 + t^2 + t^4 + t^6 + t^8 + t^10"));
  CHECK(r.results.at("decomposition").at("summands").empty());
}

TEST_CASE("generic command reports violations as failed checks") {
  const RunReport r = cmd_generic(R"({"n": 7, "m": 1, "p": 2, "q": 1,
    "fiber": [1, 0, 2, 0, 1], "h_resolution": [1], "h_delta": [1, 0, 1]})");
  CHECK_FALSE(r.passed());
  const Check* c = find_check(r, "validate:dimension_mismatch");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
}

TEST_CASE("malformed documents raise ParseError") {
  for (const char* doc : {"{", "[]", R"({"n": 4})", R"({"n": "four", "m": 1, "p": 2, "q": 1,
      "fiber": [1], "h_resolution": [1], "h_delta": [1]})"}) {
    CAPTURE(doc);
    CHECK(error_code([doc] { cmd_generic(doc); }) == ihc::Errc::parse_error);
  }
}

TEST_CASE("schubert report round-trips through the generic command") {
  for (const ihc::schubert::SchubertDatum d :
       {ihc::schubert::SchubertDatum{1, 2, 2, 3}, {2, 3, 5, 9}, {2, 5, 3, 7}, {1, 2, 2, 5}}) {
    const RunReport s = cmd_schubert(d);
    CHECK(s.passed());
    const std::string doc = s.to_json().dump();
    const RunReport g = cmd_generic(doc);
    CHECK(g.passed());
    CHECK(ih_of(g) == ih_of(s));
  }
  const RunReport s = cmd_schubert({1, 2, 2, 3});
  CHECK(ih_of(s) == P("1 + t^2 + t^4"));
  CHECK(s.routes == std::vector<std::string>{"f1", "f2", "f3", "generic"});
  CHECK(s.results.at("pi_small") == false);
  CHECK(error_code([] { cmd_schubert({0, 2, 2, 3}); }) == ihc::Errc::invalid_datum);
}

TEST_CASE("hypersurface report") {
  const RunReport r = cmd_hypersurface(1, 1, 1, 1);
  CHECK(r.passed());
  CHECK(ih_of(r) == P("1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8"));
  CHECK(r.results.at("c4").at("intersection_ring") == 12);
  CHECK(r.results.at("genus") == 0);
  const RunReport big = cmd_hypersurface(ihc::Integer("1000000000000"), 1, 1,
                                         ihc::Integer("1000000000000"));
  CHECK(big.passed());
  CHECK(big.results.at("delta").is_string());
  const RunReport g = cmd_generic(big.to_json().dump());
  CHECK(ih_of(g) == ih_of(big));
  CHECK(error_code([] { cmd_hypersurface(1, 2, 3, 4); }) == ihc::Errc::invalid_datum);
}

TEST_CASE("verify commands") {
  const RunReport s = cmd_verify_schubert(8);
  CHECK(s.passed());
  CHECK(s.results.at("mismatch_count") == 0);
  CHECK(s.results.at("skipped_count").get<int>() > 0);
  const RunReport h = cmd_verify_hypersurface(3);
  CHECK(h.passed());
  CHECK(h.results.at("sweep_size") == 19);
  CHECK(error_code([] { cmd_verify_hypersurface(0); }) == ihc::Errc::invalid_datum);
}
