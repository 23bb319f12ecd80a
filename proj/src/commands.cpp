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

#include "ihcalc/commands.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "ihcalc/error.hpp"
#include "ihcalc/grassmann.hpp"

namespace ihc::commands {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse_error, what); }

// Returns a description of the first failed structural property of an IH
// polynomial of a variety of complex dimension n.
std::optional<std::string> structural_failure(const LaurentPoly& ih, int n) {
  if (!ih.has_integer_coefficients() || !ih.has_nonnegative_coefficients()) {
    return "coefficients not nonnegative integers: " + ih.to_string();
  }
  if (ih.coefficient(0) != 1) return "constant term is not 1: " + ih.to_string();
  if (ih.max_degree() != 2 * n || !is_palindromic(ih, 2 * n)) {
    return "not palindromic of degree " + std::to_string(2 * n) + ": " + ih.to_string();
  }
  return std::nullopt;
}

void structural_checks(RunReport& report, const LaurentPoly& ih, int n) {
  report.check("ih_nonnegative_integer",
               ih.has_integer_coefficients() && ih.has_nonnegative_coefficients());
  report.check("ih_constant_term_one", ih.coefficient(0) == 1);
  report.check("ih_palindromic_degree_2n", ih.max_degree() == 2 * n && is_palindromic(ih, 2 * n),
               "2n = " + std::to_string(2 * n));
}

std::int64_t as_int(const nlohmann::json& value, const char* field) {
  if (!value.is_number_integer()) parse_fail(std::string("field '") + field + "' must be an integer");
  return value.get<std::int64_t>();
}

int as_small_int(const nlohmann::json& object, const char* field) {
  if (!object.contains(field)) parse_fail(std::string("missing field '") + field + "'");
  const std::int64_t v = as_int(object.at(field), field);
  if (v < -1000000 || v > 1000000) parse_fail(std::string("field '") + field + "' out of range");
  return static_cast<int>(v);
}

Rational rational_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) {
    return Rational(Integer(value.dump()));
  }
  if (value.is_string()) {
    Rational r;
    const std::string s = value.get<std::string>();
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
      parse_fail("bad rational coefficient \"" + s + "\"");
    }
    r.canonicalize();
    return r;
  }
  parse_fail("coefficient must be an integer or a rational string, got " + value.dump());
}

Json rational_to_json(const Rational& c) {
  if (c.get_den() == 1) return integer_to_json(c.get_num());
  return c.get_str();
}

Json summands_to_json(const DecompositionReport& report) {
  Json summands = Json::array();
  for (const Summand& s : report.summands) {
    summands.push_back({{"shift", s.shift}, {"multiplicity", s.multiplicity}});
  }
  return summands;
}

void render_value(std::ostream& os, const Json& value) {
  if (value.is_object() && value.contains("text") && value.contains("coefficients")) {
    os << value.at("text").get<std::string>();
  } else if (value.is_array() && value.size() > 12) {
    os << "[" << value.size() << " entries; use --format structured]";
  } else if (value.is_string()) {
    os << value.get<std::string>();
  } else {
    os << value.dump();
  }
}

}  // namespace

bool RunReport::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void RunReport::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

Json RunReport::to_json() const {
  Json out;
  out["command"] = command;
  out["input"] = input;
  out["routes"] = routes;
  out["results"] = results;
  Json check_list = Json::array();
  for (const Check& c : checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    check_list.push_back(std::move(entry));
  }
  out["checks"] = std::move(check_list);
  out["assumed_hypotheses"] = assumed_hypotheses;
  out["passed"] = passed();
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "input: " << input.dump() << "\n";
  if (!routes.empty()) {
    os << "routes:";
    for (std::size_t r = 0; r < routes.size(); ++r) os << (r ? ", " : " ") << routes[r];
    os << "\n";
  }
  os << "results:\n";
  for (const auto& [key, value] : results.items()) {
    if (key == "two_strata_data") continue;
    os << "  " << key << ": ";
    render_value(os, value);
    os << "\n";
  }
  os << "checks:\n";
  for (const Check& c : checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  if (!assumed_hypotheses.empty()) {
    os << "assumed hypotheses:\n";
    for (const auto& h : assumed_hypotheses) os << "  - " << h << "\n";
  }
  os << "status: " << (passed() ? "ok" : "FAILED") << " (" << checks.size() << " checks, "
     << elapsed_ms << " ms)\n";
  return os.str();
}

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

Json poly_to_json(const LaurentPoly& poly) {
  Json coefficients = Json::array();
  for (const Rational& c : poly.dense()) coefficients.push_back(rational_to_json(c));
  return Json{{"text", poly.to_string()},
              {"min_degree", poly.min_degree().value_or(0)},
              {"coefficients", std::move(coefficients)}};
}

LaurentPoly poly_from_json(const nlohmann::json& value) {
  if (value.is_string()) return LaurentPoly::parse(value.get<std::string>());
  std::int64_t min_degree = 0;
  const nlohmann::json* coefficients = &value;
  if (value.is_object()) {
    if (!value.contains("coefficients")) parse_fail("polynomial object needs 'coefficients'");
    coefficients = &value.at("coefficients");
    if (value.contains("min_degree")) min_degree = as_int(value.at("min_degree"), "min_degree");
  }
  if (!coefficients->is_array()) parse_fail("polynomial must be a coefficient array");
  std::vector<Rational> dense;
  for (const auto& c : *coefficients) dense.push_back(rational_from_json(c));
  return LaurentPoly::from_dense(dense, min_degree);
}

Json two_strata_to_json(const TwoStrataData& data) {
  auto coefficient_array = [](const LaurentPoly& poly) {
    Json out = Json::array();
    if (poly.is_zero()) return out;
    for (std::int64_t d = 0; d <= *poly.max_degree(); ++d) {
      out.push_back(rational_to_json(poly.coefficient(d)));
    }
    return out;
  };
  return Json{{"n", data.n},
              {"m", data.m},
              {"p", data.p},
              {"q", data.q},
              {"fiber", data.fiber.dims},
              {"h_resolution", coefficient_array(data.h_resolution)},
              {"h_delta", coefficient_array(data.h_delta)},
              {"resolution_is_projective", data.resolution_is_projective},
              {"delta_is_projective", data.delta_is_projective}};
}

TwoStrataData two_strata_from_json(const nlohmann::json& value) {
  if (!value.is_object()) parse_fail("two-strata document must be an object");
  TwoStrataData data;
  data.n = as_small_int(value, "n");
  data.m = as_small_int(value, "m");
  data.p = as_small_int(value, "p");
  data.q = as_small_int(value, "q");
  if (!value.contains("fiber") || !value.at("fiber").is_array()) {
    parse_fail("field 'fiber' must be an array of Betti numbers");
  }
  for (const auto& a : value.at("fiber")) data.fiber.dims.push_back(as_int(a, "fiber"));
  for (const char* field : {"h_resolution", "h_delta"}) {
    if (!value.contains(field)) parse_fail(std::string("missing field '") + field + "'");
  }
  data.h_resolution = poly_from_json(value.at("h_resolution"));
  data.h_delta = poly_from_json(value.at("h_delta"));
  for (const char* field : {"resolution_is_projective", "delta_is_projective"}) {
    if (!value.contains(field)) continue;
    if (!value.at(field).is_boolean()) parse_fail(std::string("field '") + field + "' must be boolean");
  }
  data.resolution_is_projective = value.value("resolution_is_projective", true);
  data.delta_is_projective = value.value("delta_is_projective", true);
  return data;
}

RunReport cmd_generic(std::string_view document) {
  const auto start = Clock::now();
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  // A structured report carries the data under results.two_strata_data.
  if (parsed.is_object() && parsed.contains("results") && parsed["results"].is_object() &&
      parsed["results"].contains("two_strata_data")) {
    parsed = parsed["results"]["two_strata_data"];
  } else if (parsed.is_object() && parsed.contains("two_strata_data")) {
    parsed = parsed.at("two_strata_data");
  }
  const TwoStrataData data = two_strata_from_json(parsed);

  RunReport report;
  report.command = "generic";
  report.input = two_strata_to_json(data);
  report.routes = {"generic"};
  report.assumed_hypotheses = assumed_hypotheses();

  const auto violations = validate(data);
  report.check("validate", violations.empty());
  for (const auto& v : violations) report.check("validate:" + v.code, false, v.message);
  if (!violations.empty()) {
    report.elapsed_ms = millis_since(start);
    return report;
  }

  if (data.p >= data.q) report.results["r"] = poly_to_json(r_poly(data));
  const LaurentPoly g = g_poly(data);
  const LaurentPoly f = f_poly(data);
  const DecompositionReport decomposition = decomposition_report(data);
  report.results["g"] = poly_to_json(g);
  report.results["f"] = poly_to_json(f);
  report.results["decomposition"] = Json{{"ic_summand", decomposition.has_ic_summand},
                                         {"summands", summands_to_json(decomposition)}};

  report.check("f_equals_h_delta_times_g", f == data.h_delta * g);
  report.check("g_palindromic_degree_2p_plus_2q",
               g.is_zero() || (*g.min_degree() >= 2 * data.q && *g.max_degree() <= 2 * data.p &&
                               is_palindromic(g, 2 * data.p + 2 * data.q)));
  report.check("decomposition_symmetric_about_m", decomposition.is_symmetric_about(data.m));
  report.check("decomposition_reproduces_f",
               decomposition.shift_generating_poly(data.n) * data.h_delta == f);

  try {
    const LaurentPoly ih = ih_poly(data);
    report.results["ih"] = poly_to_json(ih);
    report.check("ih_is_poincare_polynomial", true);
    report.check("ih_plus_h_delta_g_equals_h_resolution",
                 ih + data.h_delta * g == data.h_resolution);
  } catch (const Error& e) {
    if (e.code() != Errc::hypothesis_violated) throw;
    report.check("ih_is_poincare_polynomial", false, e.what());
  }
  report.elapsed_ms = millis_since(start);
  return report;
}

RunReport cmd_schubert(const schubert::SchubertDatum& datum) {
  const auto start = Clock::now();
  const schubert::SchubertInvariants inv = schubert::invariants(datum);

  RunReport report;
  report.command = "schubert";
  report.input = Json{{"i", datum.i}, {"j", datum.j}, {"k", datum.k}, {"l", datum.l}};
  report.assumed_hypotheses = assumed_hypotheses();

  const bool small_pi = schubert::is_small_pi(datum);
  const LaurentPoly h_res = schubert::h_resolution(datum);
  const TwoStrataData data = schubert::to_two_strata(datum);
  report.results["invariants"] =
      Json{{"case", schubert::case_name(inv.case_tag)},
           {"n", inv.n},
           {"m", inv.m},
           {"p", inv.p},
           {"q", inv.q},
           {"p_minus_q", inv.p - inv.q},
           {"sing_locus", "G_" + std::to_string(inv.sing_locus.k) + "(C^" +
                              std::to_string(inv.sing_locus.l) + ")"},
           {"fiber", "P^" + std::to_string(inv.fiber_dim)}};
  report.results["pi_small"] = small_pi;
  report.results["pi1_small"] = schubert::is_small_pi1(datum);
  report.results["h_resolution"] = poly_to_json(h_res);
  report.results["g"] = poly_to_json(g_poly(data));

  try {
    const schubert::IhResult result = schubert::ih(datum);
    for (auto route : result.routes) report.routes.emplace_back(schubert::route_name(route));
    report.results["ih"] = poly_to_json(result.value);
    report.check("routes_agree", true);
    structural_checks(report, result.value, inv.n);
    if (small_pi) {
      report.check("small_resolution_ih_equals_h_resolution", result.value == h_res);
    } else {
      report.check("ih_bounded_by_h_resolution", coefficientwise_le(result.value, h_res));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::route_disagreement && e.code() != Errc::hypothesis_violated) throw;
    report.check("routes_agree", false, e.what());
  }
  report.check("f_equals_h_delta_times_g", f_poly(data) == data.h_delta * g_poly(data));
  report.results["two_strata_data"] = two_strata_to_json(data);
  report.elapsed_ms = millis_since(start);
  return report;
}

RunReport cmd_hypersurface(const Integer& d1, const Integer& d2, const Integer& d3,
                           const Integer& d4) {
  const auto start = Clock::now();
  const auto datum = blowup5::HypersurfaceDatum::make(d1, d2, d3, d4);

  RunReport report;
  report.command = "hypersurface";
  report.input = Json{{"d1", integer_to_json(d1)},
                      {"d2", integer_to_json(d2)},
                      {"d3", integer_to_json(d3)},
                      {"d4", integer_to_json(d4)}};
  report.routes = {"closed_form", "generic"};
  report.assumed_hypotheses = assumed_hypotheses();
  report.assumed_hypotheses.push_back(blowup5::genericity_caveat());

  report.results["x"] = integer_to_json(datum.x());
  report.results["delta"] = integer_to_json(datum.delta());
  report.results["genus"] = integer_to_json(datum.genus());

  const Integer c4_ring = blowup5::c4_via_intersection_ring(datum);
  const Integer c4_closed = blowup5::c4_closed_form(datum);
  report.results["c4"] = Json{{"intersection_ring", integer_to_json(c4_ring)},
                              {"closed_form", integer_to_json(c4_closed)}};
  report.check("c4_closed_form_agrees", c4_ring == c4_closed);

  const Integer b4 = blowup5::b4_closed_form(datum);
  const Integer g = datum.genus();
  report.check("b4_gauss_bonnet", b4 == c4_ring + 4 * (2 * g - 2));
  if (!report.passed()) {
    report.elapsed_ms = millis_since(start);
    return report;
  }

  const auto betti = blowup5::betti_resolution(datum);
  Json betti_json = Json::array();
  Integer euler = 0;
  for (std::size_t alpha = 0; alpha < betti.size(); ++alpha) {
    betti_json.push_back(integer_to_json(betti[alpha]));
    euler += alpha % 2 == 0 ? betti[alpha] : Integer(-betti[alpha]);
  }
  report.results["betti_resolution"] = std::move(betti_json);
  report.check("euler_characteristic_equals_c4", euler == c4_ring);

  const TwoStrataData data = blowup5::to_two_strata(datum);
  const LaurentPoly closed = blowup5::ih_closed_form(datum);
  report.results["ih_closed_form"] = poly_to_json(closed);
  try {
    const LaurentPoly engine = ih_poly(data);
    report.results["ih_generic_engine"] = poly_to_json(engine);
    report.check("ih_engine_agrees", closed == engine);
  } catch (const Error& e) {
    if (e.code() != Errc::hypothesis_violated) throw;
    report.check("ih_engine_agrees", false, e.what());
  }
  report.results["ih"] = poly_to_json(closed);
  structural_checks(report, closed, 4);
  report.results["two_strata_data"] = two_strata_to_json(data);
  report.elapsed_ms = millis_since(start);
  return report;
}

RunReport cmd_verify_schubert(int max_l) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "verify-schubert";
  report.input = Json{{"max_l", max_l}};
  report.routes = {"cheeger", "f1", "f2", "f3", "generic"};

  const schubert::IdentityReport identities = schubert::verify_identities(max_l);
  Json mismatches = Json::array();
  for (const auto& m : identities.mismatches) {
    mismatches.push_back({{"datum", schubert::to_string(m.datum)},
                          {"identity", schubert::case_name(m.identity)},
                          {"lhs", m.lhs},
                          {"rhs", m.rhs}});
  }
  Json skipped = Json::array();
  for (const auto& s : identities.skipped) {
    skipped.push_back({{"datum", schubert::to_string(s.datum)},
                       {"identity", schubert::case_name(s.identity)},
                       {"reason", s.reason}});
  }
  report.results["sweep_size"] = identities.data_considered;
  report.results["identities_checked"] = identities.identities_checked;
  report.results["mismatch_count"] = identities.mismatches.size();
  report.results["mismatches"] = std::move(mismatches);
  report.results["skipped_count"] = identities.skipped.size();
  report.results["skipped"] = std::move(skipped);
  report.check("pi1_identities_hold", identities.mismatches.empty(),
               std::to_string(identities.identities_checked) + " identities");

  int data_count = 0;
  int disagreements = 0;
  int structural = 0;
  int small_law = 0;
  std::string first_failure;
  for (const auto& d : schubert::enumerate_valid(max_l)) {
    ++data_count;
    try {
      const schubert::IhResult result = schubert::ih(d);
      const int n = schubert::invariants(d).n;
      if (auto failure = structural_failure(result.value, n)) {
        ++structural;
        if (first_failure.empty()) first_failure = schubert::to_string(d) + ": " + *failure;
      }
      if (schubert::is_small_pi(d) && !(result.value == schubert::h_resolution(d))) ++small_law;
    } catch (const Error& e) {
      ++disagreements;
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  report.results["ih_sweep"] = Json{{"data", data_count},
                                    {"route_disagreements", disagreements},
                                    {"structural_failures", structural},
                                    {"small_law_failures", small_law}};
  if (!first_failure.empty()) report.results["first_failure"] = first_failure;
  report.check("routes_agree", disagreements == 0, std::to_string(data_count) + " data");
  report.check("ih_structural", structural == 0);
  report.check("small_resolution_ih_equals_h_resolution", small_law == 0);
  report.elapsed_ms = millis_since(start);
  return report;
}

RunReport cmd_verify_hypersurface(int max_d) {
  if (max_d < 1) throw Error(Errc::invalid_datum, "hypersurface sweep needs max_d >= 1");
  const auto start = Clock::now();
  RunReport report;
  report.command = "verify-hypersurface";
  report.input = Json{{"max_d", max_d}};
  report.routes = {"closed_form", "generic"};
  report.assumed_hypotheses = {blowup5::genericity_caveat()};

  int count = 0;
  int c4_mismatch = 0;
  int gauss_bonnet = 0;
  int engine = 0;
  int structural = 0;
  std::string first_failure;
  auto note = [&first_failure](const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  };
  for (const auto& d : blowup5::enumerate(max_d)) {
    ++count;
    const Integer ring = blowup5::c4_via_intersection_ring(d);
    if (ring != blowup5::c4_closed_form(d)) {
      ++c4_mismatch;
      note(d.to_string() + ": c4 paths differ");
      continue;
    }
    if (blowup5::b4_closed_form(d) != ring + 4 * (2 * d.genus() - 2)) {
      ++gauss_bonnet;
      note(d.to_string() + ": b4 vs Gauss-Bonnet");
      continue;
    }
    const LaurentPoly closed = blowup5::ih_closed_form(d);
    try {
      if (!(closed == ih_poly(blowup5::to_two_strata(d)))) {
        ++engine;
        note(d.to_string() + ": engine disagrees");
      }
    } catch (const Error& e) {
      ++engine;
      note(d.to_string() + ": " + e.what());
    }
    if (auto failure = structural_failure(closed, 4)) {
      ++structural;
      note(d.to_string() + ": " + *failure);
    }
  }
  report.results["sweep_size"] = count;
  report.results["c4_mismatches"] = c4_mismatch;
  report.results["gauss_bonnet_mismatches"] = gauss_bonnet;
  report.results["engine_mismatches"] = engine;
  report.results["structural_failures"] = structural;
  if (!first_failure.empty()) report.results["first_failure"] = first_failure;
  report.check("c4_closed_form_agrees", c4_mismatch == 0, std::to_string(count) + " data");
  report.check("b4_gauss_bonnet", gauss_bonnet == 0);
  report.check("ih_engine_agrees", engine == 0);
  report.check("ih_structural", structural == 0);
  report.elapsed_ms = millis_since(start);
  return report;
}

}  // namespace ihc::commands
