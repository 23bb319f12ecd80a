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

#include "ihcalc/ihcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "ihcalc/blowup5.hpp"
#include "ihcalc/commands.hpp"
#include "ihcalc/error.hpp"
#include "ihcalc/grassmann.hpp"
#include "ihcalc/laurent.hpp"
#include "ihcalc/schubert.hpp"
#include "ihcalc/twostrata.hpp"

struct ihc_poly {
  ihc::LaurentPoly value;
};

struct ihc_report {
  bool passed = false;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

ihc_status to_status(ihc::Errc code) {
  using ihc::Errc;
  switch (code) {
    case Errc::negative_parameter: return IHC_ERR_NEGATIVE_PARAMETER;
    case Errc::not_divisible: return IHC_ERR_NOT_DIVISIBLE;
    case Errc::case_not_applicable: return IHC_ERR_CASE_NOT_APPLICABLE;
    case Errc::internal_integrality_failure: return IHC_ERR_INTEGRALITY_FAILURE;
    case Errc::invalid_data: return IHC_ERR_INVALID_DATA;
    case Errc::hypothesis_violated: return IHC_ERR_HYPOTHESIS_VIOLATED;
    case Errc::invalid_datum: return IHC_ERR_INVALID_DATUM;
    case Errc::case_mismatch: return IHC_ERR_CASE_MISMATCH;
    case Errc::not_applicable: return IHC_ERR_NOT_APPLICABLE;
    case Errc::route_disagreement: return IHC_ERR_ROUTE_DISAGREEMENT;
    case Errc::closed_form_mismatch: return IHC_ERR_CLOSED_FORM_MISMATCH;
    case Errc::internal_mismatch: return IHC_ERR_INTERNAL_MISMATCH;
    case Errc::engine_mismatch: return IHC_ERR_ENGINE_MISMATCH;
    case Errc::parse_error: return IHC_ERR_PARSE;
  }
  return IHC_ERR_INTERNAL;
}

ihc_status fail(ihc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
ihc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return IHC_OK;
  } catch (const ihc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IHC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IHC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IHC_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
ihc_status make_poly(ihc_poly** out, F&& compute) {
  if (out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new ihc_poly{compute()}; });
}

template <class F>
ihc_status make_report(ihc_report** out, F&& run) {
  if (out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const ihc::commands::RunReport report = run();
    *out = new ihc_report{report.passed(), report.to_json().dump(2), report.to_text()};
  });
}

ihc::Integer parse_integer(const char* text, const char* name) {
  if (text == nullptr) throw ihc::Error(ihc::Errc::parse_error, std::string(name) + " is null");
  ihc::Integer value;
  if (*text == '\0' || value.set_str(text, 10) != 0) {
    throw ihc::Error(ihc::Errc::parse_error,
                     std::string(name) + " is not an integer: \"" + text + "\"");
  }
  return value;
}

ihc::TwoStrataData parse_document(const char* document) {
  if (document == nullptr) throw ihc::Error(ihc::Errc::parse_error, "null document");
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ihc::Error(ihc::Errc::parse_error, e.what());
  }
  if (parsed.is_object() && parsed.contains("two_strata_data")) {
    parsed = parsed.at("two_strata_data");
  }
  return ihc::commands::two_strata_from_json(parsed);
}

ihc::blowup5::HypersurfaceDatum hypersurface(int64_t d1, int64_t d2, int64_t d3, int64_t d4) {
  return ihc::blowup5::HypersurfaceDatum::make(ihc::Integer(static_cast<long>(d1)),
                                               ihc::Integer(static_cast<long>(d2)),
                                               ihc::Integer(static_cast<long>(d3)),
                                               ihc::Integer(static_cast<long>(d4)));
}

}  // namespace

extern "C" {

const char* ihc_version(void) { return "1.0.0"; }

const char* ihc_status_name(ihc_status status) {
  switch (status) {
    case IHC_OK: return "Ok";
    case IHC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case IHC_ERR_NEGATIVE_PARAMETER: return "NegativeParameter";
    case IHC_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case IHC_ERR_CASE_NOT_APPLICABLE: return "CaseNotApplicable";
    case IHC_ERR_INTEGRALITY_FAILURE: return "InternalIntegralityFailure";
    case IHC_ERR_INVALID_DATA: return "InvalidData";
    case IHC_ERR_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case IHC_ERR_INVALID_DATUM: return "InvalidDatum";
    case IHC_ERR_CASE_MISMATCH: return "CaseMismatch";
    case IHC_ERR_NOT_APPLICABLE: return "NotApplicable";
    case IHC_ERR_ROUTE_DISAGREEMENT: return "RouteDisagreement";
    case IHC_ERR_CLOSED_FORM_MISMATCH: return "ClosedFormMismatch";
    case IHC_ERR_INTERNAL_MISMATCH: return "InternalMismatch";
    case IHC_ERR_ENGINE_MISMATCH: return "EngineMismatch";
    case IHC_ERR_PARSE: return "ParseError";
    case IHC_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* ihc_last_error(void) { return last_error.c_str(); }

void ihc_string_free(char* s) { std::free(s); }

ihc_status ihc_poly_parse(const char* text, ihc_poly** out) {
  if (text == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null text");
  return make_poly(out, [&] { return ihc::LaurentPoly::parse(text); });
}

ihc_status ihc_poly_from_int64(const int64_t* coefficients, size_t count, int64_t min_degree,
                               ihc_poly** out) {
  if (coefficients == nullptr && count > 0) {
    return fail(IHC_ERR_INVALID_ARGUMENT, "null coefficient array");
  }
  return make_poly(out, [&] {
    return ihc::LaurentPoly::from_integers(
        std::span<const std::int64_t>(coefficients, count), min_degree);
  });
}

ihc_status ihc_poly_clone(const ihc_poly* p, ihc_poly** out) {
  if (p == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null polynomial");
  return make_poly(out, [&] { return p->value; });
}

void ihc_poly_free(ihc_poly* p) { delete p; }

ihc_status ihc_poly_to_string(const ihc_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(p->value.to_string()); });
}

ihc_status ihc_poly_is_zero(const ihc_poly* p, int* out) {
  if (p == nullptr || out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  *out = p->value.is_zero() ? 1 : 0;
  return IHC_OK;
}

ihc_status ihc_poly_degree_range(const ihc_poly* p, int64_t* min_degree, int64_t* max_degree) {
  if (p == nullptr || min_degree == nullptr || max_degree == nullptr) {
    return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (p->value.is_zero()) return fail(IHC_ERR_INVALID_ARGUMENT, "zero polynomial has no degree");
  *min_degree = *p->value.min_degree();
  *max_degree = *p->value.max_degree();
  return IHC_OK;
}

ihc_status ihc_poly_coefficient(const ihc_poly* p, int64_t degree, char** out) {
  if (p == nullptr || out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(p->value.coefficient(degree).get_str()); });
}

ihc_status ihc_poly_equal(const ihc_poly* a, const ihc_poly* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = a->value == b->value ? 1 : 0;
  return IHC_OK;
}

ihc_status ihc_poly_add(const ihc_poly* a, const ihc_poly* b, ihc_poly** out) {
  if (a == nullptr || b == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null polynomial");
  return make_poly(out, [&] { return ihc::add(a->value, b->value); });
}

ihc_status ihc_poly_sub(const ihc_poly* a, const ihc_poly* b, ihc_poly** out) {
  if (a == nullptr || b == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null polynomial");
  return make_poly(out, [&] { return a->value - b->value; });
}

ihc_status ihc_poly_mul(const ihc_poly* a, const ihc_poly* b, ihc_poly** out) {
  if (a == nullptr || b == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null polynomial");
  return make_poly(out, [&] { return ihc::mul(a->value, b->value); });
}

ihc_status ihc_poly_exact_div(const ihc_poly* num, const ihc_poly* den, ihc_poly** out) {
  if (num == nullptr || den == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null polynomial");
  return make_poly(out, [&] { return ihc::exact_div(num->value, den->value); });
}

ihc_status ihc_poly_reciprocal(const ihc_poly* p, int64_t d, ihc_poly** out) {
  if (p == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null polynomial");
  return make_poly(out, [&] { return ihc::reciprocal(p->value, d); });
}

ihc_status ihc_poly_is_palindromic(const ihc_poly* p, int64_t d, int* out) {
  if (p == nullptr || out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = ihc::is_palindromic(p->value, d) ? 1 : 0; });
}

ihc_status ihc_poly_eval_at_one(const ihc_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(ihc::eval_at_one(p->value).get_str()); });
}

ihc_status ihc_h_poly(int alpha, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::h_poly(alpha); });
}

ihc_status ihc_p_poly(int alpha, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::p_poly(alpha); });
}

ihc_status ihc_grassmann_poly(int k, int l, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::q_poly({k, l}); });
}

ihc_status ihc_projective_space_poly(int n, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::projective_space(n); });
}

ihc_status ihc_generic_ih(const char* document, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::ih_poly(parse_document(document)); });
}

ihc_status ihc_generic_g(const char* document, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::g_poly(parse_document(document)); });
}

ihc_status ihc_generic_f(const char* document, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::f_poly(parse_document(document)); });
}

ihc_status ihc_schubert_ih(int i, int j, int k, int l, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::schubert::ih({i, j, k, l}).value; });
}

ihc_status ihc_schubert_case_formula(int i, int j, int k, int l, ihc_route route,
                                     ihc_poly** out) {
  if (route != IHC_ROUTE_F1 && route != IHC_ROUTE_F2) {
    return fail(IHC_ERR_INVALID_ARGUMENT, "route must be IHC_ROUTE_F1 or IHC_ROUTE_F2");
  }
  const auto which = route == IHC_ROUTE_F1 ? ihc::schubert::Route::f1 : ihc::schubert::Route::f2;
  return make_poly(out, [&] { return ihc::schubert::ih_via_case_formula({i, j, k, l}, which); });
}

ihc_status ihc_schubert_pi1_formula(int i, int j, int k, int l, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::schubert::ih_via_f3({i, j, k, l}); });
}

ihc_status ihc_schubert_h_resolution(int i, int j, int k, int l, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::schubert::h_resolution({i, j, k, l}); });
}

ihc_status ihc_schubert_is_small(int i, int j, int k, int l, int* pi_small, int* pi1_small) {
  if (pi_small == nullptr || pi1_small == nullptr) {
    return fail(IHC_ERR_INVALID_ARGUMENT, "null output pointer");
  }
  return guarded([&] {
    const ihc::schubert::SchubertDatum d{i, j, k, l};
    *pi_small = ihc::schubert::is_small_pi(d) ? 1 : 0;
    *pi1_small = ihc::schubert::is_small_pi1(d) ? 1 : 0;
  });
}

ihc_status ihc_hypersurface_ih(int64_t d1, int64_t d2, int64_t d3, int64_t d4, ihc_poly** out) {
  return make_poly(out, [&] { return ihc::blowup5::ih_hypersurface(hypersurface(d1, d2, d3, d4)); });
}

ihc_status ihc_hypersurface_c4(int64_t d1, int64_t d2, int64_t d3, int64_t d4, char** out) {
  if (out == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = copy_string(
        ihc::blowup5::c4_tangent_resolution(hypersurface(d1, d2, d3, d4)).get_str());
  });
}

ihc_status ihc_run_generic(const char* document, ihc_report** out) {
  if (document == nullptr) return fail(IHC_ERR_INVALID_ARGUMENT, "null document");
  return make_report(out, [&] { return ihc::commands::cmd_generic(document); });
}

ihc_status ihc_run_schubert(int i, int j, int k, int l, ihc_report** out) {
  return make_report(out, [&] { return ihc::commands::cmd_schubert({i, j, k, l}); });
}

ihc_status ihc_run_hypersurface(const char* d1, const char* d2, const char* d3, const char* d4,
                                ihc_report** out) {
  return make_report(out, [&] {
    return ihc::commands::cmd_hypersurface(parse_integer(d1, "d1"), parse_integer(d2, "d2"),
                                           parse_integer(d3, "d3"), parse_integer(d4, "d4"));
  });
}

ihc_status ihc_run_verify_schubert(int max_l, ihc_report** out) {
  return make_report(out, [&] { return ihc::commands::cmd_verify_schubert(max_l); });
}

ihc_status ihc_run_verify_hypersurface(int max_d, ihc_report** out) {
  return make_report(out, [&] { return ihc::commands::cmd_verify_hypersurface(max_d); });
}

int ihc_report_passed(const ihc_report* report) {
  return report != nullptr && report->passed ? 1 : 0;
}

const char* ihc_report_json(const ihc_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

const char* ihc_report_text(const ihc_report* report) {
  return report == nullptr ? "" : report->text.c_str();
}

void ihc_report_free(ihc_report* report) { delete report; }

}  // extern "C"
