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

#include "ihcalc/error.hpp"

namespace ihc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::negative_parameter: return "NegativeParameter";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::case_not_applicable: return "CaseNotApplicable";
    case Errc::internal_integrality_failure: return "InternalIntegralityFailure";
    case Errc::invalid_data: return "InvalidData";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::invalid_datum: return "InvalidDatum";
    case Errc::case_mismatch: return "CaseMismatch";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::route_disagreement: return "RouteDisagreement";
    case Errc::closed_form_mismatch: return "ClosedFormMismatch";
    case Errc::internal_mismatch: return "InternalMismatch";
    case Errc::engine_mismatch: return "EngineMismatch";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace ihc
