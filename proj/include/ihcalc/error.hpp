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

#ifndef IHCALC_ERROR_HPP
#define IHCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ihc {

// Every failure the core can raise. Names returned by errc_name() are the
// ones surfaced to CLI users and through the C API.
enum class Errc {
  negative_parameter,
  not_divisible,
  case_not_applicable,
  internal_integrality_failure,
  invalid_data,
  hypothesis_violated,
  invalid_datum,
  case_mismatch,
  not_applicable,
  route_disagreement,
  closed_form_mismatch,
  internal_mismatch,
  engine_mismatch,
  parse_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ihc

#endif  // IHCALC_ERROR_HPP
