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

#include "ihcalc/grassmann.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "ihcalc/error.hpp"

namespace ihc {

namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) {
    throw Error(Errc::negative_parameter, std::string(what) + " = " + std::to_string(value));
  }
}

}  // namespace

LaurentPoly h_poly(int alpha) {
  require_nonnegative(alpha, "h_poly index");
  LaurentPoly out;
  for (int e = 0; e <= alpha; ++e) out += LaurentPoly::monomial(1, 2 * e);
  return out;
}

LaurentPoly p_poly(int alpha) {
  require_nonnegative(alpha, "p_poly index");
  static std::mutex mutex;
  static std::vector<LaurentPoly> cache{LaurentPoly::constant(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= static_cast<std::size_t>(alpha)) {
    const int next = static_cast<int>(cache.size());
    cache.push_back(cache.back() * h_poly(next - 1));
  }
  return cache[static_cast<std::size_t>(alpha)];
}

LaurentPoly p_ratio(int num, std::initializer_list<int> den) {
  require_nonnegative(num, "P subscript");
  LaurentPoly denominator = LaurentPoly::constant(1);
  for (int d : den) {
    require_nonnegative(d, "P subscript");
    denominator *= p_poly(d);
  }
  return exact_div(p_poly(num), denominator);
}

LaurentPoly q_poly(GrassmannParams params) {
  require_nonnegative(params.k, "k");
  require_nonnegative(params.l - params.k, "l - k");
  return p_ratio(params.l, {params.k, params.l - params.k});
}

LaurentPoly projective_space(int n) {
  require_nonnegative(n, "projective dimension");
  return h_poly(n);
}

}  // namespace ihc
