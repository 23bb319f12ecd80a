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

#ifndef IHCALC_GRASSMANN_HPP
#define IHCALC_GRASSMANN_HPP

#include <initializer_list>

#include "ihcalc/laurent.hpp"

namespace ihc {

/// Grassmannian of k-planes in C^l; 0 <= k <= l.
struct GrassmannParams {
  int k = 0;
  int l = 0;

  int dimension() const { return k * (l - k); }
};

/// 1 + t^2 + ... + t^(2 alpha).
LaurentPoly h_poly(int alpha);

/// h_0 * h_1 * ... * h_(alpha-1); P_0 = P_1 = 1. Memoized, thread-safe.
LaurentPoly p_poly(int alpha);

/// Poincare polynomial of G_k(C^l), computed as P_l / (P_k P_(l-k)) by exact
/// division. Throws NegativeParameter unless 0 <= k <= l.
LaurentPoly q_poly(GrassmannParams params);

/// Poincare polynomial of P^n.
LaurentPoly projective_space(int n);

/// P_num / (P_den[0] * P_den[1] * ...), exact. Throws NegativeParameter when
/// any subscript is negative.
LaurentPoly p_ratio(int num, std::initializer_list<int> den);

}  // namespace ihc

#endif  // IHCALC_GRASSMANN_HPP
