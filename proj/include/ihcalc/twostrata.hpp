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

#ifndef IHCALC_TWOSTRATA_HPP
#define IHCALC_TWOSTRATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ihcalc/laurent.hpp"

namespace ihc {

/// Betti numbers a^0..a^(2p) of the fiber G of the exceptional locus over
/// the singular stratum.
struct BettiVector {
  std::vector<std::int64_t> dims;

  /// a^alpha, zero outside 0..2p.
  std::int64_t at(int alpha) const;
  /// Complex dimension p, from dims.size() == 2p + 1.
  int fiber_dimension() const { return static_cast<int>(dims.size() / 2); }
  LaurentPoly poincare() const;
};

/// Input of the generic engine: a resolution X~ -> X that is an isomorphism
/// off a smooth stratum Delta of dimension m, with smooth fibration of fiber
/// dimension p over Delta and normal bundle rank q.
struct TwoStrataData {
  int n = 0;
  int m = 0;
  int p = 0;
  int q = 0;
  BettiVector fiber;
  LaurentPoly h_resolution;
  LaurentPoly h_delta;
  bool resolution_is_projective = true;
  bool delta_is_projective = true;
};

struct Violation {
  std::string code;
  std::string message;
};

/// Numerically checkable consequences of the two-strata hypotheses. The
/// cup-product surjectivity hypothesis on the fiber cannot be checked from
/// Betti data and is never reported here.
std::vector<Violation> validate(const TwoStrataData& data);

/// Hypotheses the engine trusts without checking; echoed in reports.
std::vector<std::string> assumed_hypotheses();

/// (1/2) a^(p-q) t^(p-q) + sum_{alpha < p-q} a^alpha t^alpha.
/// Throws CaseNotApplicable when p < q.
LaurentPoly r_poly(const TwoStrataData& data);

/// t^(2q) r(t) + t^(2p) r(1/t), or 0 when p < q. Throws
/// InternalIntegralityFailure if a half-integer survives.
LaurentPoly g_poly(const TwoStrataData& data);

/// Poincare polynomial of the non-IC summand, summed term by term from the
/// shifted fiber Betti numbers and convolved with H_Delta. Independent of
/// g_poly on purpose.
LaurentPoly f_poly(const TwoStrataData& data);

/// IH_X(t) = H_X~(t) - H_Delta(t) g(t).
///
/// Throws InvalidData when validate() reports anything, and
/// HypothesisViolated when the result is not a genuine Poincare polynomial
/// (negative or fractional coefficient, or broken duality when both spaces
/// are flagged projective).
LaurentPoly ih_poly(const TwoStrataData& data);

struct Summand {
  int shift = 0;
  std::int64_t multiplicity = 0;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Decomposition of R pi_* Q[n] as IC_X plus shifted constant sheaves on
/// Delta. The IC summand is always present and is not listed in `summands`.
struct DecompositionReport {
  std::vector<Summand> summands;  // strictly decreasing shifts
  bool has_ic_summand = true;
  std::vector<std::string> assumed_hypotheses;

  /// Every (m + b, mu) with b > 0 is matched by (m - b, mu).
  bool is_symmetric_about(int m) const;
  /// sum of multiplicity * t^(n - shift).
  LaurentPoly shift_generating_poly(int n) const;
};

/// Throws InvalidData when validate() reports anything.
DecompositionReport decomposition_report(const TwoStrataData& data);

}  // namespace ihc

#endif  // IHCALC_TWOSTRATA_HPP
