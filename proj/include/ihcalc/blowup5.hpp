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

#ifndef IHCALC_BLOWUP5_HPP
#define IHCALC_BLOWUP5_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ihcalc/laurent.hpp"
#include "ihcalc/twostrata.hpp"

namespace ihc::blowup5 {

/// X = { t1 t3 - t2 t4 = 0 } in P^5 with deg t_i = d_i and d1 + d3 = d2 + d4.
/// Sing(X) is the complete-intersection curve t1 = t2 = t3 = t4 = 0.
class HypersurfaceDatum {
 public:
  /// Throws InvalidDatum unless every d_i >= 1 and d1 + d3 = d2 + d4.
  static HypersurfaceDatum make(const Integer& d1, const Integer& d2, const Integer& d3,
                                const Integer& d4);

  const std::array<Integer, 4>& degrees() const { return d_; }
  /// deg X.
  const Integer& x() const { return x_; }
  /// deg of the singular curve.
  const Integer& delta() const { return delta_; }
  /// Genus of the singular curve, from 2g - 2 = (2x - 6) delta.
  const Integer& genus() const { return genus_; }

  std::string to_string() const;

 private:
  std::array<Integer, 4> d_;
  Integer x_;
  Integer delta_;
  Integer genus_;
};

/// Polynomial in the pulled-back hyperplane class H and the exceptional
/// divisor E of the blow-up of P^5 along the curve. No relations are
/// imposed; they enter only through evaluate_top().
class BlowupClass {
 public:
  using Monomial = std::pair<int, int>;  // (power of H, power of E)

  BlowupClass() = default;
  static BlowupClass constant(const Integer& c);
  static BlowupClass monomial(const Integer& c, int h_power, int e_power);
  static BlowupClass H() { return monomial(1, 1, 0); }
  static BlowupClass E() { return monomial(1, 0, 1); }

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  Integer coefficient(int h_power, int e_power) const;
  bool is_zero() const { return terms_.empty(); }
  BlowupClass pow(int exponent) const;
  std::string to_string() const;

  BlowupClass& operator+=(const BlowupClass& other);
  BlowupClass& operator-=(const BlowupClass& other);
  friend BlowupClass operator+(BlowupClass a, const BlowupClass& b) { return a += b; }
  friend BlowupClass operator-(BlowupClass a, const BlowupClass& b) { return a -= b; }
  friend BlowupClass operator*(const BlowupClass& a, const BlowupClass& b);
  friend BlowupClass operator*(const Integer& c, const BlowupClass& a);
  friend bool operator==(const BlowupClass& a, const BlowupClass& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void accumulate(const Monomial& m, const Integer& c);

  std::map<Monomial, Integer> terms_;
};

/// Degree of the codimension-5 part: H^5 = 1, H^4E = H^3E^2 = H^2E^3 = 0,
/// HE^4 = -delta, E^5 = 2 - 2 genus - 6 delta. Other codimensions give 0.
Integer evaluate_top(const BlowupClass& c, const Integer& delta, const Integer& genus);

/// c_1..c_4 of the tangent bundle of the blow-up, for a hypersurface of
/// degree x >= 2.
std::array<BlowupClass, 4> chern_tangent_blowup(const Integer& x);

/// Class of the strict transform: xH - 2E.
BlowupClass strict_transform_class(const Integer& x);

/// c_4 of the tangent bundle of the resolution through the intersection
/// ring: X~ c4 - X~^2 c3 + X~^3 c2 - X~^4 c1 + X~^5.
Integer c4_via_intersection_ring(const HypersurfaceDatum& d);

/// (x-2)(x^2-3x+3)(x^2-x+1) - 9(g-1) + 3(2-delta).
Integer c4_closed_form(const HypersurfaceDatum& d);

/// Both paths above; throws ClosedFormMismatch when they differ.
Integer c4_tangent_resolution(const HypersurfaceDatum& d);

/// b_4 in closed form: (x-2)(x^2-3x+3)(x^2-x+1) - (g-1) + 3(2-delta).
Integer b4_closed_form(const HypersurfaceDatum& d);

/// b_0..b_8 of the resolution. Throws InternalMismatch when the closed b_4
/// disagrees with c_4 + 4(2g - 2).
std::array<Integer, 9> betti_resolution(const HypersurfaceDatum& d);

LaurentPoly h_resolution(const HypersurfaceDatum& d);

/// Two-strata data: n = 4, m = 1, p = 2, q = 1, fiber the smooth quadric
/// surface, H_Delta = 1 + 2g t + t^2.
TwoStrataData to_two_strata(const HypersurfaceDatum& d);

/// The closed IH polynomial
/// 1 + 2t^2 + 2g t^3 + [(x-2)(x^2-3x+3)(x^2-x+1) - (g-1) + (4-3 delta)] t^4
///   + 2g t^5 + 2t^6 + t^8.
LaurentPoly ih_closed_form(const HypersurfaceDatum& d);

/// ih_closed_form(), checked against the generic engine; throws
/// EngineMismatch on disagreement.
LaurentPoly ih_hypersurface(const HypersurfaceDatum& d);

/// Every valid degree vector with 1 <= d_i <= max_d, lexicographic.
std::vector<HypersurfaceDatum> enumerate(int max_d);

/// Hypothesis the formulas rely on without modelling it.
std::string genericity_caveat();

}  // namespace ihc::blowup5

#endif  // IHCALC_BLOWUP5_HPP
