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

#include "ihcalc/blowup5.hpp"

#include <sstream>

#include "ihcalc/error.hpp"

namespace ihc::blowup5 {

HypersurfaceDatum HypersurfaceDatum::make(const Integer& d1, const Integer& d2,
                                          const Integer& d3, const Integer& d4) {
  HypersurfaceDatum d;
  d.d_ = {d1, d2, d3, d4};
  for (const Integer& di : d.d_) {
    if (di < 1) throw Error(Errc::invalid_datum, "degrees must be positive in " + d.to_string());
  }
  if (d1 + d3 != d2 + d4) {
    throw Error(Errc::invalid_datum, "need d1 + d3 = d2 + d4 in " + d.to_string());
  }
  d.x_ = d1 + d3;
  d.delta_ = d1 * d2 * d3 * d4;
  d.genus_ = (d.x_ - 3) * d.delta_ + 1;
  if (d.genus_ < 0 || 2 * d.genus_ - 2 != (2 * d.x_ - 6) * d.delta_) {
    throw Error(Errc::internal_mismatch, "genus " + d.genus_.get_str() + " of " + d.to_string());
  }
  return d;
}

std::string HypersurfaceDatum::to_string() const {
  std::ostringstream os;
  os << "(d1,d2,d3,d4) = (" << d_[0] << "," << d_[1] << "," << d_[2] << "," << d_[3] << ")";
  return os.str();
}

BlowupClass BlowupClass::constant(const Integer& c) { return monomial(c, 0, 0); }

BlowupClass BlowupClass::monomial(const Integer& c, int h_power, int e_power) {
  BlowupClass out;
  out.accumulate({h_power, e_power}, c);
  return out;
}

Integer BlowupClass::coefficient(int h_power, int e_power) const {
  auto it = terms_.find({h_power, e_power});
  return it == terms_.end() ? Integer(0) : it->second;
}

BlowupClass BlowupClass::pow(int exponent) const {
  BlowupClass out = constant(1);
  for (int e = 0; e < exponent; ++e) out = out * *this;
  return out;
}

std::string BlowupClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, c] : terms_) {
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const Integer magnitude = abs(c);
    const auto [h, e] = monomial;
    std::string factors;
    if (h > 0) factors += h == 1 ? "H" : "H^" + std::to_string(h);
    if (e > 0) factors += e == 1 ? "E" : "E^" + std::to_string(e);
    if (factors.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

void BlowupClass::accumulate(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BlowupClass& BlowupClass::operator+=(const BlowupClass& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

BlowupClass& BlowupClass::operator-=(const BlowupClass& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

BlowupClass operator*(const BlowupClass& a, const BlowupClass& b) {
  BlowupClass out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.accumulate({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    }
  }
  return out;
}

BlowupClass operator*(const Integer& c, const BlowupClass& a) {
  return BlowupClass::constant(c) * a;
}

Integer evaluate_top(const BlowupClass& c, const Integer& delta, const Integer& genus) {
  // Degrees of the codimension-5 monomials H^(5-b) E^b, b = 0..5.
  const std::array<Integer, 6> top_degree{1, 0, 0, 0, -delta, 2 - 2 * genus - 6 * delta};
  Integer total = 0;
  for (const auto& [monomial, coefficient] : c.terms()) {
    const auto [h, e] = monomial;
    if (h + e == 5) total += coefficient * top_degree[static_cast<std::size_t>(e)];
  }
  return total;
}

std::array<BlowupClass, 4> chern_tangent_blowup(const Integer& x) {
  if (x < 2) throw Error(Errc::invalid_datum, "hypersurface degree must be >= 2");
  using C = BlowupClass;
  const C c1 = C::monomial(6, 1, 0) - C::monomial(3, 0, 1);
  const C c2 = C::monomial(15, 2, 0) + C::monomial(2 * (x - 9), 1, 1) + C::monomial(2, 0, 2);
  const C c3 = C::monomial(20, 3, 0) + C::monomial(8 * x * (x - 3), 2, 1) +
               C::monomial(4 * (3 - x), 1, 2) + C::monomial(2, 0, 3);
  const C c4 = C::monomial(15, 4, 0) + C::monomial(12, 1, 3) - C::monomial(3, 0, 4);
  return {c1, c2, c3, c4};
}

BlowupClass strict_transform_class(const Integer& x) {
  return BlowupClass::monomial(x, 1, 0) - BlowupClass::monomial(2, 0, 1);
}

Integer c4_via_intersection_ring(const HypersurfaceDatum& d) {
  const auto c = chern_tangent_blowup(d.x());
  const BlowupClass X = strict_transform_class(d.x());
  const BlowupClass total = X * c[3] - X.pow(2) * c[2] + X.pow(3) * c[1] - X.pow(4) * c[0] +
                            X.pow(5);
  return evaluate_top(total, d.delta(), d.genus());
}

namespace {

Integer cubic_part(const Integer& x) { return (x - 2) * (x * x - 3 * x + 3) * (x * x - x + 1); }

}  // namespace

Integer c4_closed_form(const HypersurfaceDatum& d) {
  return cubic_part(d.x()) - 9 * (d.genus() - 1) + 3 * (2 - d.delta());
}

Integer c4_tangent_resolution(const HypersurfaceDatum& d) {
  const Integer ring = c4_via_intersection_ring(d);
  const Integer closed = c4_closed_form(d);
  if (ring != closed) {
    throw Error(Errc::closed_form_mismatch, d.to_string() + ": intersection ring gives " +
                                                ring.get_str() + ", closed form " +
                                                closed.get_str());
  }
  return ring;
}

Integer b4_closed_form(const HypersurfaceDatum& d) {
  return cubic_part(d.x()) - (d.genus() - 1) + 3 * (2 - d.delta());
}

std::array<Integer, 9> betti_resolution(const HypersurfaceDatum& d) {
  const Integer g = d.genus();
  const Integer b4 = b4_closed_form(d);
  const Integer gauss_bonnet = c4_tangent_resolution(d) + 4 * (2 * g - 2);
  if (b4 != gauss_bonnet) {
    throw Error(Errc::internal_mismatch, d.to_string() + ": b4 = " + b4.get_str() +
                                             " but c4 + 4(2g-2) = " + gauss_bonnet.get_str());
  }
  const Integer b3 = 4 * g;
  return {1, 0, 3, b3, b4, b3, 3, 0, 1};
}

LaurentPoly h_resolution(const HypersurfaceDatum& d) {
  const auto betti = betti_resolution(d);
  LaurentPoly out;
  for (std::size_t alpha = 0; alpha < betti.size(); ++alpha) {
    out += LaurentPoly::monomial(Rational(betti[alpha]), static_cast<std::int64_t>(alpha));
  }
  return out;
}

TwoStrataData to_two_strata(const HypersurfaceDatum& d) {
  TwoStrataData data;
  data.n = 4;
  data.m = 1;
  data.p = 2;
  data.q = 1;
  data.fiber.dims = {1, 0, 2, 0, 1};
  data.h_resolution = h_resolution(d);
  data.h_delta = LaurentPoly::constant(1) + LaurentPoly::monomial(Rational(2 * d.genus()), 1) +
                 LaurentPoly::monomial(1, 2);
  return data;
}

LaurentPoly ih_closed_form(const HypersurfaceDatum& d) {
  const Integer g = d.genus();
  const Integer middle = cubic_part(d.x()) - (g - 1) + (4 - 3 * d.delta());
  LaurentPoly out;
  const std::array<Integer, 9> coefficients{1, 0, 2, 2 * g, middle, 2 * g, 2, 0, 1};
  for (std::size_t alpha = 0; alpha < coefficients.size(); ++alpha) {
    out += LaurentPoly::monomial(Rational(coefficients[alpha]), static_cast<std::int64_t>(alpha));
  }
  return out;
}

LaurentPoly ih_hypersurface(const HypersurfaceDatum& d) {
  const LaurentPoly closed = ih_closed_form(d);
  const LaurentPoly engine = ih_poly(to_two_strata(d));
  if (!(closed == engine)) {
    throw Error(Errc::engine_mismatch, d.to_string() + ": closed form " + closed.to_string() +
                                           ", generic engine " + engine.to_string());
  }
  return closed;
}

std::vector<HypersurfaceDatum> enumerate(int max_d) {
  std::vector<HypersurfaceDatum> out;
  for (int d1 = 1; d1 <= max_d; ++d1)
    for (int d2 = 1; d2 <= max_d; ++d2)
      for (int d3 = 1; d3 <= max_d; ++d3) {
        const int d4 = d1 + d3 - d2;
        if (d4 >= 1 && d4 <= max_d) out.push_back(HypersurfaceDatum::make(d1, d2, d3, d4));
      }
  return out;
}

std::string genericity_caveat() {
  return "X is a general hypersurface containing the threefold t1 = t2 = 0 (the formulas are "
         "evaluated for any valid degree vector; genericity is not checked)";
}

}  // namespace ihc::blowup5
