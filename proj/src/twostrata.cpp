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

#include "ihcalc/twostrata.hpp"

#include <algorithm>
#include <sstream>

#include "ihcalc/error.hpp"

namespace ihc {

namespace {

void check_poincare(const LaurentPoly& poly, const std::string& name, int dim, bool projective,
                    std::vector<Violation>& out) {
  if (!poly.has_integer_coefficients() || !poly.has_nonnegative_coefficients()) {
    out.push_back({name + "_coefficients",
                   name + " must have nonnegative integer coefficients, got " + poly.to_string()});
  }
  if (!poly.is_zero() && (*poly.min_degree() < 0 || *poly.max_degree() > 2 * dim)) {
    out.push_back({name + "_support", name + " must be supported in degrees 0.." +
                                          std::to_string(2 * dim) + ", got " + poly.to_string()});
  }
  if (projective && !is_palindromic(poly, 2 * dim)) {
    out.push_back({name + "_not_palindromic", name + " of a projective variety must satisfy " +
                                                  "Poincare duality in degree " +
                                                  std::to_string(2 * dim)});
  }
}

void require_valid(const TwoStrataData& data) {
  const auto violations = validate(data);
  if (violations.empty()) return;
  std::string message = "two-strata data rejected:";
  for (const auto& v : violations) message += " [" + v.code + "] " + v.message + ";";
  throw Error(Errc::invalid_data, message);
}

}  // namespace

std::int64_t BettiVector::at(int alpha) const {
  if (alpha < 0 || static_cast<std::size_t>(alpha) >= dims.size()) return 0;
  return dims[static_cast<std::size_t>(alpha)];
}

LaurentPoly BettiVector::poincare() const { return LaurentPoly::from_integers(dims); }

std::vector<Violation> validate(const TwoStrataData& data) {
  std::vector<Violation> out;
  if (data.n != data.m + data.p + data.q) {
    std::ostringstream os;
    os << "dimension mismatch: n = " << data.n << " but m + p + q = " << data.m + data.p + data.q;
    out.push_back({"dimension_mismatch", os.str()});
  }
  if (data.n < 1 || data.m < 0 || data.p < 0 || data.q < 1) {
    std::ostringstream os;
    os << "need n >= 1, m >= 0, p >= 0, q >= 1; got n = " << data.n << ", m = " << data.m
       << ", p = " << data.p << ", q = " << data.q;
    out.push_back({"dimension_range", os.str()});
  }

  const auto& dims = data.fiber.dims;
  if (data.p < 0 || dims.size() != static_cast<std::size_t>(2 * data.p + 1)) {
    out.push_back({"fiber_length", "fiber Betti vector must have 2p + 1 = " +
                                       std::to_string(2 * data.p + 1) + " entries, got " +
                                       std::to_string(dims.size())});
  } else {
    if (std::any_of(dims.begin(), dims.end(), [](std::int64_t a) { return a < 0; })) {
      out.push_back({"fiber_negative", "fiber Betti numbers must be nonnegative"});
    }
    if (!std::equal(dims.begin(), dims.end(), dims.rbegin())) {
      out.push_back({"fiber_not_palindromic", "fiber not palindromic: a^alpha != a^(2p-alpha)"});
    }
    if (dims.front() < 1) out.push_back({"fiber_empty", "fiber needs a^0 >= 1"});
  }

  check_poincare(data.h_delta, "h_delta", data.m, data.delta_is_projective, out);
  if (data.h_delta.coefficient(0) < 1) {
    out.push_back({"h_delta_constant_term", "h_delta needs constant term >= 1"});
  }
  check_poincare(data.h_resolution, "h_resolution", data.n, data.resolution_is_projective, out);
  return out;
}

std::vector<std::string> assumed_hypotheses() {
  return {
      "the resolution is an isomorphism off Delta, and Delta contains Sing(X)",
      "the exceptional locus is smooth and fibres smoothly over Delta with a cohomology "
      "extension of the fiber",
      "cup product with the top Chern class of the normal bundle is onto "
      "H^alpha(G) -> H^(alpha+2q)(G) for alpha >= p - q (not checkable from Betti numbers)",
  };
}

LaurentPoly r_poly(const TwoStrataData& data) {
  const int top = data.p - data.q;
  if (top < 0) {
    throw Error(Errc::case_not_applicable, "r(t) is defined only for p >= q (p = " +
                                               std::to_string(data.p) +
                                               ", q = " + std::to_string(data.q) + ")");
  }
  LaurentPoly r = LaurentPoly::monomial(Rational(data.fiber.at(top)) / 2, top);
  for (int alpha = 0; alpha < top; ++alpha) {
    r += LaurentPoly::monomial(data.fiber.at(alpha), alpha);
  }
  return r;
}

LaurentPoly g_poly(const TwoStrataData& data) {
  if (data.p < data.q) return {};
  const LaurentPoly r = r_poly(data);
  LaurentPoly g = shift(r, 2 * data.q) + reciprocal(r, 2 * data.p);
  if (!g.has_integer_coefficients()) {
    throw Error(Errc::internal_integrality_failure,
                "g(t) = " + g.to_string() + " has a non-integral coefficient");
  }
  return g;
}

LaurentPoly f_poly(const TwoStrataData& data) {
  const int top = data.p - data.q;
  if (top < 0) return {};
  LaurentPoly shifted_betti;
  for (int beta = 0; beta <= top; ++beta) {
    shifted_betti += LaurentPoly::monomial(data.fiber.at(beta), beta + 2 * data.q);
  }
  for (int beta = top + 1; beta <= 2 * top; ++beta) {
    shifted_betti +=
        LaurentPoly::monomial(data.fiber.at(beta + 2 * data.q), beta + 2 * data.q);
  }
  return shifted_betti * data.h_delta;
}

LaurentPoly ih_poly(const TwoStrataData& data) {
  require_valid(data);
  LaurentPoly ih = data.h_resolution - data.h_delta * g_poly(data);
  if (!ih.has_integer_coefficients() || !ih.has_nonnegative_coefficients()) {
    throw Error(Errc::hypothesis_violated,
                "IH(t) = " + ih.to_string() + " is not a Poincare polynomial");
  }
  if (data.resolution_is_projective && data.delta_is_projective &&
      !is_palindromic(ih, 2 * data.n)) {
    throw Error(Errc::hypothesis_violated, "IH(t) = " + ih.to_string() +
                                               " breaks Poincare duality in degree " +
                                               std::to_string(2 * data.n));
  }
  return ih;
}

bool DecompositionReport::is_symmetric_about(int m) const {
  for (const Summand& s : summands) {
    const int mirror = 2 * m - s.shift;
    const bool found = std::any_of(summands.begin(), summands.end(), [&](const Summand& o) {
      return o.shift == mirror && o.multiplicity == s.multiplicity;
    });
    if (!found) return false;
  }
  return true;
}

LaurentPoly DecompositionReport::shift_generating_poly(int n) const {
  LaurentPoly out;
  for (const Summand& s : summands) out += LaurentPoly::monomial(s.multiplicity, n - s.shift);
  return out;
}

DecompositionReport decomposition_report(const TwoStrataData& data) {
  require_valid(data);
  DecompositionReport report;
  report.assumed_hypotheses = assumed_hypotheses();
  const int top = data.p - data.q;
  const int base_shift = data.n - 2 * data.q;
  for (int alpha = 0; alpha <= 2 * top; ++alpha) {
    const std::int64_t multiplicity =
        alpha <= top ? data.fiber.at(alpha) : data.fiber.at(alpha + 2 * data.q);
    if (multiplicity > 0) report.summands.push_back({base_shift - alpha, multiplicity});
  }
  return report;
}

}  // namespace ihc
