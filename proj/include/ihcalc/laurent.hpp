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

#ifndef IHCALC_LAURENT_HPP
#define IHCALC_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ihc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Finitely supported map from integer degree to exact rational coefficient.
///
/// The stored map never contains a zero coefficient, so two polynomials are
/// equal exactly when their term maps are equal. Degrees may be negative and
/// carry no parity restriction.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, std::int64_t degree);
  /// Dense coefficients, the first one sitting in degree `min_degree`.
  static LaurentPoly from_dense(std::span<const Rational> coefficients,
                                std::int64_t min_degree = 0);
  static LaurentPoly from_integers(std::span<const std::int64_t> coefficients,
                                   std::int64_t min_degree = 0);
  /// Inverse of to_string(). Throws Error(parse_error).
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coefficient(std::int64_t degree) const;
  std::optional<std::int64_t> min_degree() const;
  std::optional<std::int64_t> max_degree() const;
  /// Coefficients of degrees min_degree()..max_degree(); empty for zero.
  std::vector<Rational> dense() const;

  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  /// Ascending-degree sum of `c*t^d` terms, e.g. "1 + 2*t^3 - 3/2*t^4".
  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void accumulate(std::int64_t degree, const Rational& c);

  Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient q with num == den * q, verified by multiplying back. Throws
/// NotDivisible when no Laurent quotient exists or den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// t^d * p(1/t).
LaurentPoly reciprocal(const LaurentPoly& p, std::int64_t d);

/// t^k * p(t).
LaurentPoly shift(const LaurentPoly& p, std::int64_t k);

bool is_palindromic(const LaurentPoly& p, std::int64_t d);

Rational eval_at_one(const LaurentPoly& p);

/// Every coefficient of a is <= the matching coefficient of b.
bool coefficientwise_le(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace ihc

#endif  // IHCALC_LAURENT_HPP
