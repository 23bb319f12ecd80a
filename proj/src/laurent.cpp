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

#include "ihcalc/laurent.hpp"

#include <cctype>
#include <sstream>

#include "ihcalc/error.hpp"

namespace ihc {

namespace {

bool is_integral(const Rational& c) { return c.get_den() == 1; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += term(sign);
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  LaurentPoly term(int sign) {
    Rational c = 1;
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      have_coefficient = true;
      skip_space();
      if (at_end() || peek() != '*') return LaurentPoly::constant(sign * c);
      get();
      skip_space();
    }
    if (at_end() || peek() != 't') {
      fail(have_coefficient ? "expected 't' after '*'" : "expected term");
    }
    get();
    skip_space();
    std::int64_t degree = 1;
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      degree = exponent();
    }
    return LaurentPoly::monomial(sign * c, degree);
  }

  Rational coefficient() {
    std::string num = digits();
    std::string den = "1";
    skip_space();
    if (!at_end() && peek() == '/') {
      get();
      skip_space();
      den = digits();
    }
    Rational c;
    if (c.set_str(num + "/" + den, 10) != 0) fail("bad coefficient");
    if (c.get_den() == 0) fail("zero denominator");
    c.canonicalize();
    return c;
  }

  std::int64_t exponent() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) negative = get() == '-';
    std::string d = digits();
    if (d.size() > 18) fail("exponent out of range");
    std::int64_t value = std::stoll(d);
    return negative ? -value : value;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << why << " at offset " << pos_ << " in \"" << text_ << "\"";
    throw Error(Errc::parse_error, os.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t degree) {
  LaurentPoly p;
  p.accumulate(degree, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(std::span<const Rational> coefficients,
                                    std::int64_t min_degree) {
  LaurentPoly p;
  std::int64_t degree = min_degree;
  for (const Rational& c : coefficients) p.accumulate(degree++, c);
  return p;
}

LaurentPoly LaurentPoly::from_integers(std::span<const std::int64_t> coefficients,
                                       std::int64_t min_degree) {
  LaurentPoly p;
  std::int64_t degree = min_degree;
  for (std::int64_t c : coefficients) {
    p.accumulate(degree++, Rational(Integer(std::to_string(c))));
  }
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  return Parser(trimmed).run();
}

Rational LaurentPoly::coefficient(std::int64_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::int64_t> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<std::int64_t> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::vector<Rational> LaurentPoly::dense() const {
  std::vector<Rational> out;
  if (terms_.empty()) return out;
  const std::int64_t lo = *min_degree();
  out.resize(static_cast<std::size_t>(*max_degree() - lo + 1));
  for (const auto& [degree, c] : terms_) out[static_cast<std::size_t>(degree - lo)] = c;
  return out;
}

bool LaurentPoly::has_integer_coefficients() const {
  for (const auto& [degree, c] : terms_) {
    if (!is_integral(c)) return false;
  }
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [degree, c] : terms_) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [degree, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (degree == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "t";
    if (degree != 1) out += "^" + std::to_string(degree);
  }
  return out;
}

void LaurentPoly::accumulate(std::int64_t degree, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [degree, c] : other.terms_) accumulate(degree, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [degree, c] : other.terms_) accumulate(degree, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  Rational product;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      product = ca * cb;
      out.accumulate(da + db, product);
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [degree, c] : a.terms_) out.terms_.emplace(degree, -c);
  return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(Errc::not_divisible, "division by the zero polynomial");
  if (num.is_zero()) return {};

  // Any Laurent quotient lives in degrees [num_lo - den_lo, num_hi - den_hi];
  // peel leading terms until the remainder vanishes or drops below that window.
  const std::int64_t den_lo = *den.min_degree();
  const std::int64_t den_hi = *den.max_degree();
  const Rational& den_lead = den.terms().rbegin()->second;
  const std::int64_t floor_degree = *num.min_degree() - den_lo;

  LaurentPoly quotient;
  LaurentPoly remainder = num;
  while (!remainder.is_zero()) {
    const std::int64_t q_degree = *remainder.max_degree() - den_hi;
    if (q_degree < floor_degree) {
      throw Error(Errc::not_divisible, "(" + num.to_string() + ") / (" + den.to_string() +
                                           ") leaves remainder " + remainder.to_string());
    }
    const LaurentPoly step =
        LaurentPoly::monomial(remainder.terms().rbegin()->second / den_lead, q_degree);
    remainder -= step * den;
    quotient += step;
  }
  if (!(quotient * den == num)) {
    throw Error(Errc::not_divisible, "quotient check failed for (" + num.to_string() + ") / (" +
                                         den.to_string() + ")");
  }
  return quotient;
}

LaurentPoly reciprocal(const LaurentPoly& p, std::int64_t d) {
  LaurentPoly out;
  for (const auto& [degree, c] : p.terms()) out += LaurentPoly::monomial(c, d - degree);
  return out;
}

LaurentPoly shift(const LaurentPoly& p, std::int64_t k) {
  LaurentPoly out;
  for (const auto& [degree, c] : p.terms()) out += LaurentPoly::monomial(c, degree + k);
  return out;
}

bool is_palindromic(const LaurentPoly& p, std::int64_t d) { return reciprocal(p, d) == p; }

Rational eval_at_one(const LaurentPoly& p) {
  Rational sum = 0;
  for (const auto& [degree, c] : p.terms()) sum += c;
  return sum;
}

bool coefficientwise_le(const LaurentPoly& a, const LaurentPoly& b) {
  return (b - a).has_nonnegative_coefficients();
}

}  // namespace ihc
