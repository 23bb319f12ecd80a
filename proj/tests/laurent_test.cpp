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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ihcalc/error.hpp"
#include "ihcalc/laurent.hpp"
#include "oracles.hpp"

using ihc::LaurentPoly;
using ihc::Rational;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

ihc::Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const ihc::Error& e) {
    return e.code();
  }
  FAIL("expected ihc::Error");
  return ihc::Errc::internal_mismatch;
}

// Sparse random Laurent polynomial with small rational coefficients.
LaurentPoly random_poly(std::mt19937_64& rng, int lo = -4, int hi = 8) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> degree(lo, hi);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  LaurentPoly out;
  for (int n = terms(rng); n > 0; --n) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out += LaurentPoly::monomial(c, degree(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("add") {
  CHECK(P("1 + t^2") + P("t^2") == P("1 + 2*t^2"));
  CHECK(P("3 - t^-1") + LaurentPoly() == P("3 - t^-1"));
  CHECK((P("t^2") + P("-t^2")).is_zero());
  CHECK(ihc::add(P("t"), P("t")) == P("2*t"));
}

TEST_CASE("mul") {
  CHECK(P("1 + t^2") * P("1 + t^2 + t^4") == P("1 + 2*t^2 + 2*t^4 + t^6"));
  CHECK(ihc::mul(P("5/3*t^-2 + t^7"), LaurentPoly::constant(1)) == P("5/3*t^-2 + t^7"));
  for (int g : {0, 1, 2, 7, 40}) {
    const LaurentPoly hd = LaurentPoly::constant(1) + LaurentPoly::monomial(2 * g, 1) +
                           LaurentPoly::monomial(1, 2);
    const LaurentPoly expected = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(2 * g, 3) +
                                 LaurentPoly::monomial(2, 4) + LaurentPoly::monomial(2 * g, 5) +
                                 LaurentPoly::monomial(1, 6);
    CHECK(hd * P("t^2 + t^4") == expected);
  }
}

TEST_CASE("exact_div") {
  CHECK(ihc::exact_div(P("1 + 2*t^2 + 2*t^4 + t^6"), P("1 + t^2")) == P("1 + t^2 + t^4"));
  CHECK(ihc::exact_div(P("2 - t^-3"), LaurentPoly::constant(1)) == P("2 - t^-3"));
  CHECK(error_code([] { ihc::exact_div(P("1 + t^2"), P("1 + t")); }) == ihc::Errc::not_divisible);
  CHECK(error_code([] { ihc::exact_div(P("1"), LaurentPoly()); }) == ihc::Errc::not_divisible);
  CHECK(ihc::exact_div(LaurentPoly(), P("1 + t")).is_zero());
  CHECK(ihc::exact_div(P("t^-1 + 1"), P("1 + t")) == P("t^-1"));
  CHECK(ihc::exact_div(P("1/2 - 1/2*t^2"), P("1 + t")) == P("1/2 - 1/2*t"));
}

TEST_CASE("reciprocal and palindromy") {
  CHECK(ihc::reciprocal(P("1 + 2*t"), 2) == P("2*t + t^2"));
  CHECK(ihc::reciprocal(P("7/2"), 0) == P("7/2"));
  CHECK(ihc::reciprocal(P("1 + t^2 + t^4"), 4) == P("1 + t^2 + t^4"));
  CHECK(ihc::is_palindromic(P("1 + 2*t^2 + t^4"), 4));
  CHECK_FALSE(ihc::is_palindromic(P("1 + t"), 2));
  CHECK(ihc::is_palindromic(P("1 + t^2 + 2*t^4 + t^6 + t^8"), 8));
  CHECK(ihc::shift(P("1 + t"), -3) == P("t^-3 + t^-2"));
}

TEST_CASE("eval_at_one") {
  CHECK(ihc::eval_at_one(P("1 + t^2 + t^4")) == 3);
  CHECK(ihc::eval_at_one(LaurentPoly()) == 0);
  CHECK(ihc::eval_at_one(P("1 + t^2 + 2*t^4 + t^6 + t^8")) == 6);
}

TEST_CASE("text form") {
  CHECK(P("1 + 2*t^2 - 3/2*t^4").to_string() == "1 + 2*t^2 - 3/2*t^4");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P("t^-2 - t").to_string() == "t^-2 - t");
  CHECK(P("  -t^3+4 ").to_string() == "4 - t^3");
  CHECK(P("2/4*t").to_string() == "1/2*t");
  for (const char* bad : {"", "1 +", "t^", "1/0", "x^2", "2**t", "t^2.5"})
    CHECK_MESSAGE(error_code([bad] { P(bad); }) == ihc::Errc::parse_error, bad);
}

TEST_CASE("canonical form holds no zero coefficients") {
  LaurentPoly p = P("1 + t - t");
  CHECK(p.term_count() == 1);
  p -= LaurentPoly::constant(1);
  CHECK(p.is_zero());
  CHECK_FALSE(p.min_degree().has_value());
  CHECK(P("t^-1 + 3*t^2").dense().size() == 4);
}

TEST_CASE("big coefficients do not overflow") {
  LaurentPoly p = P("1 + t");
  LaurentPoly power = LaurentPoly::constant(1);
  for (int e = 0; e < 80; ++e) power *= p;
  CHECK(power.coefficient(40) == Rational(ihc::Integer("107507208733336176461620")));
  CHECK(ihc::exact_div(power, p * p) * p * p == power);
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 400; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK(ihc::exact_div(a * b, b) == a);
  }
}

TEST_CASE("mul and exact_div against point evaluation") {
  std::mt19937_64 rng(77);
  const std::vector<Rational> points = {Rational(2), Rational(-3), Rational(1, 5), Rational(7, 2)};
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    for (const Rational& x : points) {
      CHECK(oracle::evaluate(a * b, x) == oracle::evaluate(a, x) * oracle::evaluate(b, x));
      CHECK(oracle::evaluate(a + b, x) == oracle::evaluate(a, x) + oracle::evaluate(b, x));
      const Rational bx = oracle::evaluate(b, x);
      if (!b.is_zero() && bx != 0)
        CHECK(oracle::evaluate(ihc::exact_div(a * b, b), x) == oracle::evaluate(a, x));
    }
  }
}

TEST_CASE("reciprocal is an involution on [0, d]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = random_poly(rng, 0, 10);
    CHECK(ihc::reciprocal(ihc::reciprocal(p, 10), 10) == p);
    CHECK(ihc::is_palindromic(p + ihc::reciprocal(p, 10), 10));
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("coefficientwise_le") {
  CHECK(ihc::coefficientwise_le(P("1 + t^2"), P("1 + 2*t^2")));
  CHECK_FALSE(ihc::coefficientwise_le(P("1 + t^3"), P("1 + 2*t^2")));
  CHECK(ihc::coefficientwise_le(P("-t"), LaurentPoly()));
}
