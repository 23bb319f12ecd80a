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
#include <string>

#include "ihcalc/blowup5.hpp"
#include "ihcalc/error.hpp"

using ihc::Integer;
using ihc::LaurentPoly;
using namespace ihc::blowup5;

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

const BlowupClass H = BlowupClass::H();
const BlowupClass E = BlowupClass::E();

BlowupClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> power(0, 3);
  BlowupClass out;
  for (int n = 0; n < 3; ++n) out += BlowupClass::monomial(coeff(rng), power(rng), power(rng));
  return out;
}

// Values computed once by expanding the alternating sum in a computer
// algebra system, independently of this library.
struct Frozen {
  int d[4];
  long genus;
  long c4;
  long b4;
};
constexpr Frozen kFrozen[] = {
    {{1, 1, 1, 1}, 0, 12, 4},          {{1, 1, 2, 2}, 1, 15, 15},
    {{2, 2, 2, 2}, 17, -4, 124},       {{3, 1, 2, 4}, 49, 321, 705},
    {{6, 6, 6, 6}, 11665, 38772, 132084}, {{1, 6, 6, 1}, 145, 5267, 6419},
};

HypersurfaceDatum make(const int (&d)[4]) { return HypersurfaceDatum::make(d[0], d[1], d[2], d[3]); }

}  // namespace

TEST_CASE("HypersurfaceDatum") {
  const auto d = HypersurfaceDatum::make(1, 1, 2, 2);
  CHECK(d.x() == 3);
  CHECK(d.delta() == 4);
  CHECK(d.genus() == 1);
  CHECK(error_code([] { HypersurfaceDatum::make(1, 2, 1, 1); }) == ihc::Errc::invalid_datum);
  CHECK(error_code([] { HypersurfaceDatum::make(0, 1, 1, 0); }) == ihc::Errc::invalid_datum);
}

TEST_CASE("evaluate_top") {
  CHECK(evaluate_top(H.pow(5), 1, 0) == 1);
  CHECK(evaluate_top(H * E.pow(4), 1, 0) == -1);
  CHECK(evaluate_top(E.pow(5), 1, 0) == -4);
  CHECK(evaluate_top(H.pow(4) * E + H.pow(3) * E.pow(2) + H.pow(2) * E.pow(3), 7, 3) == 0);
  CHECK(evaluate_top(H.pow(4) + E.pow(6), 7, 3) == 0);
  CHECK(evaluate_top(Integer(3) * H.pow(5) - E.pow(5), 4, 1) == 3 - (2 - 2 - 24));
}

TEST_CASE("chern_tangent_blowup") {
  const auto two = chern_tangent_blowup(2);
  CHECK(two[1] == Integer(15) * H.pow(2) - Integer(14) * H * E + Integer(2) * E.pow(2));
  for (int x : {2, 3, 9}) CHECK(chern_tangent_blowup(x)[0] == Integer(6) * H - Integer(3) * E);
  const auto three = chern_tangent_blowup(3);
  CHECK(three[2] == Integer(20) * H.pow(3) + Integer(2) * E.pow(3));
  CHECK(three[2].coefficient(2, 1) == 0);
  CHECK(three[3] == Integer(15) * H.pow(4) + Integer(12) * H * E.pow(3) - Integer(3) * E.pow(4));
  CHECK(error_code([] { chern_tangent_blowup(1); }) == ihc::Errc::invalid_datum);
  CHECK(strict_transform_class(5) == Integer(5) * H - Integer(2) * E);
}

TEST_CASE("BlowupClass ring laws") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_class(rng);
    const auto b = random_class(rng);
    const auto c = random_class(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
  CHECK((H + E).pow(2) == H.pow(2) + Integer(2) * H * E + E.pow(2));
}

TEST_CASE("c4 on frozen data") {
  for (const auto& f : kFrozen) {
    const auto d = make(f.d);
    CAPTURE(d.to_string());
    CHECK(d.genus() == f.genus);
    CHECK(c4_via_intersection_ring(d) == f.c4);
    CHECK(c4_closed_form(d) == f.c4);
    CHECK(c4_tangent_resolution(d) == f.c4);
    CHECK(b4_closed_form(d) == f.b4);
  }
}

TEST_CASE("betti_resolution") {
  const auto b = betti_resolution(HypersurfaceDatum::make(1, 1, 1, 1));
  const std::array<Integer, 9> expected = {1, 0, 3, 0, 4, 0, 3, 0, 1};
  CHECK(b == expected);
  const auto c = betti_resolution(HypersurfaceDatum::make(1, 1, 2, 2));
  CHECK(c[3] == 4);
  CHECK(c[4] == 15);
  for (const auto& d : enumerate(4)) {
    const auto betti = betti_resolution(d);
    Integer euler = 0;
    for (std::size_t a = 0; a < betti.size(); ++a) {
      CHECK(betti[a] == betti[8 - a]);
      euler += (a % 2 == 0) ? betti[a] : Integer(-betti[a]);
    }
    CHECK(euler == c4_tangent_resolution(d));
    CHECK(ihc::is_palindromic(h_resolution(d), 8));
  }
}

TEST_CASE("ih_hypersurface") {
  CHECK(ih_hypersurface(HypersurfaceDatum::make(1, 1, 1, 1)) ==
        P("1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8"));
  CHECK(ih_hypersurface(HypersurfaceDatum::make(1, 1, 2, 2)) ==
        P("1 + 2*t^2 + 2*t^3 + 13*t^4 + 2*t^5 + 2*t^6 + t^8"));
  for (const auto& f : kFrozen) {
    const auto d = make(f.d);
    CHECK(ih_hypersurface(d).coefficient(4) == f.b4 - 2);
    CHECK(ih_hypersurface(d).coefficient(3) == 2 * f.genus);
  }
  const auto data = to_two_strata(HypersurfaceDatum::make(2, 1, 1, 2));
  CHECK(data.n == 4);
  CHECK(data.m == 1);
  CHECK(data.p == 2);
  CHECK(data.q == 1);
  CHECK(data.fiber.dims == std::vector<std::int64_t>{1, 0, 2, 0, 1});
  CHECK(data.h_delta == P("1 + 2*t + t^2"));
}

TEST_CASE("enumerate") {
  const auto all = enumerate(3);
  for (const auto& d : all) {
    const auto& g = d.degrees();
    CHECK(g[0] + g[2] == g[1] + g[3]);
  }
  CHECK(all.size() == 19);
  CHECK_FALSE(genericity_caveat().empty());
}
