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


// Test-only reference computations. Nothing here calls into the library's
// arithmetic beyond LaurentPoly construction and coefficient access.

#ifndef IHCALC_TESTS_ORACLES_HPP
#define IHCALC_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ihcalc/laurent.hpp"
#include "ihcalc/twostrata.hpp"

namespace oracle {

using Dense = std::vector<std::int64_t>;

// Gaussian binomial [l choose k] in t^2 by enumerating k-subsets of
// {0..l-1}: a subset {s_0 < ... < s_(k-1)} is a Schubert cell of complex
// dimension sum (s_r - r).
inline Dense gaussian_binomial(int k, int l) {
  Dense out(static_cast<std::size_t>(2 * k * (l - k) + 1), 0);
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int dim = 0;
    int rank = 0;
    for (int s = 0; s < l; ++s) {
      if (mask & (1u << s)) {
        dim += s - rank;
        ++rank;
      }
    }
    ++out[static_cast<std::size_t>(2 * dim)];
  }
  return out;
}

inline Dense convolve(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  return out;
}

inline Dense subtract(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t x = 0; x < b.size(); ++x) a[x] -= b[x];
  return a;
}

// Dense coefficients from degree 0 to `max_degree`; trailing zeros trimmed.
inline Dense to_dense(const ihc::LaurentPoly& p) {
  Dense out;
  for (const auto& [deg, c] : p.terms()) {
    if (deg < 0) throw std::logic_error("negative degree in oracle::to_dense");
    if (out.size() <= static_cast<std::size_t>(deg)) out.resize(static_cast<std::size_t>(deg) + 1, 0);
    out[static_cast<std::size_t>(deg)] = c.get_num().get_si();
  }
  return out;
}

inline Dense trim(Dense a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline ihc::LaurentPoly to_poly(const Dense& a) {
  return ihc::LaurentPoly::from_integers(std::span<const std::int64_t>(a.data(), a.size()));
}

// p(x) by Horner-free summation over the stored terms.
inline ihc::Rational evaluate(const ihc::LaurentPoly& p, const ihc::Rational& x) {
  ihc::Rational sum = 0;
  for (const auto& [deg, c] : p.terms()) {
    ihc::Rational power = 1;
    const std::int64_t e = deg < 0 ? -deg : deg;
    for (std::int64_t s = 0; s < e; ++s) power *= x;
    if (deg < 0)
      sum += c / power;
    else
      sum += c * power;
  }
  return sum;
}

// Non-IC part of the pushforward, spelled out as in the decomposition:
// a^beta in degree beta + 2q for beta <= p - q, a^(beta + 2q) in degree
// beta + 2q above that, times H_Delta. Plain integer arithmetic.
inline Dense non_ic_part(const Dense& fiber, int p, int q, const Dense& h_delta) {
  if (p < q) return {};
  Dense shifted(static_cast<std::size_t>(2 * p + 1), 0);
  for (int beta = 0; beta <= 2 * (p - q); ++beta) {
    const int source = beta <= p - q ? beta : beta + 2 * q;
    shifted[static_cast<std::size_t>(beta + 2 * q)] += fiber[static_cast<std::size_t>(source)];
  }
  return trim(convolve(shifted, h_delta));
}

inline Dense random_palindrome(std::mt19937_64& rng, int degree, int max_coefficient,
                               bool unit_constant) {
  std::uniform_int_distribution<std::int64_t> coeff(0, max_coefficient);
  Dense out(static_cast<std::size_t>(degree + 1), 0);
  for (int a = 0; 2 * a <= degree; ++a) {
    const std::int64_t c = coeff(rng);
    out[static_cast<std::size_t>(a)] = c;
    out[static_cast<std::size_t>(degree - a)] = c;
  }
  if (unit_constant) {
    out.front() = 1;
    out.back() = 1;
  }
  return out;
}

// Random data satisfying every checkable hypothesis. The resolution's H is
// assembled as IH + H_Delta g with a random palindromic IH, which is
// returned through `ih_out`.
inline ihc::TwoStrataData random_two_strata(std::mt19937_64& rng, Dense* ih_out = nullptr) {
  std::uniform_int_distribution<int> pick_p(0, 8);
  std::uniform_int_distribution<int> pick_q(1, 8);
  std::uniform_int_distribution<int> pick_m(0, 4);
  ihc::TwoStrataData data;
  data.p = pick_p(rng);
  data.q = pick_q(rng);
  data.m = pick_m(rng);
  data.n = data.m + data.p + data.q;
  const Dense fiber = random_palindrome(rng, 2 * data.p, 4, true);
  data.fiber.dims = fiber;
  const Dense h_delta = random_palindrome(rng, 2 * data.m, 5, true);
  data.h_delta = to_poly(h_delta);
  const Dense ih = random_palindrome(rng, 2 * data.n, 6, true);
  data.h_resolution = to_poly(ih) + to_poly(non_ic_part(fiber, data.p, data.q, h_delta));
  if (ih_out) *ih_out = ih;
  return data;
}

inline std::int64_t binomial(int n, int k) {
  std::int64_t out = 1;
  for (int r = 1; r <= k; ++r) out = out * (n - k + r) / r;
  return out;
}

}  // namespace oracle

#endif  // IHCALC_TESTS_ORACLES_HPP
