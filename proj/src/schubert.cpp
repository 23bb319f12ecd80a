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

#include "ihcalc/schubert.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "ihcalc/error.hpp"

namespace ihc::schubert {

namespace {

using Subscripts = std::vector<std::pair<const char*, int>>;

std::optional<std::string> negative_subscript(const Subscripts& subscripts) {
  for (const auto& [label, value] : subscripts) {
    if (value < 0) {
      return "P_{" + std::string(label) + "} has negative subscript " + std::to_string(value);
    }
  }
  return std::nullopt;
}

bool satisfies_inequalities(const SchubertDatum& d) {
  return 0 <= d.i && d.i <= d.j && d.j <= d.l && d.i <= d.k && d.k <= d.l &&
         std::min(d.j, d.k) == d.i + 1;
}

CaseTag case_of(const SchubertDatum& d) {
  if (d.i + 1 == d.j && d.i + 1 == d.k) return CaseTag::both;
  return d.i + 1 == d.j ? CaseTag::i_plus_1_eq_j : CaseTag::i_plus_1_eq_k;
}

bool in_case_j(const SchubertDatum& d) { return case_of(d) != CaseTag::i_plus_1_eq_k; }
bool in_case_k(const SchubertDatum& d) { return case_of(d) != CaseTag::i_plus_1_eq_j; }

SchubertInvariants case_j_invariants(const SchubertDatum& d) {
  SchubertInvariants inv;
  inv.case_tag = CaseTag::i_plus_1_eq_j;
  inv.n = d.j - 1 + (d.k - d.j + 1) * (d.l - d.k);
  inv.m = (d.l - d.k) * (d.k - d.j);
  inv.p = d.j - 1;
  inv.q = d.l - d.k;
  inv.sing_locus = {d.k - d.j, d.l - d.j};
  inv.fiber_dim = d.i;
  return inv;
}

SchubertInvariants case_k_invariants(const SchubertDatum& d) {
  SchubertInvariants inv;
  inv.case_tag = CaseTag::i_plus_1_eq_k;
  inv.n = (d.k - 1) * (d.j - d.k + 1) + d.l - d.k;
  inv.m = d.k * (d.j - d.k);
  inv.p = d.k - 1;
  inv.q = d.l - d.j;
  inv.sing_locus = {d.k, d.j};
  inv.fiber_dim = d.i;
  return inv;
}

SchubertInvariants raw_invariants(const SchubertDatum& d) {
  return in_case_j(d) ? case_j_invariants(d) : case_k_invariants(d);
}

void require_valid(const SchubertDatum& d) {
  const auto violations = validate(d);
  if (violations.empty()) return;
  std::string message = to_string(d) + " rejected:";
  for (const auto& v : violations) message += " " + v.message + ";";
  throw Error(Errc::invalid_datum, message);
}

// The formulas below assume only the defining inequalities, so the identity
// sweep can evaluate them on data that validate() rejects.
LaurentPoly f1_formula(const SchubertDatum& d) {
  const int j = d.j, k = d.k, l = d.l;
  return p_ratio(j, {j - 1}) * p_ratio(l - j + 1, {k - j + 1, l - k}) -
         correction_sum(l - k, j - 1) * p_ratio(l - j, {k - j, l - k});
}

LaurentPoly f2_formula(const SchubertDatum& d) {
  const int j = d.j, k = d.k, l = d.l;
  return p_ratio(j, {k - 1, j - k + 1}) * p_ratio(l - k + 1, {l - k}) -
         correction_sum(l - j, k - 1) * p_ratio(j, {k, j - k});
}

Subscripts f1_subscripts(const SchubertDatum& d) {
  const int j = d.j, k = d.k, l = d.l;
  return {{"j", j},         {"j-1", j - 1}, {"l-j+1", l - j + 1}, {"k-j+1", k - j + 1},
          {"l-k", l - k},   {"l-j", l - j}, {"k-j", k - j}};
}

Subscripts f2_subscripts(const SchubertDatum& d) {
  const int j = d.j, k = d.k, l = d.l;
  return {{"j", j},         {"k-1", k - 1}, {"j-k+1", j - k + 1}, {"l-k+1", l - k + 1},
          {"l-k", l - k},   {"k", k},       {"j-k", j - k}};
}

}  // namespace

std::string to_string(const SchubertDatum& d) {
  std::ostringstream os;
  os << "(i,j,k,l) = (" << d.i << "," << d.j << "," << d.k << "," << d.l << ")";
  return os.str();
}

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::i_plus_1_eq_j: return "i+1=j";
    case CaseTag::i_plus_1_eq_k: return "i+1=k";
    case CaseTag::both: return "both";
  }
  return "?";
}

const char* route_name(Route route) {
  switch (route) {
    case Route::cheeger: return "cheeger";
    case Route::f1: return "f1";
    case Route::f2: return "f2";
    case Route::f3: return "f3";
    case Route::generic: return "generic";
  }
  return "?";
}

std::vector<Violation> validate(const SchubertDatum& d) {
  std::vector<Violation> out;
  if (d.i < 0) out.push_back({"i_negative", "need i >= 0"});
  if (d.i > d.j) out.push_back({"i_gt_j", "need i <= j"});
  if (d.j > d.l) out.push_back({"j_gt_l", "need j <= l"});
  if (d.i > d.k) out.push_back({"i_gt_k", "need i <= k"});
  if (d.k > d.l) out.push_back({"k_gt_l", "need k <= l"});
  if (std::min(d.j, d.k) != d.i + 1) {
    out.push_back({"not_two_strata", "need min{j,k} = i+1, got min{" + std::to_string(d.j) + "," +
                                         std::to_string(d.k) + "} = " +
                                         std::to_string(std::min(d.j, d.k)) +
                                         " vs i+1 = " + std::to_string(d.i + 1)});
  }
  if (out.empty() && raw_invariants(d).q == 0) {
    out.push_back({"degenerate_stratum",
                   "normal rank q = 0: the singular stratum would be all of S"});
  }
  return out;
}

SchubertInvariants invariants(const SchubertDatum& d) {
  require_valid(d);
  if (case_of(d) != CaseTag::both) return raw_invariants(d);

  const SchubertInvariants via_j = case_j_invariants(d);
  const SchubertInvariants via_k = case_k_invariants(d);
  if (via_j.n != via_k.n || via_j.p - via_j.q != via_k.p - via_k.q) {
    throw Error(Errc::internal_mismatch,
                "case formulas disagree on (n, p-q) for " + to_string(d));
  }
  SchubertInvariants inv = via_j;
  inv.case_tag = CaseTag::both;
  return inv;
}

bool is_small_pi(const SchubertDatum& d) {
  require_valid(d);
  return d.l - d.j - d.k >= 0;
}

bool is_small_pi1(const SchubertDatum& d) {
  require_valid(d);
  return d.l - d.j - d.k <= 0;
}

LaurentPoly h_resolution(const SchubertDatum& d) {
  require_valid(d);
  return q_poly({d.i, d.j}) * q_poly({d.k - d.i, d.l - d.i});
}

TwoStrataData to_two_strata(const SchubertDatum& d) {
  const SchubertInvariants inv = invariants(d);
  TwoStrataData data;
  data.n = inv.n;
  data.m = inv.m;
  data.p = inv.p;
  data.q = inv.q;
  for (int alpha = 0; alpha <= 2 * inv.fiber_dim; ++alpha) {
    data.fiber.dims.push_back(alpha % 2 == 0 ? 1 : 0);
  }
  data.h_resolution = h_resolution(d);
  data.h_delta = q_poly(inv.sing_locus);
  return data;
}

LaurentPoly correction_sum(int lo, int hi) {
  LaurentPoly out;
  for (int e = lo; e <= hi; ++e) out += LaurentPoly::monomial(1, 2 * e);
  return out;
}

LaurentPoly ih_via_case_formula(const SchubertDatum& d, Route which) {
  require_valid(d);
  if (which == Route::f1) {
    if (!in_case_j(d)) throw Error(Errc::case_mismatch, "f1 needs i+1=j, got " + to_string(d));
    return f1_formula(d);
  }
  if (which == Route::f2) {
    if (!in_case_k(d)) throw Error(Errc::case_mismatch, "f2 needs i+1=k, got " + to_string(d));
    return f2_formula(d);
  }
  throw Error(Errc::case_mismatch, std::string("route ") + route_name(which) +
                                       " is not a case formula");
}

LaurentPoly ih_via_f3(const SchubertDatum& d) {
  require_valid(d);
  const int i = d.i, j = d.j, k = d.k, l = d.l;
  if (l - j - k > 0) {
    throw Error(Errc::not_applicable, "pi_1 is not small for " + to_string(d));
  }
  if (auto bad = negative_subscript({{"l-j-k+i", l - j - k + i}})) {
    throw Error(Errc::not_applicable, *bad + " for " + to_string(d));
  }
  return p_ratio(l - j, {k - i, l - j - k + i}) * p_ratio(k + j - i, {k, j - i});
}

IhResult ih(const SchubertDatum& d) {
  require_valid(d);
  std::vector<std::pair<Route, LaurentPoly>> values;
  if (is_small_pi(d)) values.emplace_back(Route::cheeger, h_resolution(d));
  if (in_case_j(d)) values.emplace_back(Route::f1, f1_formula(d));
  if (in_case_k(d)) values.emplace_back(Route::f2, f2_formula(d));
  if (d.l - d.j - d.k <= 0 && d.l - d.j - d.k + d.i >= 0) {
    values.emplace_back(Route::f3, ih_via_f3(d));
  }
  values.emplace_back(Route::generic, ih_poly(to_two_strata(d)));

  IhResult result;
  result.value = values.front().second;
  for (const auto& [route, value] : values) {
    if (!(value == result.value)) {
      throw Error(Errc::route_disagreement,
                  to_string(d) + ": " + route_name(values.front().first) + " gives " +
                      result.value.to_string() + " but " + route_name(route) + " gives " +
                      value.to_string());
    }
    result.routes.push_back(route);
  }
  return result;
}

std::vector<SchubertDatum> enumerate(int max_l) {
  std::vector<SchubertDatum> out;
  for (int l = 0; l <= max_l; ++l) {
    for (int j = 0; j <= l; ++j) {
      for (int k = 0; k <= l; ++k) {
        for (int i = 0; i <= std::min(j, k); ++i) {
          const SchubertDatum d{i, j, k, l};
          if (satisfies_inequalities(d)) out.push_back(d);
        }
      }
    }
  }
  return out;
}

std::vector<SchubertDatum> enumerate_valid(int max_l) {
  std::vector<SchubertDatum> out;
  for (const SchubertDatum& d : enumerate(max_l)) {
    if (validate(d).empty()) out.push_back(d);
  }
  return out;
}

IdentityReport verify_identities(int max_l) {
  if (max_l < 2) throw Error(Errc::invalid_datum, "identity sweep needs max_l >= 2");
  IdentityReport report;
  report.max_l = max_l;

  auto check = [&report](const SchubertDatum& d, CaseTag identity, const Subscripts& subscripts,
                         auto lhs_fn, auto rhs_fn) {
    if (auto bad = negative_subscript(subscripts)) {
      report.skipped.push_back({d, identity, *bad});
      return;
    }
    ++report.identities_checked;
    try {
      const LaurentPoly lhs = lhs_fn();
      const LaurentPoly rhs = rhs_fn();
      if (!(lhs == rhs)) {
        report.mismatches.push_back({d, identity, lhs.to_string(), rhs.to_string()});
      }
    } catch (const Error& e) {
      report.mismatches.push_back({d, identity, "", e.what()});
    }
  };

  for (const SchubertDatum& d : enumerate(max_l)) {
    if (d.l > d.j + d.k) continue;
    ++report.data_considered;
    const int j = d.j, k = d.k, l = d.l;
    if (in_case_j(d)) {
      Subscripts subscripts{{"l-j", l - j}, {"k-j+1", k - j + 1}, {"l-k-1", l - k - 1},
                            {"k+1", k + 1}, {"k", k}};
      const Subscripts rhs = f1_subscripts(d);
      subscripts.insert(subscripts.end(), rhs.begin(), rhs.end());
      check(
          d, CaseTag::i_plus_1_eq_j, subscripts,
          [&] { return p_ratio(l - j, {k - j + 1, l - k - 1}) * p_ratio(k + 1, {k}); },
          [&] { return f1_formula(d); });
    }
    if (in_case_k(d)) {
      Subscripts subscripts{{"l-j", l - j}, {"1", 1}, {"l-j-1", l - j - 1}, {"j+1", j + 1},
                            {"k", k}, {"j-k+1", j - k + 1}};
      const Subscripts rhs = f2_subscripts(d);
      subscripts.insert(subscripts.end(), rhs.begin(), rhs.end());
      check(
          d, CaseTag::i_plus_1_eq_k, subscripts,
          [&] { return p_ratio(l - j, {1, l - j - 1}) * p_ratio(j + 1, {k, j - k + 1}); },
          [&] { return f2_formula(d); });
    }
  }
  return report;
}

}  // namespace ihc::schubert
