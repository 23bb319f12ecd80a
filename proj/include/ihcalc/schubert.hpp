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

#ifndef IHCALC_SCHUBERT_HPP
#define IHCALC_SCHUBERT_HPP

#include <string>
#include <vector>

#include "ihcalc/grassmann.hpp"
#include "ihcalc/laurent.hpp"
#include "ihcalc/twostrata.hpp"

namespace ihc::schubert {

/// S = { V in G_k(C^l) : dim(V meet F^j) >= i } with min{j, k} = i + 1, so
/// S has exactly two strata.
struct SchubertDatum {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;

  friend bool operator==(const SchubertDatum&, const SchubertDatum&) = default;
};

std::string to_string(const SchubertDatum& d);

enum class CaseTag { i_plus_1_eq_j, i_plus_1_eq_k, both };

const char* case_name(CaseTag tag);

struct SchubertInvariants {
  CaseTag case_tag = CaseTag::i_plus_1_eq_j;
  int n = 0;
  int m = 0;
  int p = 0;
  int q = 0;
  GrassmannParams sing_locus;
  int fiber_dim = 0;  // the fiber over Sing(S) is P^fiber_dim
};

/// Constraint violations. Besides the defining inequalities, data whose
/// normal rank q vanishes (k = l in the i+1=j case, j = l in the i+1=k
/// case) are rejected: there the claimed singular stratum is all of S.
std::vector<Violation> validate(const SchubertDatum& d);

/// Throws InvalidDatum. For the `both` case the two case computations are
/// cross-checked and the i+1=j instantiation is returned.
SchubertInvariants invariants(const SchubertDatum& d);

/// pi : {(W^i, V^k) : W in G_i(F^j), W inside V} -> S is small iff l-j-k >= 0.
bool is_small_pi(const SchubertDatum& d);
/// pi_1 : {(V^k, U^(k+j-i)) : V + F^j inside U} -> S is small iff l-j-k <= 0.
bool is_small_pi1(const SchubertDatum& d);

/// H of the resolution: Q_i^j * Q_(k-i)^(l-i).
LaurentPoly h_resolution(const SchubertDatum& d);

/// Two-strata data for pi: H_Delta of Sing(S), fiber P^i.
TwoStrataData to_two_strata(const SchubertDatum& d);

enum class Route { cheeger, f1, f2, f3, generic };

const char* route_name(Route route);

/// t^(2 lo) + t^(2 lo + 2) + ... + t^(2 hi); zero when lo > hi.
LaurentPoly correction_sum(int lo, int hi);

/// The closed formula of the i+1=j case (Route::f1) or of the i+1=k case
/// (Route::f2). Throws CaseMismatch when the datum is not in that case.
LaurentPoly ih_via_case_formula(const SchubertDatum& d, Route which);

/// IH as H of the second resolution pi_1. Throws NotApplicable when pi_1 is
/// not small or a subscript would be negative.
LaurentPoly ih_via_f3(const SchubertDatum& d);

struct IhResult {
  LaurentPoly value;
  std::vector<Route> routes;
};

/// Evaluates every applicable route and requires exact agreement; throws
/// RouteDisagreement otherwise.
IhResult ih(const SchubertDatum& d);

/// Every datum satisfying the defining inequalities (q = 0 included), in
/// lexicographic (l, j, k, i) order.
std::vector<SchubertDatum> enumerate(int max_l);

/// Valid data (validate() empty) with l <= max_l, in the same order.
std::vector<SchubertDatum> enumerate_valid(int max_l);

struct IdentityMismatch {
  SchubertDatum datum;
  CaseTag identity;
  std::string lhs;
  std::string rhs;
};

struct IdentitySkip {
  SchubertDatum datum;
  CaseTag identity;
  std::string reason;
};

struct IdentityReport {
  int max_l = 0;
  int data_considered = 0;
  int identities_checked = 0;
  std::vector<IdentityMismatch> mismatches;
  std::vector<IdentitySkip> skipped;
};

/// Compares the pi_1 formula with the case formulas wherever l <= j + k,
/// for all data with l <= max_l. Requires max_l >= 2.
IdentityReport verify_identities(int max_l);

}  // namespace ihc::schubert

#endif  // IHCALC_SCHUBERT_HPP
