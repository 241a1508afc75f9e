// Copyright 2026 The srnt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srnt/checked_int.hpp"
#include "srnt/params.hpp"
#include "srnt/rational.hpp"

namespace srnt {

// Systematic enumeration of feasible SRNT parameters, keyed on the
// positive eigenvalue q. For fixed q the candidate c runs over
// [1, q(q+1)] (the upper end is Krein nonnegativity), and with
//
//   A = q^2+3q+2, B = 2q^3+3q^2-q, D = q^4-q^2,
//   E = q^3-4q-2,  F = q(q+1)(q^2+2q+3)
//
// the vertex count and first multiplicity have the closed forms
//
//   n  = A c + B + D/c
//   m1 = A c + E + (F c + q D) / (c (c + 2q))
//
// so n is integral iff c | D, and given that, m1 is integral iff
// (c + 2q) | F + q D / c.

/// A row of the feasibility tables; identical payload to ParamSet, the
/// display order being (n, k, c, s, ell, lambda1, lambda2, m1, m2, K1, K2).
using EnumerationRow = ParamSet;

namespace detail {

struct QConstants {
  Int a, b, d, e, f;
};

inline QConstants q_constants(Int q) {
  QConstants k;
  k.a = q * q + 3 * q + 2;
  k.b = 2 * q * q * q + 3 * q * q - q;
  k.d = q * q * q * q - q * q;
  k.e = q * q * q - 4 * q - 2;
  k.f = q * (q + 1) * (q * q + 2 * q + 3);
  return k;
}

}  // namespace detail

/// n as an exact rational function of (q, c): A c + B + D/c.
inline Rational closed_form_n(Int q, Int c) {
  auto qc = detail::q_constants(q);
  return Rational(qc.a * c + qc.b) + Rational(qc.d, c);
}

/// m1 as an exact rational function of (q, c): A c + E + (F c + q D)/(c (c+2q)).
inline Rational closed_form_m1(Int q, Int c) {
  auto qc = detail::q_constants(q);
  return Rational(qc.a * c + qc.e) + Rational(qc.f * c + q * qc.d, c * (c + 2 * q));
}

/// Range of possible vertex counts for eigenvalue q:
///   n_min = ceil(2q^3 + 3q^2 - q + 2q(q+1) sqrt(q^2+q-2)),  n_max = q^2 (q+3)^2.
/// The ceiling is taken exactly: with V = 4 q^2 (q+1)^2 (q^2+q-2) the square
/// of the irrational term, n_min = B + t for the least t >= 0 with t^2 >= V.
inline std::pair<Int, Int> n_bounds(Int q) {
  if (q < 1) throw std::invalid_argument("n_bounds: q must be at least 1");
  Int b = detail::q_constants(q).b;
  Int v = 4 * q * q * (q + 1) * (q + 1) * (q * q + q - 2);
  Int t = isqrt_floor(v);
  if (t * t != v) t += 1;
  Int n_max = q * q * (q + 3) * (q + 3);
  return {b + t, n_max};
}

/// All feasible parameter rows with lambda1 = q, sorted by (n, k).
/// Candidates are pre-filtered by the divisibility conditions above and
/// then must pass every feasibility check of derive_from_qc. For q = 1,
/// D = 0 and the condition c | D holds vacuously for every c in range.
inline std::vector<EnumerationRow> enumerate_for_q(Int q) {
  if (q < 1) throw std::invalid_argument("enumerate_for_q: q must be at least 1");
  auto [a, b, d, e, f] = detail::q_constants(q);
  std::vector<EnumerationRow> rows;
  Int c_max = q * (q + 1);
  for (Int c = 1; c <= c_max; c += 1) {
    if (!(d % c).is_zero()) continue;
    if (!((f + q * (d / c)) % (c + 2 * q)).is_zero()) continue;
    FeasibilityReport report = derive_from_qc(q, c);
    if (!report.feasible()) continue;
    rows.push_back(*report.params);
  }
  std::sort(rows.begin(), rows.end(), [](const EnumerationRow& x, const EnumerationRow& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.k < y.k;
  });
  return rows;
}

/// All feasible rows with n <= max_n, over every eigenvalue q whose
/// n_min does not exceed max_n. Relies on n_min being increasing in q
/// (asserted as a tested property elsewhere). Requires max_n >= 10,
/// the smallest feasible vertex count in scope.
inline std::vector<EnumerationRow> enumerate_up_to_n(Int max_n) {
  if (max_n < 10) throw std::invalid_argument("enumerate_up_to_n: max_n must be at least 10");
  std::vector<EnumerationRow> rows;
  for (Int q = 1;; q += 1) {
    auto [n_min, n_max] = n_bounds(q);
    if (n_min > max_n) break;
    for (const EnumerationRow& row : enumerate_for_q(q)) {
      if (row.n <= max_n) rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const EnumerationRow& x, const EnumerationRow& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.k < y.k;
  });
  return rows;
}

}  // namespace srnt
