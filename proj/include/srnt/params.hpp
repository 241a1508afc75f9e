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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srnt/checked_int.hpp"
#include "srnt/rational.hpp"

namespace srnt {

// Parameter theory of strongly regular triangle-free (SRNT) graphs.
//
// An SRNT graph is k-regular, adjacent vertices share no neighbours, and
// non-adjacent vertices share exactly c. With s the positive root of
// s^2 = c^2 + 4(k-c), everything else is forced:
//
//   lambda1 = (s-c)/2 = q     lambda2 = -(s+c)/2
//   ell = k(k-1)/c            n = 1 + k + ell
//   m1  = k((k-1+c)(s+c) - 2c) / (2cs)
//   m2  = k((k-1+c)(s-c) + 2c) / (2cs)
//
// All arithmetic here is exact 128-bit with overflow checks; a candidate
// parameter set is judged feasible by integrality and Krein nonnegativity
// alone. Feasible means "no arithmetic obstruction", not "a graph exists".

/// Complete derived parameter vector of an SRNT candidate.
struct ParamSet {
  Int k;        ///< degree
  Int c;        ///< common neighbours of a non-adjacent pair
  Int q;        ///< positive eigenvalue lambda1
  Int s;        ///< positive root of c^2 + 4(k-c)
  Int ell;      ///< vertices at distance 2 from any vertex, k(k-1)/c
  Int n;        ///< vertex count, 1 + k + ell
  Int lambda2;  ///< negative eigenvalue, -(s+c)/2
  Int m1;       ///< multiplicity of lambda1
  Int m2;       ///< multiplicity of lambda2
  Rational K1;  ///< first Krein parameter
  Rational K2;  ///< second Krein parameter

  Int lambda1() const { return q; }

  friend bool operator==(const ParamSet& a, const ParamSet& b) = default;
};

/// The arithmetic feasibility conditions, by name.
enum class Condition {
  non_square_s,
  parity,
  ell_not_integer,
  n_not_integer,
  m1_not_integer,
  krein_1,
  krein_2,
  degree_bound,
};

inline std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::non_square_s: return "non-square-s";
    case Condition::parity: return "parity";
    case Condition::ell_not_integer: return "ell-not-integer";
    case Condition::n_not_integer: return "n-not-integer";
    case Condition::m1_not_integer: return "m1-not-integer";
    case Condition::krein_1: return "krein-1";
    case Condition::krein_2: return "krein-2";
    case Condition::degree_bound: return "degree-bound";
  }
  throw std::logic_error("unknown condition");
}

/// Verdict of a parameter derivation. Feasible iff no condition failed.
/// Every condition is evaluated (no short-circuiting) so enumeration
/// diagnostics can name all violations at once. `params` is populated
/// whenever every field is derivable, even if Krein or degree checks
/// failed; it is absent when s or an integrality requirement broke down.
struct FeasibilityReport {
  Int k;
  Int c;
  std::optional<Int> s;
  std::optional<ParamSet> params;
  std::vector<Condition> failures;

  bool feasible() const { return failures.empty(); }

  bool failed(Condition cond) const {
    for (Condition f : failures)
      if (f == cond) return true;
    return false;
  }
};

/// The six (k, c) pairs realized by known SRNT graphs: Petersen, Clebsch,
/// Hoffman-Singleton, Gewirtz, M22, Higman-Sims.
inline constexpr std::array<std::pair<int, int>, 6> known_parameter_pairs{
    {{3, 1}, {5, 2}, {7, 1}, {10, 2}, {16, 4}, {22, 6}}};

inline bool is_known_pair(Int k, Int c) {
  for (auto [kk, cc] : known_parameter_pairs)
    if (k == kk && c == cc) return true;
  return false;
}

/// Degree bounds forced by Krein nonnegativity: k >= 3c-1 holds for every
/// SRNT graph, and any graph beyond the six known ones needs
/// k >= 7c/2 + 25/4 (checked as 4k >= 14c + 25).
enum class DegreeBound {
  pass,
  fail_absolute,      ///< k < 3c - 1
  fail_unknown_case,  ///< not a known pair and 4k < 14c + 25
};

inline DegreeBound degree_bound_check(Int k, Int c) {
  if (k < 3 || c < 1 || c >= k) throw std::invalid_argument("degree_bound_check requires k >= 3 and k > c >= 1");
  if (k < 3 * c - 1) return DegreeBound::fail_absolute;
  if (is_known_pair(k, c)) return DegreeBound::pass;
  if (4 * k < 14 * c + 25) return DegreeBound::fail_unknown_case;
  return DegreeBound::pass;
}

/// Thrown when independently computed forms of a Krein parameter disagree;
/// indicates inconsistent input or an implementation bug.
class form_disagreement_error : public std::logic_error {
 public:
  explicit form_disagreement_error(const std::string& what) : std::logic_error(what) {}
};

// The three algebraic forms of each Krein parameter. All are evaluated as
// exact rationals; for consistent same-parity (s, c) the 1/16 prefactor
// cancels and the value is an integer.

inline Rational krein1_from_sc(Int s, Int c) {
  Int sum = s + c;
  return Rational((s + c) * (s - c + 2) * (sum * sum - 2 * (s + 3 * c)), 16);
}

inline Rational krein2_from_sc(Int s, Int c) {
  Int diff = s - c;
  return Rational((s - c) * (s + c - 2) * (diff * diff + 2 * (s - 3 * c)), 16);
}

inline Rational krein1_from_eigenvalue(Int s, Int c, Int lambda2) {
  return Rational((s + c) * (s - c + 2) * (lambda2 * lambda2 + lambda2 - c), 4);
}

inline Rational krein2_from_eigenvalue(Int s, Int c, Int lambda1) {
  return Rational((s - c) * (s + c - 2) * (lambda1 * lambda1 + lambda1 - c), 4);
}

inline Rational krein1_from_multiplicity(Int c, Int s, Int k, Int m1) {
  return Rational(c * s * (s + c), 2) * (Rational(m1, k) - 1);
}

inline Rational krein2_from_multiplicity(Int c, Int s, Int k, Int m2) {
  return Rational(c * s * (s - c), 2) * (Rational(m2, k) - 1);
}

/// Krein parameters of a parameter set whose spectral fields are already
/// populated. Each of K1 and K2 is computed in all three forms; the forms
/// must agree exactly or form_disagreement_error is thrown. This is a
/// built-in cross-check, not an optimization.
inline std::pair<Rational, Rational> krein_params(const ParamSet& p) {
  Rational k1 = krein1_from_sc(p.s, p.c);
  Rational k1e = krein1_from_eigenvalue(p.s, p.c, p.lambda2);
  Rational k1m = krein1_from_multiplicity(p.c, p.s, p.k, p.m1);
  if (k1 != k1e || k1 != k1m) {
    throw form_disagreement_error("K1 forms disagree: " + k1.str() + ", " + k1e.str() + ", " + k1m.str());
  }
  Rational k2 = krein2_from_sc(p.s, p.c);
  Rational k2e = krein2_from_eigenvalue(p.s, p.c, p.q);
  Rational k2m = krein2_from_multiplicity(p.c, p.s, p.k, p.m2);
  if (k2 != k2e || k2 != k2m) {
    throw form_disagreement_error("K2 forms disagree: " + k2.str() + ", " + k2e.str() + ", " + k2m.str());
  }
  return {k1, k2};
}

// Exact rational forms of the derived quantities, defined for any nonzero
// s (in particular for -s, which realizes the s-symmetry of the algebra:
// negating s fixes k and swaps lambda1/lambda2 and m1/m2).

inline Rational degree_from_sc(Int s, Int c) { return Rational(s * s - c * c, 4) + Rational(c); }

inline Rational eigenvalue1_from_sc(Int s, Int c) { return Rational(s - c, 2); }

inline Rational eigenvalue2_from_sc(Int s, Int c) { return Rational(-s - c, 2); }

inline Rational multiplicity1_exact(Int k, Int c, Int s) {
  return Rational(k * ((k - 1 + c) * (s + c) - 2 * c), 2 * c * s);
}

inline Rational multiplicity2_exact(Int k, Int c, Int s) {
  return Rational(k * ((k - 1 + c) * (s - c) + 2 * c), 2 * c * s);
}

/// Derives every SRNT parameter from (k, c) and checks all feasibility
/// conditions. Preconditions k >= 3, k > c >= 1 are the caller's job
/// (they exclude the pentagon and the complete bipartite graphs);
/// violations throw std::invalid_argument.
inline FeasibilityReport derive_from_kc(Int k, Int c) {
  if (k < 3) throw std::invalid_argument("derive_from_kc: k must be at least 3");
  if (c < 1) throw std::invalid_argument("derive_from_kc: c must be at least 1");
  if (c >= k) throw std::invalid_argument("derive_from_kc: c must be less than k");

  FeasibilityReport report;
  report.k = k;
  report.c = c;

  Int disc = c * c + 4 * (k - c);
  Int root = 0;
  bool square = is_perfect_square(disc, &root);
  bool parity_ok = false;
  if (!square) {
    report.failures.push_back(Condition::non_square_s);
  } else {
    report.s = root;
    parity_ok = ((root - c) % 2).is_zero();
    if (!parity_ok) report.failures.push_back(Condition::parity);
  }

  // Integrality of ell and n, each from its own divisibility statement.
  bool ell_ok = (k * (k - 1) % c).is_zero();
  if (!ell_ok) report.failures.push_back(Condition::ell_not_integer);
  bool n_ok = (k * (k - 1 + c) % c).is_zero();
  if (!n_ok) report.failures.push_back(Condition::n_not_integer);

  bool m1_ok = false;
  if (square && parity_ok) {
    Int s = root;
    Int m1_num = k * ((k - 1 + c) * (s + c) - 2 * c);
    m1_ok = (m1_num % (2 * c * s)).is_zero();
    if (!m1_ok) report.failures.push_back(Condition::m1_not_integer);

    if (krein1_from_sc(s, c).sign() < 0) report.failures.push_back(Condition::krein_1);
    if (krein2_from_sc(s, c).sign() < 0) report.failures.push_back(Condition::krein_2);
  }

  if (degree_bound_check(k, c) != DegreeBound::pass) report.failures.push_back(Condition::degree_bound);

  if (square && parity_ok && ell_ok && n_ok && m1_ok) {
    Int s = root;
    ParamSet p;
    p.k = k;
    p.c = c;
    p.s = s;
    p.q = (s - c) / 2;
    p.lambda2 = -(s + c) / 2;
    p.ell = k * (k - 1) / c;
    p.n = 1 + k + p.ell;
    p.m1 = k * ((k - 1 + c) * (s + c) - 2 * c) / (2 * c * s);
    p.m2 = p.n - 1 - p.m1;
    // Trace identities; failure here means a bug, not infeasible input.
    if (p.m1 + p.m2 != p.n - 1 || k + p.m1 * p.q + p.m2 * p.lambda2 != 0) {
      throw std::logic_error("derived multiplicities violate trace identities");
    }
    auto [k1, k2] = krein_params(p);
    p.K1 = k1;
    p.K2 = k2;
    report.params = p;
  }

  return report;
}

/// Same feasibility logic entered through (q, c): with lambda1 = q fixed,
/// s = c + 2q and k = (q+1)c + q^2. Agrees with derive_from_kc wherever
/// both are defined.
inline FeasibilityReport derive_from_qc(Int q, Int c) {
  if (q < 1) throw std::invalid_argument("derive_from_qc: q must be at least 1");
  if (c < 1) throw std::invalid_argument("derive_from_qc: c must be at least 1");
  Int k = (q + 1) * c + q * q;
  return derive_from_kc(k, c);
}

}  // namespace srnt
