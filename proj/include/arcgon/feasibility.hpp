// Copyright 2026 The arcgon Authors
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

#ifndef ARCGON_FEASIBILITY_HPP
#define ARCGON_FEASIBILITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arcgon {

/// Integer interval; a missing bound is infinite.
struct Interval {
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;

  static Interval all() { return {}; }
  static Interval closed(std::int64_t a, std::int64_t b) { return {a, b}; }
  static Interval at_least(std::int64_t a) { return {a, std::nullopt}; }
  static Interval at_most(std::int64_t b) { return {std::nullopt, b}; }
  static Interval point(std::int64_t a) { return {a, a}; }

  bool empty() const noexcept { return lo && hi && *lo > *hi; }
  bool bounded() const noexcept { return lo.has_value() && hi.has_value(); }
  bool contains(std::int64_t x) const noexcept {
    return (!lo || *lo <= x) && (!hi || x <= *hi);
  }
  Interval intersect(const Interval& o) const;
  void raise_lo(std::int64_t v) {
    if (!lo || *lo < v) lo = v;
  }
  void lower_hi(std::int64_t v) {
    if (!hi || *hi > v) hi = v;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

/// Conjunction of unit-coefficient constraints over two integer unknowns n
/// and m: bounds on n, m, n - m and n + m (integer octagon in the plane).
struct FeasibilitySystem {
  enum class Term { n, m, n_minus_m, n_plus_m };
  enum class Rel { le, ge, eq };

  Interval n;
  Interval m;
  Interval diff;  // n - m
  Interval sum;   // n + m

  FeasibilitySystem& add(Term term, Rel rel, std::int64_t c);
  FeasibilitySystem intersect(const FeasibilitySystem& o) const;

  /// Exact set of n admitting some m; empty interval if infeasible.
  Interval feasible_n() const;
  /// Admissible m for a fixed n.
  Interval m_given(std::int64_t n_value) const;
  bool is_empty() const { return feasible_n().empty(); }
  bool contains(std::int64_t n_value, std::int64_t m_value) const;
  /// Some solution, choosing values close to zero.
  std::optional<std::pair<std::int64_t, std::int64_t>> any_solution() const;

  friend bool operator==(const FeasibilitySystem&, const FeasibilitySystem&) = default;
};

/// n = n_slope * t + n_offset, m = m_slope * t + m_offset for all t >= t0.
struct SolutionRay {
  std::int64_t n_slope = 0;
  std::int64_t n_offset = 0;
  std::int64_t m_slope = 0;
  std::int64_t m_offset = 0;
  std::int64_t t0 = 0;

  std::pair<std::int64_t, std::int64_t> at(std::int64_t t) const;
};

struct SolveResult {
  enum class Kind { empty, finite, infinite };
  Kind kind = Kind::empty;
  std::vector<std::pair<std::int64_t, std::int64_t>> solutions;  // finite only
  SolutionRay ray;                                                // infinite only
};

/// Exact classification of the integer solutions of `system` with n in
/// `n_range` and m in `m_range`. Finite solution sets are enumerated.
SolveResult solve(const FeasibilitySystem& system, const Interval& n_range,
                  const Interval& m_range);

/// Number of solutions, or nullopt when infinite.
std::optional<std::int64_t> count_solutions(const FeasibilitySystem& system);

// ---------------------------------------------------------------------------
// Linear atoms over up to three unknowns, used to build feasibility systems
// from comparisons of affine endpoint maps.

constexpr int kMaxVars = 3;

/// sum coef[i] * x_i + c, read as the constraint "<= 0".
struct LinearAtom {
  std::array<std::int64_t, kMaxVars> coef{};
  std::int64_t c = 0;
};

/// A conjunction of atoms; `dead` records a constant false conjunct.
struct Conjunction {
  bool dead = false;
  std::vector<LinearAtom> atoms;

  void add(const LinearAtom& atom);
  void add_false() { dead = true; }
  void add_bound(int var, const Interval& range);
};

/// Fourier-Motzkin elimination of `var`. Exact over the integers because
/// every atom mentions `var` with coefficient -1, 0 or +1.
Conjunction eliminate(const Conjunction& conj, int var);

/// Converts a conjunction over the unknowns `x_var` (as n) and `y_var` (as m)
/// into a feasibility system. The conjunction must not mention other
/// unknowns. Returns nullopt if it is trivially false.
std::optional<FeasibilitySystem> to_system(const Conjunction& conj, int x_var, int y_var);

}  // namespace arcgon

#endif  // ARCGON_FEASIBILITY_HPP
