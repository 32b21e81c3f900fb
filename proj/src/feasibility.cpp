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

#include "arcgon/feasibility.hpp"

#include <algorithm>

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"

namespace arcgon {
namespace {

using Opt = std::optional<std::int64_t>;

Opt add_opt(Opt a, Opt b) {
  if (!a || !b) return std::nullopt;
  return checked::add(*a, *b);
}

Opt sub_opt(Opt a, Opt b) {
  if (!a || !b) return std::nullopt;
  return checked::sub(*a, *b);
}

std::int64_t clamp_toward_zero(const Interval& iv) {
  if (iv.lo && *iv.lo > 0) return *iv.lo;
  if (iv.hi && *iv.hi < 0) return *iv.hi;
  return 0;
}

constexpr std::int64_t kEnumerationLimit = 10'000'000;

}  // namespace

Interval Interval::intersect(const Interval& o) const {
  Interval r = *this;
  if (o.lo) r.raise_lo(*o.lo);
  if (o.hi) r.lower_hi(*o.hi);
  return r;
}

std::string to_string(const Interval& iv) {
  std::string s = "[";
  s += iv.lo ? std::to_string(*iv.lo) : std::string("-inf");
  s += ", ";
  s += iv.hi ? std::to_string(*iv.hi) : std::string("+inf");
  s += iv.hi ? "]" : ")";
  return s;
}

FeasibilitySystem& FeasibilitySystem::add(Term term, Rel rel, std::int64_t c) {
  Interval* target = nullptr;
  switch (term) {
    case Term::n: target = &n; break;
    case Term::m: target = &m; break;
    case Term::n_minus_m: target = &diff; break;
    case Term::n_plus_m: target = &sum; break;
  }
  if (rel != Rel::ge) target->lower_hi(c);
  if (rel != Rel::le) target->raise_lo(c);
  return *this;
}

FeasibilitySystem FeasibilitySystem::intersect(const FeasibilitySystem& o) const {
  return {n.intersect(o.n), m.intersect(o.m), diff.intersect(o.diff), sum.intersect(o.sum)};
}

Interval FeasibilitySystem::feasible_n() const {
  static const Interval kEmpty = Interval::closed(1, 0);
  if (n.empty() || m.empty() || diff.empty() || sum.empty()) return kEmpty;
  // For fixed n, m ranges over [max(m.lo, n - diff.hi, sum.lo - n),
  // min(m.hi, n - diff.lo, sum.hi - n)]. Nonemptiness is a conjunction of
  // pairwise comparisons, each a bound on n.
  Interval r = n;
  if (auto v = add_opt(m.lo, diff.lo)) r.raise_lo(*v);
  if (auto v = sub_opt(sum.hi, m.lo)) r.lower_hi(*v);
  if (auto v = add_opt(m.hi, diff.hi)) r.lower_hi(*v);
  if (auto v = add_opt(diff.hi, sum.hi)) r.lower_hi(checked::floor_div(*v, 2));
  if (auto v = sub_opt(sum.lo, m.hi)) r.raise_lo(*v);
  if (auto v = add_opt(diff.lo, sum.lo)) r.raise_lo(checked::ceil_div(*v, 2));
  if (r.empty()) return kEmpty;
  return r;
}

Interval FeasibilitySystem::m_given(std::int64_t nv) const {
  Interval r = m;
  if (diff.hi) r.raise_lo(checked::sub(nv, *diff.hi));
  if (sum.lo) r.raise_lo(checked::sub(*sum.lo, nv));
  if (diff.lo) r.lower_hi(checked::sub(nv, *diff.lo));
  if (sum.hi) r.lower_hi(checked::sub(*sum.hi, nv));
  return r;
}

bool FeasibilitySystem::contains(std::int64_t nv, std::int64_t mv) const {
  return n.contains(nv) && m.contains(mv) && diff.contains(checked::sub(nv, mv)) &&
         sum.contains(checked::add(nv, mv));
}

std::optional<std::pair<std::int64_t, std::int64_t>> FeasibilitySystem::any_solution() const {
  Interval f = feasible_n();
  if (f.empty()) return std::nullopt;
  std::int64_t nv = clamp_toward_zero(f);
  Interval mi = m_given(nv);
  if (mi.empty()) throw InvariantViolation("feasible n without admissible m");
  return std::make_pair(nv, clamp_toward_zero(mi));
}

std::pair<std::int64_t, std::int64_t> SolutionRay::at(std::int64_t t) const {
  return {checked::add(checked::mul(n_slope, t), n_offset),
          checked::add(checked::mul(m_slope, t), m_offset)};
}

namespace {

// Direction (dn, dm) lies in the recession cone of the system.
bool recedes(const FeasibilitySystem& s, std::int64_t dn, std::int64_t dm) {
  auto ok = [](const Interval& iv, std::int64_t slope) {
    if (slope > 0) return !iv.hi.has_value();
    if (slope < 0) return !iv.lo.has_value();
    return true;
  };
  return ok(s.n, dn) && ok(s.m, dm) && ok(s.diff, dn - dm) && ok(s.sum, dn + dm);
}

SolutionRay make_ray(const FeasibilitySystem& s) {
  const auto start = s.any_solution();
  if (!start) throw InvariantViolation("ray requested for an empty system");
  const auto [n0, m0] = *start;
  // Recession directions of a planar octagon are spanned by (+-1, 0),
  // (0, +-1) and (+-1, +-1); prefer rays that move n.
  for (std::int64_t dn : {1, -1}) {
    for (std::int64_t dm : {0, 1, -1}) {
      if (!recedes(s, dn, dm)) continue;
      // n = dn * t, so t0 = dn * n0 and m = dm * (t - t0) + m0.
      SolutionRay r;
      r.n_slope = dn;
      r.n_offset = 0;
      r.t0 = checked::mul(dn, n0);
      r.m_slope = dm;
      r.m_offset = checked::sub(m0, checked::mul(dm, r.t0));
      return r;
    }
  }
  for (std::int64_t dm : {1, -1}) {
    if (!recedes(s, 0, dm)) continue;
    SolutionRay r;
    r.n_slope = 0;
    r.n_offset = n0;
    r.m_slope = dm;
    r.m_offset = 0;
    r.t0 = checked::mul(dm, m0);
    return r;
  }
  throw InvariantViolation("unbounded system without a recession direction");
}

}  // namespace

SolveResult solve(const FeasibilitySystem& system, const Interval& n_range,
                  const Interval& m_range) {
  FeasibilitySystem s = system;
  s.n = s.n.intersect(n_range);
  s.m = s.m.intersect(m_range);
  SolveResult result;
  const Interval f = s.feasible_n();
  if (f.empty()) return result;
  const bool m_unbounded = (!s.m.hi && !s.diff.lo && !s.sum.hi) ||
                           (!s.m.lo && !s.diff.hi && !s.sum.lo);
  if (!f.bounded() || m_unbounded) {
    result.kind = SolveResult::Kind::infinite;
    result.ray = make_ray(s);
    return result;
  }
  std::int64_t total = 0;
  for (std::int64_t nv = *f.lo; nv <= *f.hi; ++nv) {
    const Interval mi = s.m_given(nv);
    if (mi.empty()) continue;
    total += *mi.hi - *mi.lo + 1;
    if (total > kEnumerationLimit) throw Unsupported("solution set too large to enumerate");
  }
  result.kind = SolveResult::Kind::finite;
  result.solutions.reserve(static_cast<std::size_t>(total));
  for (std::int64_t nv = *f.lo; nv <= *f.hi; ++nv) {
    const Interval mi = s.m_given(nv);
    if (mi.empty()) continue;
    for (std::int64_t mv = *mi.lo; mv <= *mi.hi; ++mv) result.solutions.emplace_back(nv, mv);
  }
  return result;
}

std::optional<std::int64_t> count_solutions(const FeasibilitySystem& system) {
  const Interval f = system.feasible_n();
  if (f.empty()) return 0;
  const bool m_unbounded = (!system.m.hi && !system.diff.lo && !system.sum.hi) ||
                           (!system.m.lo && !system.diff.hi && !system.sum.lo);
  if (!f.bounded() || m_unbounded) return std::nullopt;
  std::int64_t total = 0;
  for (std::int64_t nv = *f.lo; nv <= *f.hi; ++nv) {
    const Interval mi = system.m_given(nv);
    if (!mi.empty()) total = checked::add(total, *mi.hi - *mi.lo + 1);
  }
  return total;
}

void Conjunction::add(const LinearAtom& atom) {
  if (dead) return;
  if (std::all_of(atom.coef.begin(), atom.coef.end(), [](auto v) { return v == 0; })) {
    if (atom.c > 0) dead = true;
    return;
  }
  atoms.push_back(atom);
}

void Conjunction::add_bound(int var, const Interval& range) {
  if (range.lo) {
    LinearAtom a;
    a.coef[var] = -1;
    a.c = *range.lo;
    add(a);
  }
  if (range.hi) {
    LinearAtom a;
    a.coef[var] = 1;
    a.c = checked::neg(*range.hi);
    add(a);
  }
}

Conjunction eliminate(const Conjunction& conj, int var) {
  Conjunction out;
  if (conj.dead) {
    out.dead = true;
    return out;
  }
  std::vector<const LinearAtom*> lower;
  std::vector<const LinearAtom*> upper;
  for (const auto& a : conj.atoms) {
    switch (a.coef[var]) {
      case 0: out.add(a); break;
      case 1: upper.push_back(&a); break;
      case -1: lower.push_back(&a); break;
      default: throw InvariantViolation("non-unit coefficient on eliminated unknown");
    }
  }
  for (const auto* l : lower) {
    for (const auto* u : upper) {
      LinearAtom combined;
      for (int i = 0; i < kMaxVars; ++i) combined.coef[i] = checked::add(l->coef[i], u->coef[i]);
      combined.c = checked::add(l->c, u->c);
      out.add(combined);
    }
  }
  return out;
}

std::optional<FeasibilitySystem> to_system(const Conjunction& conj, int x_var, int y_var) {
  using Term = FeasibilitySystem::Term;
  using Rel = FeasibilitySystem::Rel;
  if (conj.dead) return std::nullopt;
  FeasibilitySystem s;
  for (const auto& atom : conj.atoms) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (i != x_var && i != y_var && atom.coef[i] != 0) {
        throw InvariantViolation("atom mentions an unknown outside the system");
      }
    }
    const std::int64_t a = atom.coef[x_var];
    const std::int64_t b = y_var == x_var ? 0 : atom.coef[y_var];
    const std::int64_t c = atom.c;
    if (a == 0 && b == 0) {
      if (c > 0) return std::nullopt;
    } else if (b == 0) {
      if (a > 0) s.add(Term::n, Rel::le, checked::floor_div(checked::neg(c), a));
      else s.add(Term::n, Rel::ge, checked::ceil_div(c, checked::neg(a)));
    } else if (a == 0) {
      if (b > 0) s.add(Term::m, Rel::le, checked::floor_div(checked::neg(c), b));
      else s.add(Term::m, Rel::ge, checked::ceil_div(c, checked::neg(b)));
    } else if (checked::abs(a) == checked::abs(b)) {
      const std::int64_t k = checked::abs(a);
      const std::int64_t bound = checked::floor_div(checked::neg(c), k);  // sa x + sb y <= bound
      if (a > 0 && b > 0) s.add(Term::n_plus_m, Rel::le, bound);
      else if (a < 0 && b < 0) s.add(Term::n_plus_m, Rel::ge, checked::neg(bound));
      else if (a > 0) s.add(Term::n_minus_m, Rel::le, bound);
      else s.add(Term::n_minus_m, Rel::ge, checked::neg(bound));
    } else {
      throw InvariantViolation("atom outside the octagon fragment");
    }
  }
  return s;
}

}  // namespace arcgon
