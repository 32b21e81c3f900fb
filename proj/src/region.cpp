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

// Maximality by region calculus. For a pair of threads (t1, t2), the
// candidate arcs {(t1, u), (t2, v)} form an integer region in the (u, v)
// plane. Members and arcs crossed by a member are finite unions of octagon
// cells once the family parameter is eliminated; the set is maximal exactly
// when removing all of them leaves nothing.

#include <algorithm>

#include "arcgon/arc_set.hpp"
#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"
#include "internal.hpp"

namespace arcgon {
namespace {

using Cell = FeasibilitySystem;
using Term = FeasibilitySystem::Term;
using Rel = FeasibilitySystem::Rel;

bool empty_cell(const Cell& c) { return c.feasible_n().empty(); }

template <typename C>
auto& slot(C& c, Term t) {
  switch (t) {
    case Term::n: return c.n;
    case Term::m: return c.m;
    case Term::n_minus_m: return c.diff;
    case Term::n_plus_m: return c.sum;
  }
  return c.n;
}

// a \ r as disjoint cells.
void subtract(const Cell& a, const Cell& r, std::vector<Cell>& out) {
  if (empty_cell(a.intersect(r))) {
    out.push_back(a);
    return;
  }
  Cell inside = a;
  for (Term t : {Term::n, Term::m, Term::n_minus_m, Term::n_plus_m}) {
    const Interval& bound = slot(r, t);
    if (bound.lo) {
      Cell below = inside;
      slot(below, t).lower_hi(checked::sub(*bound.lo, 1));
      if (!empty_cell(below)) out.push_back(below);
      slot(inside, t).raise_lo(*bound.lo);
    }
    if (bound.hi) {
      Cell above = inside;
      slot(above, t).raise_lo(checked::add(*bound.hi, 1));
      if (!empty_cell(above)) out.push_back(above);
      slot(inside, t).lower_hi(*bound.hi);
    }
  }
}

constexpr int kParam = 0;
constexpr int kU = 1;
constexpr int kV = 2;

std::optional<Cell> to_cell(const Conjunction& conj) {
  auto sys = to_system(eliminate(conj, kParam), kU, kV);
  if (!sys || empty_cell(*sys)) return std::nullopt;
  return sys;
}

std::vector<Cell> removal_cells(const Piece& piece, std::int32_t t1, std::int32_t t2) {
  const AffinePointMap u{t1, 1, 0};
  const AffinePointMap v{t2, 1, 0};
  std::vector<Cell> out;
  auto push = [&](const Conjunction& conj) {
    if (conj.dead) return;
    if (auto cell = to_cell(conj)) out.push_back(*cell);
  };
  Conjunction same;
  same.add_bound(kParam, piece.range);
  internal::add_equal(same, piece.lo, kParam, u, kU);
  internal::add_equal(same, piece.hi, kParam, v, kV);
  push(same);

  Conjunction left;  // lo < u < hi < v
  left.add_bound(kParam, piece.range);
  internal::add_less(left, piece.lo, kParam, u, kU);
  internal::add_less(left, u, kU, piece.hi, kParam);
  internal::add_less(left, piece.hi, kParam, v, kV);
  push(left);

  Conjunction right;  // u < lo < v < hi
  right.add_bound(kParam, piece.range);
  internal::add_less(right, u, kU, piece.lo, kParam);
  internal::add_less(right, piece.lo, kParam, v, kV);
  internal::add_less(right, v, kV, piece.hi, kParam);
  push(right);
  return out;
}

std::vector<Cell> candidate_cells(const CyclicOrder& c, std::int32_t t1, std::int32_t t2) {
  std::vector<Cell> out;
  Cell base;
  if (t1 == t2) base.add(Term::n_minus_m, Rel::le, -2);
  if (c.is_finite()) {
    const std::int64_t last = c.size() - 1;
    Cell away = base;
    away.add(Term::n, Rel::ge, 1).add(Term::m, Rel::le, last);
    Cell at_zero = base;
    at_zero.add(Term::n, Rel::eq, 0).add(Term::m, Rel::le, last - 1);
    for (const auto& cell : {away, at_zero}) {
      if (!empty_cell(cell)) out.push_back(cell);
    }
  } else {
    out.push_back(base);
  }
  return out;
}

}  // namespace

MaximalVerdict is_maximal(const SymbolicArcSet& s) {
  internal::require_decidable(s);
  const auto& c = s.order();
  const auto pieces = s.pieces();
  for (std::int32_t t1 = 0; t1 < c.thread_count(); ++t1) {
    for (std::int32_t t2 = t1; t2 < c.thread_count(); ++t2) {
      std::vector<Cell> region = candidate_cells(c, t1, t2);
      for (const auto& piece : pieces) {
        for (const auto& r : removal_cells(piece, t1, t2)) {
          std::vector<Cell> next;
          for (const auto& a : region) subtract(a, r, next);
          region = std::move(next);
          if (region.empty()) break;
        }
        if (region.empty()) break;
      }
      if (region.empty()) continue;
      const auto [u, v] = *region.front().any_solution();
      return {false, Arc{Point{t1, u}, Point{t2, v}}};
    }
  }
  return {};
}

}  // namespace arcgon
