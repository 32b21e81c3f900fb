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

#include "arcgon/constructions.hpp"

#include <algorithm>
#include <string>

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"

namespace arcgon {
namespace {

AffinePointMap fixed(std::int32_t t, std::int64_t e) { return {t, 0, e}; }
AffinePointMap moving(std::int32_t t, std::int64_t slope, std::int64_t e) {
  return {t, slope, e};
}

// {(t, n), (t, 0)} for n outside {-1, 0, 1}, as two half-infinite families.
void add_star(SymbolicArcSet& s, std::int32_t t) {
  s.add_family({moving(t, 1, 0), fixed(t, 0), Interval::at_least(2), {}});
  s.add_family({moving(t, 1, 0), fixed(t, 0), Interval::at_most(-2), {}});
}

// {(t, n), (t, -n)} and {(t, n + 1), (t, -n)} for n >= 1.
void add_zigzag(SymbolicArcSet& s, std::int32_t t) {
  s.add_family({moving(t, 1, 0), moving(t, -1, 0), Interval::at_least(1), {}});
  s.add_family({moving(t, 1, 1), moving(t, -1, 0), Interval::at_least(1), {}});
}

Arc pt(std::int32_t t1, std::int64_t e1, std::int32_t t2, std::int64_t e2) {
  return Arc{Point{t1, e1}, Point{t2, e2}};
}

}  // namespace

SymbolicArcSet builtin_example(int i) {
  const auto z = CyclicOrder::thread_gon(1);
  const auto two = CyclicOrder::thread_gon(2);
  switch (i) {
    case 1: {
      SymbolicArcSet s(z);
      s.add_family({moving(0, 1, 0), fixed(0, -1), Interval::at_most(-3), {}});
      s.add_family({fixed(0, 1), moving(0, 1, 0), Interval::at_least(3), {}});
      return s;
    }
    case 2:
      return SymbolicArcSet(z, {pt(0, -3, 0, -1), pt(0, 1, 0, 3)});
    case 3: {
      SymbolicArcSet s(two);
      add_star(s, 0);
      add_star(s, 1);
      return s;
    }
    case 4: {
      SymbolicArcSet s(z);
      s.add_family({moving(0, 1, 0), fixed(0, 0), Interval::at_most(-2), {}});
      s.add_family({fixed(0, 1), moving(0, 1, 0), Interval::at_least(3), {}});
      return s;
    }
    case 5: {
      SymbolicArcSet s(two);
      add_star(s, 0);
      add_zigzag(s, 1);
      return s;
    }
    case 6: {
      SymbolicArcSet s(two);
      add_zigzag(s, 0);
      add_zigzag(s, 1);
      return s;
    }
    case 7: {
      SymbolicArcSet s(z);
      s.add_family({fixed(0, 0), moving(0, 1, 0), Interval::at_least(3), {}});
      s.add_family({fixed(0, 0), moving(0, 1, 0), Interval::at_most(-2), {}});
      return s;
    }
    case 8:
      return SymbolicArcSet(z, {pt(0, 0, 0, 2)});
    case 9: {
      SymbolicArcSet s = builtin_example(3);
      s.add_arc(pt(0, 0, 1, 0));
      return s;
    }
    case 10:
      return fan(z, Point{0, 0});
    case 11: {
      SymbolicArcSet s(two);
      s.add_family({moving(0, 1, 0), moving(1, -1, 0), Interval::all(), {}});
      s.add_family({moving(0, 1, 0), moving(1, -1, 1), Interval::all(), {}});
      return s;
    }
    default:
      throw DomainError("builtin example index must lie in [1, 11], got " + std::to_string(i));
  }
}

SymbolicArcSet fan(const CyclicOrder& c, const Point& a) {
  c.require_valid(a);
  if (c.is_finite() && c.size() < 5) throw DomainError("a fan needs at least five points");
  SymbolicArcSet s(c);
  if (c.is_finite()) {
    for (std::int64_t d = 2; d + 1 < c.size(); ++d) {
      const Point x = c.shift(a, d);
      s.add_arc(a < x ? Arc{a, x} : Arc{x, a});
    }
    return s;
  }
  const AffinePointMap centre = fixed(a.thread, a.offset);
  s.add_family({centre, moving(a.thread, 1, a.offset), Interval::at_least(2), {}});
  s.add_family({centre, moving(a.thread, -1, a.offset), Interval::at_least(2), {}});
  for (std::int32_t t = 0; t < c.thread_count(); ++t) {
    if (t != a.thread) s.add_family({centre, moving(t, 1, 0), Interval::all(), {}});
  }
  return s;
}

Enumeration::Enumeration(CyclicOrder c, std::vector<std::int64_t> order)
    : order_(c), perm_(std::move(order)), inverse_(perm_.size(), -1) {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const std::int64_t v = perm_[i];
    if (v < 0 || v >= static_cast<std::int64_t>(perm_.size()) || inverse_[v] != -1) {
      throw DomainError("enumeration is not a permutation of the points");
    }
    inverse_[v] = static_cast<std::int64_t>(i);
  }
}

Enumeration Enumeration::diagonal(const CyclicOrder& c) {
  if (c.is_finite()) throw DomainError("the diagonal enumeration needs a thread order");
  return Enumeration(c, {});
}

Enumeration Enumeration::identity(const CyclicOrder& c) {
  if (!c.is_finite()) throw DomainError("the identity enumeration needs a finite order");
  std::vector<std::int64_t> order(static_cast<std::size_t>(c.size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int64_t>(i);
  return Enumeration(c, std::move(order));
}

Enumeration Enumeration::explicit_order(const CyclicOrder& c, std::vector<std::int64_t> order) {
  if (!c.is_finite()) throw DomainError("explicit enumerations need a finite order");
  if (static_cast<std::int64_t>(order.size()) != c.size()) {
    throw DomainError("enumeration length differs from the number of points");
  }
  return Enumeration(c, std::move(order));
}

std::optional<std::int64_t> Enumeration::size() const {
  if (order_.is_finite()) return order_.size();
  return std::nullopt;
}

Point Enumeration::at(std::int64_t i) const {
  if (i < 0) throw DomainError("enumeration index must be nonnegative");
  if (order_.is_finite()) {
    if (i >= order_.size()) throw DomainError("enumeration index out of range");
    return order_.finite_point(perm_[static_cast<std::size_t>(i)]);
  }
  const std::int64_t k = order_.thread_count();
  if (i < k) return Point{static_cast<std::int32_t>(i), 0};
  const std::int64_t j = i - k;
  const std::int64_t r = j / (2 * k) + 1;
  const std::int64_t rem = j % (2 * k);
  return Point{static_cast<std::int32_t>(rem / 2), rem % 2 == 0 ? r : -r};
}

std::int64_t Enumeration::index_of(const Point& p) const {
  order_.require_valid(p);
  if (order_.is_finite()) return inverse_[static_cast<std::size_t>(p.offset)];
  const std::int64_t k = order_.thread_count();
  if (p.offset == 0) return p.thread;
  const std::int64_t r = checked::abs(p.offset);
  const std::int64_t block = checked::mul(checked::sub(r, 1), 2 * k);
  return checked::add(checked::add(k, block), 2 * p.thread + (p.offset > 0 ? 0 : 1));
}

GreedyTriangulation::GreedyTriangulation(Enumeration e) : enumeration_(std::move(e)) {
  sizes_.push_back(0);  // S_0
}

void GreedyTriangulation::materialize(std::int64_t n) {
  if (n < 0) throw DomainError("prefix index must be nonnegative");
  if (auto size = enumeration_.size(); size && n >= *size) n = *size - 1;
  const CyclicOrder& c = enumeration_.order();
  while (static_cast<std::int64_t>(sizes_.size()) <= n) {
    const std::int64_t step = static_cast<std::int64_t>(sizes_.size());
    const Point y = enumeration_.at(step);
    const std::size_t before = arcs_.size();
    for (std::int64_t i = 0; i < step; ++i) {
      const Point x = enumeration_.at(i);
      if (is_edge(c, x, y)) continue;
      const Arc p = x < y ? Arc{x, y} : Arc{y, x};
      const bool free = std::none_of(arcs_.begin(), arcs_.begin() + before,
                                     [&](const Arc& q) { return crosses(c, p, q); });
      if (free) arcs_.push_back(p);
    }
    sizes_.push_back(arcs_.size());
  }
}

std::vector<Arc> GreedyTriangulation::prefix(std::int64_t n) {
  materialize(n);
  const std::size_t last = std::min<std::size_t>(static_cast<std::size_t>(n), sizes_.size() - 1);
  return {arcs_.begin(), arcs_.begin() + static_cast<std::ptrdiff_t>(sizes_[last])};
}

bool GreedyTriangulation::contains(const Arc& p) {
  const std::int64_t n =
      std::max(enumeration_.index_of(p.a), enumeration_.index_of(p.b));
  const auto s = prefix(n);
  return std::find(s.begin(), s.end(), p) != s.end();
}

std::vector<Arc> GreedyTriangulation::incident_arcs_up_to(const Point& x, std::int64_t bound) {
  enumeration_.order().require_valid(x);
  std::vector<Arc> out;
  for (const Arc& p : prefix(bound)) {
    if (p.a == x || p.b == x) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t GreedyTriangulation::stabilization_bound(const Point& x) const {
  const CyclicOrder& c = enumeration_.order();
  return std::max({enumeration_.index_of(x), enumeration_.index_of(c.predecessor(x)),
                   enumeration_.index_of(c.successor(x))});
}

}  // namespace arcgon
