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

#include "arcgon/flip.hpp"

#include <algorithm>

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"
#include "internal.hpp"

namespace arcgon {
namespace {

Arc normalized(const Point& x, const Point& y) { return x < y ? Arc{x, y} : Arc{y, x}; }

std::optional<FlipStep> quadrilateral(const CyclicOrder& c, const std::vector<Piece>& pieces,
                                      const Arc& p) {
  const auto xs = internal::third_vertices(c, pieces, p.a, p.b);
  if (xs.size() != 2) return std::nullopt;
  std::optional<Point> x;
  std::optional<Point> y;
  for (const Point& v : xs) {
    (c.in_open_interval(p.a, p.b, v) ? x : y) = v;
  }
  if (!x || !y) return std::nullopt;
  return FlipStep{p, normalized(*x, *y), {p.a, *x, p.b, *y}};
}

void require_member(const SymbolicArcSet& s, const Arc& p) {
  if (!contains(s, p)) throw DomainError(format_arc(s.order(), p) + " is not a member");
}

void require_valid_arc(const SymbolicArcSet& s, const Arc& p) {
  (void)make_arc(s.order(), p.a, p.b);
}

// Largest point of `seg` strictly between `lo` and `hi` in the canonical
// cut; a missing bound is open. Throws when the points have no maximum.
std::optional<Point> largest_between(const internal::Segment& seg, const std::optional<Point>& lo,
                                     const std::optional<Point>& hi) {
  Interval iv = seg.offsets;
  if (lo) {
    if (seg.thread < lo->thread) return std::nullopt;
    if (seg.thread == lo->thread) iv.raise_lo(checked::add(lo->offset, 1));
  }
  if (hi) {
    if (seg.thread > hi->thread) return std::nullopt;
    if (seg.thread == hi->thread) iv.lower_hi(checked::sub(hi->offset, 1));
  }
  if (iv.empty()) return std::nullopt;
  if (!iv.hi) throw DomainError("partners accumulate without a closest one");
  return Point{seg.thread, *iv.hi};
}

std::optional<Point> largest_in(const std::vector<internal::Segment>& segs,
                                const std::optional<Point>& lo, const std::optional<Point>& hi) {
  std::optional<Point> best;
  for (const auto& seg : segs) {
    if (auto x = largest_between(seg, lo, hi); x && (!best || *best < *x)) best = x;
  }
  return best;
}

Triangle closest(const CyclicOrder& c, const std::vector<Piece>& pieces, const Point& a,
                 const Point& b) {
  auto segs = internal::partner_segments(pieces, a);
  const Point next = c.successor(a);
  segs.push_back({next.thread, Interval::point(next.offset)});
  std::optional<Point> x;
  if (a < b) {
    x = largest_in(segs, a, b);
  } else {
    x = largest_in(segs, std::nullopt, b);
    if (!x) x = largest_in(segs, a, std::nullopt);
  }
  if (!x) throw InvariantViolation("no two-gon at " + c.format(a) + " points toward " + c.format(b));
  for (const Point& y : internal::third_vertices(c, pieces, a, *x)) {
    if (c.in_open_interval(*x, a, y)) return {a, *x, y};
  }
  throw DomainError("no triangle on {" + c.format(a) + ", " + c.format(*x) +
                    "} faces " + c.format(b));
}

void require_connected_triangulation(const SymbolicArcSet& s) {
  if (!is_triangulation(s).holds) throw DomainError("the set is not a triangulation");
  if (!is_connected(s)) throw DomainError("the set is not connected");
}

Point other_end(const Arc& p, const Point& from) {
  if (from == p.a) return p.b;
  if (from == p.b) return p.a;
  throw DomainError("the starting point is not an endpoint of the arc");
}

}  // namespace

SymbolicArcSet replay(const FlipSequence& seq) {
  SymbolicArcSet s = seq.start;
  for (const auto& step : seq.steps) {
    s.erase(step.removed);
    s.insert(step.added);
  }
  return s;
}

std::optional<FlipStep> exchangeable(const SymbolicArcSet& s, const Arc& p, bool assume_maximal) {
  internal::require_decidable(s);
  require_member(s, p);
  if (!assume_maximal && !is_maximal(s).holds) {
    throw DomainError("exchangeability is defined for maximal sets only");
  }
  return quadrilateral(s.order(), s.pieces(), p);
}

std::optional<FlipStep> find_quadrilateral(const SymbolicArcSet& s, const Arc& p) {
  internal::require_decidable(s);
  require_member(s, p);
  return quadrilateral(s.order(), s.pieces(), p);
}

ExchangeVerdict all_arcs_exchangeable(const SymbolicArcSet& s) {
  internal::require_decidable(s);
  if (!is_maximal(s).holds) throw DomainError("exchangeability is defined for maximal sets only");
  const auto pieces = s.pieces();
  // The triangle count at the member of a piece is eventually constant in
  // its parameter, so the same window as for triangulations suffices.
  for (const Arc& p : internal::arcs_near_origin(pieces, internal::generic_window(pieces))) {
    if (!quadrilateral(s.order(), pieces, p)) return {false, p};
  }
  return {};
}

SymbolicArcSet flip(const SymbolicArcSet& s, const Arc& p) {
  const auto step = exchangeable(s, p);
  if (!step) throw CannotFlip(format_arc(s.order(), p) + " lies in fewer than two triangles");
  SymbolicArcSet out = s;
  out.erase(step->removed);
  out.insert(step->added);
  return out;
}

Obtainability obtainable(const SymbolicArcSet& s, const Arc& p) {
  internal::require_decidable(s);
  require_valid_arc(s, p);
  if (!is_maximal(s).holds) throw DomainError("obtainability needs a maximal set");
  if (!is_triangulation(s).holds) throw DomainError("obtainability needs a triangulation");
  const auto listing = crossing_arcs(s, p);
  if (listing.infinite) return {};
  return {true, listing.arcs.size()};
}

Triangle closest_triangle(const SymbolicArcSet& s, const Arc& p, const Point& from) {
  internal::require_decidable(s);
  require_valid_arc(s, p);
  const Point to = other_end(p, from);
  if (contains(s, p)) throw DomainError(format_arc(s.order(), p) + " is already a member");
  require_connected_triangulation(s);
  return closest(s.order(), s.pieces(), from, to);
}

Triangle closest_triangle(const SymbolicArcSet& s, const Arc& p) {
  return closest_triangle(s, p, p.a);
}

FlipSequence reach(const SymbolicArcSet& s, const Arc& p, const Point& from) {
  internal::require_decidable(s);
  require_valid_arc(s, p);
  const Point to = other_end(p, from);
  require_connected_triangulation(s);
  const auto start = crossing_arcs(s, p);
  if (start.infinite) {
    throw NotReachable(format_arc(s.order(), p) + " crosses infinitely many members");
  }
  FlipSequence seq{s, {}};
  SymbolicArcSet current = s;
  std::size_t crossings = start.arcs.size();
  while (!contains(current, p)) {
    const auto pieces = current.pieces();
    const Triangle t = closest(current.order(), pieces, from, to);
    const auto step = quadrilateral(current.order(), pieces, normalized(t.x, t.y));
    if (!step) throw InvariantViolation("the far side of the closest triangle cannot be flipped");
    current.erase(step->removed);
    current.insert(step->added);
    const std::size_t now = crossing_arcs(current, p).arcs.size();
    if (now + 1 != crossings) throw InvariantViolation("a flip did not remove exactly one crossing");
    crossings = now;
    seq.steps.push_back(*step);
  }
  return seq;
}

FlipSequence reach(const SymbolicArcSet& s, const Arc& p) { return reach(s, p, p.a); }

}  // namespace arcgon
