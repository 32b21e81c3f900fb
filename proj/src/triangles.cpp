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

#include <algorithm>
#include <set>

#include "arcgon/arc_set.hpp"
#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"
#include "internal.hpp"

namespace arcgon {
namespace internal {

std::vector<Segment> partner_segments(const std::vector<Piece>& pieces, const Point& a) {
  std::vector<Segment> out;
  for (const auto& piece : pieces) {
    for (int side = 0; side < 2; ++side) {
      const AffinePointMap& e = side == 0 ? piece.lo : piece.hi;
      const AffinePointMap& o = side == 0 ? piece.hi : piece.lo;
      if (e.constant()) {
        if (e.thread != a.thread || e.offset != a.offset) continue;
        if (o.constant()) {
          out.push_back({o.thread, Interval::point(o.offset)});
          continue;
        }
        Interval iv;
        const Interval& r = piece.range;
        auto f = [&](std::int64_t n) { return o.at(n).offset; };
        if (o.slope > 0) {
          if (r.lo) iv.lo = f(*r.lo);
          if (r.hi) iv.hi = f(*r.hi);
        } else {
          if (r.hi) iv.lo = f(*r.hi);
          if (r.lo) iv.hi = f(*r.lo);
        }
        out.push_back({o.thread, iv});
      } else if (auto n = preimage(e, a); n && piece.range.contains(*n)) {
        out.push_back({o.thread, Interval::point(o.at(*n).offset)});
      }
    }
  }
  return out;
}

bool member(const std::vector<Piece>& pieces, const Arc& p) {
  return std::any_of(pieces.begin(), pieces.end(),
                     [&](const Piece& piece) { return piece_contains(piece, p); });
}

bool two_gon(const CyclicOrder& c, const std::vector<Piece>& pieces, const Point& x,
             const Point& y) {
  if (x == y) return false;
  if (c.are_neighbors(x, y)) return true;
  return member(pieces, x < y ? Arc{x, y} : Arc{y, x});
}

std::vector<Point> third_vertices(const CyclicOrder& c, const std::vector<Piece>& pieces,
                                  const Point& a, const Point& b) {
  std::set<Point> found;
  for (const Point& x : {c.successor(a), c.predecessor(a), c.successor(b), c.predecessor(b)}) {
    if (x == a || x == b) continue;
    if (two_gon(c, pieces, a, x) && two_gon(c, pieces, x, b)) found.insert(x);
  }
  const auto sa = partner_segments(pieces, a);
  const auto sb = partner_segments(pieces, b);
  for (const auto& u : sa) {
    for (const auto& v : sb) {
      if (u.thread != v.thread) continue;
      const Interval both = u.offsets.intersect(v.offsets);
      if (both.empty()) continue;
      if (!both.bounded() || *both.hi - *both.lo > 64) {
        throw NotNoncrossing("two points share infinitely many partners");
      }
      for (std::int64_t e = *both.lo; e <= *both.hi; ++e) {
        const Point x{u.thread, e};
        if (x != a && x != b) found.insert(x);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::int64_t generic_window(const std::vector<Piece>& pieces) {
  return checked::add(checked::mul(6, max_constant(pieces)), 13);
}

std::vector<Arc> arcs_near_origin(const std::vector<Piece>& pieces, std::int64_t w) {
  std::vector<Arc> out;
  for (const auto& piece : pieces) {
    const Interval r = piece.range.intersect(Interval::closed(-w, w));
    if (r.empty()) continue;
    for (std::int64_t n = *r.lo; n <= *r.hi; ++n) out.push_back(piece.at(n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace internal

std::vector<Point> triangles_on(const SymbolicArcSet& s, const Point& a, const Point& b) {
  internal::require_decidable(s);
  const auto& c = s.order();
  c.require_valid(a);
  c.require_valid(b);
  const auto pieces = s.pieces();
  if (!internal::two_gon(c, pieces, a, b)) {
    throw DomainError("{" + c.format(a) + ", " + c.format(b) + "} is neither an edge nor a member");
  }
  return internal::third_vertices(c, pieces, a, b);
}

TriangulationVerdict is_triangulation(const SymbolicArcSet& s) {
  internal::require_decidable(s);
  const auto& c = s.order();
  const auto pieces = s.pieces();
  const std::int64_t w = internal::generic_window(pieces);
  TriangulationVerdict v;
  for (const auto& p : internal::arcs_near_origin(pieces, w)) {
    const auto xs = internal::third_vertices(c, pieces, p.a, p.b);
    if (xs.size() != 2) {
      v.holds = false;
      v.witness = std::make_pair(p.a, p.b);
      v.witness_triangles = xs.size();
      return v;
    }
  }
  std::vector<Point> starts;
  if (c.is_finite()) {
    for (std::int64_t i = 0; i < c.size(); ++i) starts.push_back(c.finite_point(i));
  } else {
    for (std::int32_t t = 0; t < c.thread_count(); ++t) {
      for (std::int64_t e = -w; e <= w; ++e) starts.push_back(Point{t, e});
    }
  }
  for (const Point& x : starts) {
    const Point y = c.successor(x);
    const auto xs = internal::third_vertices(c, pieces, x, y);
    if (xs.size() != 1) {
      v.holds = false;
      v.witness = std::make_pair(x, y);
      v.witness_triangles = xs.size();
      return v;
    }
  }
  return v;
}

}  // namespace arcgon
