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

#include "arcgon/arc.hpp"

#include <utility>

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"

namespace arcgon {

bool is_edge(const CyclicOrder& c, const Point& a, const Point& b) {
  return c.are_neighbors(a, b);
}

Arc make_arc(const CyclicOrder& c, const Point& a, const Point& b) {
  c.require_valid(a);
  c.require_valid(b);
  if (a == b) {
    throw NotAnArc(NotAnArcReason::equal, "{" + c.format(a) + ", " + c.format(b) +
                                              "} is a single point");
  }
  if (c.are_neighbors(a, b)) {
    throw NotAnArc(NotAnArcReason::edge,
                   "{" + c.format(a) + ", " + c.format(b) + "} is an edge");
  }
  return a < b ? Arc{a, b} : Arc{b, a};
}

bool crosses(const CyclicOrder& c, const Arc& p, const Arc& q) {
  c.require_valid(p.a);
  c.require_valid(p.b);
  c.require_valid(q.a);
  c.require_valid(q.b);
  // Interleaving in the canonical cut; both arcs are stored normalized.
  return (p.a < q.a && q.a < p.b && p.b < q.b) || (q.a < p.a && p.a < q.b && q.b < p.b);
}

bool adjacent(const Arc& p, const Arc& q) {
  if (p == q) throw DomainError("adjacency is only defined for distinct arcs");
  return p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b;
}

Arc rotate(const CyclicOrder& c, const Arc& p, std::int64_t steps) {
  const std::int64_t back = checked::neg(steps);
  return make_arc(c, c.shift(p.a, back), c.shift(p.b, back));
}

std::string format_arc(const CyclicOrder& c, const Arc& p) {
  return "{" + c.format(p.a) + ", " + c.format(p.b) + "}";
}

Point AffinePointMap::at(std::int64_t n) const {
  return Point{thread, checked::add(checked::mul(slope, n), offset)};
}

}  // namespace arcgon
