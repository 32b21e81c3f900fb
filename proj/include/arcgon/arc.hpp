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

#ifndef ARCGON_ARC_HPP
#define ARCGON_ARC_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "arcgon/cyclic_order.hpp"

namespace arcgon {

/// An unordered pair of distinct non-neighbor points, stored with the smaller
/// endpoint (in the canonical cut) first.
struct Arc {
  Point a;
  Point b;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Throws NotAnArc when {a, b} is a single point or an edge.
Arc make_arc(const CyclicOrder& c, const Point& a, const Point& b);

/// {a, b} is an edge of the order (a pair of neighbors).
bool is_edge(const CyclicOrder& c, const Point& a, const Point& b);

bool crosses(const CyclicOrder& c, const Arc& p, const Arc& q);

/// Shared endpoint. Throws DomainError when p == q.
bool adjacent(const Arc& p, const Arc& q);

/// The rotation applied `steps` times: both endpoints move `steps` predecessors.
Arc rotate(const CyclicOrder& c, const Arc& p, std::int64_t steps);

std::string format_arc(const CyclicOrder& c, const Arc& p);

/// n -> (thread, slope * n + offset).
struct AffinePointMap {
  std::int32_t thread = 0;
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  Point at(std::int64_t n) const;
  bool constant() const noexcept { return slope == 0; }

  friend bool operator==(const AffinePointMap&, const AffinePointMap&) = default;
};

}  // namespace arcgon

#endif  // ARCGON_ARC_HPP
