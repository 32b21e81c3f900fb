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

#ifndef ARCGON_CONSTRUCTIONS_HPP
#define ARCGON_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/arc_set.hpp"
#include "arcgon/cyclic_order.hpp"

namespace arcgon {

/// The i-th set of the standard list of noncrossing examples, 1 <= i <= 11.
SymbolicArcSet builtin_example(int i);

/// All arcs through `a`. Needs at least five points.
SymbolicArcSet fan(const CyclicOrder& c, const Point& a);

/// A bijection from the naturals onto the points of an order.
///
/// The diagonal strategy for ThreadGon(k) lists (t, 0) for every thread, then
/// for radius r = 1, 2, ... and each thread t the points (t, r), (t, -r).
/// The explicit strategy is a permutation of the points of a finite order.
class Enumeration {
 public:
  static Enumeration diagonal(const CyclicOrder& c);
  static Enumeration identity(const CyclicOrder& c);
  /// `order[i]` is the index of the i-th enumerated point of a finite order.
  static Enumeration explicit_order(const CyclicOrder& c, std::vector<std::int64_t> order);

  const CyclicOrder& order() const noexcept { return order_; }
  /// Number of points, or nullopt for an infinite order.
  std::optional<std::int64_t> size() const;
  Point at(std::int64_t i) const;
  std::int64_t index_of(const Point& p) const;

 private:
  Enumeration(CyclicOrder c, std::vector<std::int64_t> order);

  CyclicOrder order_;
  std::vector<std::int64_t> perm_;  // empty for the diagonal strategy
  std::vector<std::int64_t> inverse_;
};

/// The greedy locally finite triangulation: S_0 is empty and S_n adds every
/// arc {phi(i), phi(n)}, i < n, that crosses nothing in S_{n-1}. Prefixes are
/// materialized on demand and memoized. Queries mutate the memo, so callers
/// sharing a handle across threads must guard it.
class GreedyTriangulation {
 public:
  explicit GreedyTriangulation(Enumeration e);

  const Enumeration& enumeration() const noexcept { return enumeration_; }
  /// S_n, in insertion order.
  std::vector<Arc> prefix(std::int64_t n);
  /// Membership in the limit set, decided on S_N with N the larger index.
  bool contains(const Arc& p);
  /// Arcs of S_bound incident with x.
  std::vector<Arc> incident_arcs_up_to(const Point& x, std::int64_t bound);
  /// An N with every arc of the limit set at x already in S_N: the largest
  /// index among x and its two neighbors.
  std::int64_t stabilization_bound(const Point& x) const;

 private:
  void materialize(std::int64_t n);

  Enumeration enumeration_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> sizes_;  // sizes_[n] = |S_n|
};

}  // namespace arcgon

#endif  // ARCGON_CONSTRUCTIONS_HPP
