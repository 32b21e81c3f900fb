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

#ifndef ARCGON_CYCLIC_ORDER_HPP
#define ARCGON_CYCLIC_ORDER_HPP

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace arcgon {

/// A point of a locally discrete cyclic order.
///
/// Points of a finite n-gon use thread 0 and carry their index in `offset`.
/// Points of a k-thread order are (thread, offset) with the offset an
/// arbitrary 64-bit integer. The defaulted ordering is the lexicographic
/// order on (thread, offset), which is the canonical cut of both kinds of
/// order.
struct Point {
  std::int32_t thread = 0;
  std::int64_t offset = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

using Rational = boost::rational<std::int64_t>;

enum class CutOrdering { less, equal, greater };

/// A finite polygon `FiniteGon(n)` or an infinity-gon glued from `k` copies
/// of the integers, `ThreadGon(k)`.
class CyclicOrder {
 public:
  enum class Kind { finite, threads };

  static CyclicOrder finite_gon(std::int64_t n);
  static CyclicOrder thread_gon(std::int32_t k);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  /// Number of points for a finite gon, number of threads otherwise.
  std::int64_t size() const noexcept { return size_; }
  std::int32_t thread_count() const noexcept {
    return is_finite() ? 1 : static_cast<std::int32_t>(size_);
  }

  /// Finite point with index reduced modulo n.
  Point finite_point(std::int64_t index) const;
  Point threaded_point(std::int32_t thread, std::int64_t offset) const;

  bool is_valid(const Point& p) const noexcept;
  /// Throws DomainError unless `p` belongs to this order.
  void require_valid(const Point& p) const;

  /// The ternary relation R(a, b, c): walking around the circle from a one
  /// meets b strictly before c. False unless a, b, c are pairwise distinct.
  bool ternary(const Point& a, const Point& b, const Point& c) const;

  Point successor(const Point& p) const;
  Point predecessor(const Point& p) const;
  /// p + steps, walking `steps` successors (negative: predecessors).
  Point shift(const Point& p, std::int64_t steps) const;

  bool are_neighbors(const Point& a, const Point& b) const;

  /// x in (a, b). Throws DomainError when a == b.
  bool in_open_interval(const Point& a, const Point& b, const Point& x) const;
  /// x in [a, b] (the closed interval walking from a to b).
  bool in_closed_interval(const Point& a, const Point& b, const Point& x) const;

  /// Linear order <=_base obtained by cutting the circle at `base`.
  CutOrdering cut_compare(const Point& base, const Point& a, const Point& b) const;

  /// Order-embedding into [0, 1) used for drawing. Finite gons use i/n;
  /// thread t occupies [t/k, (t+1)/k) with offsets compressed by
  /// e -> (|e| + w + e) / (2 (|e| + w)).
  Rational circle_position(const Point& p, std::int64_t window) const;

  std::string format(const Point& p) const;

  friend bool operator==(const CyclicOrder&, const CyclicOrder&) = default;

 private:
  CyclicOrder(Kind kind, std::int64_t size) : kind_(kind), size_(size) {}

  Kind kind_;
  std::int64_t size_;
};

}  // namespace arcgon

#endif  // ARCGON_CYCLIC_ORDER_HPP
