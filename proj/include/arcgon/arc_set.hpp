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

#ifndef ARCGON_ARC_SET_HPP
#define ARCGON_ARC_SET_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/cyclic_order.hpp"
#include "arcgon/feasibility.hpp"

namespace arcgon {

/// The arcs {first(n), second(n)} for n in range and not excluded.
struct ArcFamily {
  AffinePointMap first;
  AffinePointMap second;
  Interval range;
  std::set<std::int64_t> excluded;

  bool admits(std::int64_t n) const { return range.contains(n) && !excluded.contains(n); }
  /// The arc at an admissible parameter.
  Arc at(std::int64_t n) const;

  friend bool operator==(const ArcFamily&, const ArcFamily&) = default;
};

/// A family with no exclusions whose first map is the smaller endpoint in the
/// canonical cut for every parameter in `range`. Explicit arcs become
/// constant pieces over the single parameter 0.
struct Piece {
  AffinePointMap lo;
  AffinePointMap hi;
  Interval range;

  Arc at(std::int64_t n) const { return Arc{lo.at(n), hi.at(n)}; }
  bool constant() const noexcept { return lo.constant() && hi.constant(); }
  /// Every arc of the piece shares one fixed endpoint.
  bool fan() const noexcept { return lo.constant() != hi.constant(); }
};

/// A finitely presented, possibly infinite, set of arcs: explicit arcs plus
/// affine families. Membership is semantic; an arc described twice counts
/// once.
class SymbolicArcSet {
 public:
  explicit SymbolicArcSet(CyclicOrder order) : order_(order) {}
  SymbolicArcSet(CyclicOrder order, const std::vector<Arc>& arcs);

  const CyclicOrder& order() const noexcept { return order_; }
  const std::set<Arc>& explicit_arcs() const noexcept { return explicit_; }
  const std::vector<ArcFamily>& families() const noexcept { return families_; }

  /// Validates endpoints against the order.
  void add_arc(const Arc& p);
  /// Throws DomainError on finite orders, on slopes outside {-1, 0, 1} and
  /// when some admissible parameter yields an equal or neighboring pair.
  void add_family(ArcFamily family);

  /// Removes p from the membership: drops it from the explicit arcs and
  /// excludes every family parameter producing it.
  void erase(const Arc& p);
  /// Adds p, reusing an excluded family parameter when one produces it.
  void insert(const Arc& p);

  /// Disjoint-orientation decomposition used by every decider.
  std::vector<Piece> pieces() const;

  friend bool operator==(const SymbolicArcSet&, const SymbolicArcSet&) = default;

 private:
  CyclicOrder order_;
  std::set<Arc> explicit_;
  std::vector<ArcFamily> families_;
};

bool contains(const SymbolicArcSet& s, const Arc& p);

/// Mutual inclusion, decided symbolically.
bool same_members(const SymbolicArcSet& s, const SymbolicArcSet& t);
bool is_subset(const SymbolicArcSet& s, const SymbolicArcSet& t);

/// Either finitely many arcs, listed, or infinitely many with a few samples.
struct ArcListing {
  bool infinite = false;
  std::vector<Arc> arcs;
};

ArcListing crossing_arcs(const SymbolicArcSet& s, const Arc& p);
ArcListing incident_arcs(const SymbolicArcSet& s, const Point& x);

/// Members whose endpoints all have |offset| <= window (all members for a
/// finite order), sorted.
std::vector<Arc> members_in_window(const SymbolicArcSet& s, std::int64_t window);

struct NoncrossingVerdict {
  bool holds = true;
  std::optional<std::pair<Arc, Arc>> witness;
};

NoncrossingVerdict is_pairwise_noncrossing(const SymbolicArcSet& s);

// The deciders below require a pairwise noncrossing set and throw
// NotNoncrossing otherwise. Orders with fewer than four points are rejected
// with DomainError.

bool is_locally_finite(const SymbolicArcSet& s);
bool is_connected(const SymbolicArcSet& s);

struct MaximalVerdict {
  bool holds = true;
  std::optional<Arc> witness;  // an arc that can be added
};

MaximalVerdict is_maximal(const SymbolicArcSet& s);

/// Third vertices x of the triangles {a, b, x} of s containing the two-gon
/// {a, b}. Throws DomainError if {a, b} is neither an edge nor a member.
std::vector<Point> triangles_on(const SymbolicArcSet& s, const Point& a, const Point& b);

struct TriangulationVerdict {
  bool holds = true;
  std::optional<std::pair<Point, Point>> witness;  // a deficient two-gon
  std::size_t witness_triangles = 0;
};

TriangulationVerdict is_triangulation(const SymbolicArcSet& s);

bool is_cluster_tilting(const SymbolicArcSet& s);

/// The finite arc set seen through the window [-w, w] of every thread,
/// re-indexed on FiniteGon(k (2w + 1)).
SymbolicArcSet truncate(const SymbolicArcSet& s, std::int64_t window);
/// Index of a threaded point in the truncation.
std::int64_t truncated_index(const Point& p, std::int64_t window);

}  // namespace arcgon

#endif  // ARCGON_ARC_SET_HPP
