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

#ifndef ARCGON_FLIP_HPP
#define ARCGON_FLIP_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/arc_set.hpp"

namespace arcgon {

/// One exchange: `removed` = {a, b} leaves, `added` = {x, y} enters, and
/// (a, x, b, y) is a 4-gon of the set before the flip.
struct FlipStep {
  Arc removed;
  Arc added;
  std::array<Point, 4> quadrilateral;

  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

struct FlipSequence {
  SymbolicArcSet start;
  std::vector<FlipStep> steps;
};

/// The set reached after performing every step of `seq`.
SymbolicArcSet replay(const FlipSequence& seq);

/// The flip at p of a maximal set, or nullopt when p lies in fewer than two
/// triangles. Throws DomainError when p is not a member, and when s is not
/// maximal unless `assume_maximal` is set.
std::optional<FlipStep> exchangeable(const SymbolicArcSet& s, const Arc& p,
                                     bool assume_maximal = false);

/// A 4-gon (a, x, b, y) of s around the member p, if one exists. Does not
/// require maximality; for testing the weaker notion only.
std::optional<FlipStep> find_quadrilateral(const SymbolicArcSet& s, const Arc& p);

struct ExchangeVerdict {
  bool holds = true;
  std::optional<Arc> witness;  // a member without a flip
};

/// Whether every member of a maximal set is exchangeable.
ExchangeVerdict all_arcs_exchangeable(const SymbolicArcSet& s);

/// (s \ {p}) u {p*}. Throws CannotFlip when p is not exchangeable.
SymbolicArcSet flip(const SymbolicArcSet& s, const Arc& p);

struct Obtainability {
  bool obtainable = false;
  std::optional<std::size_t> crossings;  // set when obtainable
};

/// p can be reached by finitely many flips exactly when it crosses finitely
/// many members. Requires a maximal triangulation.
Obtainability obtainable(const SymbolicArcSet& s, const Arc& p);

/// A triangle {a, x, y} with (a, x, b, y) a 4-cycle.
struct Triangle {
  Point a;
  Point x;
  Point y;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// The triangle at endpoint `from` of p whose far side {x, y} crosses p.
/// Requires a connected triangulation not containing p.
Triangle closest_triangle(const SymbolicArcSet& s, const Arc& p, const Point& from);
/// Same, starting from the first endpoint of p.
Triangle closest_triangle(const SymbolicArcSet& s, const Arc& p);

/// Flips toward p until it becomes a member, one crossing at a time. Throws
/// NotReachable when p crosses infinitely many members.
FlipSequence reach(const SymbolicArcSet& s, const Arc& p, const Point& from);
FlipSequence reach(const SymbolicArcSet& s, const Arc& p);

}  // namespace arcgon

#endif  // ARCGON_FLIP_HPP
