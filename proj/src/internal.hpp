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

#ifndef ARCGON_SRC_INTERNAL_HPP
#define ARCGON_SRC_INTERNAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/arc_set.hpp"
#include "arcgon/feasibility.hpp"

namespace arcgon::internal {

inline AffinePointMap constant_map(const Point& p) { return {p.thread, 0, p.offset}; }

/// Adds p(x) < q(y) in the canonical cut; x and y index the unknowns.
void add_less(Conjunction& conj, const AffinePointMap& p, int x, const AffinePointMap& q, int y);
/// Adds p(x) == q(y).
void add_equal(Conjunction& conj, const AffinePointMap& p, int x, const AffinePointMap& q, int y);

/// The parameter at which a non-constant map hits `target`, if any.
std::optional<std::int64_t> preimage(const AffinePointMap& map, const Point& target);

/// Conjunctions whose union says "piece a at unknown x crosses piece b at
/// unknown y", ranges included.
std::vector<Conjunction> crossing_conditions(const Piece& a, int x, const Piece& b, int y);

/// Solutions n of a conjunction over unknown 0 only, as an interval.
Interval solve_1d(const Conjunction& conj);

/// Throws NotNoncrossing or DomainError when a set-level decider cannot run.
void require_decidable(const SymbolicArcSet& s);

/// max |c| over all offsets and finite range bounds.
std::int64_t max_constant(const std::vector<Piece>& pieces);

/// Members at the given parameters, evaluated on the pieces.
bool piece_contains(const Piece& piece, const Arc& p);

/// Points x with {a, x} a member arc, as offset intervals on one thread.
struct Segment {
  std::int32_t thread = 0;
  Interval offsets;
};

std::vector<Segment> partner_segments(const std::vector<Piece>& pieces, const Point& a);

bool member(const std::vector<Piece>& pieces, const Arc& p);

/// {x, y} is an edge or a member arc.
bool two_gon(const CyclicOrder& c, const std::vector<Piece>& pieces, const Point& x, const Point& y);

/// Third vertices of the triangles on the two-gon {a, b}, without checks.
std::vector<Point> third_vertices(const CyclicOrder& c, const std::vector<Piece>& pieces,
                                  const Point& a, const Point& b);

/// Member arcs whose parameter lies in [-w, w]; for finite orders, all
/// members. Triangle counts are eventually constant along every piece, so a
/// window past every constant of the presentation sees all behaviours.
std::vector<Arc> arcs_near_origin(const std::vector<Piece>& pieces, std::int64_t w);

/// Window width used by the eventual-constancy arguments.
std::int64_t generic_window(const std::vector<Piece>& pieces);

}  // namespace arcgon::internal

#endif  // ARCGON_SRC_INTERNAL_HPP
