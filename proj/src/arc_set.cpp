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

#include "arcgon/arc_set.hpp"

#include <algorithm>
#include <map>

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"
#include "internal.hpp"

namespace arcgon {
namespace internal {

void add_less(Conjunction& conj, const AffinePointMap& p, int x, const AffinePointMap& q, int y) {
  if (p.thread != q.thread) {
    if (p.thread > q.thread) conj.add_false();
    return;
  }
  // p.slope * x + p.offset + 1 <= q.slope * y + q.offset
  LinearAtom atom;
  atom.coef[x] = checked::add(atom.coef[x], p.slope);
  atom.coef[y] = checked::sub(atom.coef[y], q.slope);
  atom.c = checked::add(checked::sub(p.offset, q.offset), 1);
  conj.add(atom);
}

void add_equal(Conjunction& conj, const AffinePointMap& p, int x, const AffinePointMap& q, int y) {
  if (p.thread != q.thread) {
    conj.add_false();
    return;
  }
  LinearAtom le;
  le.coef[x] = checked::add(le.coef[x], p.slope);
  le.coef[y] = checked::sub(le.coef[y], q.slope);
  le.c = checked::sub(p.offset, q.offset);
  LinearAtom ge;
  for (int i = 0; i < kMaxVars; ++i) ge.coef[i] = checked::neg(le.coef[i]);
  ge.c = checked::neg(le.c);
  conj.add(le);
  conj.add(ge);
}

std::optional<std::int64_t> preimage(const AffinePointMap& map, const Point& target) {
  if (map.thread != target.thread) return std::nullopt;
  if (map.slope == 0) throw InvariantViolation("preimage of a constant map");
  // slope is +1 or -1, so it is its own inverse.
  return checked::mul(map.slope, checked::sub(target.offset, map.offset));
}

std::vector<Conjunction> crossing_conditions(const Piece& a, int x, const Piece& b, int y) {
  std::vector<Conjunction> out;
  for (int side = 0; side < 2; ++side) {
    const Piece& p = side == 0 ? a : b;
    const Piece& q = side == 0 ? b : a;
    const int px = side == 0 ? x : y;
    const int qx = side == 0 ? y : x;
    // p.lo < q.lo < p.hi < q.hi
    Conjunction conj;
    conj.add_bound(x, a.range);
    conj.add_bound(y, b.range);
    add_less(conj, p.lo, px, q.lo, qx);
    add_less(conj, q.lo, qx, p.hi, px);
    add_less(conj, p.hi, px, q.hi, qx);
    if (!conj.dead) out.push_back(std::move(conj));
  }
  return out;
}

Interval solve_1d(const Conjunction& conj) {
  auto sys = to_system(conj, 0, 0);
  if (!sys) return Interval::closed(1, 0);
  return sys->feasible_n();
}

void require_decidable(const SymbolicArcSet& s) {
  if (s.order().is_finite() && s.order().size() < 4) {
    throw DomainError("set properties are defined for orders with at least four points");
  }
  const auto verdict = is_pairwise_noncrossing(s);
  if (!verdict.holds) {
    const auto& [p, q] = *verdict.witness;
    throw NotNoncrossing("arcs " + format_arc(s.order(), p) + " and " +
                         format_arc(s.order(), q) + " cross");
  }
}

std::int64_t max_constant(const std::vector<Piece>& pieces) {
  std::int64_t k = 0;
  for (const auto& p : pieces) {
    k = std::max({k, checked::abs(p.lo.offset), checked::abs(p.hi.offset)});
    if (p.range.lo) k = std::max(k, checked::abs(*p.range.lo));
    if (p.range.hi) k = std::max(k, checked::abs(*p.range.hi));
  }
  return k;
}

bool piece_contains(const Piece& piece, const Arc& p) {
  if (piece.constant()) return piece.range.lo && piece.at(*piece.range.lo) == p;
  std::optional<std::int64_t> n;
  if (!piece.lo.constant()) {
    n = preimage(piece.lo, p.a);
  } else {
    n = preimage(piece.hi, p.b);
  }
  return n && piece.range.contains(*n) && piece.at(*n) == p;
}

}  // namespace internal

using internal::add_equal;
using internal::add_less;
using internal::constant_map;

Arc ArcFamily::at(std::int64_t n) const {
  const Point x = first.at(n);
  const Point y = second.at(n);
  return x < y ? Arc{x, y} : Arc{y, x};
}

SymbolicArcSet::SymbolicArcSet(CyclicOrder order, const std::vector<Arc>& arcs) : order_(order) {
  for (const auto& p : arcs) add_arc(p);
}

void SymbolicArcSet::add_arc(const Arc& p) { explicit_.insert(make_arc(order_, p.a, p.b)); }

namespace {

// Parameters n with |first(n) - second(n)| <= 1 on a shared thread; there are
// at most three when the slopes differ.
std::vector<std::int64_t> degenerate_parameters(const ArcFamily& f) {
  std::vector<std::int64_t> out;
  if (f.first.thread != f.second.thread) return out;
  const std::int64_t a = checked::sub(f.first.slope, f.second.slope);
  const std::int64_t b = checked::sub(f.first.offset, f.second.offset);
  if (a == 0) return out;
  // |a n + b| <= 1
  const std::int64_t sign = a > 0 ? 1 : -1;
  const std::int64_t abs_a = checked::abs(a);
  std::int64_t from = sign > 0 ? checked::ceil_div(checked::sub(-1, b), abs_a)
                               : checked::ceil_div(checked::sub(b, 1), abs_a);
  std::int64_t to = sign > 0 ? checked::floor_div(checked::sub(1, b), abs_a)
                             : checked::floor_div(checked::add(b, 1), abs_a);
  for (std::int64_t n = from; n <= to; ++n) out.push_back(n);
  return out;
}

}  // namespace

void SymbolicArcSet::add_family(ArcFamily f) {
  if (order_.is_finite()) throw DomainError("families are only allowed on threaded orders");
  for (const auto* m : {&f.first, &f.second}) {
    if (m->slope < -1 || m->slope > 1) throw DomainError("family slopes must lie in {-1, 0, 1}");
    if (m->thread < 0 || m->thread >= order_.thread_count()) {
      throw DomainError("family refers to a thread outside the order");
    }
  }
  if (f.first.thread == f.second.thread && f.first.slope == f.second.slope) {
    const std::int64_t d = checked::abs(checked::sub(f.first.offset, f.second.offset));
    bool any = false;
    if (f.range.empty()) {
      any = false;
    } else if (!f.range.bounded()) {
      any = true;
    } else {
      for (std::int64_t n = *f.range.lo; n <= *f.range.hi && !any; ++n) any = f.admits(n);
    }
    if (any && d <= 1) {
      throw NotAnArc(d == 0 ? NotAnArcReason::equal : NotAnArcReason::edge,
                     "family produces a degenerate pair for every parameter");
    }
  }
  for (std::int64_t n : degenerate_parameters(f)) {
    if (f.admits(n)) {
      const Point x = f.first.at(n);
      const Point y = f.second.at(n);
      throw NotAnArc(x == y ? NotAnArcReason::equal : NotAnArcReason::edge,
                     "family parameter " + std::to_string(n) + " gives {" + order_.format(x) +
                         ", " + order_.format(y) + "}");
    }
  }
  families_.push_back(std::move(f));
}

void SymbolicArcSet::erase(const Arc& p) {
  explicit_.erase(p);
  for (auto& f : families_) {
    if (f.first.constant() && f.second.constant()) {
      if (f.range.empty()) continue;
      if (f.at(f.range.lo.value_or(f.range.hi.value_or(0))) != p) continue;
      if (!f.range.bounded()) throw Unsupported("cannot remove an arc repeated over an infinite range");
      for (std::int64_t n = *f.range.lo; n <= *f.range.hi; ++n) f.excluded.insert(n);
      continue;
    }
    std::vector<std::int64_t> hits;
    for (const auto* m : {&f.first, &f.second}) {
      if (m->constant()) continue;
      for (const Point& end : {p.a, p.b}) {
        if (auto n = internal::preimage(*m, end); n && f.admits(*n) && f.at(*n) == p) {
          hits.push_back(*n);
        }
      }
    }
    f.excluded.insert(hits.begin(), hits.end());
  }
}

void SymbolicArcSet::insert(const Arc& p) {
  if (contains(*this, p)) return;
  for (auto& f : families_) {
    for (auto it = f.excluded.begin(); it != f.excluded.end(); ++it) {
      if (f.range.contains(*it) && f.at(*it) == p) {
        f.excluded.erase(it);
        return;
      }
    }
  }
  add_arc(p);
}

std::vector<Piece> SymbolicArcSet::pieces() const {
  std::vector<Piece> out;
  std::set<Arc> constants = explicit_;
  for (const auto& f : families_) {
    // Admissible parameters as maximal intervals.
    std::vector<Interval> parts;
    Interval cur = f.range;
    for (std::int64_t e : f.excluded) {
      if (cur.empty()) break;
      if (!cur.contains(e)) continue;
      if (!cur.lo || *cur.lo < e) parts.push_back(Interval{cur.lo, e - 1});
      cur.lo = e + 1;
    }
    if (!cur.empty()) parts.push_back(cur);

    if (f.first.constant() && f.second.constant()) {
      if (!parts.empty()) constants.insert(f.at(parts.front().lo.value_or(parts.front().hi.value_or(0))));
      continue;
    }
    // Parameters where first(n) < second(n) form an interval.
    Interval first_smaller = Interval::all();
    bool always = false;
    bool never = false;
    if (f.first.thread != f.second.thread) {
      (f.first.thread < f.second.thread ? always : never) = true;
    } else {
      const std::int64_t a = checked::sub(f.first.slope, f.second.slope);
      const std::int64_t d = checked::sub(f.second.offset, f.first.offset);
      if (a == 0) {
        (d > 0 ? always : never) = true;
      } else if (a > 0) {
        first_smaller = Interval::at_most(checked::floor_div(checked::sub(d, 1), a));
      } else {
        first_smaller = Interval::at_least(checked::add(checked::floor_div(checked::neg(d), -a), 1));
      }
    }
    for (const auto& part : parts) {
      auto emit = [&](const Interval& r, bool first_lo) {
        if (r.empty()) return;
        out.push_back(first_lo ? Piece{f.first, f.second, r} : Piece{f.second, f.first, r});
      };
      if (always) {
        emit(part, true);
      } else if (never) {
        emit(part, false);
      } else {
        emit(part.intersect(first_smaller), true);
        Interval rest = part;
        if (first_smaller.hi) rest.raise_lo(*first_smaller.hi + 1);
        if (first_smaller.lo) rest.lower_hi(*first_smaller.lo - 1);
        emit(rest, false);
      }
    }
  }
  for (const auto& p : constants) {
    out.push_back(Piece{constant_map(p.a), constant_map(p.b), Interval::point(0)});
  }
  return out;
}

bool contains(const SymbolicArcSet& s, const Arc& p) {
  if (s.explicit_arcs().contains(p)) return true;
  for (const auto& piece : s.pieces()) {
    if (internal::piece_contains(piece, p)) return true;
  }
  return false;
}

namespace {

// Parameters of `piece` whose arc belongs to t, as a union of intervals.
std::vector<Interval> covered_parameters(const Piece& piece, const std::vector<Piece>& t) {
  std::vector<Interval> out;
  for (const auto& q : t) {
    Conjunction conj;
    conj.add_bound(0, piece.range);
    conj.add_bound(1, q.range);
    add_equal(conj, piece.lo, 0, q.lo, 1);
    add_equal(conj, piece.hi, 0, q.hi, 1);
    if (conj.dead) continue;
    const Interval n = internal::solve_1d(eliminate(conj, 1));
    if (!n.empty()) out.push_back(n);
  }
  return out;
}

bool intervals_cover(std::vector<Interval> parts, const Interval& target) {
  if (target.empty()) return true;
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) {
    if (!x.lo || !y.lo) return !x.lo && y.lo;
    return *x.lo < *y.lo;
  });
  // Sweep from target.lo upward.
  std::optional<std::int64_t> need = target.lo;  // nullopt: -inf still needed
  bool done = false;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    if (need) {
      if (part.lo && *part.lo > *need) break;
    } else if (part.lo) {
      break;
    }
    if (!part.hi) {
      done = true;
      break;
    }
    if (!need || *part.hi + 1 > *need) need = *part.hi + 1;
    if (target.hi && *need > *target.hi) {
      done = true;
      break;
    }
  }
  return done;
}

}  // namespace

bool is_subset(const SymbolicArcSet& s, const SymbolicArcSet& t) {
  if (!(s.order() == t.order())) return false;
  const auto tp = t.pieces();
  for (const auto& piece : s.pieces()) {
    if (!intervals_cover(covered_parameters(piece, tp), piece.range)) return false;
  }
  return true;
}

bool same_members(const SymbolicArcSet& s, const SymbolicArcSet& t) {
  return is_subset(s, t) && is_subset(t, s);
}

namespace {

constexpr std::size_t kSamples = 5;

// Parameters of a piece satisfying one of several conjunctions over unknown 0.
ArcListing list_parameters(const Piece& piece, const std::vector<Conjunction>& conditions) {
  ArcListing out;
  for (const auto& conj : conditions) {
    const Interval n = internal::solve_1d(conj);
    if (n.empty()) continue;
    if (!n.bounded()) {
      out.infinite = true;
      const std::int64_t start = n.lo ? *n.lo : *n.hi;
      const std::int64_t step = n.lo ? 1 : -1;
      for (std::size_t i = 0; i < kSamples; ++i) {
        out.arcs.push_back(piece.at(start + step * static_cast<std::int64_t>(i)));
      }
      continue;
    }
    if (*n.hi - *n.lo > 10'000'000) throw Unsupported("parameter range too long to list");
    for (std::int64_t v = *n.lo; v <= *n.hi; ++v) out.arcs.push_back(piece.at(v));
  }
  return out;
}

void finish(ArcListing& listing) {
  std::sort(listing.arcs.begin(), listing.arcs.end());
  listing.arcs.erase(std::unique(listing.arcs.begin(), listing.arcs.end()), listing.arcs.end());
}

}  // namespace

ArcListing crossing_arcs(const SymbolicArcSet& s, const Arc& p) {
  make_arc(s.order(), p.a, p.b);
  const Piece target{constant_map(p.a), constant_map(p.b), Interval::point(0)};
  ArcListing out;
  for (const auto& piece : s.pieces()) {
    auto conds = internal::crossing_conditions(piece, 0, target, 1);
    std::vector<Conjunction> reduced;
    for (auto& c : conds) reduced.push_back(eliminate(c, 1));
    auto part = list_parameters(piece, reduced);
    out.infinite = out.infinite || (part.infinite && !piece.constant());
    out.arcs.insert(out.arcs.end(), part.arcs.begin(), part.arcs.end());
  }
  finish(out);
  return out;
}

ArcListing incident_arcs(const SymbolicArcSet& s, const Point& x) {
  s.order().require_valid(x);
  ArcListing out;
  for (const auto& piece : s.pieces()) {
    std::vector<Conjunction> conds;
    for (const auto* end : {&piece.lo, &piece.hi}) {
      Conjunction conj;
      conj.add_bound(0, piece.range);
      add_equal(conj, *end, 0, constant_map(x), 0);
      if (!conj.dead) conds.push_back(std::move(conj));
    }
    auto part = list_parameters(piece, conds);
    out.infinite = out.infinite || (part.infinite && !piece.constant());
    out.arcs.insert(out.arcs.end(), part.arcs.begin(), part.arcs.end());
  }
  finish(out);
  return out;
}

std::vector<Arc> members_in_window(const SymbolicArcSet& s, std::int64_t window) {
  std::vector<Arc> out;
  for (const auto& piece : s.pieces()) {
    Conjunction conj;
    conj.add_bound(0, piece.range);
    if (!s.order().is_finite()) {
      for (const auto* end : {&piece.lo, &piece.hi}) {
        // -window <= slope * n + offset <= window
        LinearAtom up;
        up.coef[0] = end->slope;
        up.c = checked::sub(end->offset, window);
        LinearAtom down;
        down.coef[0] = -end->slope;
        down.c = checked::sub(checked::neg(end->offset), window);
        conj.add(up);
        conj.add(down);
      }
    }
    const Interval n = internal::solve_1d(conj);
    if (n.empty()) continue;
    if (!n.bounded()) throw InvariantViolation("window listing is unbounded");
    for (std::int64_t v = *n.lo; v <= *n.hi; ++v) out.push_back(piece.at(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NoncrossingVerdict is_pairwise_noncrossing(const SymbolicArcSet& s) {
  const auto pieces = s.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i; j < pieces.size(); ++j) {
      for (const auto& conj : internal::crossing_conditions(pieces[i], 0, pieces[j], 1)) {
        auto sys = to_system(conj, 0, 1);
        if (!sys) continue;
        if (auto sol = sys->any_solution()) {
          return {false, std::make_pair(pieces[i].at(sol->first), pieces[j].at(sol->second))};
        }
      }
    }
  }
  return {};
}

bool is_locally_finite(const SymbolicArcSet& s) {
  internal::require_decidable(s);
  for (const auto& piece : s.pieces()) {
    if (piece.fan() && !piece.range.bounded()) return false;
  }
  return true;
}

bool is_cluster_tilting(const SymbolicArcSet& s) {
  return is_connected(s) && is_triangulation(s).holds;
}

std::int64_t truncated_index(const Point& p, std::int64_t window) {
  return checked::add(checked::mul(p.thread, checked::add(checked::mul(2, window), 1)),
                      checked::add(p.offset, window));
}

SymbolicArcSet truncate(const SymbolicArcSet& s, std::int64_t window) {
  if (s.order().is_finite()) throw DomainError("truncation applies to threaded orders");
  if (window < 2) throw DomainError("truncation window must be at least 2");
  const auto n = checked::mul(s.order().size(), checked::add(checked::mul(2, window), 1));
  const CyclicOrder target = CyclicOrder::finite_gon(n);
  SymbolicArcSet out(target);
  for (const auto& p : members_in_window(s, window)) {
    const Point x = target.finite_point(truncated_index(p.a, window));
    const Point y = target.finite_point(truncated_index(p.b, window));
    if (target.are_neighbors(x, y)) continue;
    out.add_arc(make_arc(target, x, y));
  }
  return out;
}

}  // namespace arcgon
