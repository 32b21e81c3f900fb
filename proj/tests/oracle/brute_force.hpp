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

// Definition-level reference implementations for finite polygons. Every
// predicate here is phrased through CyclicOrder::ternary and neighbor tests
// only, never through the cut-based shortcuts of the library.

#ifndef ARCGON_TESTS_BRUTE_FORCE_HPP
#define ARCGON_TESTS_BRUTE_FORCE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/cyclic_order.hpp"

namespace oracle {

using arcgon::Arc;
using arcgon::CyclicOrder;
using arcgon::Point;

inline Arc norm(const Point& x, const Point& y) { return x < y ? Arc{x, y} : Arc{y, x}; }

inline std::vector<Point> points(const CyclicOrder& c) {
  std::vector<Point> out;
  for (std::int64_t i = 0; i < c.size(); ++i) out.push_back(c.finite_point(i));
  return out;
}

inline std::vector<Arc> all_arcs(const CyclicOrder& c) {
  std::vector<Arc> out;
  const auto ps = points(c);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (!c.are_neighbors(ps[i], ps[j])) out.push_back(Arc{ps[i], ps[j]});
    }
  }
  return out;
}

// R(a,c,b) and R(b,d,a), or R(a,d,b) and R(b,c,a).
inline bool crosses(const CyclicOrder& c, const Arc& p, const Arc& q) {
  const Point &a = p.a, &b = p.b, &x = q.a, &y = q.b;
  return (c.ternary(a, x, b) && c.ternary(b, y, a)) || (c.ternary(a, y, b) && c.ternary(b, x, a));
}

inline bool noncrossing(const CyclicOrder& c, const std::set<Arc>& s) {
  for (auto i = s.begin(); i != s.end(); ++i) {
    for (auto j = std::next(i); j != s.end(); ++j) {
      if (oracle::crosses(c, *i, *j)) return false;
    }
  }
  return true;
}

inline bool two_gon(const CyclicOrder& c, const std::set<Arc>& s, const Point& x, const Point& y) {
  return x != y && (c.are_neighbors(x, y) || s.contains(norm(x, y)));
}

// Third vertices of the triangles (3-gons of s) through x and y.
inline std::vector<Point> triangles(const CyclicOrder& c, const std::set<Arc>& s, const Point& x,
                                    const Point& y) {
  std::vector<Point> out;
  for (const Point& z : points(c)) {
    if (z == x || z == y) continue;
    if (two_gon(c, s, x, z) && two_gon(c, s, z, y)) out.push_back(z);
  }
  return out;
}

// Paths use member arcs only; vacuous when nothing is incident.
inline bool connected(const CyclicOrder&, const std::set<Arc>& s) {
  std::map<Point, std::vector<Point>> adj;
  for (const Arc& p : s) {
    adj[p.a].push_back(p.b);
    adj[p.b].push_back(p.a);
  }
  if (adj.empty()) return true;
  std::set<Point> seen{adj.begin()->first};
  std::queue<Point> todo;
  todo.push(adj.begin()->first);
  while (!todo.empty()) {
    const Point x = todo.front();
    todo.pop();
    for (const Point& y : adj[x]) {
      if (seen.insert(y).second) todo.push(y);
    }
  }
  return seen.size() == adj.size();
}

inline bool maximal(const CyclicOrder& c, const std::set<Arc>& s) {
  for (const Arc& q : all_arcs(c)) {
    if (s.contains(q)) continue;
    if (std::none_of(s.begin(), s.end(), [&](const Arc& p) { return oracle::crosses(c, p, q); })) {
      return false;
    }
  }
  return true;
}

inline bool triangulation(const CyclicOrder& c, const std::set<Arc>& s) {
  for (const Arc& p : s) {
    if (triangles(c, s, p.a, p.b).size() != 2) return false;
  }
  for (const Point& x : points(c)) {
    if (triangles(c, s, x, c.successor(x)).size() != 1) return false;
  }
  return true;
}

inline bool locally_finite(const CyclicOrder&, const std::set<Arc>&) { return true; }

// The maximal T != S with S \ {p} inside T, if any: its extra arc.
inline std::optional<Arc> flip_partner(const CyclicOrder& c, const std::set<Arc>& s, const Arc& p) {
  std::set<Arc> rest = s;
  rest.erase(p);
  std::optional<Arc> found;
  for (const Arc& q : all_arcs(c)) {
    if (q == p || s.contains(q)) continue;
    std::set<Arc> t = rest;
    t.insert(q);
    if (noncrossing(c, t) && maximal(c, t)) {
      if (found) return std::nullopt;  // uniqueness fails; never expected
      found = q;
    }
  }
  return found;
}

// Triangles {a, x, y} of s with (a, x, b, y) a 4-cycle.
inline std::vector<std::pair<Point, Point>> closest_triangles(const CyclicOrder& c,
                                                              const std::set<Arc>& s,
                                                              const Point& a, const Point& b) {
  std::vector<std::pair<Point, Point>> out;
  for (const Point& x : points(c)) {
    for (const Point& y : points(c)) {
      if (x == a || y == a || x == y || x == b || y == b) continue;
      if (!two_gon(c, s, a, x) || !two_gon(c, s, x, y) || !two_gon(c, s, y, a)) continue;
      if (c.ternary(a, x, b) && c.ternary(x, b, y) && c.ternary(b, y, a)) out.emplace_back(x, y);
    }
  }
  return out;
}

// A random noncrossing set: arcs offered in random order, each kept with
// probability `keep` when it crosses nothing kept so far.
inline std::set<Arc> random_noncrossing(const CyclicOrder& c, std::mt19937_64& rng, double keep) {
  auto arcs = all_arcs(c);
  std::shuffle(arcs.begin(), arcs.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::set<Arc> s;
  for (const Arc& q : arcs) {
    if (!coin(rng)) continue;
    if (std::none_of(s.begin(), s.end(), [&](const Arc& p) { return oracle::crosses(c, p, q); })) {
      s.insert(q);
    }
  }
  return s;
}

// Any random subset of arcs, crossing or not.
inline std::set<Arc> random_subset(const CyclicOrder& c, std::mt19937_64& rng, double keep) {
  std::bernoulli_distribution coin(keep);
  std::set<Arc> s;
  for (const Arc& q : all_arcs(c)) {
    if (coin(rng)) s.insert(q);
  }
  return s;
}

}  // namespace oracle

#endif  // ARCGON_TESTS_BRUTE_FORCE_HPP
