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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "arcgon/arc_set.hpp"
#include "arcgon/constructions.hpp"
#include "arcgon/errors.hpp"
#include "oracle/brute_force.hpp"

using namespace arcgon;

namespace {

Point f(std::int64_t i) { return Point{0, i}; }
Arc arc(std::int64_t a, std::int64_t b) { return Arc{f(a), f(b)}; }

SymbolicArcSet pentagon_fan() { return SymbolicArcSet(CyclicOrder::finite_gon(5), {arc(0, 2), arc(0, 3)}); }

std::set<Arc> window_members(const SymbolicArcSet& s, std::int64_t w) {
  const auto v = members_in_window(s, w);
  return {v.begin(), v.end()};
}

// The finite set seen through a window, as a plain arc set on its polygon.
std::set<Arc> truncated(const SymbolicArcSet& s, std::int64_t w) {
  return window_members(truncate(s, w), 0);
}

}  // namespace

TEST_CASE("membership in the fountain") {
  const auto s10 = builtin_example(10);
  CHECK(contains(s10, Arc{f(0), f(7)}));
  CHECK(contains(s10, Arc{f(-5), f(0)}));
  CHECK_FALSE(contains(s10, Arc{f(1), f(4)}));
  for (int i = 1; i <= 11; ++i) {
    const auto s = builtin_example(i);
    for (const Arc& p : s.explicit_arcs()) CHECK(contains(s, p));
  }
}

TEST_CASE("crossing listings") {
  const auto s10 = builtin_example(10);
  CHECK(crossing_arcs(s10, Arc{f(-1), f(1)}).infinite);
  const auto s11 = builtin_example(11);
  const auto listing = crossing_arcs(s11, Arc{f(0), f(2)});
  CHECK_FALSE(listing.infinite);
  // Every listed arc crosses, and nothing crossing in a wide window is missing.
  std::set<Arc> listed(listing.arcs.begin(), listing.arcs.end());
  for (const Arc& q : members_in_window(s11, 12)) {
    CHECK(listed.contains(q) == crosses(s11.order(), q, Arc{f(0), f(2)}));
  }
  const auto pent = crossing_arcs(pentagon_fan(), arc(1, 3));
  CHECK_FALSE(pent.infinite);
  CHECK(pent.arcs == std::vector<Arc>{arc(0, 2)});
}

TEST_CASE("pairwise noncrossing") {
  for (int i = 1; i <= 11; ++i) CHECK(is_pairwise_noncrossing(builtin_example(i)).holds);
  const SymbolicArcSet bad(CyclicOrder::finite_gon(5), {arc(0, 2), arc(1, 3)});
  const auto v = is_pairwise_noncrossing(bad);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->first == arc(0, 2));
  CHECK(v.witness->second == arc(1, 3));
  CHECK(is_pairwise_noncrossing(SymbolicArcSet(CyclicOrder::finite_gon(7))).holds);
}

TEST_CASE("local finiteness") {
  CHECK(is_locally_finite(builtin_example(2)));
  CHECK_FALSE(is_locally_finite(builtin_example(1)));
  CHECK(is_locally_finite(builtin_example(6)));
  CHECK_FALSE(is_locally_finite(builtin_example(5)));
  CHECK(is_locally_finite(builtin_example(11)));
}

TEST_CASE("connectedness") {
  for (int i = 7; i <= 11; ++i) CHECK(is_connected(builtin_example(i)));
  for (int i = 1; i <= 6; ++i) CHECK_FALSE(is_connected(builtin_example(i)));
  CHECK(is_connected(pentagon_fan()));
  CHECK_THROWS_AS(is_connected(SymbolicArcSet(CyclicOrder::finite_gon(3))), DomainError);
}

TEST_CASE("a self-crossing family is rejected by the deciders") {
  SymbolicArcSet s(CyclicOrder::thread_gon(1));
  s.add_family(ArcFamily{AffinePointMap{0, 1, 0}, AffinePointMap{0, 1, 2}, Interval::all(), {}});
  CHECK_FALSE(is_pairwise_noncrossing(s).holds);
  CHECK_THROWS_AS(is_connected(s), NotNoncrossing);
  CHECK_THROWS_AS(is_maximal(s), NotNoncrossing);
}

TEST_CASE("disjoint explicit arcs are disconnected") {
  const SymbolicArcSet s(CyclicOrder::thread_gon(1), {Arc{f(0), f(2)}, Arc{f(3), f(5)}});
  CHECK_FALSE(is_connected(s));
  const SymbolicArcSet t(CyclicOrder::thread_gon(1), {Arc{f(0), f(2)}, Arc{f(2), f(5)}});
  CHECK(is_connected(t));
}

TEST_CASE("maximality") {
  for (int i : {4, 5, 6, 9, 10, 11}) CHECK(is_maximal(builtin_example(i)).holds);
  for (int i : {1, 2, 3, 7, 8}) CHECK_FALSE(is_maximal(builtin_example(i)).holds);
  const auto s8 = builtin_example(8);
  const auto v = is_maximal(s8);
  REQUIRE(v.witness);
  CHECK_FALSE(contains(s8, *v.witness));
  CHECK_FALSE(crosses(s8.order(), *v.witness, Arc{f(0), f(2)}));
  CHECK(is_maximal(pentagon_fan()).holds);
}

TEST_CASE("triangles on a two-gon") {
  const auto fan5 = pentagon_fan();
  CHECK(triangles_on(fan5, f(0), f(2)) == std::vector<Point>{f(1), f(3)});
  CHECK(triangles_on(fan5, f(1), f(2)) == std::vector<Point>{f(0)});
  CHECK_THROWS_AS(triangles_on(fan5, f(1), f(3)), DomainError);
  const auto s10 = builtin_example(10);
  CHECK(triangles_on(s10, f(0), f(3)) == std::vector<Point>{f(2), f(4)});
}

TEST_CASE("triangulations") {
  for (int i : {3, 5, 6, 10, 11}) CHECK(is_triangulation(builtin_example(i)).holds);
  for (int i : {1, 2, 4, 7, 8, 9}) CHECK_FALSE(is_triangulation(builtin_example(i)).holds);
  CHECK(is_triangulation(pentagon_fan()).holds);
  const auto v = is_triangulation(builtin_example(9));
  REQUIRE(v.witness);
  CHECK(*v.witness == std::make_pair(Point{0, 0}, Point{1, 0}));
  CHECK(v.witness_triangles == 0);
}

TEST_CASE("cluster tilting") {
  CHECK(is_cluster_tilting(builtin_example(10)));
  CHECK(is_cluster_tilting(builtin_example(11)));
  CHECK_FALSE(is_cluster_tilting(builtin_example(6)));
  CHECK_FALSE(is_cluster_tilting(builtin_example(9)));
}

TEST_CASE("truncation") {
  const auto t10 = truncate(builtin_example(10), 3);
  CHECK(t10.order() == CyclicOrder::finite_gon(7));
  // (0, 0) sits at index 3; arcs reach offsets -3, -2, 2, 3.
  const std::set<Arc> want = {arc(0, 3), arc(1, 3), arc(3, 5), arc(3, 6)};
  CHECK(window_members(t10, 0) == want);
  // Explicit arcs inside the window keep their shape: (0, e) goes to index e + w.
  const SymbolicArcSet plain(CyclicOrder::thread_gon(1), {Arc{f(-2), f(1)}, Arc{f(1), f(3)}, Arc{f(2), f(9)}});
  CHECK(window_members(truncate(plain, 3), 0) == std::set<Arc>{arc(1, 4), arc(4, 6)});
  CHECK_THROWS_AS(truncate(SymbolicArcSet(CyclicOrder::finite_gon(6)), 2), DomainError);
  const auto s11 = builtin_example(11);
  const auto t11 = truncated(s11, 2);
  const auto c10 = CyclicOrder::finite_gon(10);
  CHECK(oracle::noncrossing(c10, t11));
  // Members inside the window survive unless they become polygon edges.
  std::set<Arc> expected;
  for (const Arc& p : members_in_window(s11, 2)) {
    const Point x = f(truncated_index(p.a, 2));
    const Point y = f(truncated_index(p.b, 2));
    if (!is_edge(c10, x, y)) expected.insert(Arc{x, y});
  }
  CHECK(expected.size() == 7);
  CHECK(t11 == expected);
}

TEST_CASE("finite deciders agree with brute force") {
  std::mt19937_64 rng(5);
  for (std::int64_t n = 4; n <= 8; ++n) {
    const auto c = CyclicOrder::finite_gon(n);
    for (int i = 0; i < 150; ++i) {
      const auto arcs = oracle::random_noncrossing(c, rng, 0.2 + 0.005 * i);
      const SymbolicArcSet s(c, std::vector<Arc>(arcs.begin(), arcs.end()));
      CHECK(is_connected(s) == oracle::connected(c, arcs));
      CHECK(is_maximal(s).holds == oracle::maximal(c, arcs));
      CHECK(is_triangulation(s).holds == oracle::triangulation(c, arcs));
    }
  }
}

TEST_CASE("symbolic deciders on wide truncations of finite-incidence sets") {
  // On a window that contains every arc of S2 the explicit set is the whole set.
  const auto s2 = builtin_example(2);
  const auto t = truncate(s2, 4);
  CHECK(window_members(t, 0).size() == window_members(s2, 4).size());
  CHECK(is_pairwise_noncrossing(t).holds);
}
