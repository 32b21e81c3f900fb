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

#include <numeric>
#include <set>

#include "arcgon/arc_set.hpp"
#include "arcgon/constructions.hpp"
#include "arcgon/errors.hpp"

using namespace arcgon;

namespace {

Point f(std::int64_t i) { return Point{0, i}; }
Arc arc(std::int64_t a, std::int64_t b) { return Arc{f(a), f(b)}; }

std::set<Arc> as_set(const std::vector<Arc>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("builtin examples") {
  const auto s2 = builtin_example(2);
  CHECK(s2.explicit_arcs() == std::set<Arc>{Arc{f(-3), f(-1)}, Arc{f(1), f(3)}});
  CHECK(s2.families().empty());
  const auto s11 = builtin_example(11);
  REQUIRE(s11.families().size() == 2);
  for (const auto& fam : s11.families()) {
    CHECK_FALSE(fam.range.lo);
    CHECK_FALSE(fam.range.hi);
    CHECK(fam.first.slope == -fam.second.slope);
  }
  const auto s6 = builtin_example(6);
  CHECK(s6.families().size() == 4);
  for (const auto& fam : s6.families()) CHECK_FALSE(fam.range.bounded());
  CHECK_THROWS_AS(builtin_example(0), DomainError);
  CHECK_THROWS_AS(builtin_example(12), DomainError);
}

TEST_CASE("fans") {
  CHECK(same_members(fan(CyclicOrder::thread_gon(1), f(0)), builtin_example(10)));
  CHECK(as_set(members_in_window(fan(CyclicOrder::finite_gon(6), f(0)), 0)) ==
        std::set<Arc>{arc(0, 2), arc(0, 3), arc(0, 4)});
  CHECK_THROWS_AS(fan(CyclicOrder::finite_gon(4), f(0)), DomainError);
  const auto wide = fan(CyclicOrder::thread_gon(3), Point{1, 2});
  CHECK(is_connected(wide));
  CHECK(is_triangulation(wide).holds);
  CHECK_FALSE(is_locally_finite(wide));
}

TEST_CASE("enumerations") {
  const auto d = Enumeration::diagonal(CyclicOrder::thread_gon(2));
  CHECK_FALSE(d.size());
  CHECK(d.at(0) == Point{0, 0});
  CHECK(d.at(1) == Point{1, 0});
  CHECK(d.at(2) == Point{0, 1});
  CHECK(d.at(3) == Point{0, -1});
  CHECK(d.at(4) == Point{1, 1});
  for (std::int64_t i = 0; i < 200; ++i) CHECK(d.index_of(d.at(i)) == i);
  const auto e = Enumeration::explicit_order(CyclicOrder::finite_gon(4), {2, 0, 3, 1});
  CHECK(e.size() == std::optional<std::int64_t>(4));
  CHECK(e.at(0) == f(2));
  CHECK(e.index_of(f(1)) == 3);
  CHECK_THROWS_AS(Enumeration::explicit_order(CyclicOrder::finite_gon(4), {0, 0, 1, 2}), DomainError);
  CHECK_THROWS_AS(Enumeration::diagonal(CyclicOrder::finite_gon(4)), DomainError);
}

TEST_CASE("greedy on the hexagon") {
  GreedyTriangulation g(Enumeration::identity(CyclicOrder::finite_gon(6)));
  CHECK(g.prefix(0).empty());
  CHECK(as_set(g.prefix(2)) == std::set<Arc>{arc(0, 2)});
  // {1, 3} crosses {0, 2}, so step 3 only adds {0, 3}.
  CHECK(as_set(g.prefix(3)) == std::set<Arc>{arc(0, 2), arc(0, 3)});
  CHECK(as_set(g.prefix(5)) == std::set<Arc>{arc(0, 2), arc(0, 3), arc(0, 4)});
  CHECK(g.contains(arc(0, 3)));
  CHECK_FALSE(g.contains(arc(1, 3)));
}

TEST_CASE("greedy on two threads") {
  const auto c = CyclicOrder::thread_gon(2);
  GreedyTriangulation g(Enumeration::diagonal(c));
  const auto s = g.prefix(30);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) CHECK_FALSE(crosses(c, s[i], s[j]));
  }
  for (std::int64_t i = 0; i < 8; ++i) {
    const Point x = g.enumeration().at(i);
    const auto bound = g.stabilization_bound(x);
    CHECK(g.incident_arcs_up_to(x, bound) == g.incident_arcs_up_to(x, bound + 25));
    CHECK_FALSE(g.incident_arcs_up_to(x, bound).empty());
  }
}
