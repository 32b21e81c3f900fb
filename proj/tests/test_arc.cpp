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

#include "arcgon/arc.hpp"
#include "arcgon/errors.hpp"

using namespace arcgon;

namespace {

Point f(std::int64_t i) { return Point{0, i}; }
Arc arc(std::int64_t a, std::int64_t b) { return Arc{f(a), f(b)}; }

}  // namespace

TEST_CASE("make_arc") {
  const auto c = CyclicOrder::finite_gon(6);
  CHECK(make_arc(c, f(2), f(0)) == arc(0, 2));
  try {
    (void)make_arc(c, f(0), f(5));
    FAIL("edge accepted");
  } catch (const NotAnArc& e) {
    CHECK(e.reason() == NotAnArcReason::edge);
  }
  try {
    (void)make_arc(c, f(3), f(3));
    FAIL("point accepted");
  } catch (const NotAnArc& e) {
    CHECK(e.reason() == NotAnArcReason::equal);
  }
  CHECK_NOTHROW(make_arc(CyclicOrder::thread_gon(2), Point{0, 7}, Point{1, -3}));
}

TEST_CASE("crossing") {
  const auto c = CyclicOrder::finite_gon(6);
  CHECK(crosses(c, arc(0, 2), arc(1, 3)));
  CHECK_FALSE(crosses(c, arc(0, 2), arc(2, 4)));
  const auto two = CyclicOrder::thread_gon(2);
  CHECK(crosses(two, Arc{Point{0, 0}, Point{1, 0}}, Arc{Point{0, 5}, Point{1, 5}}));
}

TEST_CASE("crossing is symmetric and matches interleaving") {
  const auto c = CyclicOrder::finite_gon(8);
  for (std::int64_t a = 0; a < 8; ++a) {
    for (std::int64_t b = a + 2; b < 8; ++b) {
      if (a == 0 && b == 7) continue;
      for (std::int64_t x = 0; x < 8; ++x) {
        for (std::int64_t y = x + 2; y < 8; ++y) {
          if (x == 0 && y == 7) continue;
          const bool inter = (a < x && x < b && b < y) || (x < a && a < y && y < b);
          CHECK(crosses(c, arc(a, b), arc(x, y)) == inter);
          CHECK(crosses(c, arc(a, b), arc(x, y)) == crosses(c, arc(x, y), arc(a, b)));
        }
      }
    }
  }
}

TEST_CASE("adjacency") {
  CHECK(adjacent(arc(0, 2), arc(2, 4)));
  CHECK_FALSE(adjacent(arc(0, 2), arc(1, 4)));
  CHECK(adjacent(arc(0, 2), arc(0, 3)));
  CHECK_THROWS_AS(adjacent(arc(0, 2), arc(0, 2)), DomainError);
}

TEST_CASE("rotation") {
  CHECK(rotate(CyclicOrder::finite_gon(6), arc(0, 2), 1) == arc(1, 5));
  CHECK(rotate(CyclicOrder::thread_gon(1), Arc{f(0), f(3)}, 1) == Arc{f(-1), f(2)});
  const auto c = CyclicOrder::finite_gon(7);
  CHECK(rotate(c, arc(1, 4), 7) == arc(1, 4));
}

TEST_CASE("affine point maps") {
  const AffinePointMap m{1, -2, 3};
  CHECK(m.at(4) == Point{1, -5});
  CHECK_FALSE(m.constant());
  CHECK(AffinePointMap{0, 0, 9}.constant());
}
