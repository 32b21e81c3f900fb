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

#include "arcgon/cluster_dict.hpp"
#include "arcgon/errors.hpp"

using namespace arcgon;

namespace {

Point f(std::int64_t i) { return Point{0, i}; }
IndecObject x(std::int64_t a, std::int64_t b) { return IndecObject{f(a), f(b)}; }

}  // namespace

TEST_CASE("objects from arcs") {
  const auto one = CyclicOrder::thread_gon(1);
  CHECK(phi(one, Arc{f(0), f(3)}) == x(1, 2));
  CHECK(phi_inv(one, x(1, 2)) == Arc{f(0), f(3)});
  const auto two = CyclicOrder::thread_gon(2);
  CHECK(phi(two, Arc{Point{0, 4}, Point{1, -1}}) == IndecObject{Point{0, 5}, Point{1, -2}});
  CHECK_THROWS_AS(phi(CyclicOrder::finite_gon(6), Arc{f(0), f(3)}), DomainError);
}

TEST_CASE("translation") {
  const auto one = CyclicOrder::thread_gon(1);
  CHECK(tau(one, x(1, 2)) == x(0, 1));
  CHECK(tau(one, x(1, 2), 3) == x(-2, -1));
}

TEST_CASE("hom and ext on one thread") {
  CHECK(hom_dim_repc(x(0, 2), x(1, 3)) == 1);
  CHECK(ext_dim_repc(x(1, 3), x(0, 2)) == 1);
  CHECK(hom_dim_repc(x(2, 3), x(0, 1)) == 0);
  CHECK(ext_dim_cluster(x(1, 2), x(2, 3)) == 1);
  CHECK(hom_dim_cluster(x(0, 0), x(0, 0)) == 1);
}

TEST_CASE("rigid objects") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> off(-30, 30);
  for (std::int32_t k = 1; k <= 3; ++k) {
    std::uniform_int_distribution<std::int32_t> th(0, k - 1);
    for (int i = 0; i < 200; ++i) {
      Point a{th(rng), off(rng)};
      Point b{th(rng), off(rng)};
      if (b < a) std::swap(a, b);
      const IndecObject o{a, b};
      CHECK(ext_dim_cluster(o, o) == 0);
      CHECK(hom_dim_cluster(o, o) == 1);
    }
  }
}

TEST_CASE("formatting") {
  CHECK_FALSE(format_object(CyclicOrder::thread_gon(1), x(1, 2)).empty());
}
