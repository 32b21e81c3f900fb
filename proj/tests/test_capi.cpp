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

#include <algorithm>
#include <string>

#include "arcgon/arcgon.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  arcgon_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, query, free") {
  arcgon_set* s = nullptr;
  REQUIRE(arcgon_set_parse("order finite 5\narc 0 2\narc 0 3\n", &s) == ARCGON_OK);
  int yes = 0;
  CHECK(arcgon_is_triangulation(s, &yes) == ARCGON_OK);
  CHECK(yes == 1);
  CHECK(arcgon_set_contains(s, "0 2", &yes) == ARCGON_OK);
  CHECK(yes == 1);
  CHECK(arcgon_set_contains(s, "1 3", &yes) == ARCGON_OK);
  CHECK(yes == 0);
  char* text = nullptr;
  CHECK(arcgon_set_print(s, &text) == ARCGON_OK);
  CHECK(take(text) == "order finite 5\narc 0 2\narc 0 3\n");
  arcgon_set_free(s);
}

TEST_CASE("error codes") {
  arcgon_set* s = nullptr;
  CHECK(arcgon_set_parse("order finite 5\narc 0 1\n", &s) == ARCGON_ERR_SEMANTIC);
  CHECK(s == nullptr);
  CHECK(std::string(arcgon_last_error()).find("line 2") != std::string::npos);
  CHECK(arcgon_set_parse("order finite 5\narc 0 @\n", &s) == ARCGON_ERR_PARSE);
  CHECK(arcgon_set_parse(nullptr, &s) == ARCGON_ERR_NULL_ARGUMENT);
  CHECK(arcgon_set_builtin(12, &s) == ARCGON_ERR_DOMAIN);
  CHECK(std::string(arcgon_status_name(ARCGON_ERR_CANNOT_FLIP)) == "cannot flip");

  REQUIRE(arcgon_set_builtin(9, &s) == ARCGON_OK);
  arcgon_set* out = nullptr;
  CHECK(arcgon_flip(s, "(0, 0) (1, 0)", &out, nullptr) == ARCGON_ERR_CANNOT_FLIP);
  arcgon_set_free(s);

  REQUIRE(arcgon_set_parse("order finite 5\narc 0 2\narc 1 3\n", &s) == ARCGON_OK);
  int yes = 1;
  CHECK(arcgon_is_noncrossing(s, &yes) == ARCGON_OK);
  CHECK(yes == 0);
  CHECK(arcgon_is_connected(s, &yes) == ARCGON_ERR_NOT_NONCROSSING);
  arcgon_set_free(s);

  REQUIRE(arcgon_set_builtin(10, &s) == ARCGON_OK);
  char* value = nullptr;
  CHECK(arcgon_cluster_variable(s, "(0, -1) (0, 1)", &value) == ARCGON_ERR_NOT_REACHABLE);
  arcgon_set_free(s);
}

TEST_CASE("flip, reach and cluster variables") {
  arcgon_set* s = nullptr;
  REQUIRE(arcgon_set_parse("order finite 5\narc 0 2\narc 0 3\n", &s) == ARCGON_OK);
  arcgon_set* flipped = nullptr;
  char* step = nullptr;
  REQUIRE(arcgon_flip(s, "0 2", &flipped, &step) == ARCGON_OK);
  CHECK_FALSE(take(step).empty());
  int yes = 0;
  CHECK(arcgon_set_contains(flipped, "1 3", &yes) == ARCGON_OK);
  CHECK(yes == 1);
  arcgon_set_free(flipped);

  arcgon_set* reached = nullptr;
  char* steps = nullptr;
  REQUIRE(arcgon_reach(s, "1 4", &reached, &steps) == ARCGON_OK);
  const std::string lines = take(steps);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
  arcgon_set_free(reached);

  int64_t crossings = -1;
  CHECK(arcgon_obtainable(s, "1 4", &yes, &crossings) == ARCGON_OK);
  CHECK(yes == 1);
  CHECK(crossings == 2);

  char* value = nullptr;
  REQUIRE(arcgon_cluster_variable(s, "1 3", &value) == ARCGON_OK);
  CHECK(take(value) == "(1 + x_0_3) / x_0_2");
  arcgon_set_free(s);
}

TEST_CASE("enumeration, examples, rendering") {
  int64_t count = 0;
  CHECK(arcgon_enumerate(6, &count, nullptr) == ARCGON_OK);
  CHECK(count == 14);
  CHECK(arcgon_enumerate(3, &count, nullptr) == ARCGON_ERR_DOMAIN);
  char* table = nullptr;
  REQUIRE(arcgon_examples(1, &table) == ARCGON_OK);
  CHECK(take(table).find("All arcs exchangeable") != std::string::npos);

  arcgon_set* s = nullptr;
  REQUIRE(arcgon_set_builtin(11, &s) == ARCGON_OK);
  char* svg = nullptr;
  REQUIRE(arcgon_render_svg(s, 3, &svg) == ARCGON_OK);
  CHECK(take(svg).rfind("<?xml", 0) == 0);
  arcgon_set* t = nullptr;
  REQUIRE(arcgon_truncate(s, 2, &t) == ARCGON_OK);
  int yes = 0;
  CHECK(arcgon_is_noncrossing(t, &yes) == ARCGON_OK);
  CHECK(yes == 1);
  arcgon_set* copy = nullptr;
  REQUIRE(arcgon_set_clone(s, &copy) == ARCGON_OK);
  char* report = nullptr;
  REQUIRE(arcgon_check_report(copy, &report) == ARCGON_OK);
  CHECK(take(report).find("cluster tilting: yes") != std::string::npos);
  arcgon_set_free(copy);
  arcgon_set_free(t);
  arcgon_set_free(s);
  arcgon_set_free(nullptr);
}
