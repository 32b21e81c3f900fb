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

#include "arcgon/cluster_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "arcgon/errors.hpp"

namespace arcgon {
namespace {

std::string offset_name(std::int64_t e) {
  return e < 0 ? "m" + std::to_string(e).substr(1) : std::to_string(e);
}

void require_polygon_size(std::int64_t n) {
  if (n < 4 || n > 12) throw DomainError("polygon size must lie in [4, 12]");
}

}  // namespace

std::string variable_name(const CyclicOrder& c, const Arc& p) {
  if (c.is_finite()) return "x_" + std::to_string(p.a.offset) + "_" + std::to_string(p.b.offset);
  return "x_" + std::to_string(p.a.thread) + "_" + offset_name(p.a.offset) + "_" +
         std::to_string(p.b.thread) + "_" + offset_name(p.b.offset);
}

Seed::Seed(SymbolicArcSet t) : triangulation_(std::move(t)) {
  if (!is_triangulation(triangulation_).holds) {
    throw DomainError("a seed needs a triangulation");
  }
  if (!is_connected(triangulation_)) throw DomainError("a seed needs a connected set");
}

LaurentPolynomial Seed::value(const Point& x, const Point& y) const {
  const CyclicOrder& c = triangulation_.order();
  if (c.are_neighbors(x, y)) return LaurentPolynomial::constant(1);
  const Arc p = make_arc(c, x, y);
  const Arc q = p.a < p.b ? p : Arc{p.b, p.a};
  if (!contains(triangulation_, q)) {
    throw DomainError(format_arc(c, q) + " is not in the seed");
  }
  if (auto it = values_.find(q); it != values_.end()) return it->second;
  return LaurentPolynomial::variable(variable_name(c, q));
}

Seed Seed::mutate(const FlipStep& step) const {
  const auto& [a, x, b, y] = step.quadrilateral;
  const LaurentPolynomial top = value(a, x) * value(b, y) + value(a, y) * value(b, x);
  const LaurentPolynomial next = top.div_exact(value(step.removed));
  SymbolicArcSet t = triangulation_;
  t.erase(step.removed);
  t.insert(step.added);
  auto values = values_;
  if (!values.contains(step.removed)) {
    values.emplace(step.removed, value(step.removed));
  }
  values.insert_or_assign(step.added, next);
  return Seed(std::move(t), std::move(values), true);
}

Seed Seed::mutate(const Arc& p) const {
  const auto step = exchangeable(triangulation_, p, true);
  if (!step) {
    throw CannotFlip(format_arc(triangulation_.order(), p) + " lies in fewer than two triangles");
  }
  return mutate(*step);
}

LaurentPolynomial cluster_variable(const Seed& s, const Arc& p) {
  if (contains(s.triangulation(), p)) return s.value(p);
  const FlipSequence seq = reach(s.triangulation(), p);
  Seed current = s;
  for (const auto& step : seq.steps) current = current.mutate(step);
  return current.value(p);
}

LaurentPolynomial cluster_monomial(const Seed& s, const std::vector<Arc>& arcs) {
  LaurentPolynomial out = LaurentPolynomial::constant(1);
  for (const Arc& p : arcs) out = out * cluster_variable(s, p);
  return out;
}

std::vector<std::vector<Arc>> enumerate_triangulations(std::int64_t n) {
  require_polygon_size(n);
  auto arc = [](std::int64_t i, std::int64_t j) { return Arc{Point{0, i}, Point{0, j}}; };
  // All triangulations of the sub-polygon i, i+1, ..., j.
  std::function<std::vector<std::vector<Arc>>(std::int64_t, std::int64_t)> sub =
      [&](std::int64_t i, std::int64_t j) -> std::vector<std::vector<Arc>> {
    if (j - i < 2) return {{}};
    std::vector<std::vector<Arc>> out;
    for (std::int64_t k = i + 1; k < j; ++k) {
      const auto left = sub(i, k);
      const auto right = sub(k, j);
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<Arc> t = l;
          t.insert(t.end(), r.begin(), r.end());
          if (k - i >= 2) t.push_back(arc(i, k));
          if (j - k >= 2) t.push_back(arc(k, j));
          out.push_back(std::move(t));
        }
      }
    }
    return out;
  };
  auto all = sub(0, n - 1);
  for (auto& t : all) std::sort(t.begin(), t.end());
  std::sort(all.begin(), all.end());
  return all;
}

ExchangeGraph exchange_graph(std::int64_t n) {
  ExchangeGraph g;
  g.vertices = enumerate_triangulations(n);
  std::map<std::vector<Arc>, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& t = g.vertices[i];
    std::vector<std::set<std::int64_t>> near(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
      near[v].insert((v + 1) % n);
      near[v].insert((v + n - 1) % n);
    }
    for (const Arc& p : t) {
      near[p.a.offset].insert(p.b.offset);
      near[p.b.offset].insert(p.a.offset);
    }
    for (const Arc& p : t) {
      std::int64_t x = -1;
      std::int64_t y = -1;
      for (std::int64_t v : near[p.a.offset]) {
        if (!near[p.b.offset].contains(v)) continue;
        (p.a.offset < v && v < p.b.offset ? x : y) = v;
      }
      if (x < 0 || y < 0) throw InvariantViolation("a polygon diagonal without two triangles");
      std::vector<Arc> u = t;
      std::erase(u, p);
      u.push_back(Arc{Point{0, std::min(x, y)}, Point{0, std::max(x, y)}});
      std::sort(u.begin(), u.end());
      const std::size_t j = index.at(u);
      if (i < j) g.edges.emplace_back(i, j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace arcgon
