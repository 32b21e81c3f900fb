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

#ifndef ARCGON_CLUSTER_ALGEBRA_HPP
#define ARCGON_CLUSTER_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/arc_set.hpp"
#include "arcgon/flip.hpp"
#include "arcgon/laurent.hpp"

namespace arcgon {

/// Generator name of an arc: x_i_j on a polygon, x_t_e_t_e on a thread
/// order with negative offsets written m2 for -2.
std::string variable_name(const CyclicOrder& c, const Arc& p);

/// A connected triangulation with a value for each of its arcs. Arcs of the
/// initial triangulation default to their generators; edges are worth 1.
class Seed {
 public:
  /// Throws DomainError unless `t` is a connected triangulation.
  explicit Seed(SymbolicArcSet t);

  const SymbolicArcSet& triangulation() const noexcept { return triangulation_; }
  const std::map<Arc, LaurentPolynomial>& assignments() const noexcept { return values_; }

  /// Value of a member arc or an edge.
  LaurentPolynomial value(const Point& x, const Point& y) const;
  LaurentPolynomial value(const Arc& p) const { return value(p.a, p.b); }

  /// Exchanges p for p* with the exchange relation, dividing exactly.
  Seed mutate(const Arc& p) const;
  /// Same, with the quadrilateral already known.
  Seed mutate(const FlipStep& step) const;

 private:
  Seed(SymbolicArcSet t, std::map<Arc, LaurentPolynomial> values, bool)
      : triangulation_(std::move(t)), values_(std::move(values)) {}

  SymbolicArcSet triangulation_;
  std::map<Arc, LaurentPolynomial> values_;
};

inline Seed mutate_seed(const Seed& s, const Arc& p) { return s.mutate(p); }

/// Value of p after flipping toward it along `reach`. Throws NotReachable
/// when p crosses infinitely many arcs of the seed.
LaurentPolynomial cluster_variable(const Seed& s, const Arc& p);

/// Product of the values of several arcs.
LaurentPolynomial cluster_monomial(const Seed& s, const std::vector<Arc>& arcs);

/// Every triangulation of the n-gon, 4 <= n <= 12, each as a sorted arc list,
/// in lexicographic order.
std::vector<std::vector<Arc>> enumerate_triangulations(std::int64_t n);

struct ExchangeGraph {
  std::vector<std::vector<Arc>> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

ExchangeGraph exchange_graph(std::int64_t n);

}  // namespace arcgon

#endif  // ARCGON_CLUSTER_ALGEBRA_HPP
