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

#ifndef ARCGON_CLUSTER_DICT_HPP
#define ARCGON_CLUSTER_DICT_HPP

#include <cstdint>
#include <string>

#include "arcgon/arc.hpp"
#include "arcgon/cyclic_order.hpp"

namespace arcgon {

/// The indecomposable X_{lo, hi} of the type A cluster category of a thread
/// order, lo <= hi in the canonical cut.
struct IndecObject {
  Point lo;
  Point hi;

  friend auto operator<=>(const IndecObject&, const IndecObject&) = default;
};

/// {a, b} -> X_{a+1, b-1}. Thread orders only.
IndecObject phi(const CyclicOrder& c, const Arc& p);
/// X_{lo, hi} -> {lo-1, hi+1}.
Arc phi_inv(const CyclicOrder& c, const IndecObject& x);
/// tau^steps X_{a,b} = X_{a-steps, b-steps}.
IndecObject tau(const CyclicOrder& c, const IndecObject& x, std::int64_t steps = 1);

/// Dimensions in the category of representations: X_{a,b} -> X_{c,d} is
/// nonzero iff a <= c <= b <= d, and Ext^1 iff c+1 <= a <= d+1 <= b.
int hom_dim_repc(const IndecObject& x, const IndecObject& y);
int ext_dim_repc(const IndecObject& x, const IndecObject& y);

/// Dimensions in the cluster category, assembled from the two above.
int hom_dim_cluster(const IndecObject& x, const IndecObject& y);
int ext_dim_cluster(const IndecObject& x, const IndecObject& y);

std::string format_object(const CyclicOrder& c, const IndecObject& x);

}  // namespace arcgon

#endif  // ARCGON_CLUSTER_DICT_HPP
