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

#include "arcgon/cluster_dict.hpp"

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"

namespace arcgon {
namespace {

Point step(const Point& p, std::int64_t by) { return {p.thread, checked::add(p.offset, by)}; }

void require_threads(const CyclicOrder& c) {
  if (c.is_finite()) throw DomainError("the cluster dictionary needs a thread order");
}

}  // namespace

IndecObject phi(const CyclicOrder& c, const Arc& p) {
  require_threads(c);
  const Arc q = make_arc(c, p.a, p.b);
  return {c.successor(q.a), c.predecessor(q.b)};
}

Arc phi_inv(const CyclicOrder& c, const IndecObject& x) {
  require_threads(c);
  c.require_valid(x.lo);
  c.require_valid(x.hi);
  if (x.hi < x.lo) throw DomainError("object endpoints are out of order");
  return make_arc(c, c.predecessor(x.lo), c.successor(x.hi));
}

IndecObject tau(const CyclicOrder& c, const IndecObject& x, std::int64_t steps) {
  require_threads(c);
  const std::int64_t back = checked::neg(steps);
  return {step(x.lo, back), step(x.hi, back)};
}

int hom_dim_repc(const IndecObject& x, const IndecObject& y) {
  const Point& a = x.lo;
  const Point& b = x.hi;
  const Point& c = y.lo;
  const Point& d = y.hi;
  return a <= c && c <= b && b <= d ? 1 : 0;
}

int ext_dim_repc(const IndecObject& x, const IndecObject& y) {
  const Point& a = x.lo;
  const Point& b = x.hi;
  const Point c1 = step(y.lo, 1);
  const Point d1 = step(y.hi, 1);
  return c1 <= a && a <= d1 && d1 <= b ? 1 : 0;
}

int hom_dim_cluster(const IndecObject& x, const IndecObject& y) {
  const IndecObject shifted{step(y.lo, 1), step(y.hi, 1)};  // tau^-1 y
  return hom_dim_repc(x, y) + ext_dim_repc(x, shifted);
}

int ext_dim_cluster(const IndecObject& x, const IndecObject& y) {
  return ext_dim_repc(x, y) + ext_dim_repc(y, x);
}

std::string format_object(const CyclicOrder& c, const IndecObject& x) {
  return "X_{" + c.format(x.lo) + ", " + c.format(x.hi) + "}";
}

}  // namespace arcgon
