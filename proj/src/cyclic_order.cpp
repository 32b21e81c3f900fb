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

#include "arcgon/cyclic_order.hpp"

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"

namespace arcgon {

CyclicOrder CyclicOrder::finite_gon(std::int64_t n) {
  if (n < 1) throw DomainError("finite order needs at least one point");
  return CyclicOrder(Kind::finite, n);
}

CyclicOrder CyclicOrder::thread_gon(std::int32_t k) {
  if (k < 1) throw DomainError("threaded order needs at least one thread");
  return CyclicOrder(Kind::threads, k);
}

Point CyclicOrder::finite_point(std::int64_t index) const {
  if (!is_finite()) throw DomainError("finite point requested on a threaded order");
  return Point{0, checked::mod(index, size_)};
}

Point CyclicOrder::threaded_point(std::int32_t thread, std::int64_t offset) const {
  Point p{thread, offset};
  if (is_finite() || !is_valid(p)) throw DomainError("invalid threaded point");
  return p;
}

bool CyclicOrder::is_valid(const Point& p) const noexcept {
  if (is_finite()) return p.thread == 0 && p.offset >= 0 && p.offset < size_;
  return p.thread >= 0 && p.thread < size_;
}

void CyclicOrder::require_valid(const Point& p) const {
  if (!is_valid(p)) throw DomainError("point " + format(p) + " is not a point of this order");
}

bool CyclicOrder::ternary(const Point& a, const Point& b, const Point& c) const {
  require_valid(a);
  require_valid(b);
  require_valid(c);
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

Point CyclicOrder::successor(const Point& p) const { return shift(p, 1); }

Point CyclicOrder::predecessor(const Point& p) const { return shift(p, -1); }

Point CyclicOrder::shift(const Point& p, std::int64_t steps) const {
  require_valid(p);
  if (is_finite()) {
    if (size_ < 2) throw DomainError("a one-point order has no successor");
    return Point{0, checked::mod(checked::add(p.offset, steps % size_), size_)};
  }
  return Point{p.thread, checked::add(p.offset, steps)};
}

bool CyclicOrder::are_neighbors(const Point& a, const Point& b) const {
  require_valid(a);
  require_valid(b);
  if (a == b) return false;
  if (is_finite()) {
    if (size_ < 2) return false;
    std::int64_t d = checked::mod(a.offset - b.offset, size_);
    return d == 1 || d == size_ - 1;
  }
  if (a.thread != b.thread) return false;
  return (a.offset > b.offset ? checked::sub(a.offset, b.offset)
                              : checked::sub(b.offset, a.offset)) == 1;
}

bool CyclicOrder::in_open_interval(const Point& a, const Point& b, const Point& x) const {
  if (a == b) throw DomainError("open interval (a, a) is not defined");
  return ternary(a, x, b);
}

bool CyclicOrder::in_closed_interval(const Point& a, const Point& b, const Point& x) const {
  return x == a || x == b || in_open_interval(a, b, x);
}

CutOrdering CyclicOrder::cut_compare(const Point& base, const Point& a, const Point& b) const {
  require_valid(base);
  require_valid(a);
  require_valid(b);
  if (a == b) return CutOrdering::equal;
  if (a == base) return CutOrdering::less;
  if (b == base) return CutOrdering::greater;
  return ternary(base, a, b) ? CutOrdering::less : CutOrdering::greater;
}

Rational CyclicOrder::circle_position(const Point& p, std::int64_t window) const {
  require_valid(p);
  if (is_finite()) return Rational(p.offset, size_);
  if (window < 1) throw DomainError("window must be at least 1");
  const std::int64_t scale = checked::add(checked::abs(p.offset), window);
  const std::int64_t num = checked::add(
      checked::mul(checked::mul(2, p.thread), scale), checked::add(scale, p.offset));
  return Rational(num, checked::mul(checked::mul(2, size_), scale));
}

std::string CyclicOrder::format(const Point& p) const {
  if (is_finite()) return std::to_string(p.offset);
  return "(" + std::to_string(p.thread) + ", " + std::to_string(p.offset) + ")";
}

}  // namespace arcgon
