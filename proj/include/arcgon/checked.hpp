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

#ifndef ARCGON_CHECKED_HPP
#define ARCGON_CHECKED_HPP

#include <cstdint>

#include "arcgon/errors.hpp"

// Overflow-checked 64-bit arithmetic. Offsets are unbounded integers
// semantically; anything that would wrap is reported instead.
namespace arcgon::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("offset overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("offset overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("offset overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// Floor and ceiling of a / b for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

// Non-negative remainder for m > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace arcgon::checked

#endif  // ARCGON_CHECKED_HPP
