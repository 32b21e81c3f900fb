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

#ifndef ARCGON_LAURENT_HPP
#define ARCGON_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace arcgon {

using BigInt = boost::multiprecision::cpp_int;

/// Variable name -> nonzero exponent.
using Monomial = std::map<std::string, std::int64_t>;

/// An element of Z[x_v, x_v^-1] with finitely many variables, kept without
/// zero coefficients. Arithmetic is exact.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial constant(const BigInt& c);
  static LaurentPolynomial variable(const std::string& name);
  static LaurentPolynomial term(const BigInt& c, Monomial m);

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool all_coefficients_positive() const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;

  /// The quotient when it is again a Laurent polynomial; NotLaurent otherwise.
  LaurentPolynomial div_exact(const LaurentPolynomial& g) const;

  /// "N / D" with D the smallest monomial clearing negative exponents;
  /// terms sorted by total degree, then by name.
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void accumulate(const Monomial& m, const BigInt& c);

  std::map<Monomial, BigInt> terms_;
};

LaurentPolynomial lp_add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial lp_mul(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial lp_div_exact(const LaurentPolynomial& f, const LaurentPolynomial& g);

}  // namespace arcgon

#endif  // ARCGON_LAURENT_HPP
