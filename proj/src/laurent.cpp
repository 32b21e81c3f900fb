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

#include "arcgon/laurent.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"

namespace arcgon {
namespace {

using Dense = std::vector<std::int64_t>;
using DensePoly = std::map<Dense, BigInt>;

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [v, e] : b) {
    const std::int64_t sum = checked::add(out[v], e);
    if (sum == 0) {
      out.erase(v);
    } else {
      out[v] = sum;
    }
  }
  return out;
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += '*';
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::int64_t degree(const Monomial& m) {
  std::int64_t d = 0;
  for (const auto& [v, e] : m) d = checked::add(d, e);
  return d;
}

void dense_add(DensePoly& p, const Dense& m, const BigInt& c) {
  auto [it, fresh] = p.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c) { return term(c, {}); }

LaurentPolynomial LaurentPolynomial::variable(const std::string& name) { return term(1, {{name, 1}}); }

LaurentPolynomial LaurentPolynomial::term(const BigInt& c, Monomial m) {
  LaurentPolynomial out;
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  out.accumulate(m, c);
  return out;
}

void LaurentPolynomial::accumulate(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPolynomial::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.accumulate(m, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.accumulate(m, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) out.accumulate(times(m1, m2), c1 * c2);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::div_exact(const LaurentPolynomial& g) const {
  if (g.is_zero()) throw NotLaurent("division by zero");
  if (is_zero()) return {};
  std::set<std::string> names;
  for (const auto* p : {this, &g}) {
    for (const auto& [m, c] : p->terms_) {
      for (const auto& [v, e] : m) names.insert(v);
    }
  }
  const std::vector<std::string> vars(names.begin(), names.end());
  const std::size_t k = vars.size();

  // Shift both sides to polynomials; the divisor then has no monomial factor,
  // so Laurent divisibility is ordinary divisibility.
  auto densify = [&](const LaurentPolynomial& p, Dense& low) {
    low.assign(k, 0);
    std::vector<Dense> rows;
    for (const auto& [m, c] : p.terms_) {
      Dense d(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        if (auto it = m.find(vars[i]); it != m.end()) d[i] = it->second;
      }
      rows.push_back(d);
    }
    for (std::size_t i = 0; i < k; ++i) {
      low[i] = rows.front()[i];
      for (const auto& d : rows) low[i] = std::min(low[i], d[i]);
    }
    DensePoly out;
    std::size_t r = 0;
    for (const auto& [m, c] : p.terms_) {
      Dense d = rows[r++];
      for (std::size_t i = 0; i < k; ++i) d[i] = checked::sub(d[i], low[i]);
      out.emplace(std::move(d), c);
    }
    return out;
  };
  Dense f_low;
  Dense g_low;
  DensePoly rem = densify(*this, f_low);
  const DensePoly div = densify(g, g_low);

  Dense box(k, 0);  // quotient exponents cannot exceed deg f - deg g per variable
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t fmax = 0;
    std::int64_t gmax = 0;
    for (const auto& [d, c] : rem) fmax = std::max(fmax, d[i]);
    for (const auto& [d, c] : div) gmax = std::max(gmax, d[i]);
    box[i] = fmax - gmax;
    if (box[i] < 0) throw NotLaurent("divisor degree exceeds dividend degree");
  }

  const auto& [lead_m, lead_c] = *div.rbegin();
  DensePoly quotient;
  while (!rem.empty()) {
    const auto& [rm, rc] = *rem.rbegin();
    Dense qm(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      qm[i] = rm[i] - lead_m[i];
      if (qm[i] < 0 || qm[i] > box[i]) throw NotLaurent("inexact division");
    }
    if (rc % lead_c != 0) throw NotLaurent("inexact division");
    const BigInt qc = rc / lead_c;
    for (const auto& [dm, dc] : div) {
      Dense prod(k, 0);
      for (std::size_t i = 0; i < k; ++i) prod[i] = dm[i] + qm[i];
      dense_add(rem, prod, -qc * dc);
    }
    dense_add(quotient, qm, qc);
  }

  LaurentPolynomial out;
  for (const auto& [d, c] : quotient) {
    Monomial m;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t e = checked::add(d[i], checked::sub(f_low[i], g_low[i]));
      if (e != 0) m[vars[i]] = e;
    }
    out.accumulate(m, c);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  Monomial denominator;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) {
      if (e < 0) denominator[v] = std::max(denominator[v], checked::neg(e));
    }
  }
  std::vector<std::tuple<std::int64_t, std::string, BigInt>> numerator;
  for (const auto& [m, c] : terms_) {
    const Monomial shifted = times(m, denominator);
    numerator.emplace_back(degree(shifted), render_monomial(shifted), c);
  }
  std::sort(numerator.begin(), numerator.end());
  std::string top;
  for (const auto& [deg, mon, c] : numerator) {
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    std::string body;
    if (mon.empty()) {
      body = mag.str();
    } else {
      body = mag == 1 ? mon : mag.str() + "*" + mon;
    }
    if (top.empty()) {
      top = c < 0 ? "-" + body : body;
    } else {
      top += (c < 0 ? " - " : " + ") + body;
    }
  }
  if (denominator.empty()) return top;
  if (numerator.size() > 1) top = "(" + top + ")";
  std::string bottom = render_monomial(denominator);
  if (denominator.size() > 1) bottom = "(" + bottom + ")";
  return top + " / " + bottom;
}

LaurentPolynomial lp_add(const LaurentPolynomial& f, const LaurentPolynomial& g) { return f + g; }
LaurentPolynomial lp_mul(const LaurentPolynomial& f, const LaurentPolynomial& g) { return f * g; }
LaurentPolynomial lp_div_exact(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return f.div_exact(g);
}

}  // namespace arcgon
