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

// Connectedness of the arc adjacency graph.
//
// Two arcs are adjacent when an endpoint of one equals an endpoint of the
// other. Between pieces this is an equation e(n) = e'(m) of affine maps with
// slopes in {-1, 0, 1}, so each relation is either total (two equal constant
// endpoints), a single parameter (constant against moving), or a translation
// or reflection m = k n + d. Pieces with a constant endpoint are internally
// connected and become one node. Pieces with two moving endpoints are split
// into a finite core |n| < T and tails; far out, a tail only meets other
// tails through translations, so arcs in the tails of one tail-graph
// component fall into residue classes modulo the gcd of the cycle
// discrepancies, each class being connected.

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

#include "arcgon/arc_set.hpp"
#include "arcgon/checked.hpp"
#include "arcgon/errors.hpp"
#include "internal.hpp"

namespace arcgon {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

enum class RelKind { total, single, affine };

struct Relation {
  std::size_t i = 0;
  std::size_t j = 0;
  RelKind kind = RelKind::total;
  // single: arc (j, m0) meets every arc of i (i has a constant endpoint).
  std::int64_t m0 = 0;
  // affine: (i, n) meets (j, k n + d) for n in ni.
  std::int64_t k = 0;
  std::int64_t d = 0;
  Interval ni;
};

Interval image(const Interval& iv, std::int64_t k, std::int64_t d) {
  Interval out;
  auto f = [&](std::int64_t x) { return checked::add(checked::mul(k, x), d); };
  if (k > 0) {
    if (iv.lo) out.lo = f(*iv.lo);
    if (iv.hi) out.hi = f(*iv.hi);
  } else {
    if (iv.hi) out.lo = f(*iv.hi);
    if (iv.lo) out.hi = f(*iv.lo);
  }
  return out;
}

// Parameters n of `ri` with k n + d in `rj`.
Interval affine_domain(const Interval& ri, const Interval& rj, std::int64_t k, std::int64_t d) {
  // n = k (m - d) for m in rj.
  Interval back = image(rj, 1, checked::neg(d));
  return ri.intersect(image(back, k, 0));
}

std::vector<Relation> relations(const std::vector<Piece>& pieces) {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i; j < pieces.size(); ++j) {
      for (int ei = 0; ei < 2; ++ei) {
        for (int ej = 0; ej < 2; ++ej) {
          if (i == j && ei == ej) continue;
          const AffinePointMap& a = ei == 0 ? pieces[i].lo : pieces[i].hi;
          const AffinePointMap& b = ej == 0 ? pieces[j].lo : pieces[j].hi;
          if (a.thread != b.thread) continue;
          Relation r;
          r.i = i;
          r.j = j;
          if (a.constant() && b.constant()) {
            if (a.offset != b.offset) continue;
            r.kind = RelKind::total;
          } else if (a.constant() || b.constant()) {
            const bool a_const = a.constant();
            if (!a_const) std::swap(r.i, r.j);
            const AffinePointMap& c = a_const ? a : b;
            const AffinePointMap& mv = a_const ? b : a;
            r.kind = RelKind::single;
            r.m0 = *internal::preimage(mv, Point{c.thread, c.offset});
            if (!pieces[r.j].range.contains(r.m0)) continue;
          } else {
            r.kind = RelKind::affine;
            r.k = checked::mul(a.slope, b.slope);
            r.d = checked::mul(b.slope, checked::sub(a.offset, b.offset));
            r.ni = affine_domain(pieces[i].range, pieces[j].range, r.k, r.d);
            if (r.ni.empty()) continue;
          }
          out.push_back(r);
        }
      }
    }
  }
  return out;
}

}  // namespace

bool is_connected(const SymbolicArcSet& s) {
  internal::require_decidable(s);
  const auto pieces = s.pieces();
  if (pieces.empty()) return true;
  const auto rels = relations(pieces);

  auto moving = [&](std::size_t i) { return !pieces[i].lo.constant() && !pieces[i].hi.constant(); };

  // Tails and tail edges.
  std::vector<std::array<int, 2>> tail_id(pieces.size(), {-1, -1});  // [0]: +, [1]: -
  std::size_t tails = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!moving(i)) continue;
    if (!pieces[i].range.hi) tail_id[i][0] = static_cast<int>(tails++);
    if (!pieces[i].range.lo) tail_id[i][1] = static_cast<int>(tails++);
  }
  struct TailEdge {
    int from;
    int to;
    std::int64_t delta;
  };
  std::vector<TailEdge> tail_edges;
  std::int64_t bound = internal::max_constant(pieces);
  std::int64_t delta_sum = 0;
  for (const auto& r : rels) {
    bound = std::max(bound, checked::abs(r.m0));
    bound = std::max(bound, checked::abs(r.d));
    if (r.kind != RelKind::affine || !moving(r.i) || !moving(r.j)) continue;
    for (int dir : {1, -1}) {
      const bool unbounded = dir > 0 ? !r.ni.hi : !r.ni.lo;
      if (!unbounded) continue;
      const int from = tail_id[r.i][dir > 0 ? 0 : 1];
      const int to = tail_id[r.j][r.k * dir > 0 ? 0 : 1];
      if (from < 0 || to < 0) throw InvariantViolation("tail edge without tails");
      const std::int64_t delta = checked::mul(checked::mul(r.k, dir), r.d);
      tail_edges.push_back({from, to, delta});
      delta_sum = checked::add(delta_sum, checked::abs(delta));
    }
  }
  const std::int64_t t0 = checked::add(checked::mul(2, bound), 2);
  const std::int64_t t_big = checked::add(checked::add(t0, checked::mul(3, delta_sum)), 1);

  // Potentials and discrepancy gcd per tail component.
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(tails);
  for (const auto& e : tail_edges) {
    adj[e.from].push_back({e.to, e.delta});
    adj[e.to].push_back({e.from, -e.delta});
  }
  std::vector<int> comp(tails, -1);
  std::vector<std::int64_t> pot(tails, 0);
  std::vector<std::int64_t> modulus;
  for (std::size_t t = 0; t < tails; ++t) {
    if (comp[t] >= 0) continue;
    const int c = static_cast<int>(modulus.size());
    modulus.push_back(0);
    std::queue<int> q;
    q.push(static_cast<int>(t));
    comp[t] = c;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& [v, delta] : adj[u]) {
        const std::int64_t want = checked::add(pot[u], delta);
        if (comp[v] < 0) {
          comp[v] = c;
          pot[v] = want;
          q.push(v);
        } else {
          modulus[c] = std::gcd(modulus[c], checked::abs(checked::sub(want, pot[v])));
        }
      }
    }
  }

  // Node layout: one node per piece, core nodes for moving pieces, class
  // nodes per tail component.
  std::vector<std::size_t> core_base(pieces.size(), 0);
  std::vector<Interval> core(pieces.size());
  std::size_t next = pieces.size();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!moving(i)) continue;
    core[i] = pieces[i].range.intersect(Interval::closed(-(t_big - 1), t_big - 1));
    core_base[i] = next;
    if (!core[i].empty()) next += static_cast<std::size_t>(*core[i].hi - *core[i].lo + 1);
    if (next > 4'000'000) throw Unsupported("connectivity core too large");
  }
  std::vector<std::size_t> class_base(modulus.size());
  for (std::size_t c = 0; c < modulus.size(); ++c) {
    class_base[c] = next;
    next += modulus[c] == 0 ? 1 : static_cast<std::size_t>(modulus[c]);
  }
  UnionFind uf(next);
  std::vector<bool> absorbed(modulus.size(), false);
  std::vector<bool> live(next, true);
  for (std::size_t i = 0; i < pieces.size(); ++i) live[i] = !moving(i);

  auto node = [&](std::size_t i, std::int64_t n) -> std::size_t {
    if (!moving(i)) return i;
    if (core[i].contains(n)) return core_base[i] + static_cast<std::size_t>(n - *core[i].lo);
    const int t = tail_id[i][n > 0 ? 0 : 1];
    if (t < 0) throw InvariantViolation("parameter outside core and tails");
    const int c = comp[t];
    if (modulus[c] == 0) return class_base[c];
    const std::int64_t sv = n > 0 ? n : checked::neg(n);
    const std::int64_t r = checked::mod(checked::sub(sv, pot[t]), modulus[c]);
    return class_base[c] + static_cast<std::size_t>(r);
  };
  auto absorb_tail = [&](std::size_t all_node, std::size_t j, int dir) {
    const int t = tail_id[j][dir > 0 ? 0 : 1];
    if (t < 0) return;
    const int c = comp[t];
    absorbed[c] = true;
    const std::size_t count = modulus[c] == 0 ? 1 : static_cast<std::size_t>(modulus[c]);
    for (std::size_t r = 0; r < count; ++r) uf.unite(all_node, class_base[c] + r);
  };
  // A fan-like piece i against the parameters `mi` of piece j.
  auto attach = [&](std::size_t i, std::size_t j, const Interval& mi) {
    if (!moving(j)) {
      uf.unite(i, j);
      return;
    }
    const Interval cm = mi.intersect(core[j]);
    if (!cm.empty()) {
      for (std::int64_t m = *cm.lo; m <= *cm.hi; ++m) uf.unite(i, node(j, m));
    }
    if (!mi.hi) absorb_tail(i, j, 1);
    if (!mi.lo) absorb_tail(i, j, -1);
  };

  for (const auto& r : rels) {
    switch (r.kind) {
      case RelKind::total:
        uf.unite(r.i, r.j);
        break;
      case RelKind::single:
        uf.unite(r.i, node(r.j, r.m0));
        break;
      case RelKind::affine: {
        const Interval mi = image(r.ni, r.k, r.d);
        if (!moving(r.i)) {
          attach(r.i, r.j, mi);
        } else if (!moving(r.j)) {
          attach(r.j, r.i, r.ni);
        } else {
          const Interval cn = r.ni.intersect(core[r.i]);
          if (!cn.empty()) {
            for (std::int64_t n = *cn.lo; n <= *cn.hi; ++n) {
              uf.unite(node(r.i, n), node(r.j, r.k * n + r.d));
            }
          }
          const Interval cm = mi.intersect(core[r.j]);
          if (!cm.empty()) {
            for (std::int64_t m = *cm.lo; m <= *cm.hi; ++m) {
              uf.unite(node(r.i, r.k * (m - r.d)), node(r.j, m));
            }
          }
        }
        break;
      }
    }
  }

  for (std::size_t c = 0; c < modulus.size(); ++c) {
    if (modulus[c] == 0 && !absorbed[c]) return false;
  }
  std::optional<std::size_t> root;
  for (std::size_t x = 0; x < next; ++x) {
    if (!live[x]) continue;
    const std::size_t r = uf.find(x);
    if (root && *root != r) return false;
    root = r;
  }
  return true;
}

}  // namespace arcgon
