// Copyright 2026 The Dendroscope Authors
//
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

#include "dendroscope/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace dendroscope {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<int>> blocks_of(UnionFind& uf, int n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const auto root = uf.find(static_cast<std::size_t>(i));
    if (index[root] < 0) {
      index[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(index[root])].push_back(i);
  }
  return blocks;
}

// Sizes of the orbits of the stabilizer of `point`, sorted.
std::vector<std::size_t> stabilizer_orbit_profile(const PermGroup& g, int point) {
  const int n = g.degree();
  UnionFind uf(static_cast<std::size_t>(n));
  for (const Perm& e : g.elements()) {
    if (e(point) != point) continue;
    for (int i = 0; i < n; ++i) uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(e(i)));
  }
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks_of(uf, n)) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

struct PermGroup::Cache {
  std::once_flag once;
  std::vector<Perm> elements;
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t element_cap)
    : degree_(degree),
      generators_(std::move(generators)),
      element_cap_(element_cap),
      cache_(std::make_shared<Cache>()) {
  if (degree < 1 || degree > Perm::kMaxDegree) {
    throw Error(ErrorCode::kInvalidArgument, "group degree must lie in [1, 255]");
  }
  for (const Perm& p : generators_) {
    if (p.degree() != degree) {
      throw Error(ErrorCode::kInvalidArgument, "generator degree does not match group degree");
    }
  }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) gens.push_back(Perm::from_cycles(degree, "(0 1)"));
  if (degree >= 3) {
    std::vector<int> cycle(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % degree;
    gens.emplace_back(cycle);
  }
  return PermGroup(degree, std::move(gens));
}

const std::vector<Perm>& PermGroup::elements() const {
  std::call_once(cache_->once, [this] {
    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> frontier;
    const Perm id = Perm::identity(degree_);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
      const Perm current = std::move(frontier.front());
      frontier.pop_front();
      for (const Perm& s : generators_) {
        Perm next = s * current;
        if (seen.insert(next).second) {
          if (seen.size() > element_cap_) {
            throw Error(ErrorCode::kCapExceeded,
                        "group closure exceeds element cap of " + std::to_string(element_cap_));
          }
          frontier.push_back(std::move(next));
        }
      }
    }
    std::vector<Perm> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end());
    cache_->elements = std::move(all);
  });
  return cache_->elements;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  const auto& all = elements();
  return std::binary_search(all.begin(), all.end(), p);
}

const std::vector<Perm>& closure(const PermGroup& g) { return g.elements(); }

std::vector<std::vector<int>> orbits_on_points(const PermGroup& g) {
  const int n = g.degree();
  UnionFind uf(static_cast<std::size_t>(n));
  for (const Perm& s : g.generators()) {
    for (int i = 0; i < n; ++i) uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(s(i)));
  }
  return blocks_of(uf, n);
}

bool is_transitive(const PermGroup& g) { return orbits_on_points(g).size() == 1; }

std::size_t count_orbits_on_tuples(const PermGroup& g, int k, bool distinct, std::size_t budget) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "tuple length must be at least 1");
  const auto n = static_cast<std::size_t>(g.degree());
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / n) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "n^k exceeds the enumeration budget of " + std::to_string(budget));
    }
    total *= n;
  }

  std::vector<int> digits(static_cast<std::size_t>(k));
  auto decode = [&](std::size_t code) {
    for (int i = k - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(code % n);
      code /= n;
    }
  };
  auto has_repeat = [&] {
    for (std::size_t i = 0; i < digits.size(); ++i)
      for (std::size_t j = i + 1; j < digits.size(); ++j)
        if (digits[i] == digits[j]) return true;
    return false;
  };

  UnionFind uf(total);
  for (std::size_t code = 0; code < total; ++code) {
    decode(code);
    for (const Perm& s : g.generators()) {
      std::size_t image = 0;
      for (int d : digits) image = image * n + static_cast<std::size_t>(s(d));
      uf.unite(code, image);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t code = 0; code < total; ++code) {
    if (uf.find(code) != code) continue;
    decode(code);
    if (distinct && has_repeat()) continue;
    ++orbits;
  }
  return orbits;
}

bool is_doubly_transitive(const PermGroup& g) {
  if (g.degree() < 2) return true;
  return count_orbits_on_tuples(g, 2, true) == 1;
}

bool is_generously_transitive_on(const PermGroup& g, std::span<const int> block) {
  const int n = g.degree();
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < block.size(); ++i) slot[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
  const std::size_t m = block.size();
  if (m <= 1) return true;

  std::vector<bool> swapped(m * m, false);
  std::size_t missing = m * (m - 1) / 2;
  for (const Perm& e : g.elements()) {
    for (int x : block) {
      const int y = e(x);
      if (y <= x || slot[static_cast<std::size_t>(y)] < 0 || e(y) != x) continue;
      const auto key = static_cast<std::size_t>(slot[static_cast<std::size_t>(x)]) * m +
                       static_cast<std::size_t>(slot[static_cast<std::size_t>(y)]);
      if (!swapped[key]) {
        swapped[key] = true;
        if (--missing == 0) return true;
      }
    }
  }
  return false;
}

bool is_generously_transitive(const PermGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.degree()));
  std::iota(all.begin(), all.end(), 0);
  return is_generously_transitive_on(g, all);
}

bool is_semi_generous(const PermGroup& g) {
  const auto orbits = orbits_on_points(g);
  if (orbits.size() != 2) return false;
  const auto& p = orbits[0];
  const auto& q = orbits[1];
  if (!is_generously_transitive_on(g, p) || !is_generously_transitive_on(g, q)) return false;

  // Orthogonality: one orbit on P x Q.
  const int n = g.degree();
  std::vector<std::size_t> pos(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p[i])] = i;
  for (std::size_t i = 0; i < q.size(); ++i) pos[static_cast<std::size_t>(q[i])] = i;
  UnionFind uf(p.size() * q.size());
  std::size_t classes = p.size() * q.size();
  for (const Perm& s : g.generators()) {
    for (int a : p) {
      for (int b : q) {
        const auto from = pos[static_cast<std::size_t>(a)] * q.size() + pos[static_cast<std::size_t>(b)];
        const auto to = pos[static_cast<std::size_t>(s(a))] * q.size() + pos[static_cast<std::size_t>(s(b))];
        if (uf.unite(from, to)) --classes;
      }
    }
  }
  return classes == 1;
}

Primitivity is_primitive(const PermGroup& g) {
  Primitivity result;
  if (!is_transitive(g)) {
    result.reason = PrimitivityReason::kIntransitive;
    return result;
  }
  const int n = g.degree();
  for (int x = 1; x < n; ++x) {
    // Finest invariant equivalence relation identifying 0 and x.
    UnionFind uf(static_cast<std::size_t>(n));
    std::deque<std::pair<int, int>> pending{{0, x}};
    uf.unite(0, static_cast<std::size_t>(x));
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      for (const Perm& s : g.generators()) {
        if (uf.unite(static_cast<std::size_t>(s(a)), static_cast<std::size_t>(s(b)))) {
          pending.emplace_back(s(a), s(b));
        }
      }
    }
    auto blocks = blocks_of(uf, n);
    if (blocks.size() > 1) {
      result.primitive = false;
      result.reason = PrimitivityReason::kImprimitive;
      result.blocks = std::move(blocks);
      return result;
    }
  }
  result.primitive = true;
  result.reason = PrimitivityReason::kPrimitive;
  return result;
}

std::optional<Perm> perm_groups_isomorphic(const PermGroup& g, const PermGroup& h) {
  const int n = g.degree();
  if (h.degree() != n) return std::nullopt;
  if (g.order() != h.order()) return std::nullopt;

  auto invariants = [n](const PermGroup& grp) {
    std::vector<std::size_t> orbit_size(static_cast<std::size_t>(n));
    for (const auto& orbit : orbits_on_points(grp)) {
      for (int p : orbit) orbit_size[static_cast<std::size_t>(p)] = orbit.size();
    }
    std::vector<std::vector<std::size_t>> inv(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      inv[static_cast<std::size_t>(p)] = stabilizer_orbit_profile(grp, p);
      inv[static_cast<std::size_t>(p)].push_back(orbit_size[static_cast<std::size_t>(p)]);
    }
    return inv;
  };
  const auto inv_g = invariants(g);
  const auto inv_h = invariants(h);
  {
    auto a = inv_g;
    auto b = inv_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  const auto& h_elems = h.elements();

  // Some element of h must agree with f g f^-1 on every point where the
  // conjugate is already determined.
  auto consistent = [&](const Perm& gen) {
    for (const Perm& eta : h_elems) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const int fi = f[static_cast<std::size_t>(i)];
        const int fgi = f[static_cast<std::size_t>(gen(i))];
        if (fi >= 0 && fgi >= 0 && eta(fi) != fgi) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };

  std::function<bool(int)> assign = [&](int point) -> bool {
    if (point == n) {
      const Perm fp(f);
      const Perm finv = fp.inverse();
      for (const Perm& gen : g.generators()) {
        if (!h.contains(fp * gen * finv)) return false;
      }
      return true;
    }
    for (int target = 0; target < n; ++target) {
      if (used[static_cast<std::size_t>(target)]) continue;
      if (inv_g[static_cast<std::size_t>(point)] != inv_h[static_cast<std::size_t>(target)]) continue;
      f[static_cast<std::size_t>(point)] = target;
      used[static_cast<std::size_t>(target)] = true;
      bool ok = true;
      for (const Perm& gen : g.generators()) {
        if (!consistent(gen)) {
          ok = false;
          break;
        }
      }
      if (ok && assign(point + 1)) return true;
      used[static_cast<std::size_t>(target)] = false;
      f[static_cast<std::size_t>(point)] = -1;
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;
  return Perm(f);
}

}  // namespace dendroscope
