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

#include "dendroscope/cohomology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "dendroscope/exact_rank.hpp"

namespace dendroscope {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

void check_point(int n, int i) {
  if (i < 0 || i >= n) throw Error(ErrorCode::kInvalidArgument, "point " + std::to_string(i) + " outside [n]");
}

// Sorts three points in place and returns the sign of the sorting
// permutation, 0 on a repeat.
int sort3(int& a, int& b, int& c) {
  int sign = 1;
  if (a > b) std::swap(a, b), sign = -sign;
  if (b > c) std::swap(b, c), sign = -sign;
  if (a > b) std::swap(a, b), sign = -sign;
  return (a == b || b == c) ? 0 : sign;
}

std::size_t choose2(std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }
std::size_t choose3(std::size_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

// Lexicographic rank of i < j < k among triples of [n].
std::size_t triple_rank(int n, int i, int j, int k) {
  const auto un = static_cast<std::size_t>(n);
  std::size_t r = choose3(un) - choose3(un - static_cast<std::size_t>(i));
  const std::size_t rest = un - static_cast<std::size_t>(i) - 1;  // points after i
  r += choose2(rest) - choose2(un - static_cast<std::size_t>(j));
  r += static_cast<std::size_t>(k - j - 1);
  return r;
}

// Rows of the linear system whose solutions are the invariant cocycles.
std::vector<std::vector<cpp_int>> cocycle_system(int n, const PermGroup& g) {
  const auto basis = Cochain2::basis(n);
  const std::size_t cols = basis.size();
  std::vector<std::vector<cpp_int>> rows;
  for (int w = 0; w < n; ++w)
    for (int x = w + 1; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          std::vector<cpp_int> row(cols);
          row[triple_rank(n, x, y, z)] += 1;
          row[triple_rank(n, w, y, z)] -= 1;
          row[triple_rank(n, w, x, z)] += 1;
          row[triple_rank(n, w, x, y)] -= 1;
          rows.push_back(std::move(row));
        }
  for (const Perm& s : g.generators()) {
    for (std::size_t t = 0; t < cols; ++t) {
      int a = s(basis[t][0]);
      int b = s(basis[t][1]);
      int c = s(basis[t][2]);
      const int sign = sort3(a, b, c);
      std::vector<cpp_int> row(cols);
      row[triple_rank(n, a, b, c)] += sign;
      row[t] -= 1;
      if (std::any_of(row.begin(), row.end(), [](const cpp_int& v) { return v != 0; })) rows.push_back(std::move(row));
    }
  }
  return rows;
}

void check_degree(int n, const PermGroup& g, int max_degree) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  if (g.degree() != n) throw Error(ErrorCode::kInvalidArgument, "group degree differs from n");
  if (n > max_degree) {
    throw Error(ErrorCode::kBudgetExceeded,
                "cocycle systems are limited to degree " + std::to_string(max_degree));
  }
}

}  // namespace

Cochain1::Cochain1(int n) : n_(n), values_(choose2(static_cast<std::size_t>(n))) {}

std::size_t Cochain1::slot(int i, int j) const {
  const auto un = static_cast<std::size_t>(n_);
  return choose2(un) - choose2(un - static_cast<std::size_t>(i)) + static_cast<std::size_t>(j - i - 1);
}

Value Cochain1::operator()(int i, int j) const {
  check_point(n_, i);
  check_point(n_, j);
  if (i == j) return 0;
  return i < j ? values_[slot(i, j)] : -values_[slot(j, i)];
}

void Cochain1::set(int i, int j, Value v) {
  check_point(n_, i);
  check_point(n_, j);
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "alternating cochains vanish on the diagonal");
  if (i < j) {
    values_[slot(i, j)] = v;
  } else {
    values_[slot(j, i)] = -v;
  }
}

Cochain2::Cochain2(int n) : n_(n), values_(choose3(static_cast<std::size_t>(n))) {}

Value Cochain2::operator()(int i, int j, int k) const {
  check_point(n_, i);
  check_point(n_, j);
  check_point(n_, k);
  const int sign = sort3(i, j, k);
  return sign == 0 ? 0 : sign * values_[triple_rank(n_, i, j, k)];
}

void Cochain2::set(int i, int j, int k, Value v) {
  check_point(n_, i);
  check_point(n_, j);
  check_point(n_, k);
  const int sign = sort3(i, j, k);
  if (sign == 0) throw Error(ErrorCode::kInvalidArgument, "alternating cochains vanish on repeated entries");
  values_[triple_rank(n_, i, j, k)] = sign * v;
}

bool Cochain2::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Value v) { return v == 0; });
}

std::vector<std::array<int, 3>> Cochain2::basis(int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

Cochain1 coboundary0(const Cochain0& gamma) {
  const int n = static_cast<int>(gamma.size());
  Cochain1 beta(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) beta.set(i, j, gamma[static_cast<std::size_t>(j)] - gamma[static_cast<std::size_t>(i)]);
  return beta;
}

Cochain2 coboundary1(const Cochain1& beta) {
  const int n = beta.n();
  Cochain2 out(n);
  for (const auto& [x, y, z] : Cochain2::basis(n)) out.set(x, y, z, beta(y, z) - beta(x, z) + beta(x, y));
  return out;
}

CocycleCheck is_cocycle2(const Cochain2& omega) {
  const int n = omega.n();
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const Value d = omega(x, y, z) - omega(w, y, z) + omega(w, x, z) - omega(w, x, y);
          if (d != 0) return {false, std::array<int, 4>{w, x, y, z}, d};
        }
  return {};
}

bool is_invariant(const Cochain1& chain, const PermGroup& g) {
  if (g.degree() != chain.n()) throw Error(ErrorCode::kInvalidArgument, "group degree differs from the cochain");
  for (const Perm& s : g.generators())
    for (int i = 0; i < chain.n(); ++i)
      for (int j = i + 1; j < chain.n(); ++j)
        if (chain(s(i), s(j)) != chain(i, j)) return false;
  return true;
}

bool is_invariant(const Cochain2& chain, const PermGroup& g) {
  if (g.degree() != chain.n()) throw Error(ErrorCode::kInvalidArgument, "group degree differs from the cochain");
  for (const Perm& s : g.generators())
    for (const auto& [i, j, k] : Cochain2::basis(chain.n()))
      if (chain(s(i), s(j), s(k)) != chain(i, j, k)) return false;
  return true;
}

std::size_t cocycle_space_rank(int n, const PermGroup& g, int max_degree) {
  check_degree(n, g, max_degree);
  return choose3(static_cast<std::size_t>(n)) - bareiss_rank(cocycle_system(n, g));
}

std::vector<Cochain2> invariant_cocycle_basis(int n, const PermGroup& g, int max_degree) {
  check_degree(n, g, max_degree);
  const auto system = cocycle_system(n, g);
  const std::size_t cols = choose3(static_cast<std::size_t>(n));
  std::vector<std::vector<cpp_rational>> a;
  for (const auto& row : system) a.emplace_back(row.begin(), row.end());

  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const cpp_rational lead = a[r][col];
    for (auto& v : a[r]) v /= lead;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || a[q][col] == 0) continue;
      const cpp_rational factor = a[q][col];
      for (std::size_t k = 0; k < cols; ++k) a[q][k] -= factor * a[r][k];
    }
    pivots.push_back(col);
    ++r;
  }

  const auto basis = Cochain2::basis(n);
  std::vector<Cochain2> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<cpp_rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    cpp_int scale = 1;
    for (const auto& x : v) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
    Cochain2 chain(n);
    for (std::size_t t = 0; t < cols; ++t) {
      const cpp_rational scaled = v[t] * scale;
      const cpp_int value = boost::multiprecision::numerator(scaled);
      if (value > std::numeric_limits<Value>::max() || value < std::numeric_limits<Value>::min()) {
        throw Error(ErrorCode::kBudgetExceeded, "cocycle basis entry does not fit in 64 bits");
      }
      chain.set(basis[t][0], basis[t][1], basis[t][2], static_cast<Value>(value));
    }
    out.push_back(std::move(chain));
  }
  return out;
}

std::optional<GenerosityWitness> generosity_coboundary(const PermGroup& g) {
  if (is_generously_transitive(g) || is_semi_generous(g)) return std::nullopt;
  const int n = g.degree();
  const auto& elements = g.elements();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      std::set<std::pair<int, int>> orbital;
      for (const Perm& e : elements) orbital.emplace(e(p), e(q));
      if (orbital.count({q, p})) continue;

      Cochain1 delta(n);
      for (const auto& [a, b] : orbital) delta.set(a, b, 1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            if (x == y || y == z || x == z) continue;
            if (delta(x, y) != delta(x, z) + delta(z, y)) {
              return GenerosityWitness{std::move(delta), {p, q}, {x, y, z}};
            }
          }
    }
  }
  return std::nullopt;
}

OmegaEvaluator::OmegaEvaluator(const DendriteModel& m, const Coloring& c, Cochain2 omega)
    : m_(&m), c_(&c), omega_(std::move(omega)) {}

Value OmegaEvaluator::operator()(VertexId a, VertexId b, VertexId c) const {
  for (VertexId v : {a, b, c}) {
    if (!m_->contains(v) || m_->is_branch(v)) {
      throw Error(ErrorCode::kInvalidArgument, "omega is evaluated on end stubs");
    }
  }
  if (a == b || b == c || a == c) return 0;
  const VertexId z = center(*m_, a, b, c);
  return omega_(color_from(*m_, *c_, z, a), color_from(*m_, *c_, z, b), color_from(*m_, *c_, z, c));
}

OmegaEvaluator build_omega(const DendriteModel& m, const Coloring& c, const Cochain2& omega) {
  if (omega.n() != m.n()) throw Error(ErrorCode::kInvalidArgument, "cochain degree differs from the model order");
  if (!c.fits(m)) throw Error(ErrorCode::kInvalidArgument, "coloring does not fit the model");
  return OmegaEvaluator(m, c, omega);
}

OmegaCheck verify_omega(const DendriteModel& m, const Coloring& c, const Cochain2& omega,
                        std::span<const Automorphism> automorphisms, std::size_t budget) {
  if (!is_cocycle2(omega).ok) throw Error(ErrorCode::kInvalidArgument, "Omega is not a cocycle");
  const OmegaEvaluator w = build_omega(m, c, omega);
  const auto stubs = m.end_stubs();
  const std::size_t s = stubs.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < 4 && total <= budget; ++i) total *= s > i ? s - i : 0;
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "more than " + std::to_string(budget) + " stub quadruples");
  }

  OmegaCheck out;
  for (VertexId a : stubs)
    for (VertexId b : stubs)
      for (VertexId x : stubs)
        for (VertexId y : stubs) {
          if (a == b || a == x || a == y || b == x || b == y || x == y) continue;
          ++out.quadruples;
          if (w(b, x, y) - w(a, x, y) + w(a, b, y) - w(a, b, x) != 0) {
            out.ok = false;
            out.failure = OmegaFailure::kCocycle;
            out.witness = {a, b, x, y};
            return out;
          }
        }

  for (std::size_t k = 0; k < automorphisms.size(); ++k) {
    const Automorphism& h = automorphisms[k];
    if (h.size() != m.num_vertices()) throw Error(ErrorCode::kInvalidArgument, "automorphism of another model");
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        for (std::size_t l = j + 1; l < s; ++l) {
          if (w(h(stubs[i]), h(stubs[j]), h(stubs[l])) != w(stubs[i], stubs[j], stubs[l])) {
            out.ok = false;
            out.failure = OmegaFailure::kInvariance;
            out.witness = {stubs[i], stubs[j], stubs[l]};
            out.automorphism = k;
            return out;
          }
        }
  }
  return out;
}

}  // namespace dendroscope
