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


#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "dendroscope/catalog.hpp"
#include "dendroscope/cohomology.hpp"
#include "dendroscope/coloring.hpp"
#include "dendroscope/exact_rank.hpp"
#include "dendroscope/kgroup.hpp"
#include "test_support.hpp"

using namespace dendroscope;
using testing::error_code_of;

namespace {

constexpr std::int64_t kPrime = 1000003;

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& row : rows)
    for (auto& x : row) x = ((x % kPrime) + kPrime) % kPrime;
  auto inv = [](std::int64_t a) {
    std::int64_t r = 1, e = kPrime - 2;
    while (e) {
      if (e & 1) r = r * a % kPrime;
      a = a * a % kPrime;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t s = inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = x * s % kPrime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::array<int, 3>> triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

// Sorted position and sign of an arbitrary triple of distinct points.
std::pair<std::size_t, int> locate(const std::vector<std::array<int, 3>>& basis, std::array<int, 3> t) {
  int sign = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2 - a; ++b)
      if (t[static_cast<std::size_t>(b)] > t[static_cast<std::size_t>(b + 1)]) {
        std::swap(t[static_cast<std::size_t>(b)], t[static_cast<std::size_t>(b + 1)]);
        sign = -sign;
      }
  const auto it = std::find(basis.begin(), basis.end(), t);
  return {static_cast<std::size_t>(it - basis.begin()), sign};
}

// Dimension of invariant cocycles: every 4-subset and every group element
// contribute a row.
std::size_t oracle_rank(int n, const PermGroup& g) {
  const auto basis = triples(n);
  std::vector<std::vector<std::int64_t>> rows;
  for (int w = 0; w < n; ++w)
    for (int x = w + 1; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          std::vector<std::int64_t> row(basis.size(), 0);
          row[locate(basis, {x, y, z}).first] += 1;
          row[locate(basis, {w, y, z}).first] -= 1;
          row[locate(basis, {w, x, z}).first] += 1;
          row[locate(basis, {w, x, y}).first] -= 1;
          rows.push_back(row);
        }
  for (const Perm& p : g.elements()) {
    for (std::size_t t = 0; t < basis.size(); ++t) {
      std::vector<std::int64_t> row(basis.size(), 0);
      const auto [pos, sign] = locate(basis, {p(basis[t][0]), p(basis[t][1]), p(basis[t][2])});
      row[pos] += sign;
      row[t] -= 1;
      rows.push_back(row);
    }
  }
  return basis.size() - rank_mod_p(rows);
}

Value d_omega(const Cochain2& o, int w, int x, int y, int z) {
  return o(x, y, z) - o(w, y, z) + o(w, x, z) - o(w, x, y);
}

Cochain2 orientation(int n) {
  Cochain2 o(n);
  o.set(0, 1, 2, 1);
  return o;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("coboundary of a single edge") {
  Cochain1 beta(3);
  beta.set(0, 1, 1);
  CHECK(coboundary1(beta)(0, 1, 2) == 1);
  CHECK(beta(1, 0) == -1);
  CHECK(beta(2, 2) == 0);
  const Cochain1 b = coboundary0({4, 1, 7});
  CHECK(b(0, 1) == -3);
  CHECK(b(2, 1) == -6);
}

TEST_CASE("alternation") {
  Cochain2 o(4);
  o.set(2, 0, 3, 5);
  int p[3] = {0, 2, 3};
  do {
    const int inversions = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
    CHECK(o(p[0], p[1], p[2]) == (inversions % 2 ? 5 : -5));
  } while (std::next_permutation(p, p + 3));
  CHECK(o(0, 0, 3) == 0);
  CHECK(error_code_of([&] { o.set(1, 1, 2, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("coboundaries are cocycles") {
  for (int n = 3; n <= 6; ++n) {
    Cochain0 gamma(static_cast<std::size_t>(n));
    std::iota(gamma.begin(), gamma.end(), Value{3});
    CHECK(coboundary1(coboundary0(gamma)).is_zero());
    Cochain1 beta(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) beta.set(i, j, (i * 7 + j * 3) % 5 - 2);
    CHECK(is_cocycle2(coboundary1(beta)).ok);
  }
}

TEST_CASE("every cochain on three points is a cocycle") {
  for (Value v = -3; v <= 3; ++v) {
    Cochain2 o(3);
    o.set(0, 1, 2, v);
    CHECK(is_cocycle2(o).ok);
  }
}

TEST_CASE("a perturbed coboundary fails with a valid witness") {
  Cochain1 beta(5);
  beta.set(0, 3, 2);
  beta.set(1, 4, -1);
  Cochain2 o = coboundary1(beta);
  o.set(1, 2, 3, o(1, 2, 3) + 1);
  const auto check = is_cocycle2(o);
  CHECK(!check.ok);
  REQUIRE(check.witness.has_value());
  const auto [w, x, y, z] = *check.witness;
  CHECK(check.value == d_omega(o, w, x, y, z));
  CHECK(check.value != 0);
}

TEST_CASE("orientation invariance") {
  CHECK(is_invariant(orientation(3), *catalog_group(3, "C3")));
  CHECK(!is_invariant(orientation(3), *catalog_group(3, "S3")));
  Cochain1 beta(3);
  beta.set(0, 1, 1);
  beta.set(1, 2, 1);
  beta.set(2, 0, 1);
  CHECK(is_invariant(beta, *catalog_group(3, "C3")));
  CHECK(!is_invariant(beta, *catalog_group(3, "S3")));
}

TEST_CASE("Bareiss rank matches modular rank") {
  std::vector<std::vector<boost::multiprecision::cpp_int>> big;
  std::vector<std::vector<std::int64_t>> small;
  for (int r = 0; r < 7; ++r) {
    std::vector<std::int64_t> row;
    for (int c = 0; c < 6; ++c) row.push_back(((r + 1) * (c + 2) * 37 + r * r * 11) % 9 - 4);
    small.push_back(row);
  }
  small.push_back(small[0]);
  for (auto& x : small.back()) x *= 3;
  for (const auto& row : small) big.emplace_back(row.begin(), row.end());
  CHECK(bareiss_rank(big) == rank_mod_p(small));
}

TEST_CASE("cocycle space rank matches the modular oracle") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& [name, g] : group_catalog(n)) {
      CAPTURE(n);
      CAPTURE(name);
      CHECK(cocycle_space_rank(n, g) == oracle_rank(n, g));
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto g = random_two_generator_group(n, seed);
      CHECK(cocycle_space_rank(n, g) == oracle_rank(n, g));
    }
  }
}

TEST_CASE("trivial group rank is the coboundary dimension") {
  for (int n = 3; n <= 8; ++n)
    CHECK(cocycle_space_rank(n, PermGroup::trivial(n)) == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
  CHECK(error_code_of([] { cocycle_space_rank(9, PermGroup::trivial(9)); }) == ErrorCode::kBudgetExceeded);
}

TEST_CASE("invariant cocycle basis") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& [name, g] : group_catalog(n)) {
      CAPTURE(name);
      const auto basis = invariant_cocycle_basis(n, g);
      CHECK(basis.size() == cocycle_space_rank(n, g));
      std::vector<std::vector<std::int64_t>> rows;
      for (const auto& b : basis) {
        CHECK(is_cocycle2(b).ok);
        CHECK(is_invariant(b, g));
        rows.emplace_back(b.values().begin(), b.values().end());
      }
      CHECK(rank_mod_p(rows) == basis.size());
    }
  }
}

TEST_CASE("generosity coboundary witnesses") {
  CHECK(!generosity_coboundary(*catalog_group(4, "D4")).has_value());
  CHECK(!generosity_coboundary(*catalog_group(4, "semi-generous")).has_value());
  CHECK(generosity_coboundary(*catalog_group(3, "C3")).has_value());
  for (int n = 3; n <= 6; ++n) {
    for (const auto& [name, g] : group_catalog(n)) {
      CAPTURE(n);
      CAPTURE(name);
      const auto w = generosity_coboundary(g);
      CHECK(w.has_value() == !(is_generously_transitive(g) || is_semi_generous(g)));
      if (!w) continue;
      CHECK(is_invariant(w->delta, g));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(std::abs(w->delta(i, j)) <= 1);
      const auto [x, y, z] = w->triple;
      CHECK(w->delta(x, y) != w->delta(x, z) + w->delta(z, y));
    }
  }
}

TEST_CASE("omega at a star") {
  const auto m = DendriteModel::build(5, 1);
  const auto c = Coloring::from_rows(m, {{0, 1, 2, 3, 4}});
  Cochain2 o(5);
  o.set(0, 1, 2, 1);
  o.set(0, 3, 4, 7);
  const auto omega = build_omega(m, c, o);
  CHECK(omega(0, 1, 3) == 1);
  CHECK(omega(1, 0, 3) == -1);
  CHECK(omega(3, 0, 1) == 1);
  CHECK(omega(0, 4, 5) == 7);
  CHECK(omega(0, 0, 3) == 0);
  CHECK(error_code_of([&] { omega(0, 1, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { build_omega(m, c, Cochain2(4)); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("omega from a cocycle is a cocycle on stubs") {
  const auto m = DendriteModel::build(3, 2);
  const auto c = random_coloring(m, 4);
  const auto check = verify_omega(m, c, orientation(3));
  CHECK(check.ok);
  const std::size_t s = m.end_stubs().size();
  CHECK(check.quadruples == s * (s - 1) * (s - 2) * (s - 3));
  CHECK(check.quadruples == 360);
  Cochain2 bad(4);
  bad.set(0, 1, 2, 1);
  const auto m4 = DendriteModel::build(4, 1);
  CHECK(error_code_of([&] { verify_omega(m4, random_coloring(m4, 0), bad); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { verify_omega(m, c, orientation(3), {}, 10); }) == ErrorCode::kBudgetExceeded);
}

TEST_CASE("omega invariance under kaleidoscopic automorphisms") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = uniform_coloring(m);
  const VertexId root = uniform_coloring_root(m);
  const auto s3 = PermGroup::symmetric(3);
  std::vector<Automorphism> rotations;
  for (const char* cyc : {"()", "(0 1 2)", "(0 2 1)"})
    rotations.push_back(split_gamma(m, c, s3, root, Perm::from_cycles(3, cyc)));
  CHECK(verify_omega(m, c, orientation(3), rotations).ok);
  rotations.push_back(split_gamma(m, c, s3, root, Perm::from_cycles(3, "(0 1)")));
  const auto check = verify_omega(m, c, orientation(3), rotations);
  CHECK(!check.ok);
  CHECK(check.failure == OmegaFailure::kInvariance);
  CHECK(check.automorphism == 3);
  REQUIRE(check.witness.size() == 3);
  const OmegaEvaluator omega(m, c, orientation(3));
  const Automorphism& h = rotations[3];
  const auto& t = check.witness;
  CHECK(omega(h(t[0]), h(t[1]), h(t[2])) != omega(t[0], t[1], t[2]));
}

}  // TEST_SUITE
