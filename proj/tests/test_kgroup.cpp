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
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "dendroscope/catalog.hpp"
#include "dendroscope/coloring.hpp"
#include "dendroscope/kgroup.hpp"
#include "test_support.hpp"

using namespace dendroscope;
using testing::error_code_of;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<VertexTuple> distinct_tuples(const DendriteModel& m, int k) {
  std::vector<VertexTuple> out;
  VertexTuple cur;
  const auto b = m.branch_vertices();
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (VertexId v : b) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Union-find over every pair of tuples.
std::size_t pairwise_orbits(const DendriteModel& m, const Coloring& c, const PermGroup& g, int k) {
  const auto tuples = distinct_tuples(m, k);
  std::vector<std::size_t> parent(tuples.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = a + 1; b < tuples.size(); ++b)
      if (find(a) != find(b) && same_orbit(m, c, g, tuples[a], tuples[b])) parent[find(b)] = find(a);
  std::size_t roots = 0;
  for (std::size_t a = 0; a < tuples.size(); ++a) roots += find(a) == a;
  return roots;
}

}  // namespace

TEST_SUITE("kgroup") {

TEST_CASE("automorphism validation") {
  const auto m = DendriteModel::build(3, 1);
  CHECK(Automorphism::identity(m).is_identity());
  CHECK(Automorphism::make(m, {1, 0, 2, 3}).images().size() == 4);
  CHECK(error_code_of([&] { Automorphism::make(m, {0, 0, 2, 3}); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { Automorphism::make(m, {2, 1, 0, 3}); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { Automorphism::make(m, {0, 1, 2}); }) == ErrorCode::kInvalidArgument);
  const auto m2 = DendriteModel::build(3, 2);
  std::vector<VertexId> swap_stubs(m2.num_vertices());
  std::iota(swap_stubs.begin(), swap_stubs.end(), 0);
  // two stubs hanging off different branch vertices
  std::swap(swap_stubs[static_cast<std::size_t>(m2.end_stubs()[0])],
            swap_stubs[static_cast<std::size_t>(m2.end_stubs().back())]);
  CHECK(error_code_of([&] { Automorphism::make(m2, swap_stubs); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("split at the root of a uniform coloring") {
  for (int n : {3, 4}) {
    const auto m = DendriteModel::build(n, 3);
    const auto c = uniform_coloring(m);
    const auto g = PermGroup::symmetric(n);
    const VertexId root = uniform_coloring_root(m);
    std::vector<Automorphism> autos;
    for (const Perm& gamma : all_perms(n)) {
      const auto a = split_gamma(m, c, g, root, gamma);
      CHECK(a(root) == root);
      CHECK(local_action(m, c, a, root) == gamma);
      const auto profile = local_action_profile(m, c, a);
      for (VertexId v : m.branch_vertices())
        if (v != root) CHECK(profile[static_cast<std::size_t>(m.branch_rank(v))].is_identity());
      CHECK(is_member(m, c, g, a).member);
      autos.push_back(a);
    }
    // the splits form a group isomorphic to Sym(n)
    for (std::size_t i = 0; i < autos.size(); ++i) {
      CHECK((autos[i] * autos[i].inverse()).is_identity());
      const Perm prod = local_action(m, c, autos[i] * autos[autos.size() - 1 - i], root);
      CHECK(prod == local_action(m, c, autos[i], root) * local_action(m, c, autos[autos.size() - 1 - i], root));
    }
  }
}

TEST_CASE("a transposition leaves the cyclic group") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = uniform_coloring(m);
  const VertexId root = uniform_coloring_root(m);
  const Perm swap01 = Perm::from_cycles(3, "(0 1)");
  const auto a = split_gamma(m, c, PermGroup::symmetric(3), root, swap01);
  const auto verdict = is_member(m, c, *catalog_group(3, "C3"), a);
  CHECK(!verdict.member);
  REQUIRE(verdict.vertex.has_value());
  CHECK(*verdict.vertex == root);
  CHECK(*verdict.action == swap01);
  CHECK(error_code_of([&] { split_gamma(m, c, *catalog_group(3, "C3"), root, swap01); }) ==
        ErrorCode::kNotInGroup);
}

TEST_CASE("random colorings usually admit no color isomorphism") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = random_coloring(m, 7);
  std::string message;
  try {
    split_gamma(m, c, PermGroup::symmetric(3), 2, Perm::from_cycles(3, "(0 1 2)"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoColorIsomorphism);
    message = e.what();
  }
  CHECK(message.rfind("NoColorIsomorphism(", 0) == 0);
}

TEST_CASE("extensions respect the partial map and the group") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = random_coloring(m, 3);
  const auto b = m.branch_vertices();
  for (const auto& [name, g] : group_catalog(3)) {
    CAPTURE(name);
    int found = 0;
    for (VertexId x : b) {
      for (VertexId y : b) {
        if (x == y) continue;
        const PartialMap f{{b[0], x}, {b[1], y}};
        std::optional<Automorphism> h;
        try {
          h = extend_partial(m, c, g, f);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::kBetweennessViolation);
          continue;
        }
        if (!h) continue;
        ++found;
        CHECK((*h)(b[0]) == x);
        CHECK((*h)(b[1]) == y);
        CHECK(is_member(m, c, g, *h).member);
        CHECK(same_orbit(m, c, g, {b[0], b[1]}, {x, y}));
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("identity partial maps extend") {
  const auto m = DendriteModel::build(4, 2);
  const auto c = random_coloring(m, 1);
  const auto b = m.branch_vertices();
  const auto h = extend_partial(m, c, PermGroup::trivial(4), {{b[1], b[1]}, {b[3], b[3]}});
  REQUIRE(h.has_value());
  CHECK(h->is_identity());
}

TEST_CASE("extension arguments") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = random_coloring(m, 3);
  const auto g = PermGroup::symmetric(3);
  const auto b = m.branch_vertices();
  CHECK(error_code_of([&] { extend_partial(m, c, g, {}); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { extend_partial(m, c, g, {{b[0], b[1]}, {b[2], b[1]}}); }) ==
        ErrorCode::kInvalidArgument);
  // x between the other two, image not between the images
  VertexId x = -1, y = -1, z = -1;
  for (VertexId p : b)
    for (VertexId q : b)
      for (VertexId r : b)
        if (x < 0 && between(m, p, q, r)) x = p, y = q, z = r;
  REQUIRE(x >= 0);
  CHECK(error_code_of([&] { extend_partial(m, c, g, {{x, y}, {y, x}, {z, z}}); }) ==
        ErrorCode::kBetweennessViolation);
  CHECK(error_code_of([&] { extend_partial(m, c, g, {{b[0], b[5]}, {b[3], b[7]}}, 1); }) ==
        ErrorCode::kBudgetExceeded);
}

TEST_CASE("trivial group pairs are classified by their two colors") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = random_coloring(m, 7);
  const auto g = PermGroup::trivial(3);
  const auto pairs = distinct_tuples(m, 2);
  std::set<std::pair<int, int>> patterns;
  for (const auto& r : pairs) {
    const std::pair<int, int> key{color_from(m, c, r[0], r[1]), color_from(m, c, r[1], r[0])};
    patterns.insert(key);
    for (const auto& s : pairs) {
      const std::pair<int, int> other{color_from(m, c, s[0], s[1]), color_from(m, c, s[1], s[0])};
      CHECK(same_orbit(m, c, g, r, s) == (key == other));
    }
  }
  CHECK(patterns.size() == 9);
  CHECK(count_orbits(m, c, g, 2) == patterns.size());
}

TEST_CASE("count_orbits matches pairwise union-find") {
  struct Case {
    int n, depth, k;
  };
  for (const Case& cs : {Case{3, 2, 3}, Case{3, 3, 2}, Case{4, 2, 3}, Case{3, 3, 1}}) {
    const auto m = DendriteModel::build(cs.n, cs.depth);
    for (const auto& coloring : {random_coloring(m, 5), uniform_coloring(m)}) {
      for (const auto& [name, g] : group_catalog(cs.n)) {
        CAPTURE(cs.n);
        CAPTURE(cs.k);
        CAPTURE(name);
        CHECK(count_orbits(m, coloring, g, cs.k) == pairwise_orbits(m, coloring, g, cs.k));
      }
    }
  }
}

TEST_CASE("single vertices form one orbit") {
  const auto m = DendriteModel::build(4, 2);
  for (const auto& [name, g] : group_catalog(4)) CHECK(count_orbits(m, random_coloring(m, 1), g, 1) == 1);
}

TEST_CASE("count_orbits is independent of the job count") {
  const auto m = DendriteModel::build(3, 3);
  const auto c = random_coloring(m, 7);
  const auto g = *catalog_group(3, "C3");
  CHECK(count_orbits(m, c, g, 3, kDefaultEnumerationBudget, 1) ==
        count_orbits(m, c, g, 3, kDefaultEnumerationBudget, 4));
  CHECK(error_code_of([&] { count_orbits(m, c, g, 3, 100); }) == ErrorCode::kBudgetExceeded);
  CHECK(error_code_of([&] { count_orbits(m, c, g, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("same_orbit arguments") {
  const auto m = DendriteModel::build(3, 2);
  const auto c = random_coloring(m, 0);
  const auto g = PermGroup::symmetric(3);
  const auto b = m.branch_vertices();
  CHECK(error_code_of([&] { same_orbit(m, c, g, {b[0], b[0]}, {b[1], b[2]}); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { same_orbit(m, c, g, {0, b[0]}, {b[1], b[2]}); }) == ErrorCode::kInvalidArgument);
  CHECK(same_orbit(m, c, g, {b[0], b[1]}, {b[0], b[1]}));
}

}  // TEST_SUITE
