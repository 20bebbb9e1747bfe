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
#include <deque>
#include <set>
#include <vector>

#include "doctest.h"
#include "dendroscope/dendrite.hpp"
#include "test_support.hpp"

using namespace dendroscope;
using testing::error_code_of;

namespace {

// Breadth-first parents from `root`, using only the adjacency lists.
std::vector<VertexId> bfs_parents(const DendriteModel& m, VertexId root) {
  std::vector<VertexId> parent(m.num_vertices(), -2);
  parent[static_cast<std::size_t>(root)] = -1;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : m.neighbors(v)) {
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  return parent;
}

std::vector<VertexId> bfs_path(const DendriteModel& m, VertexId x, VertexId y) {
  const auto parent = bfs_parents(m, y);
  std::vector<VertexId> out{x};
  while (out.back() != y) out.push_back(parent[static_cast<std::size_t>(out.back())]);
  return out;
}

VertexId intersect_center(const DendriteModel& m, VertexId x, VertexId y, VertexId z) {
  auto sorted = [&](VertexId a, VertexId b) {
    auto p = bfs_path(m, a, b);
    std::sort(p.begin(), p.end());
    return p;
  };
  const auto xy = sorted(x, y), yz = sorted(y, z), xz = sorted(x, z);
  std::vector<VertexId> tmp, common;
  std::set_intersection(xy.begin(), xy.end(), yz.begin(), yz.end(), std::back_inserter(tmp));
  std::set_intersection(tmp.begin(), tmp.end(), xz.begin(), xz.end(), std::back_inserter(common));
  REQUIRE(common.size() == 1);
  return common[0];
}

std::vector<VertexId> fixpoint_closure(const DendriteModel& m, std::vector<VertexId> f) {
  std::set<VertexId> s(f.begin(), f.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<VertexId> cur(s.begin(), s.end());
    for (VertexId a : cur)
      for (VertexId b : cur)
        for (VertexId c : cur)
          if (a < b && b < c) grew |= s.insert(intersect_center(m, a, b, c)).second;
  }
  return {s.begin(), s.end()};
}

// Vertices reachable from `start` without entering `blocked`.
std::set<VertexId> reach_avoiding(const DendriteModel& m, VertexId start, const std::set<VertexId>& blocked) {
  std::set<VertexId> seen{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : m.neighbors(v))
      if (!blocked.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("dendrite") {

TEST_CASE("sizes and degrees") {
  for (int n = 3; n <= 6; ++n) {
    for (int d = 1; d <= 4; ++d) {
      if (ipow(static_cast<std::size_t>(n), d) > 5000) continue;
      CAPTURE(n);
      CAPTURE(d);
      const auto m = DendriteModel::build(n, d);
      const std::size_t edges = ipow(static_cast<std::size_t>(n), d);
      CHECK(m.num_edges() == edges);
      CHECK(m.num_vertices() == edges + 1);
      CHECK(m.branch_vertices().size() == (edges - 1) / static_cast<std::size_t>(n - 1));
      CHECK(m.branch_vertices().size() + m.end_stubs().size() == m.num_vertices());
      for (VertexId v : m.branch_vertices()) CHECK(m.neighbors(v).size() == static_cast<std::size_t>(n));
      for (VertexId v : m.end_stubs()) CHECK(m.neighbors(v).size() == 1);
      // connected and acyclic
      const auto parent = bfs_parents(m, 0);
      CHECK(std::count(parent.begin(), parent.end(), -2) == 0);
    }
  }
}

TEST_CASE("depth one layout") {
  const auto m = DendriteModel::build(4, 1);
  CHECK(m.num_vertices() == 5);
  CHECK(!m.is_branch(0));
  CHECK(!m.is_branch(1));
  CHECK(m.is_branch(2));
  CHECK(m.slot_neighbor(2, 0) == 0);
  CHECK(m.slot_neighbor(2, 1) == 1);
  CHECK(m.slot_neighbor(2, 2) == 3);
  CHECK(m.slot_neighbor(2, 3) == 4);
}

TEST_CASE("slots are a bijection onto neighbors") {
  const auto m = DendriteModel::build(4, 3);
  for (VertexId v : m.branch_vertices()) {
    std::vector<VertexId> via;
    for (int s = 0; s < 4; ++s) {
      via.push_back(m.slot_neighbor(v, s));
      CHECK(m.slot_of(v, m.slot_neighbor(v, s)) == s);
    }
    std::sort(via.begin(), via.end());
    CHECK(std::equal(via.begin(), via.end(), m.neighbors(v).begin(), m.neighbors(v).end()));
  }
}

TEST_CASE("slots keep their direction under refinement") {
  for (int n : {3, 4}) {
    const auto coarse = DendriteModel::build(n, 2);
    const auto fine = DendriteModel::build(n, 3);
    for (VertexId v : coarse.branch_vertices()) {
      for (int s = 0; s < n; ++s) {
        const VertexId w = coarse.slot_neighbor(v, s);
        CHECK(component_of(fine, v, w) == fine.direction(v, s));
      }
    }
  }
}

TEST_CASE("paths, distances and betweenness match breadth-first search") {
  const auto m = DendriteModel::build(3, 3);
  const auto nv = static_cast<VertexId>(m.num_vertices());
  for (VertexId x = 0; x < nv; ++x) {
    for (VertexId y = 0; y < nv; ++y) {
      const auto p = bfs_path(m, x, y);
      CHECK(path(m, x, y) == p);
      CHECK(m.distance(x, y) == static_cast<int>(p.size()) - 1);
      for (VertexId z = 0; z < nv; ++z) {
        const bool inside = p.size() > 2 && std::find(p.begin() + 1, p.end() - 1, z) != p.end() - 1;
        CHECK(between(m, x, z, y) == inside);
      }
    }
  }
}

TEST_CASE("center is the common point of the three paths") {
  const auto m = DendriteModel::build(4, 2);
  const auto nv = static_cast<VertexId>(m.num_vertices());
  for (VertexId x = 0; x < nv; ++x)
    for (VertexId y = 0; y < nv; ++y)
      for (VertexId z = 0; z < nv; ++z) CHECK(center(m, x, y, z) == intersect_center(m, x, y, z));
  CHECK(center(m, 5, 5, 9) == 5);
  CHECK(center(m, 5, 9, 5) == 5);
}

TEST_CASE("center closure is the iterated fixpoint") {
  const auto m = DendriteModel::build(3, 4);
  const auto stubs = m.end_stubs();
  std::vector<std::vector<VertexId>> samples;
  for (std::size_t i = 0; i + 4 < stubs.size(); i += 3)
    samples.push_back({stubs[i], stubs[stubs.size() - 1 - i], stubs[(i * 7) % stubs.size()], stubs[i + 4]});
  samples.push_back({0, 1});
  samples.push_back({m.branch_vertices()[0]});
  for (const auto& f : samples) {
    const auto closed = center_closure(m, f);
    CHECK(closed == fixpoint_closure(m, f));
    CHECK(is_center_closed(m, closed));
    CHECK(center_closure(m, closed) == closed);
  }
  CHECK(!is_center_closed(m, std::vector<VertexId>{stubs[0], stubs[5], stubs[11]}));
}

TEST_CASE("component_of picks the neighbor whose side holds y") {
  const auto m = DendriteModel::build(3, 3);
  const auto nv = static_cast<VertexId>(m.num_vertices());
  for (VertexId x : m.branch_vertices()) {
    for (VertexId y = 0; y < nv; ++y) {
      if (x == y) continue;
      const Direction d = component_of(m, x, y);
      CHECK(d.at == x);
      CHECK(reach_avoiding(m, d.via, {x}).count(y) == 1);
    }
  }
  CHECK(error_code_of([&] { component_of(m, 2, 2); }) == ErrorCode::kSameVertex);
  CHECK(error_code_of([&] { component_of(m, 0, 2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("components partition the complement") {
  const auto m = DendriteModel::build(3, 3);
  const auto stubs = m.end_stubs();
  const auto f = center_closure(m, std::vector<VertexId>{stubs[1], stubs[6], stubs[13]});
  const auto comps = components_determined_by(m, f);
  const std::set<VertexId> blocked(f.begin(), f.end());
  std::size_t total = f.size();
  VertexId last_first = -1;
  for (const auto& comp : comps) {
    CHECK(std::is_sorted(comp.begin(), comp.end()));
    CHECK(comp.front() > last_first);
    last_first = comp.front();
    const auto reach = reach_avoiding(m, comp.front(), blocked);
    CHECK(std::vector<VertexId>(reach.begin(), reach.end()) == comp);
    total += comp.size();
  }
  CHECK(total == m.num_vertices());
  CHECK(error_code_of([&] {
          components_determined_by(m, std::vector<VertexId>{stubs[1], stubs[6], stubs[13]});
        }) == ErrorCode::kNotCenterClosed);
}

TEST_CASE("build arguments") {
  CHECK(error_code_of([] { DendriteModel::build(2, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { DendriteModel::build(11, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { DendriteModel::build(3, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { DendriteModel::build(3, 7); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { DendriteModel::build(10, 6, 999999); }) == ErrorCode::kBudgetExceeded);
  CHECK(error_code_of([] { DendriteModel::build(3, 5, 100); }) == ErrorCode::kBudgetExceeded);
  CHECK(DendriteModel::build(3, 3) == DendriteModel::build(3, 3));
}

}  // TEST_SUITE
