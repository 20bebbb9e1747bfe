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

#ifndef DENDROSCOPE_DENDRITE_HPP
#define DENDROSCOPE_DENDRITE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dendroscope/error.hpp"

namespace dendroscope {

using VertexId = std::int32_t;

enum class VertexKind : std::uint8_t { kBranch, kEndStub };

/// One of the n components around a branch vertex, named by the edge that
/// leaves `at` towards `via`.
struct Direction {
  VertexId at = -1;
  VertexId via = -1;
  friend bool operator==(const Direction&, const Direction&) = default;
};

using VertexTuple = std::vector<VertexId>;

/// Finite truncation of the universal dendrite of order n.
///
/// Depth 0 is a single edge between two end stubs. Each refinement level
/// replaces every edge by a path through one new branch vertex that also
/// receives n - 2 fresh end stubs. Vertices are numbered level by level in
/// edge order: the new branch vertex first, then its stubs.
///
/// Every branch vertex owns n direction slots fixed when it is created:
/// slots 0 and 1 point along the edge it split (towards its first and second
/// endpoint), slots 2..n-1 towards its own stubs. Later refinements change
/// the neighbor a slot leads to but never the slot itself, so direction
/// indices agree between models of different depth.
class DendriteModel {
 public:
  /// 3 <= n <= 10, 1 <= depth <= 6, n^depth <= edge_budget.
  static DendriteModel build(int n, int depth, std::size_t edge_budget = kDefaultModelEdgeBudget);

  int n() const { return n_; }
  int depth() const { return depth_; }
  std::size_t num_vertices() const { return kind_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  VertexKind kind(VertexId v) const { return kind_[idx(v)]; }
  bool is_branch(VertexId v) const { return kind(v) == VertexKind::kBranch; }
  bool contains(VertexId v) const { return v >= 0 && idx(v) < kind_.size(); }
  int level(VertexId v) const { return level_[idx(v)]; }

  /// Sorted neighbor list.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[idx(v)]; }
  std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }

  std::span<const VertexId> branch_vertices() const { return branches_; }
  std::span<const VertexId> end_stubs() const { return stubs_; }
  /// Position of a branch vertex in branch_vertices(), -1 for stubs.
  int branch_rank(VertexId v) const { return branch_rank_[idx(v)]; }

  /// Neighbor reached through direction slot `slot` of branch vertex `v`.
  VertexId slot_neighbor(VertexId v, int slot) const {
    return slots_[static_cast<std::size_t>(branch_rank(v)) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(slot)];
  }
  /// Slot of `at` whose edge leads to `via`; `via` must be adjacent.
  int slot_of(VertexId at, VertexId via) const;
  int slot_of(const Direction& d) const { return slot_of(d.at, d.via); }
  Direction direction(VertexId at, int slot) const { return {at, slot_neighbor(at, slot)}; }

  /// Tree helpers over the rooting at vertex 0.
  VertexId parent(VertexId v) const { return parent_[idx(v)]; }
  int height(VertexId v) const { return height_[idx(v)]; }
  VertexId lca(VertexId a, VertexId b) const;
  int distance(VertexId a, VertexId b) const;

  friend bool operator==(const DendriteModel&, const DendriteModel&) = default;

 private:
  DendriteModel() = default;
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  int n_ = 0;
  int depth_ = 0;
  std::vector<VertexKind> kind_;
  std::vector<int> level_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> branches_;
  std::vector<VertexId> stubs_;
  std::vector<int> branch_rank_;
  std::vector<VertexId> slots_;
  std::vector<VertexId> parent_;
  std::vector<int> height_;
};

// Tree geometry. Vertex arguments must belong to the model.

/// The unique simple path from x to y, both inclusive.
std::vector<VertexId> path(const DendriteModel& m, VertexId x, VertexId y);

/// y lies strictly inside the path from x to z.
bool between(const DendriteModel& m, VertexId x, VertexId y, VertexId z);

/// Median of three vertices; with repeats, the repeated vertex.
VertexId center(const DendriteModel& m, VertexId x, VertexId y, VertexId z);

/// F together with the centers of all triples of distinct members, sorted.
std::vector<VertexId> center_closure(const DendriteModel& m, std::span<const VertexId> f);
bool is_center_closed(const DendriteModel& m, std::span<const VertexId> f);

/// The direction at branch vertex x containing y. Throws Error(kSameVertex)
/// when x == y.
Direction component_of(const DendriteModel& m, VertexId x, VertexId y);

/// Connected components of the model minus F, each sorted, ordered by their
/// smallest vertex. Throws Error(kNotCenterClosed).
std::vector<std::vector<VertexId>> components_determined_by(const DendriteModel& m,
                                                            std::span<const VertexId> f);

}  // namespace dendroscope

#endif  // DENDROSCOPE_DENDRITE_HPP
