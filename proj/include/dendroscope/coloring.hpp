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

#ifndef DENDROSCOPE_COLORING_HPP
#define DENDROSCOPE_COLORING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dendroscope/dendrite.hpp"
#include "dendroscope/perm.hpp"
#include "dendroscope/perm_group.hpp"

namespace dendroscope {

/// Per-branch-vertex bijection from direction slots to colors [n].
///
/// A coloring is tied to the shape of the model it was built for (order n
/// and number of branch vertices); rows are indexed by branch rank.
class Coloring {
 public:
  /// `rows[r][slot]` is the color of direction `slot` at the branch vertex
  /// of rank r. Throws Error(kInvalidArgument) unless every row is a
  /// bijection of [n].
  static Coloring from_rows(const DendriteModel& m, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  std::size_t num_branch_vertices() const { return colors_.size() / static_cast<std::size_t>(n_); }
  bool fits(const DendriteModel& m) const {
    return m.n() == n_ && m.branch_vertices().size() == num_branch_vertices();
  }

  int color_of_slot(int rank, int slot) const { return colors_[cell(rank, slot)]; }
  int slot_of_color(int rank, int color) const { return slots_[cell(rank, color)]; }

  int color(const DendriteModel& m, const Direction& d) const {
    return color_of_slot(m.branch_rank(d.at), m.slot_of(d));
  }
  /// Neighbor of x reached through the direction colored `color`.
  VertexId neighbor_with_color(const DendriteModel& m, VertexId x, int color) const {
    return m.slot_neighbor(x, slot_of_color(m.branch_rank(x), color));
  }

  /// The bijection at branch rank r as a permutation (slot -> color).
  Perm row(int rank) const;

  /// Replaces the row of `rank` by gamma o row.
  void left_compose(int rank, const Perm& gamma);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Coloring(int n, std::size_t branches);
  std::size_t cell(int rank, int k) const {
    return static_cast<std::size_t>(rank) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
  }

  int n_ = 0;
  std::vector<std::uint8_t> colors_;
  std::vector<std::uint8_t> slots_;
};

/// Color at x of the direction containing y. Throws Error(kSameVertex).
int color_from(const DendriteModel& m, const Coloring& c, VertexId x, VertexId y);

/// Independent uniform bijection at each branch vertex. The row of vertex v
/// is a Fisher-Yates shuffle of [n] drawn from RandomStream(seed, v).
Coloring random_coloring(const DendriteModel& m, std::uint64_t seed);

/// Coloring in which every direction subtree at the first branch vertex
/// (vertex 2, the level-1 center) carries the same colored pattern.
///
/// The tree is rooted at that center. A non-root branch vertex gives color 0
/// to its parent direction and colors 1..n-1 to its children ordered by
/// (canonical subtree shape, slot); the root colors its n directions
/// 0..n-1 by the same key. Colors are thus a function of shape, so equal
/// shapes carry equal colored patterns.
Coloring uniform_coloring(const DendriteModel& m);

/// The center used by uniform_coloring.
VertexId uniform_coloring_root(const DendriteModel& m);

struct Defect {
  VertexId x;
  VertexId y;
  int i;
  int j;
  friend bool operator==(const Defect&, const Defect&) = default;
};

struct DefectReport {
  std::vector<Defect> entries;
  std::size_t pairs_checked = 0;
  int witness_budget = 0;
};

/// Some branch vertex z strictly inside path(x, y) has c_z(x) = i and
/// c_z(y) = j. Throws Error(kInvalidArgument) when i == j.
bool has_witness(const DendriteModel& m, const Coloring& c, VertexId x, VertexId y, int i, int j);

/// Audits every ordered pair of branch vertices at distance >= min_separation
/// against every ordered pair of distinct colors. Entries are sorted by
/// (x, y, i, j).
DefectReport kaleidoscopic_defects(const DendriteModel& m, const Coloring& c, int min_separation = 3,
                                   unsigned jobs = 1);

struct WitnessShortfall {
  VertexId v;
  VertexId w;
  int i;
  int j;
};

struct Recoloring {
  Coloring coloring;
  /// (vertex, gamma) for every rewritten vertex: new row = gamma o old row.
  std::vector<std::pair<VertexId, Perm>> rewrites;
  std::vector<WitnessShortfall> shortfalls;
};

/// Finite replay of the recoloring recursion for a doubly transitive group.
///
/// Branch vertices are added to the processed set in index order, skipping
/// those already consumed as witnesses. After each addition, every pair
/// (v, w) of processed vertices with no processed vertex strictly between
/// them that has not been handled before is handled once: for each color pair i != j in
/// lexicographic order, the first unprocessed vertex y strictly inside
/// path(v, w) is rewritten as gamma o c_y, where gamma is the smallest group
/// element with gamma(c_y(v)) = i and gamma(c_y(w)) = j, and y joins the
/// processed set. Pairs whose path runs out of candidates are reported as
/// shortfalls. Throws Error(kNotDoublyTransitive).
Recoloring recolor_doubly_transitive(const DendriteModel& m, const Coloring& c, const PermGroup& g);

}  // namespace dendroscope

#endif  // DENDROSCOPE_COLORING_HPP
