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

#ifndef DENDROSCOPE_KGROUP_HPP
#define DENDROSCOPE_KGROUP_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dendroscope/coloring.hpp"
#include "dendroscope/dendrite.hpp"
#include "dendroscope/perm.hpp"
#include "dendroscope/perm_group.hpp"

namespace dendroscope {

/// A tree automorphism of a DendriteModel, stored as its vertex map.
class Automorphism {
 public:
  /// Throws Error(kInvalidArgument) unless `images` is a bijection of the
  /// vertices that preserves kind and adjacency.
  static Automorphism make(const DendriteModel& m, std::vector<VertexId> images);
  static Automorphism identity(const DendriteModel& m);

  VertexId operator()(VertexId v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> images() const { return images_; }
  std::size_t size() const { return images_.size(); }
  bool is_identity() const;

  /// (a * b)(v) == a(b(v)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  Automorphism inverse() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  explicit Automorphism(std::vector<VertexId> images) : images_(std::move(images)) {}
  std::vector<VertexId> images_;
};

/// The permutation i -> c_{a(x)}(a(direction of color i at x)).
Perm local_action(const DendriteModel& m, const Coloring& c, const Automorphism& a, VertexId x);

/// local_action at every branch vertex, indexed by branch rank.
std::vector<Perm> local_action_profile(const DendriteModel& m, const Coloring& c, const Automorphism& a);

struct Membership {
  bool member = true;
  /// First branch vertex (by index) whose local action leaves the group.
  std::optional<VertexId> vertex;
  std::optional<Perm> action;
};

Membership is_member(const DendriteModel& m, const Coloring& c, const PermGroup& g, const Automorphism& a);

/// The automorphism fixing x that carries direction i onto direction
/// gamma(i) by the color-preserving isomorphism of the two subtrees.
///
/// Throws Error(kNotInGroup) when gamma is not in g and
/// Error(kNoColorIsomorphism) naming the first color i whose subtree has no
/// color-preserving match in direction gamma(i).
Automorphism split_gamma(const DendriteModel& m, const Coloring& c, const PermGroup& g, VertexId x,
                         const Perm& gamma);

/// Ordered pairs x -> x' of branch vertices.
using PartialMap = std::vector<std::pair<VertexId, VertexId>>;

/// An automorphism extending f whose local actions all lie in g, or nullopt.
///
/// f is first extended to the center closure of its domain; a clash there,
/// or a betweenness relation that f does not preserve, throws
/// Error(kBetweennessViolation). The search then starts at the first domain
/// vertex and works outwards depth first, trying local actions from the
/// closure of g in lexicographic order. Failed subproblems are memoized.
/// Throws Error(kBudgetExceeded) after node_cap expansions.
std::optional<Automorphism> extend_partial(const DendriteModel& m, const Coloring& c, const PermGroup& g,
                                           const PartialMap& f, std::size_t node_cap = kDefaultNodeCap);

/// Whether R and R' lie in one orbit of the kaleidoscopic group of the
/// ideal dendrite: center closures with matching center tables and
/// betweenness, and at every closure point a group element carrying the
/// color tuple of R onto that of R'. Throws Error(kInvalidArgument) for
/// repeated entries or non-branch vertices.
bool same_orbit(const DendriteModel& m, const Coloring& c, const PermGroup& g, const VertexTuple& r,
                const VertexTuple& r2);

/// Number of same_orbit classes among tuples of k distinct branch vertices.
/// Throws Error(kBudgetExceeded) when there are more than `budget` tuples.
std::size_t count_orbits(const DendriteModel& m, const Coloring& c, const PermGroup& g, int k,
                         std::size_t budget = kDefaultEnumerationBudget, unsigned jobs = 1);

}  // namespace dendroscope

#endif  // DENDROSCOPE_KGROUP_HPP
