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

#ifndef DENDROSCOPE_PERM_GROUP_HPP
#define DENDROSCOPE_PERM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dendroscope/error.hpp"
#include "dendroscope/perm.hpp"

namespace dendroscope {

/// A permutation group on [n] given by generators.
///
/// The full element list is computed on first use by breadth-first
/// multiplication and cached; copies share the cache. Construction never
/// enumerates, so generator-only queries (orbits, tuple orbit counts,
/// invariance checks) work for groups far larger than the element cap.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators,
            std::size_t element_cap = kDefaultElementCap);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  std::span<const Perm> generators() const { return generators_; }
  std::size_t element_cap() const { return element_cap_; }

  /// All elements, sorted lexicographically. Throws Error(kCapExceeded).
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;

 private:
  struct Cache;

  int degree_;
  std::vector<Perm> generators_;
  std::size_t element_cap_;
  std::shared_ptr<Cache> cache_;
};

/// Same as g.elements(); named after the operation it performs.
const std::vector<Perm>& closure(const PermGroup& g);

/// Orbits of g on [n], each sorted, listed by smallest member.
std::vector<std::vector<int>> orbits_on_points(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// Number of orbits of g on [n]^k, or on k-tuples of distinct points when
/// `distinct` is set. Throws Error(kBudgetExceeded) when n^k > budget.
std::size_t count_orbits_on_tuples(const PermGroup& g, int k, bool distinct,
                                   std::size_t budget = kDefaultEnumerationBudget);

bool is_doubly_transitive(const PermGroup& g);

/// Every pair of distinct points of `block` is swapped by some element.
bool is_generously_transitive_on(const PermGroup& g, std::span<const int> block);
bool is_generously_transitive(const PermGroup& g);

/// Exactly two orbits, each generously transitive, with g transitive on
/// their product.
bool is_semi_generous(const PermGroup& g);

enum class PrimitivityReason { kPrimitive, kImprimitive, kIntransitive };

struct Primitivity {
  bool primitive = false;
  PrimitivityReason reason = PrimitivityReason::kIntransitive;
  /// A non-trivial block system when reason == kImprimitive.
  std::vector<std::vector<int>> blocks;
};

Primitivity is_primitive(const PermGroup& g);

/// A bijection f with f g f^-1 = h, the lexicographically smallest one, or
/// nullopt when the two are not conjugate in Sym(n).
std::optional<Perm> perm_groups_isomorphic(const PermGroup& g, const PermGroup& h);

}  // namespace dendroscope

#endif  // DENDROSCOPE_PERM_GROUP_HPP
