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

#ifndef DENDROSCOPE_CATALOG_HPP
#define DENDROSCOPE_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dendroscope/perm_group.hpp"

namespace dendroscope {

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Test corpus of permutation groups of degree n, 3 <= n <= 8.
///
/// Always present: "trivial", "C<n>", "D<n>", "S<n>", "semi-generous"
/// (S2 x S(n-2) acting on {0,1} and {2..n-1}). Depending on n also the
/// alternating group, point stabilizers, intransitive products, the Klein
/// four-group and the affine group for prime n.
std::vector<NamedGroup> group_catalog(int n);

/// Looks up a catalog entry by name.
std::optional<PermGroup> catalog_group(int n, std::string_view name);

/// A group generated by two uniformly random permutations of [n], drawn from
/// the library's portable generator.
PermGroup random_two_generator_group(int n, std::uint64_t seed);

}  // namespace dendroscope

#endif  // DENDROSCOPE_CATALOG_HPP
