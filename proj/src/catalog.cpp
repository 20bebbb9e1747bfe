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

#include "dendroscope/catalog.hpp"

#include <numeric>
#include <sstream>

#include "dendroscope/rng.hpp"

namespace dendroscope {

namespace {

// Cycle through the given points, in order.
std::string cycle(int first, int last) {
  std::ostringstream os;
  os << '(';
  for (int i = first; i <= last; ++i) os << (i == first ? "" : " ") << i;
  os << ')';
  return os.str();
}

PermGroup from_cycles(int n, std::initializer_list<std::string> gens) {
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(Perm::from_cycles(n, g));
  return PermGroup(n, std::move(perms));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<NamedGroup> group_catalog(int n) {
  if (n < 3 || n > 8) {
    throw Error(ErrorCode::kInvalidArgument, "group catalog covers degrees 3..8");
  }
  std::vector<NamedGroup> out;
  const auto name = [](std::string_view prefix, int k) { return std::string(prefix) + std::to_string(k); };

  out.push_back({"trivial", PermGroup::trivial(n)});
  if (n >= 4) out.push_back({"S2", from_cycles(n, {"(0 1)"})});
  out.push_back({name("C", n), from_cycles(n, {cycle(0, n - 1)})});

  // Dihedral: rotation plus the reflection i -> -i mod n.
  {
    std::vector<int> refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
    if (n > 3) {
      out.push_back({name("D", n), PermGroup(n, {Perm::from_cycles(n, cycle(0, n - 1)), Perm(refl)})});
    }
  }
  if (n >= 4) {
    const std::string long_cycle = n % 2 == 1 ? cycle(0, n - 1) : cycle(1, n - 1);
    out.push_back({name("A", n), from_cycles(n, {"(0 1 2)", long_cycle})});
  }
  out.push_back({name("S", n), PermGroup::symmetric(n)});
  if (n >= 4) {
    out.push_back({name("S", n - 1) + "x1", from_cycles(n, {"(0 1)", cycle(0, n - 2)})});
    out.push_back({name("C", n - 1) + "x1", from_cycles(n, {cycle(0, n - 2)})});
  }

  // S2 x S(n-2) on {0,1} and {2,...,n-1}: two orthogonal generous orbits.
  if (n == 3) {
    out.push_back({"semi-generous", from_cycles(n, {"(0 1)"})});
  } else if (n == 4) {
    out.push_back({"semi-generous", from_cycles(n, {"(0 1)", "(2 3)"})});
  } else {
    out.push_back({"semi-generous", from_cycles(n, {"(0 1)", "(2 3)", cycle(2, n - 1)})});
  }
  if (n >= 5) out.push_back({"C2xC" + std::to_string(n - 2), from_cycles(n, {"(0 1)", cycle(2, n - 1)})});
  if (n >= 4) {
    out.push_back({"double-transposition", from_cycles(n, {"(0 1)(2 3)"})});
    out.push_back({n == 4 ? "V4" : "V4x1", from_cycles(n, {"(0 1)(2 3)", "(0 2)(1 3)"})});
  }
  if (is_prime(n) && n >= 5) {
    // x -> x + 1 and x -> r x for a primitive root r.
    int root = 2;
    while (true) {
      int order = 1;
      for (int v = root; v != 1; v = v * root % n) ++order;
      if (order == n - 1) break;
      ++root;
    }
    std::vector<int> mult(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mult[static_cast<std::size_t>(i)] = i * root % n;
    out.push_back({name("AGL1_", n), PermGroup(n, {Perm::from_cycles(n, cycle(0, n - 1)), Perm(mult)})});
  }
  return out;
}

std::optional<PermGroup> catalog_group(int n, std::string_view wanted) {
  for (auto& entry : group_catalog(n)) {
    if (entry.name == wanted) return entry.group;
  }
  return std::nullopt;
}

PermGroup random_two_generator_group(int n, std::uint64_t seed) {
  std::vector<Perm> gens;
  for (std::uint64_t k = 0; k < 2; ++k) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    RandomStream rng(seed, k);
    rng.shuffle(std::span<int>(images));
    gens.emplace_back(images);
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace dendroscope
