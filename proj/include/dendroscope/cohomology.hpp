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

#ifndef DENDROSCOPE_COHOMOLOGY_HPP
#define DENDROSCOPE_COHOMOLOGY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dendroscope/coloring.hpp"
#include "dendroscope/dendrite.hpp"
#include "dendroscope/kgroup.hpp"
#include "dendroscope/perm_group.hpp"

namespace dendroscope {

using Value = std::int64_t;

/// Integer function on [n].
using Cochain0 = std::vector<Value>;

/// Alternating integer function on pairs of [n], stored on i < j.
class Cochain1 {
 public:
  explicit Cochain1(int n);
  int n() const { return n_; }
  /// Alternating extension; 0 on the diagonal.
  Value operator()(int i, int j) const;
  /// Sets the value on (i, j), i != j, and -value on (j, i).
  void set(int i, int j, Value v);
  friend bool operator==(const Cochain1&, const Cochain1&) = default;

 private:
  std::size_t slot(int i, int j) const;
  int n_;
  std::vector<Value> values_;
};

/// Alternating integer function on triples of [n], stored on i < j < k.
class Cochain2 {
 public:
  explicit Cochain2(int n);
  int n() const { return n_; }
  /// Alternating extension; 0 when two entries coincide.
  Value operator()(int i, int j, int k) const;
  /// Sets the value on the triple of distinct points, adjusting for the sign
  /// of the permutation that sorts it.
  void set(int i, int j, int k, Value v);
  bool is_zero() const;

  /// Triples i < j < k in lexicographic order; position t is basis index t.
  static std::vector<std::array<int, 3>> basis(int n);
  std::span<const Value> values() const { return values_; }

  friend bool operator==(const Cochain2&, const Cochain2&) = default;

 private:
  int n_;
  std::vector<Value> values_;
};

/// beta(i, j) = gamma(j) - gamma(i).
Cochain1 coboundary0(const Cochain0& gamma);
/// (d beta)(x, y, z) = beta(y, z) - beta(x, z) + beta(x, y).
Cochain2 coboundary1(const Cochain1& beta);

struct CocycleCheck {
  bool ok = true;
  std::optional<std::array<int, 4>> witness;
  Value value = 0;
};

/// Checks d Omega = 0 over all quadruples of [n].
CocycleCheck is_cocycle2(const Cochain2& omega);

bool is_invariant(const Cochain1& chain, const PermGroup& g);
bool is_invariant(const Cochain2& chain, const PermGroup& g);

/// Dimension over Q of the alternating g-invariant 2-cocycles on [n].
/// Throws Error(kBudgetExceeded) for n > max_degree.
std::size_t cocycle_space_rank(int n, const PermGroup& g, int max_degree = 8);

/// A basis (over Q, scaled to integers) of the alternating g-invariant
/// 2-cocycles, from the null space of the same linear system.
std::vector<Cochain2> invariant_cocycle_basis(int n, const PermGroup& g, int max_degree = 8);

struct GenerosityWitness {
  Cochain1 delta;
  std::array<int, 2> orbital;  // (p, q)
  /// (x, y, z) with delta(x, y) != delta(x, z) + delta(z, y).
  std::array<int, 3> triple;
};

/// A {0, +1, -1}-valued alternating g-invariant Delta together with a triple
/// violating Delta(x, y) = Delta(x, z) + Delta(z, y); nullopt exactly when g
/// is generously transitive or semi-generous.
std::optional<GenerosityWitness> generosity_coboundary(const PermGroup& g);

/// omega on end stubs of the model: Omega of the three direction colors at
/// the center of a triple of distinct stubs, 0 on any repeat.
class OmegaEvaluator {
 public:
  OmegaEvaluator(const DendriteModel& m, const Coloring& c, Cochain2 omega);
  Value operator()(VertexId a, VertexId b, VertexId c) const;
  const Cochain2& omega() const { return omega_; }

 private:
  const DendriteModel* m_;
  const Coloring* c_;
  Cochain2 omega_;
};

/// Throws Error(kInvalidArgument) on a degree mismatch.
OmegaEvaluator build_omega(const DendriteModel& m, const Coloring& c, const Cochain2& omega);

enum class OmegaFailure { kNone, kCocycle, kInvariance };

struct OmegaCheck {
  bool ok = true;
  OmegaFailure failure = OmegaFailure::kNone;
  std::vector<VertexId> witness;
  std::size_t quadruples = 0;
  /// Index into the supplied automorphisms for an invariance failure.
  std::size_t automorphism = 0;
};

/// Checks d omega = 0 over every ordered quadruple of distinct end stubs,
/// then omega(a x, a y, a z) = omega(x, y, z) over stub triples for each
/// supplied automorphism. Throws Error(kInvalidArgument) when Omega is not a
/// cocycle and Error(kBudgetExceeded) when the quadruple count exceeds
/// budget.
OmegaCheck verify_omega(const DendriteModel& m, const Coloring& c, const Cochain2& omega,
                        std::span<const Automorphism> automorphisms = {},
                        std::size_t budget = kDefaultEnumerationBudget);

}  // namespace dendroscope

#endif  // DENDROSCOPE_COHOMOLOGY_HPP
