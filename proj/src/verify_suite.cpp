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

#include "dendroscope/verify_suite.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "dendroscope/catalog.hpp"
#include "dendroscope/cohomology.hpp"
#include "dendroscope/coloring.hpp"
#include "dendroscope/kgroup.hpp"
#include "dendroscope/rng.hpp"

namespace dendroscope {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PermGroup cyclic(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return PermGroup(n, {Perm(images)});
}

// Checks written against the element list only, independent of the
// generator-based predicates in the library.
bool swaps_all_pairs(const std::vector<Perm>& elements, const std::vector<int>& block) {
  for (int a : block)
    for (int b : block) {
      if (a >= b) continue;
      bool found = false;
      for (const Perm& e : elements) found = found || (e(a) == b && e(b) == a);
      if (!found) return false;
    }
  return true;
}

bool brute_generous_or_semi(const PermGroup& g) {
  const int n = g.degree();
  const auto& elements = g.elements();
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p = 0; p < n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    std::set<int> orbit;
    for (const Perm& e : elements) orbit.insert(e(p));
    for (int q : orbit) seen[static_cast<std::size_t>(q)] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  if (orbits.size() == 1) return swaps_all_pairs(elements, orbits[0]);
  if (orbits.size() != 2) return false;
  if (!swaps_all_pairs(elements, orbits[0]) || !swaps_all_pairs(elements, orbits[1])) return false;
  std::set<std::pair<int, int>> product;
  for (const Perm& e : elements) product.emplace(e(orbits[0][0]), e(orbits[1][0]));
  return product.size() == orbits[0].size() * orbits[1].size();
}

std::string describe(const std::vector<std::string>& problems) {
  if (problems.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < problems.size() && i < 6; ++i) os << (i ? "; " : "") << problems[i];
  if (problems.size() > 6) os << "; +" << problems.size() - 6 << " more";
  return os.str();
}

CriterionResult schur_rank(VerifyLevel) {
  std::vector<std::string> problems;
  std::ostringstream values;
  for (int n = 3; n <= 8; ++n) {
    const auto start = Clock::now();
    const std::size_t rank = cocycle_space_rank(n, PermGroup::trivial(n));
    const double took = seconds_since(start);
    const auto want = static_cast<std::size_t>((n - 1) * (n - 2) / 2);
    values << (n == 3 ? "" : ",") << rank;
    if (rank != want) problems.push_back("n=" + std::to_string(n) + " rank " + std::to_string(rank));
    if (took >= 1.0) problems.push_back("n=" + std::to_string(n) + " took " + std::to_string(took) + "s");
  }
  return {1, "schur-rank", problems.empty(), "ranks " + values.str() + "; " + describe(problems), 0};
}

CriterionResult full_group_vanishing(VerifyLevel) {
  std::vector<std::string> problems;
  for (int n = 3; n <= 8; ++n) {
    const auto start = Clock::now();
    const std::size_t rank = cocycle_space_rank(n, PermGroup::symmetric(n));
    if (rank != 0) problems.push_back("n=" + std::to_string(n) + " rank " + std::to_string(rank));
    if (seconds_since(start) >= 1.0) problems.push_back("n=" + std::to_string(n) + " too slow");
  }
  return {2, "full-group-vanishing", problems.empty(), describe(problems), 0};
}

CriterionResult generosity(VerifyLevel level) {
  const int randoms = level == VerifyLevel::kFull ? 50 : 10;
  std::vector<std::string> problems;
  std::size_t groups = 0;
  std::size_t witnesses = 0;
  for (int n = 3; n <= 5; ++n) {
    std::vector<NamedGroup> corpus = group_catalog(n);
    for (int s = 0; s < randoms; ++s) {
      corpus.push_back({"random" + std::to_string(s), random_two_generator_group(n, static_cast<std::uint64_t>(s))});
    }
    for (const auto& [name, g] : corpus) {
      ++groups;
      const std::string tag = "n=" + std::to_string(n) + " " + name;
      const auto w = generosity_coboundary(g);
      const bool expect = !brute_generous_or_semi(g);
      if (w.has_value() != expect) {
        problems.push_back(tag + (expect ? " missing witness" : " unexpected witness"));
        continue;
      }
      if (!w) continue;
      ++witnesses;
      const Cochain1& d = w->delta;
      bool ok = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          ok = ok && d(i, j) >= -1 && d(i, j) <= 1 && d(i, j) == -d(j, i);
          for (const Perm& e : g.elements()) ok = ok && d(e(i), e(j)) == d(i, j);
        }
      const auto [x, y, z] = w->triple;
      ok = ok && coboundary1(d)(x, y, z) != 0;
      if (!ok) problems.push_back(tag + " invalid Delta");
    }
  }
  return {3, "generosity-equivalence", problems.empty(),
          std::to_string(groups) + " groups, " + std::to_string(witnesses) + " witnesses; " + describe(problems), 0};
}

CriterionResult omega_cocycle(VerifyLevel) {
  std::vector<std::string> problems;
  std::size_t checks = 0;
  for (int n = 3; n <= 4; ++n) {
    const auto m = DendriteModel::build(n, 2);
    const std::vector<std::pair<std::string, PermGroup>> groups{
        {"trivial", PermGroup::trivial(n)}, {"C" + std::to_string(n), cyclic(n)}, {"S" + std::to_string(n), PermGroup::symmetric(n)}};
    for (const auto& [name, g] : groups) {
      for (const Cochain2& omega : invariant_cocycle_basis(n, g)) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          const auto c = random_coloring(m, seed);
          const auto r = verify_omega(m, c, omega);
          ++checks;
          if (!r.ok) problems.push_back("n=" + std::to_string(n) + " " + name + " seed " + std::to_string(seed));
        }
      }
    }
  }
  return {4, "omega-cocycle", problems.empty() && checks > 0,
          std::to_string(checks) + " exhaustive checks; " + describe(problems), 0};
}

// Automorphisms of the uniform-coloring model: every splitting at the root,
// plus any extension of a single vertex move, closed under a few products.
std::vector<Automorphism> automorphism_pool(const DendriteModel& m, const Coloring& c, const PermGroup& g) {
  std::vector<Automorphism> pool;
  const VertexId root = uniform_coloring_root(m);
  for (const Perm& gamma : g.elements()) pool.push_back(split_gamma(m, c, g, root, gamma));
  const auto branches = m.branch_vertices();
  for (VertexId x : branches)
    for (VertexId y : branches) {
      if (x == y) continue;
      if (auto a = extend_partial(m, c, g, {{x, y}})) pool.push_back(*a);
    }
  return pool;
}

CriterionResult cocycle_identities(VerifyLevel) {
  std::vector<std::string> problems;
  std::size_t samples = 0;
  for (int n = 3; n <= 4; ++n) {
    const auto m = DendriteModel::build(n, 2);
    const auto c = uniform_coloring(m);
    const auto sym = PermGroup::symmetric(n);
    const auto pool = automorphism_pool(m, c, sym);
    RandomStream rng(2024, static_cast<std::uint64_t>(n));
    auto pick = [&]() {
      Automorphism a = pool[rng.below(pool.size())];
      for (auto extra = rng.below(3); extra > 0; --extra) a = a * pool[rng.below(pool.size())];
      return a;
    };
    const auto branches = m.branch_vertices();
    for (int t = 0; t < 1000; ++t) {
      const Automorphism g = pick();
      const Automorphism h = pick();
      const VertexId x = branches[rng.below(branches.size())];
      ++samples;
      if (local_action(m, c, g * h, x) != local_action(m, c, g, h(x)) * local_action(m, c, h, x)) {
        problems.push_back("product rule at vertex " + std::to_string(x));
      }
      if (local_action(m, c, g, x).inverse() != local_action(m, c, g.inverse(), g(x))) {
        problems.push_back("inverse rule at vertex " + std::to_string(x));
      }
    }
  }
  return {5, "cocycle-identities", problems.empty(), std::to_string(samples) + " samples; " + describe(problems), 0};
}

CriterionResult splitting(VerifyLevel) {
  std::vector<std::string> problems;
  std::size_t pairs = 0;
  for (int n = 3; n <= 4; ++n) {
    const auto m = DendriteModel::build(n, 2);
    const auto c = uniform_coloring(m);
    const VertexId x = uniform_coloring_root(m);
    for (const PermGroup& g : {cyclic(n), PermGroup::symmetric(n)}) {
      const auto& elements = g.elements();
      std::vector<Automorphism> split;
      try {
        for (const Perm& gamma : elements) split.push_back(split_gamma(m, c, g, x, gamma));
      } catch (const Error& e) {
        problems.push_back("n=" + std::to_string(n) + ": " + e.what());
        continue;
      }
      for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto profile = local_action_profile(m, c, split[i]);
        for (VertexId v : m.branch_vertices()) {
          const Perm& p = profile[static_cast<std::size_t>(m.branch_rank(v))];
          if (v == x ? p != elements[i] : !p.is_identity()) {
            problems.push_back("profile of " + elements[i].to_cycles() + " at " + std::to_string(v));
          }
        }
        for (std::size_t j = 0; j < elements.size(); ++j) {
          ++pairs;
          const auto k = static_cast<std::size_t>(
              std::lower_bound(elements.begin(), elements.end(), elements[i] * elements[j]) - elements.begin());
          if (split[i] * split[j] != split[k]) {
            problems.push_back("not multiplicative at " + elements[i].to_cycles() + "," + elements[j].to_cycles());
          }
        }
      }
    }
  }
  return {6, "splitting-section", problems.empty(), std::to_string(pairs) + " pairs; " + describe(problems), 0};
}

CriterionResult orbit_counts(VerifyLevel level, unsigned jobs) {
  std::vector<std::string> problems;
  std::ostringstream table;
  const std::uint64_t seed = 7;
  for (int n = 3; n <= 4; ++n) {
    const auto m = DendriteModel::build(n, 3);
    const auto c = random_coloring(m, seed);
    for (const auto& [name, g] : group_catalog(n)) {
      const std::string tag = "n=" + std::to_string(n) + " " + name;
      if (const auto k1 = count_orbits(m, c, g, 1, kDefaultEnumerationBudget, jobs); k1 != 1) {
        problems.push_back(tag + " k=1 gives " + std::to_string(k1));
      }
      const bool transitive = is_transitive(g);
      const bool trivial = g.order() == 1;
      if (!transitive && !trivial) continue;
      const auto k2 = count_orbits(m, c, g, 2, kDefaultEnumerationBudget, jobs);
      const std::size_t want = transitive ? 1 : static_cast<std::size_t>(n * n);
      if (k2 != want) problems.push_back(tag + " k=2 gives " + std::to_string(k2));
    }
  }

  const int max_k = level == VerifyLevel::kFull ? 3 : 2;
  const auto m3 = DendriteModel::build(3, 3);
  const auto m4 = DendriteModel::build(3, 4);
  const auto c3 = random_coloring(m3, seed);
  const auto c4 = random_coloring(m4, seed);
  for (const auto& [name, g] : group_catalog(3)) {
    for (int k = 1; k <= max_k; ++k) {
      const auto at3 = count_orbits(m3, c3, g, k, kDefaultEnumerationBudget, jobs);
      const auto at4 = count_orbits(m4, c4, g, k, kDefaultEnumerationBudget, jobs);
      table << ' ' << name << "/k" << k << '=' << at3 << "->" << at4;
      if (at3 != at4) problems.push_back(name + " k=" + std::to_string(k) + " not stable");
    }
  }
  return {7, "orbit-counts", problems.empty(), "depth3->4:" + table.str() + "; " + describe(problems), 0};
}

CriterionResult recoloring(VerifyLevel, unsigned jobs) {
  std::vector<std::string> problems;
  std::ostringstream counts;
  const auto m = DendriteModel::build(3, 3);
  const auto g = PermGroup::symmetric(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_coloring(m, seed);
    const auto r = recolor_doubly_transitive(m, c, g);
    const auto before = kaleidoscopic_defects(m, c, 3, jobs).entries.size();
    const auto after = kaleidoscopic_defects(m, r.coloring, 3, jobs).entries.size();
    counts << ' ' << before << "->" << after;
    if (after > before) problems.push_back("seed " + std::to_string(seed) + " increased defects");
    std::set<VertexId> rewritten;
    for (const auto& [v, gamma] : r.rewrites) {
      rewritten.insert(v);
      const int rank = m.branch_rank(v);
      if (!g.contains(gamma) || r.coloring.row(rank) != gamma * c.row(rank)) {
        problems.push_back("seed " + std::to_string(seed) + " vertex " + std::to_string(v));
      }
    }
    for (VertexId v : m.branch_vertices()) {
      const int rank = m.branch_rank(v);
      const Perm diff = r.coloring.row(rank) * c.row(rank).inverse();
      if (!g.contains(diff) || (!rewritten.count(v) && !diff.is_identity())) {
        problems.push_back("seed " + std::to_string(seed) + " untracked change at " + std::to_string(v));
      }
    }
  }
  return {8, "recoloring-monotone", problems.empty(), "defects" + counts.str() + "; " + describe(problems), 0};
}

CriterionResult membership(VerifyLevel) {
  std::vector<std::string> problems;
  std::size_t products = 0;
  for (int n = 3; n <= 4; ++n) {
    const auto m = DendriteModel::build(n, 2);
    const auto c = uniform_coloring(m);
    const auto g = cyclic(n);
    const auto sym = PermGroup::symmetric(n);
    const auto pool = automorphism_pool(m, c, g);
    RandomStream rng(99, static_cast<std::uint64_t>(n));
    Automorphism a = Automorphism::identity(m);
    for (int t = 0; t < 100; ++t) {
      const Automorphism& next = pool[rng.below(pool.size())];
      a = rng.below(2) == 0 ? a * next : a * next.inverse();
      ++products;
      if (!is_member(m, c, g, a).member) problems.push_back("product left the group");
    }
    // A transposition at the root is outside the cyclic group.
    const VertexId x = uniform_coloring_root(m);
    const Perm tau = Perm::from_cycles(n, "(0 1)");
    const Automorphism bad = split_gamma(m, c, sym, x, tau) * a;
    const auto r = is_member(m, c, g, bad);
    const VertexId expected = a.inverse()(x);
    if (r.member || r.vertex != expected || g.contains(*r.action)) {
      problems.push_back("n=" + std::to_string(n) + " injected action not reported at " + std::to_string(expected));
    }
  }
  return {9, "membership-coherence", problems.empty(), std::to_string(products) + " products; " + describe(problems), 0};
}

}  // namespace

CriterionResult run_criterion(int id, VerifyLevel level, unsigned jobs) {
  const std::function<CriterionResult()> runners[kCriterionCount] = {
      [&] { return schur_rank(level); },
      [&] { return full_group_vanishing(level); },
      [&] { return generosity(level); },
      [&] { return omega_cocycle(level); },
      [&] { return cocycle_identities(level); },
      [&] { return splitting(level); },
      [&] { return orbit_counts(level, jobs); },
      [&] { return recoloring(level, jobs); },
      [&] { return membership(level); },
  };
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::kInvalidArgument, "no such acceptance check");
  const auto start = Clock::now();
  CriterionResult r;
  try {
    r = runners[id - 1]();
  } catch (const Error& e) {
    r = {id, "", false, std::string(e.name()) + ": " + e.what(), 0};
  }
  r.id = id;
  if (r.name.empty()) {
    static const char* const names[kCriterionCount] = {
        "schur-rank",        "full-group-vanishing", "generosity-equivalence", "omega-cocycle",       "cocycle-identities",
        "splitting-section", "orbit-counts",         "recoloring-monotone",    "membership-coherence"};
    r.name = names[id - 1];
  }
  r.seconds = seconds_since(start);
  static const double limits[kCriterionCount] = {6, 6, 30, 10, 5, 10, 120, 30, 10};
  const double limit = id == 7 && level == VerifyLevel::kQuick ? 20 : limits[id - 1];
  if (r.seconds >= limit) {
    r.passed = false;
    r.detail += "; exceeded " + std::to_string(static_cast<int>(limit)) + "s";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(VerifyLevel level, unsigned jobs) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, level, jobs));
  return out;
}

}  // namespace dendroscope
