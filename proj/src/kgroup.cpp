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

#include "dendroscope/kgroup.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

namespace dendroscope {

namespace {

std::size_t at(VertexId v) { return static_cast<std::size_t>(v); }

void require_branch(const DendriteModel& m, VertexId v) {
  if (!m.contains(v) || !m.is_branch(v)) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " is not a branch vertex of the model");
  }
}

// A tuple together with the centers of its triples. Points are the
// originals in order followed by new centers in the order their triples
// appear lexicographically, so two tuples in the same orbit get the same
// indexing.
struct ClosedTuple {
  std::vector<VertexId> points;
  std::vector<int> center_index;      // per triple i < j < l of originals
  std::vector<std::uint8_t> between;  // per ordered triple of distinct points
};

ClosedTuple close_tuple(const DendriteModel& m, const VertexTuple& r) {
  ClosedTuple t;
  t.points = r;
  const std::size_t k = r.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        const VertexId z = center(m, r[i], r[j], r[l]);
        auto pos = std::find(t.points.begin(), t.points.end(), z);
        if (pos == t.points.end()) {
          t.points.push_back(z);
          pos = t.points.end() - 1;
        }
        t.center_index.push_back(static_cast<int>(pos - t.points.begin()));
      }
  const std::size_t p = t.points.size();
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c) {
        if (a == b || b == c || a == c) continue;
        t.between.push_back(between(m, t.points[a], t.points[b], t.points[c]) ? 1 : 0);
      }
  return t;
}

bool same_shape(const ClosedTuple& a, const ClosedTuple& b) {
  return a.points.size() == b.points.size() && a.center_index == b.center_index && a.between == b.between;
}

// Colors at closure point a toward every other closure point.
std::vector<int> color_tuple(const DendriteModel& m, const Coloring& c, const ClosedTuple& t, std::size_t a) {
  std::vector<int> out;
  out.reserve(t.points.size() - 1);
  for (std::size_t b = 0; b < t.points.size(); ++b) {
    if (b != a) out.push_back(color_from(m, c, t.points[a], t.points[b]));
  }
  return out;
}

void check_tuple(const DendriteModel& m, const VertexTuple& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    require_branch(m, r[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (r[i] == r[j]) throw Error(ErrorCode::kInvalidArgument, "tuple entries must be distinct");
    }
  }
}

}  // namespace

Automorphism Automorphism::make(const DendriteModel& m, std::vector<VertexId> images) {
  const std::size_t count = m.num_vertices();
  if (images.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "automorphism must map every vertex of the model");
  }
  std::vector<bool> hit(count, false);
  for (std::size_t v = 0; v < count; ++v) {
    const VertexId w = images[v];
    if (!m.contains(w) || hit[at(w)]) {
      throw Error(ErrorCode::kInvalidArgument, "vertex map is not a bijection");
    }
    hit[at(w)] = true;
    if (m.kind(static_cast<VertexId>(v)) != m.kind(w)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex map sends " + std::to_string(v) + " to a vertex of another kind");
    }
  }
  for (const auto& [u, v] : m.edges()) {
    const auto nbrs = m.neighbors(images[at(u)]);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), images[at(v)])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex map breaks the edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return Automorphism(std::move(images));
}

Automorphism Automorphism::identity(const DendriteModel& m) {
  std::vector<VertexId> images(m.num_vertices());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = static_cast<VertexId>(v);
  return Automorphism(std::move(images));
}

bool Automorphism::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != static_cast<VertexId>(v)) return false;
  return true;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "automorphisms of different models");
  std::vector<VertexId> images(a.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = a(b.images_[v]);
  return Automorphism(std::move(images));
}

Automorphism Automorphism::inverse() const {
  std::vector<VertexId> images(images_.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[at(images_[v])] = static_cast<VertexId>(v);
  return Automorphism(std::move(images));
}

Perm local_action(const DendriteModel& m, const Coloring& c, const Automorphism& a, VertexId x) {
  require_branch(m, x);
  const int n = m.n();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const VertexId w = c.neighbor_with_color(m, x, i);
    images[static_cast<std::size_t>(i)] = c.color(m, {a(x), a(w)});
  }
  return Perm(images);
}

std::vector<Perm> local_action_profile(const DendriteModel& m, const Coloring& c, const Automorphism& a) {
  std::vector<Perm> out;
  out.reserve(m.branch_vertices().size());
  for (VertexId x : m.branch_vertices()) out.push_back(local_action(m, c, a, x));
  return out;
}

Membership is_member(const DendriteModel& m, const Coloring& c, const PermGroup& g, const Automorphism& a) {
  for (VertexId x : m.branch_vertices()) {
    Perm p = local_action(m, c, a, x);
    if (!g.contains(p)) return {false, x, std::move(p)};
  }
  return {};
}

Automorphism split_gamma(const DendriteModel& m, const Coloring& c, const PermGroup& g, VertexId x,
                         const Perm& gamma) {
  require_branch(m, x);
  if (gamma.degree() != m.n()) throw Error(ErrorCode::kInvalidArgument, "gamma has the wrong degree");
  if (!g.contains(gamma)) throw Error(ErrorCode::kNotInGroup, gamma.to_cycles() + " is not in the group");

  std::vector<VertexId> images(m.num_vertices(), -1);
  images[at(x)] = x;

  // Color-preserving match of the subtree entered at u from pu onto the one
  // entered at u2 from pu2; parent directions must carry equal colors too.
  auto match = [&](auto&& self, VertexId u, VertexId pu, VertexId u2, VertexId pu2) -> bool {
    if (m.kind(u) != m.kind(u2)) return false;
    images[at(u)] = u2;
    if (!m.is_branch(u)) return true;
    const int up = c.color(m, {u, pu});
    if (up != c.color(m, {u2, pu2})) return false;
    for (int k = 0; k < m.n(); ++k) {
      if (k == up) continue;
      if (!self(self, c.neighbor_with_color(m, u, k), u, c.neighbor_with_color(m, u2, k), u2)) return false;
    }
    return true;
  };

  for (int i = 0; i < m.n(); ++i) {
    const VertexId w = c.neighbor_with_color(m, x, i);
    const VertexId w2 = c.neighbor_with_color(m, x, gamma(i));
    if (!match(match, w, x, w2, x)) {
      throw Error(ErrorCode::kNoColorIsomorphism,
                  "NoColorIsomorphism(" + std::to_string(i) + "): direction " + std::to_string(i) +
                      " at vertex " + std::to_string(x) + " has no color-preserving match in direction " +
                      std::to_string(gamma(i)));
    }
  }
  return Automorphism::make(m, std::move(images));
}

namespace {

class Extender {
 public:
  Extender(const DendriteModel& m, const Coloring& c, const PermGroup& g, const ClosedTuple& dom,
           const ClosedTuple& img, std::size_t node_cap)
      : m_(m), c_(c), elements_(g.elements()), node_cap_(node_cap),
        fwd_(m.num_vertices(), -1), bwd_(m.num_vertices(), -1), size_(m.num_vertices(), 1) {
    for (std::size_t i = 0; i < dom.points.size(); ++i) {
      pairs_.emplace_back(dom.points[i], img.points[i]);
      fwd_[at(dom.points[i])] = img.points[i];
      bwd_[at(img.points[i])] = dom.points[i];
    }
    // Subtree sizes under the rooting at vertex 0, deepest vertices first.
    std::vector<VertexId> order(m.num_vertices());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return m.height(a) > m.height(b); });
    for (VertexId v : order) {
      if (v != 0) size_[at(m.parent(v))] += size_[at(v)];
    }
  }

  std::optional<Automorphism> run() {
    const auto [x, x2] = pairs_.front();
    if (choose(x, -1, x2, -1) < 0) return std::nullopt;
    std::vector<VertexId> images(m_.num_vertices(), -1);
    build(x, -1, x2, -1, images);
    return Automorphism::make(m_, std::move(images));
  }

 private:
  // Size of the component of u that contains v.
  std::size_t side(VertexId u, VertexId v) const {
    if (m_.parent(v) == u) return size_[at(v)];
    return m_.num_vertices() - size_[at(u)];
  }

  // Index of the first workable local action for b -> b2 (entered from
  // from -> from2), 0 for feasible end stubs, -1 when none exists.
  int choose(VertexId b, VertexId from, VertexId b2, VertexId from2) {
    const Key key{pack(b, from), pack(b2, from2)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > node_cap_) {
      throw Error(ErrorCode::kBudgetExceeded, "extension search exceeded " + std::to_string(node_cap_) + " nodes");
    }
    const int result = solve(b, from, b2, from2);
    memo_.emplace(key, result);
    return result;
  }

  int solve(VertexId b, VertexId from, VertexId b2, VertexId from2) {
    if (m_.kind(b) != m_.kind(b2)) return -1;
    if (fwd_[at(b)] != -1 && fwd_[at(b)] != b2) return -1;
    if (bwd_[at(b2)] != -1 && bwd_[at(b2)] != b) return -1;
    if (from != -1 && side(from, b) != side(from2, b2)) return -1;
    if (!m_.is_branch(b)) return 0;

    std::vector<std::pair<int, int>> wanted;  // color at b -> color at b2
    for (const auto& [p, p2] : pairs_) {
      if (p != b) wanted.emplace_back(color_from(m_, c_, b, p), color_from(m_, c_, b2, p2));
    }
    if (from != -1) wanted.emplace_back(c_.color(m_, {b, from}), c_.color(m_, {b2, from2}));

    for (std::size_t e = 0; e < elements_.size(); ++e) {
      const Perm& gamma = elements_[e];
      if (!std::all_of(wanted.begin(), wanted.end(), [&](auto w) { return gamma(w.first) == w.second; })) continue;
      bool ok = true;
      for (int k = 0; k < m_.n() && ok; ++k) {
        const VertexId nb = c_.neighbor_with_color(m_, b, k);
        if (nb == from) continue;
        ok = choose(nb, b, c_.neighbor_with_color(m_, b2, gamma(k)), b2) >= 0;
      }
      if (ok) return static_cast<int>(e);
    }
    return -1;
  }

  void build(VertexId b, VertexId from, VertexId b2, VertexId from2, std::vector<VertexId>& images) {
    images[at(b)] = b2;
    if (!m_.is_branch(b)) return;
    const Perm& gamma = elements_[static_cast<std::size_t>(choose(b, from, b2, from2))];
    for (int k = 0; k < m_.n(); ++k) {
      const VertexId nb = c_.neighbor_with_color(m_, b, k);
      if (nb != from) build(nb, b, c_.neighbor_with_color(m_, b2, gamma(k)), b2, images);
    }
  }

  static std::uint64_t pack(VertexId v, VertexId from) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32) |
           static_cast<std::uint32_t>(from + 1);
  }

  using Key = std::pair<std::uint64_t, std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second); }
  };

  const DendriteModel& m_;
  const Coloring& c_;
  const std::vector<Perm>& elements_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  std::vector<std::pair<VertexId, VertexId>> pairs_;
  std::vector<VertexId> fwd_;
  std::vector<VertexId> bwd_;
  std::vector<std::size_t> size_;
  std::unordered_map<Key, int, KeyHash> memo_;
};

}  // namespace

std::optional<Automorphism> extend_partial(const DendriteModel& m, const Coloring& c, const PermGroup& g,
                                           const PartialMap& f, std::size_t node_cap) {
  if (f.empty()) throw Error(ErrorCode::kInvalidArgument, "partial map is empty");
  VertexTuple dom;
  VertexTuple img;
  for (const auto& [x, x2] : f) {
    require_branch(m, x);
    require_branch(m, x2);
    if (std::find(dom.begin(), dom.end(), x) != dom.end() || std::find(img.begin(), img.end(), x2) != img.end()) {
      throw Error(ErrorCode::kInvalidArgument, "partial map must be injective");
    }
    dom.push_back(x);
    img.push_back(x2);
  }
  const ClosedTuple a = close_tuple(m, dom);
  const ClosedTuple b = close_tuple(m, img);
  if (!same_shape(a, b)) {
    throw Error(ErrorCode::kBetweennessViolation, "partial map does not respect betweenness");
  }
  return Extender(m, c, g, a, b, node_cap).run();
}

bool same_orbit(const DendriteModel& m, const Coloring& c, const PermGroup& g, const VertexTuple& r,
                const VertexTuple& r2) {
  check_tuple(m, r);
  check_tuple(m, r2);
  if (r.size() != r2.size()) return false;
  const ClosedTuple a = close_tuple(m, r);
  const ClosedTuple b = close_tuple(m, r2);
  if (!same_shape(a, b)) return false;
  const auto& elements = g.elements();
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto from = color_tuple(m, c, a, i);
    const auto to = color_tuple(m, c, b, i);
    const bool found = std::any_of(elements.begin(), elements.end(), [&](const Perm& gamma) {
      for (std::size_t j = 0; j < from.size(); ++j)
        if (gamma(from[j]) != to[j]) return false;
      return true;
    });
    if (!found) return false;
  }
  return true;
}

namespace {

// Complete invariant of the same_orbit relation: the closure shape plus, per
// closure point, the lexicographically least image of its color tuple.
std::vector<int> orbit_key(const DendriteModel& m, const Coloring& c, const std::vector<Perm>& elements,
                           const VertexTuple& r) {
  const ClosedTuple t = close_tuple(m, r);
  std::vector<int> key;
  key.push_back(static_cast<int>(t.points.size()));
  key.insert(key.end(), t.center_index.begin(), t.center_index.end());
  key.insert(key.end(), t.between.begin(), t.between.end());
  std::vector<int> image;
  for (std::size_t a = 0; a < t.points.size(); ++a) {
    const auto colors = color_tuple(m, c, t, a);
    std::vector<int> best;
    for (const Perm& gamma : elements) {
      image.clear();
      for (int x : colors) image.push_back(gamma(x));
      if (best.empty() || image < best) best = image;
    }
    key.insert(key.end(), best.begin(), best.end());
  }
  return key;
}

}  // namespace

std::size_t count_orbits(const DendriteModel& m, const Coloring& c, const PermGroup& g, int k, std::size_t budget,
                         unsigned jobs) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const auto branches = m.branch_vertices();
  const std::size_t b = branches.size();
  if (static_cast<std::size_t>(k) > b) return 0;
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= b - static_cast<std::size_t>(i);
    if (total > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "more than " + std::to_string(budget) + " tuples of " + std::to_string(k) + " branch vertices");
    }
  }
  const auto& elements = g.elements();
  jobs = std::max(1u, jobs);

  // Tuples are produced in lexicographic order of branch ranks.
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto advance = [&]() {
    for (std::size_t pos = idx.size(); pos-- > 0;) {
      for (std::size_t v = idx[pos] + 1; v < b; ++v) {
        if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(pos), v) !=
            idx.begin() + static_cast<std::ptrdiff_t>(pos)) {
          continue;
        }
        idx[pos] = v;
        // Refill the tail with the smallest unused ranks.
        std::size_t next = 0;
        for (std::size_t q = pos + 1; q < idx.size(); ++q) {
          while (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(q), next) !=
                 idx.begin() + static_cast<std::ptrdiff_t>(q)) {
            ++next;
          }
          idx[q] = next;
        }
        return true;
      }
    }
    return false;
  };

  constexpr std::size_t kChunk = 1 << 14;
  std::map<std::vector<int>, std::vector<VertexTuple>> classes;
  std::size_t count = 0;
  std::vector<VertexTuple> chunk;
  std::vector<std::vector<int>> keys;
  bool more = true;
  while (more) {
    chunk.clear();
    while (more && chunk.size() < kChunk) {
      VertexTuple t;
      for (std::size_t i : idx) t.push_back(branches[i]);
      chunk.push_back(std::move(t));
      more = advance();
    }
    keys.assign(chunk.size(), {});
    auto work = [&](std::size_t start) {
      for (std::size_t i = start; i < chunk.size(); i += jobs) keys[i] = orbit_key(m, c, elements, chunk[i]);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> workers;
      for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w);
      for (auto& t : workers) t.join();
    }
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      auto& reps = classes[std::move(keys[i])];
      const bool known = std::any_of(reps.begin(), reps.end(),
                                     [&](const VertexTuple& rep) { return same_orbit(m, c, g, rep, chunk[i]); });
      if (!known) {
        reps.push_back(chunk[i]);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace dendroscope
