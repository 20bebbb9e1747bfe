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

#include "dendroscope/dendrite.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dendroscope {

DendriteModel DendriteModel::build(int n, int depth, std::size_t edge_budget) {
  if (n < 3 || n > 10) throw Error(ErrorCode::kInvalidArgument, "branching order must lie in [3, 10]");
  if (depth < 1 || depth > 6) throw Error(ErrorCode::kInvalidArgument, "depth must lie in [1, 6]");
  std::size_t edge_count = 1;
  for (int i = 0; i < depth; ++i) {
    edge_count *= static_cast<std::size_t>(n);
    if (edge_count > edge_budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "n^depth exceeds the model edge budget of " + std::to_string(edge_budget));
    }
  }

  DendriteModel m;
  m.n_ = n;
  m.depth_ = depth;
  m.kind_ = {VertexKind::kEndStub, VertexKind::kEndStub};
  m.level_ = {0, 0};
  std::vector<std::vector<VertexId>> slot_table(2);
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}};

  auto add_vertex = [&](VertexKind kind, int level) {
    const auto v = static_cast<VertexId>(m.kind_.size());
    m.kind_.push_back(kind);
    m.level_.push_back(level);
    slot_table.emplace_back();
    return v;
  };
  auto redirect = [&](VertexId owner, VertexId from, VertexId to) {
    if (m.kind_[idx(owner)] != VertexKind::kBranch) return;
    auto& slots = slot_table[idx(owner)];
    *std::find(slots.begin(), slots.end(), from) = to;
  };

  for (int level = 1; level <= depth; ++level) {
    std::vector<std::pair<VertexId, VertexId>> refined;
    refined.reserve(edges.size() * static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
      const VertexId b = add_vertex(VertexKind::kBranch, level);
      slot_table[idx(b)] = {u, v};
      redirect(u, v, b);
      redirect(v, u, b);
      refined.emplace_back(u, b);
      refined.emplace_back(b, v);
      for (int k = 0; k < n - 2; ++k) {
        const VertexId s = add_vertex(VertexKind::kEndStub, level);
        slot_table[idx(b)].push_back(s);
        refined.emplace_back(b, s);
      }
    }
    edges = std::move(refined);
  }
  m.edges_ = std::move(edges);

  const std::size_t count = m.kind_.size();
  m.adjacency_.assign(count, {});
  for (const auto& [u, v] : m.edges_) {
    m.adjacency_[idx(u)].push_back(v);
    m.adjacency_[idx(v)].push_back(u);
  }
  for (auto& nbrs : m.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  m.branch_rank_.assign(count, -1);
  for (std::size_t v = 0; v < count; ++v) {
    const auto id = static_cast<VertexId>(v);
    if (m.kind_[v] == VertexKind::kBranch) {
      m.branch_rank_[v] = static_cast<int>(m.branches_.size());
      m.branches_.push_back(id);
      m.slots_.insert(m.slots_.end(), slot_table[v].begin(), slot_table[v].end());
    } else {
      m.stubs_.push_back(id);
    }
  }

  m.parent_.assign(count, -1);
  m.height_.assign(count, 0);
  std::vector<bool> seen(count, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : m.adjacency_[idx(v)]) {
      if (seen[idx(w)]) continue;
      seen[idx(w)] = true;
      m.parent_[idx(w)] = v;
      m.height_[idx(w)] = m.height_[idx(v)] + 1;
      queue.push_back(w);
    }
  }
  return m;
}

int DendriteModel::slot_of(VertexId at, VertexId via) const {
  if (!is_branch(at)) throw Error(ErrorCode::kInvalidArgument, "directions live at branch vertices");
  const auto base = static_cast<std::size_t>(branch_rank(at)) * static_cast<std::size_t>(n_);
  for (int s = 0; s < n_; ++s) {
    if (slots_[base + static_cast<std::size_t>(s)] == via) return s;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "vertex " + std::to_string(via) + " is not adjacent to " + std::to_string(at));
}

VertexId DendriteModel::lca(VertexId a, VertexId b) const {
  while (height(a) > height(b)) a = parent(a);
  while (height(b) > height(a)) b = parent(b);
  while (a != b) {
    a = parent(a);
    b = parent(b);
  }
  return a;
}

int DendriteModel::distance(VertexId a, VertexId b) const {
  return height(a) + height(b) - 2 * height(lca(a, b));
}

std::vector<VertexId> path(const DendriteModel& m, VertexId x, VertexId y) {
  const VertexId top = m.lca(x, y);
  std::vector<VertexId> head;
  for (VertexId v = x; v != top; v = m.parent(v)) head.push_back(v);
  head.push_back(top);
  std::vector<VertexId> tail;
  for (VertexId v = y; v != top; v = m.parent(v)) tail.push_back(v);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

bool between(const DendriteModel& m, VertexId x, VertexId y, VertexId z) {
  if (y == x || y == z) return false;
  return m.distance(x, y) + m.distance(y, z) == m.distance(x, z);
}

VertexId center(const DendriteModel& m, VertexId x, VertexId y, VertexId z) {
  VertexId best = m.lca(x, y);
  for (VertexId c : {m.lca(y, z), m.lca(x, z)}) {
    if (m.height(c) > m.height(best)) best = c;
  }
  return best;
}

std::vector<VertexId> center_closure(const DendriteModel& m, std::span<const VertexId> f) {
  std::vector<VertexId> base(f.begin(), f.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<VertexId> out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      for (std::size_t k = j + 1; k < base.size(); ++k) out.push_back(center(m, base[i], base[j], base[k]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_center_closed(const DendriteModel& m, std::span<const VertexId> f) {
  std::vector<VertexId> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      for (std::size_t k = j + 1; k < sorted.size(); ++k) {
        const VertexId c = center(m, sorted[i], sorted[j], sorted[k]);
        if (!std::binary_search(sorted.begin(), sorted.end(), c)) return false;
      }
  return true;
}

Direction component_of(const DendriteModel& m, VertexId x, VertexId y) {
  if (x == y) throw Error(ErrorCode::kSameVertex, "component_of needs two distinct vertices");
  if (!m.is_branch(x)) throw Error(ErrorCode::kInvalidArgument, "component_of needs a branch vertex");
  if (m.height(y) > m.height(x)) {
    VertexId w = y;
    while (m.height(w) > m.height(x) + 1) w = m.parent(w);
    if (m.parent(w) == x) return {x, w};
  }
  return {x, m.parent(x)};
}

std::vector<std::vector<VertexId>> components_determined_by(const DendriteModel& m,
                                                            std::span<const VertexId> f) {
  if (f.empty()) throw Error(ErrorCode::kInvalidArgument, "components need a non-empty vertex set");
  if (!is_center_closed(m, f)) throw Error(ErrorCode::kNotCenterClosed, "vertex set is not center-closed");

  std::vector<bool> blocked(m.num_vertices(), false);
  for (VertexId v : f) blocked[static_cast<std::size_t>(v)] = true;
  std::vector<std::vector<VertexId>> out;
  for (std::size_t start = 0; start < m.num_vertices(); ++start) {
    if (blocked[start]) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{static_cast<VertexId>(start)};
    blocked[start] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (VertexId w : m.neighbors(v)) {
        if (blocked[static_cast<std::size_t>(w)]) continue;
        blocked[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace dendroscope
