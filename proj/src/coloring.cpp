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

#include "dendroscope/coloring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "dendroscope/rng.hpp"

namespace dendroscope {

Coloring::Coloring(int n, std::size_t branches)
    : n_(n),
      colors_(branches * static_cast<std::size_t>(n)),
      slots_(branches * static_cast<std::size_t>(n)) {}

Coloring Coloring::from_rows(const DendriteModel& m, const std::vector<std::vector<int>>& rows) {
  const int n = m.n();
  if (rows.size() != m.branch_vertices().size()) {
    throw Error(ErrorCode::kInvalidArgument, "coloring needs one row per branch vertex");
  }
  Coloring c(n, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kInvalidArgument, "coloring row has the wrong length");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int slot = 0; slot < n; ++slot) {
      const int color = rows[r][static_cast<std::size_t>(slot)];
      if (color < 0 || color >= n || seen[static_cast<std::size_t>(color)]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "coloring row of branch vertex " + std::to_string(m.branch_vertices()[r]) +
                        " is not a bijection onto [n]");
      }
      seen[static_cast<std::size_t>(color)] = true;
      c.colors_[c.cell(static_cast<int>(r), slot)] = static_cast<std::uint8_t>(color);
      c.slots_[c.cell(static_cast<int>(r), color)] = static_cast<std::uint8_t>(slot);
    }
  }
  return c;
}

Perm Coloring::row(int rank) const {
  std::vector<int> images(static_cast<std::size_t>(n_));
  for (int s = 0; s < n_; ++s) images[static_cast<std::size_t>(s)] = color_of_slot(rank, s);
  return Perm(images);
}

void Coloring::left_compose(int rank, const Perm& gamma) {
  for (int s = 0; s < n_; ++s) {
    const int color = gamma(colors_[cell(rank, s)]);
    colors_[cell(rank, s)] = static_cast<std::uint8_t>(color);
    slots_[cell(rank, color)] = static_cast<std::uint8_t>(s);
  }
}

int color_from(const DendriteModel& m, const Coloring& c, VertexId x, VertexId y) {
  return c.color(m, component_of(m, x, y));
}

Coloring random_coloring(const DendriteModel& m, std::uint64_t seed) {
  const int n = m.n();
  std::vector<std::vector<int>> rows;
  rows.reserve(m.branch_vertices().size());
  for (VertexId v : m.branch_vertices()) {
    std::vector<int> row(static_cast<std::size_t>(n));
    std::iota(row.begin(), row.end(), 0);
    RandomStream rng(seed, static_cast<std::uint64_t>(v));
    rng.shuffle(std::span<int>(row));
    rows.push_back(std::move(row));
  }
  return Coloring::from_rows(m, rows);
}

VertexId uniform_coloring_root(const DendriteModel& m) { return m.branch_vertices().front(); }

Coloring uniform_coloring(const DendriteModel& m) {
  const int n = m.n();
  const VertexId root = uniform_coloring_root(m);
  const std::size_t count = m.num_vertices();

  // BFS from the root; process in reverse for bottom-up shape ids.
  std::vector<VertexId> order;
  std::vector<VertexId> up(count, -1);
  order.reserve(count);
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (VertexId w : m.neighbors(v)) {
      if (w == up[static_cast<std::size_t>(v)]) continue;
      up[static_cast<std::size_t>(w)] = v;
      order.push_back(w);
    }
  }

  std::map<std::vector<int>, int> intern;
  std::vector<int> shape(count, 0);
  intern[{}] = 0;  // end stub
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (!m.is_branch(v)) continue;
    std::vector<int> children;
    for (VertexId w : m.neighbors(v)) {
      if (w != up[static_cast<std::size_t>(v)]) children.push_back(shape[static_cast<std::size_t>(w)]);
    }
    std::sort(children.begin(), children.end());
    auto [pos, inserted] = intern.try_emplace(std::move(children), static_cast<int>(intern.size()));
    shape[static_cast<std::size_t>(v)] = pos->second;
  }

  std::vector<std::vector<int>> rows(m.branch_vertices().size(), std::vector<int>(static_cast<std::size_t>(n)));
  for (VertexId v : m.branch_vertices()) {
    const VertexId parent = up[static_cast<std::size_t>(v)];
    std::vector<std::pair<int, int>> keyed;  // (shape, slot)
    auto& row = rows[static_cast<std::size_t>(m.branch_rank(v))];
    int next_color = 0;
    for (int s = 0; s < n; ++s) {
      const VertexId w = m.slot_neighbor(v, s);
      if (w == parent) {
        row[static_cast<std::size_t>(s)] = 0;
        next_color = 1;
      } else {
        keyed.emplace_back(shape[static_cast<std::size_t>(w)], s);
      }
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [sh, s] : keyed) row[static_cast<std::size_t>(s)] = next_color++;
  }
  return Coloring::from_rows(m, rows);
}

bool has_witness(const DendriteModel& m, const Coloring& c, VertexId x, VertexId y, int i, int j) {
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "witness colors must be distinct");
  const auto p = path(m, x, y);
  for (std::size_t k = 1; k + 1 < p.size(); ++k) {
    const VertexId z = p[k];
    if (!m.is_branch(z)) continue;
    if (c.color(m, {z, p[k - 1]}) == i && c.color(m, {z, p[k + 1]}) == j) return true;
  }
  return false;
}

DefectReport kaleidoscopic_defects(const DendriteModel& m, const Coloring& c, int min_separation,
                                   unsigned jobs) {
  if (min_separation < 2) {
    throw Error(ErrorCode::kInvalidArgument, "min_separation must be at least 2");
  }
  const int n = m.n();
  const auto branches = m.branch_vertices();
  const std::size_t b = branches.size();

  struct Partial {
    std::vector<Defect> defects;
    std::size_t pairs = 0;
  };
  std::vector<Partial> per_x(b);

  auto audit_row = [&](std::size_t xi) {
    const VertexId x = branches[xi];
    Partial& out = per_x[xi];
    std::vector<bool> seen(static_cast<std::size_t>(n * n));
    for (VertexId y : branches) {
      if (y == x || m.distance(x, y) < min_separation) continue;
      ++out.pairs;
      std::fill(seen.begin(), seen.end(), false);
      const auto p = path(m, x, y);
      for (std::size_t k = 1; k + 1 < p.size(); ++k) {
        const VertexId z = p[k];
        const int i = c.color(m, {z, p[k - 1]});
        const int j = c.color(m, {z, p[k + 1]});
        seen[static_cast<std::size_t>(i * n + j)] = true;
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && !seen[static_cast<std::size_t>(i * n + j)]) out.defects.push_back({x, y, i, j});
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || b < 2) {
    for (std::size_t xi = 0; xi < b; ++xi) audit_row(xi);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t xi = w; xi < b; xi += jobs) audit_row(xi);
      });
    }
    for (auto& t : workers) t.join();
  }

  DefectReport report;
  report.witness_budget = min_separation;
  for (auto& part : per_x) {
    report.pairs_checked += part.pairs;
    report.entries.insert(report.entries.end(), part.defects.begin(), part.defects.end());
  }
  return report;
}

Recoloring recolor_doubly_transitive(const DendriteModel& m, const Coloring& c, const PermGroup& g) {
  if (g.degree() != m.n() || !is_doubly_transitive(g)) {
    throw Error(ErrorCode::kNotDoublyTransitive, "recoloring needs a doubly transitive group of degree n");
  }
  const int n = m.n();
  const auto& elements = g.elements();
  Recoloring out{c, {}, {}};

  std::vector<bool> processed(m.num_vertices(), false);
  std::set<std::pair<VertexId, VertexId>> handled;
  std::vector<VertexId> fresh;

  // Processed vertices adjacent to u within the processed set: the first
  // processed vertex met along every ray out of u.
  auto processed_neighbors = [&](VertexId u) {
    std::vector<VertexId> found;
    std::deque<std::pair<VertexId, VertexId>> queue;  // (vertex, came from)
    for (VertexId w : m.neighbors(u)) queue.emplace_back(w, u);
    while (!queue.empty()) {
      auto [v, from] = queue.front();
      queue.pop_front();
      if (processed[static_cast<std::size_t>(v)]) {
        found.push_back(v);
        continue;
      }
      for (VertexId w : m.neighbors(v)) {
        if (w != from) queue.emplace_back(w, v);
      }
    }
    return found;
  };

  auto step = [&]() {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u : fresh) {
      for (VertexId v : processed_neighbors(u)) {
        auto key = std::minmax(u, v);
        if (!handled.count(key)) pairs.insert(key);
      }
    }
    fresh.clear();
    for (const auto& [v, w] : pairs) {
      handled.insert({v, w});
      const auto p = path(m, v, w);
      std::size_t cursor = 1;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          while (cursor + 1 < p.size() && processed[static_cast<std::size_t>(p[cursor])]) ++cursor;
          if (cursor + 1 >= p.size()) {
            out.shortfalls.push_back({v, w, i, j});
            continue;
          }
          const VertexId y = p[cursor];
          const int rank = m.branch_rank(y);
          const int toward_v = out.coloring.color(m, {y, p[cursor - 1]});
          const int toward_w = out.coloring.color(m, {y, p[cursor + 1]});
          const auto gamma = std::find_if(elements.begin(), elements.end(), [&](const Perm& e) {
            return e(toward_v) == i && e(toward_w) == j;
          });
          out.coloring.left_compose(rank, *gamma);
          out.rewrites.emplace_back(y, *gamma);
          processed[static_cast<std::size_t>(y)] = true;
          fresh.push_back(y);
        }
      }
    }
  };

  for (VertexId x : m.branch_vertices()) {
    if (processed[static_cast<std::size_t>(x)]) continue;
    processed[static_cast<std::size_t>(x)] = true;
    fresh.push_back(x);
    step();
  }
  while (!fresh.empty()) step();
  return out;
}

}  // namespace dendroscope
