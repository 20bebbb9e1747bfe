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

#include "dendroscope/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace dendroscope {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s = s.substr(end);
  }
}

long long to_int(std::string_view token, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return v;
}

int degree_header(const Line& line) {
  const std::string_view t = line.text;
  if (t.substr(0, 2) != "n=") fail(line.number, "expected a header 'n=<degree>'");
  const long long n = to_int(trim(t.substr(2)), line.number);
  if (n < 1 || n > Perm::kMaxDegree) fail(line.number, "degree out of range");
  return static_cast<int>(n);
}

}  // namespace

PermGroup parse_group(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "group file is empty");
  const int n = degree_header(lines.front());
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      gens.push_back(Perm::from_cycles(n, lines[i].text));
    } catch (const Error& e) {
      fail(lines[i].number, e.what());
    }
  }
  return PermGroup(n, std::move(gens));
}

std::string format_group(const PermGroup& g) {
  std::ostringstream os;
  os << "n=" << g.degree() << '\n';
  for (const Perm& p : g.generators()) os << p.to_cycles() << '\n';
  return os.str();
}

DendriteModel parse_model(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 2) throw Error(ErrorCode::kParseError, "model file needs a header");
  const auto head = tokens(lines[0].text);
  const auto sizes = tokens(lines[1].text);
  if (head.size() != 2) fail(lines[0].number, "expected 'n depth'");
  if (sizes.size() != 2) fail(lines[1].number, "expected 'vertices edges'");
  const auto n = to_int(head[0], lines[0].number);
  const auto depth = to_int(head[1], lines[0].number);
  if (n < 3 || n > 10 || depth < 1 || depth > 6) fail(lines[0].number, "order or depth out of range");
  const DendriteModel m = DendriteModel::build(static_cast<int>(n), static_cast<int>(depth));

  const auto v_count = to_int(sizes[0], lines[1].number);
  const auto e_count = to_int(sizes[1], lines[1].number);
  if (v_count != static_cast<long long>(m.num_vertices()) || e_count != static_cast<long long>(m.num_edges())) {
    fail(lines[1].number, "vertex or edge count does not match the header");
  }
  if (lines.size() != 2 + m.num_vertices() + m.num_edges()) {
    throw Error(ErrorCode::kParseError, "model file has the wrong number of lines");
  }
  std::size_t at = 2;
  for (std::size_t v = 0; v < m.num_vertices(); ++v, ++at) {
    const auto t = tokens(lines[at].text);
    if (t.size() != 3) fail(lines[at].number, "expected 'vertex kind level'");
    const auto id = static_cast<VertexId>(v);
    const char kind = m.is_branch(id) ? 'B' : 'E';
    if (to_int(t[0], lines[at].number) != id || t[1] != std::string_view(&kind, 1) ||
        to_int(t[2], lines[at].number) != m.level(id)) {
      fail(lines[at].number, "vertex record does not match the refinement");
    }
  }
  for (const auto& [u, v] : m.edges()) {
    const auto t = tokens(lines[at].text);
    if (t.size() != 2 || to_int(t[0], lines[at].number) != u || to_int(t[1], lines[at].number) != v) {
      fail(lines[at].number, "edge record does not match the refinement");
    }
    ++at;
  }
  return m;
}

std::string format_model(const DendriteModel& m) {
  std::ostringstream os;
  os << m.n() << ' ' << m.depth() << '\n' << m.num_vertices() << ' ' << m.num_edges() << '\n';
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    const auto id = static_cast<VertexId>(v);
    os << v << ' ' << (m.is_branch(id) ? 'B' : 'E') << ' ' << m.level(id) << '\n';
  }
  for (const auto& [u, v] : m.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Coloring parse_coloring(const DendriteModel& m, std::string_view text) {
  const int n = m.n();
  std::vector<std::vector<int>> rows(m.branch_vertices().size());
  for (const auto& line : content_lines(text)) {
    const auto t = tokens(line.text);
    const auto v = to_int(t[0], line.number);
    if (v < 0 || v >= static_cast<long long>(m.num_vertices()) || !m.is_branch(static_cast<VertexId>(v))) {
      fail(line.number, "vertex " + std::string(t[0]) + " is not a branch vertex");
    }
    const auto id = static_cast<VertexId>(v);
    auto& row = rows[static_cast<std::size_t>(m.branch_rank(id))];
    if (!row.empty()) fail(line.number, "vertex " + std::to_string(v) + " listed twice");
    if (t.size() != static_cast<std::size_t>(n) + 1) fail(line.number, "expected one entry per direction");
    row.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 1; k < t.size(); ++k) {
      const auto colon = t[k].find(':');
      if (colon == std::string_view::npos) fail(line.number, "expected 'neighbor:color'");
      const auto nbr = to_int(t[k].substr(0, colon), line.number);
      const auto color = to_int(t[k].substr(colon + 1), line.number);
      int slot = -1;
      for (int s = 0; s < n; ++s)
        if (m.slot_neighbor(id, s) == nbr) slot = s;
      if (slot < 0) fail(line.number, "vertex " + std::to_string(nbr) + " is not adjacent to " + std::to_string(v));
      row[static_cast<std::size_t>(slot)] = static_cast<int>(color);
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) {
      throw Error(ErrorCode::kParseError,
                  "coloring misses branch vertex " + std::to_string(m.branch_vertices()[r]));
    }
  }
  try {
    return Coloring::from_rows(m, rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string format_coloring(const DendriteModel& m, const Coloring& c) {
  std::ostringstream os;
  for (VertexId v : m.branch_vertices()) {
    os << v;
    for (int s = 0; s < m.n(); ++s) {
      os << ' ' << m.slot_neighbor(v, s) << ':' << c.color_of_slot(m.branch_rank(v), s);
    }
    os << '\n';
  }
  return os.str();
}

Automorphism parse_automorphism(const DendriteModel& m, std::string_view text) {
  std::vector<VertexId> images(m.num_vertices(), -1);
  for (const auto& line : content_lines(text)) {
    const auto t = tokens(line.text);
    if (t.size() != 3 || t[1] != "->") fail(line.number, "expected 'u -> v'");
    const auto u = to_int(t[0], line.number);
    const auto v = to_int(t[2], line.number);
    if (u < 0 || u >= static_cast<long long>(images.size()) || v < 0 ||
        v >= static_cast<long long>(images.size())) {
      fail(line.number, "vertex outside the model");
    }
    if (images[static_cast<std::size_t>(u)] != -1) fail(line.number, "vertex " + std::to_string(u) + " mapped twice");
    images[static_cast<std::size_t>(u)] = static_cast<VertexId>(v);
  }
  for (std::size_t u = 0; u < images.size(); ++u) {
    if (images[u] == -1) throw Error(ErrorCode::kParseError, "automorphism misses vertex " + std::to_string(u));
  }
  try {
    return Automorphism::make(m, std::move(images));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string format_automorphism(const Automorphism& a) {
  std::ostringstream os;
  for (std::size_t v = 0; v < a.size(); ++v) os << v << " -> " << a(static_cast<VertexId>(v)) << '\n';
  return os.str();
}

Cochain2 parse_cochain(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "cochain file is empty");
  const int n = degree_header(lines.front());
  Cochain2 omega(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = tokens(lines[i].text);
    if (t.size() != 4) fail(lines[i].number, "expected 'i j k value'");
    const auto a = to_int(t[0], lines[i].number);
    const auto b = to_int(t[1], lines[i].number);
    const auto c = to_int(t[2], lines[i].number);
    if (!(0 <= a && a < b && b < c && c < n)) fail(lines[i].number, "expected 0 <= i < j < k < n");
    omega.set(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), to_int(t[3], lines[i].number));
  }
  return omega;
}

std::string format_cochain(const Cochain2& omega) {
  std::ostringstream os;
  os << "n=" << omega.n() << '\n';
  for (const auto& [i, j, k] : Cochain2::basis(omega.n())) {
    if (const Value v = omega(i, j, k); v != 0) os << i << ' ' << j << ' ' << k << ' ' << v << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dendroscope
