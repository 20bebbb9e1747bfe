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

#include "dendroscope/perm.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "dendroscope/error.hpp"

namespace dendroscope {

namespace {

void check_bijection(std::span<const int> images) {
  const auto n = images.size();
  if (n == 0 || n > static_cast<std::size_t>(Perm::kMaxDegree)) {
    throw Error(ErrorCode::kInvalidArgument,
                "permutation degree must lie in [1, 255]");
  }
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "image sequence is not a bijection of [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Reads non-negative integers out of `text`, treating every other character
// as a separator except the ones in `structural`, which are returned as -1,
// -2, ... markers in the order they appear in that string.
std::vector<int> tokenize(std::string_view text, std::string_view structural) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) {
        throw Error(ErrorCode::kParseError, "bad integer in permutation text");
      }
      out.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
      continue;
    }
    if (auto pos = structural.find(ch); pos != std::string_view::npos) {
      out.push_back(-1 - static_cast<int>(pos));
    } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
      throw Error(ErrorCode::kParseError,
                  std::string("unexpected character '") + ch + "' in permutation text");
    }
    ++i;
  }
  return out;
}

}  // namespace

Perm::Perm(std::span<const int> images) {
  check_bijection(images);
  images_.assign(images.begin(), images.end());
}

Perm::Perm(std::initializer_list<int> images)
    : Perm(std::span<const int>(images.begin(), images.size())) {}

Perm Perm::identity(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error(ErrorCode::kInvalidArgument, "permutation degree must lie in [1, 255]");
  }
  Perm p;
  p.images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<Point>(i);
  return p;
}

Perm Perm::from_cycles(int degree, std::string_view text) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<bool> moved(static_cast<std::size_t>(degree), false);

  const auto tokens = tokenize(text, "()");
  std::vector<int> cycle;
  bool open = false;
  for (int t : tokens) {
    if (t == -1) {
      if (open) throw Error(ErrorCode::kParseError, "nested '(' in cycle notation");
      open = true;
      cycle.clear();
    } else if (t == -2) {
      if (!open) throw Error(ErrorCode::kParseError, "unbalanced ')' in cycle notation");
      open = false;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int from = cycle[k];
        const int to = cycle[(k + 1) % cycle.size()];
        if (from >= degree) {
          throw Error(ErrorCode::kParseError, "cycle point out of range");
        }
        if (moved[static_cast<std::size_t>(from)]) {
          throw Error(ErrorCode::kParseError, "point repeated across cycles");
        }
        moved[static_cast<std::size_t>(from)] = true;
        images[static_cast<std::size_t>(from)] = to;
      }
    } else {
      if (!open) throw Error(ErrorCode::kParseError, "point outside of a cycle");
      cycle.push_back(t);
    }
  }
  if (open) throw Error(ErrorCode::kParseError, "unterminated cycle");
  try {
    return Perm(images);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Perm Perm::from_images(std::string_view text) {
  std::vector<int> images;
  for (int t : tokenize(text, "[]")) {
    if (t >= 0) images.push_back(t);
  }
  try {
    return Perm(images);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

int Perm::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    parity += static_cast<int>(len + 1) % 2;
  }
  return parity % 2 == 0 ? 1 : -1;
}

std::size_t Perm::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw Error(ErrorCode::kInvalidArgument, "degree mismatch in permutation product");
  }
  Perm p;
  p.images_.resize(rhs.images_.size());
  for (std::size_t i = 0; i < rhs.images_.size(); ++i) p.images_[i] = lhs.images_[rhs.images_[i]];
  return p;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << static_cast<int>(images_[i]);
  }
  os << ']';
  return os.str();
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::size_t Perm::hash() const {
  // FNV-1a over the image bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : images_) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dendroscope
