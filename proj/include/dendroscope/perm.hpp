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

#ifndef DENDROSCOPE_PERM_HPP
#define DENDROSCOPE_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dendroscope {

/// A bijection of [n] = {0, ..., n-1}, stored as its image sequence.
///
/// Products compose right to left: (a * b)(i) == a(b(i)). Ordering is
/// lexicographic on image sequences, which is the tie-break used everywhere
/// in the library.
class Perm {
 public:
  using Point = std::uint8_t;
  static constexpr int kMaxDegree = 255;

  Perm() = default;

  /// Throws Error(kInvalidArgument) unless `images` is a bijection of [n].
  explicit Perm(std::span<const int> images);
  explicit Perm(std::initializer_list<int> images);

  static Perm identity(int degree);

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" and "" give the
  /// identity. Points not mentioned are fixed.
  static Perm from_cycles(int degree, std::string_view text);

  /// Parses one-line notation "[2 0 1]" (brackets and commas optional).
  static Perm from_images(std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int sign() const;
  std::size_t fixed_points() const;

  friend Perm operator*(const Perm& lhs, const Perm& rhs);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& lhs, const Perm& rhs) {
    return lhs.images_ <=> rhs.images_;
  }

  /// One-line notation, e.g. "[1 2 0]".
  std::string to_string() const;
  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_cycles() const;

  std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace dendroscope

#endif  // DENDROSCOPE_PERM_HPP
