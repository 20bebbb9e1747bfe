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

#ifndef DENDROSCOPE_EXACT_RANK_HPP
#define DENDROSCOPE_EXACT_RANK_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace dendroscope {

/// Rank over the rationals of an integer matrix by Bareiss fraction-free
/// elimination. Every division is exact, so Int only needs ring operations
/// and exact division; an arbitrary-precision integer avoids overflow.
template <typename Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = col + 1; k < cols; ++k) {
        a[r][k] = (a[rank][col] * a[r][k] - a[r][col] * a[rank][k]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace dendroscope

#endif  // DENDROSCOPE_EXACT_RANK_HPP
