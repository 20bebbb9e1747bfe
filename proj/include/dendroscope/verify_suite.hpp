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

#ifndef DENDROSCOPE_VERIFY_SUITE_HPP
#define DENDROSCOPE_VERIFY_SUITE_HPP

#include <string>
#include <vector>

namespace dendroscope {

enum class VerifyLevel { kQuick, kFull };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 9;

/// Runs acceptance check `id` (1-based). The quick level trims sample sizes
/// and the largest orbit enumeration; everything else is identical.
CriterionResult run_criterion(int id, VerifyLevel level, unsigned jobs = 1);

std::vector<CriterionResult> run_acceptance(VerifyLevel level, unsigned jobs = 1);

}  // namespace dendroscope

#endif  // DENDROSCOPE_VERIFY_SUITE_HPP
