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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Optional argument: "quick" for the trimmed level.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <thread>

#include "dendroscope/verify_suite.hpp"

int main(int argc, char** argv) {
  using dendroscope::VerifyLevel;
  const VerifyLevel level =
      (argc > 1 && std::strcmp(argv[1], "quick") == 0) ? VerifyLevel::kQuick : VerifyLevel::kFull;
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  for (int id = 1; id <= dendroscope::kCriterionCount; ++id) {
    const auto r = dendroscope::run_criterion(id, level, jobs);
    std::printf("%s [%d] %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d/%d criteria passed\n", dendroscope::kCriterionCount - failed, dendroscope::kCriterionCount);
  return failed ? 1 : 0;
}
