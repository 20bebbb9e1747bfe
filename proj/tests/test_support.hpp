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


#ifndef DENDROSCOPE_TESTS_TEST_SUPPORT_HPP
#define DENDROSCOPE_TESTS_TEST_SUPPORT_HPP

#include <optional>

#include "dendroscope/error.hpp"

namespace testing {

// Code of the dendroscope::Error thrown by f, nullopt if it returns.
template <typename F>
std::optional<dendroscope::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const dendroscope::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing

#endif  // DENDROSCOPE_TESTS_TEST_SUPPORT_HPP
