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

#ifndef DENDROSCOPE_ERROR_HPP
#define DENDROSCOPE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dendroscope {

// Every domain failure carries one of these codes. The CLI prints name()
// verbatim, so the spellings are part of the external interface.
enum class ErrorCode {
  kInvalidArgument,
  kCapExceeded,
  kBudgetExceeded,
  kSameVertex,
  kNotCenterClosed,
  kNotDoublyTransitive,
  kNotInGroup,
  kNoColorIsomorphism,
  kBetweennessViolation,
  kParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Default caps. All of them can be overridden per call.
inline constexpr std::size_t kDefaultElementCap = 100000;
inline constexpr std::size_t kDefaultEnumerationBudget = 10000000;
inline constexpr std::size_t kDefaultModelEdgeBudget = 1000000;
inline constexpr std::size_t kDefaultNodeCap = 1000000;

}  // namespace dendroscope

#endif  // DENDROSCOPE_ERROR_HPP
