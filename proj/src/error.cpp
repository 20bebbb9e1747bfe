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

#include "dendroscope/error.hpp"

namespace dendroscope {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kCapExceeded:
      return "CapExceeded";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kSameVertex:
      return "SameVertex";
    case ErrorCode::kNotCenterClosed:
      return "NotCenterClosed";
    case ErrorCode::kNotDoublyTransitive:
      return "NotDoublyTransitive";
    case ErrorCode::kNotInGroup:
      return "NotInGroup";
    case ErrorCode::kNoColorIsomorphism:
      return "NoColorIsomorphism";
    case ErrorCode::kBetweennessViolation:
      return "BetweennessViolation";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace dendroscope
