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

#ifndef DENDROSCOPE_TOOLS_CLI_HPP
#define DENDROSCOPE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dendroscope::cli {

inline constexpr const char* kReportSchema = "dendroscope.report/1";

/// Runs `dendroscope <noun> <verb> [flags]` with args excluding the program
/// name. Returns 0 on success, 1 on a domain error, 2 on a usage or parse
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendroscope::cli

#endif  // DENDROSCOPE_TOOLS_CLI_HPP
