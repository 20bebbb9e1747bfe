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

#ifndef DENDROSCOPE_IO_HPP
#define DENDROSCOPE_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "dendroscope/cohomology.hpp"
#include "dendroscope/coloring.hpp"
#include "dendroscope/dendrite.hpp"
#include "dendroscope/kgroup.hpp"
#include "dendroscope/perm_group.hpp"

// Plain-text formats. Blank lines and everything after '#' are ignored on
// input. Malformed input throws Error(kParseError) naming the line.
//
//   group       "n=4", then one generator per line in cycle notation
//   model       "n depth", "V E", V lines "v kind level" (kind B or E),
//               E lines "u v"
//   coloring    one line per branch vertex: "v nbr:color ..." in slot order
//   automorphism one line per vertex: "u -> v"
//   cochain     "n=N", then lines "i j k value" with i < j < k
namespace dendroscope {

PermGroup parse_group(std::string_view text);
std::string format_group(const PermGroup& g);

/// Rebuilds the model from its header and checks that the listed vertices
/// and edges match.
DendriteModel parse_model(std::string_view text);
std::string format_model(const DendriteModel& m);

Coloring parse_coloring(const DendriteModel& m, std::string_view text);
std::string format_coloring(const DendriteModel& m, const Coloring& c);

Automorphism parse_automorphism(const DendriteModel& m, std::string_view text);
std::string format_automorphism(const Automorphism& a);

Cochain2 parse_cochain(std::string_view text);
std::string format_cochain(const Cochain2& omega);

/// Whole file as a string. Throws Error(kInvalidArgument) when unreadable.
std::string read_file(const std::string& path);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string content_digest(std::string_view bytes);

}  // namespace dendroscope

#endif  // DENDROSCOPE_IO_HPP
