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


#include <string>

#include "doctest.h"
#include "dendroscope/catalog.hpp"
#include "dendroscope/io.hpp"
#include "dendroscope/kgroup.hpp"
#include "test_support.hpp"

using namespace dendroscope;
using testing::error_code_of;

namespace {

std::string replace_first(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("group round trip") {
  for (const auto& [name, g] : group_catalog(5)) {
    CAPTURE(name);
    const auto back = parse_group(format_group(g));
    CHECK(back.degree() == 5);
    CHECK(back.elements() == g.elements());
  }
  const auto g = parse_group("# cyclic\nn=4\n\n(0 1 2 3)  # rotation\n");
  CHECK(g.order() == 4);
}

TEST_CASE("model round trip") {
  const auto m = DendriteModel::build(4, 2);
  CHECK(parse_model(format_model(m)) == m);
}

TEST_CASE("coloring round trip") {
  const auto m = DendriteModel::build(3, 3);
  for (const auto& c : {random_coloring(m, 5), uniform_coloring(m)}) CHECK(parse_coloring(m, format_coloring(m, c)) == c);
}

TEST_CASE("automorphism round trip") {
  const auto m = DendriteModel::build(3, 2);
  const auto c = uniform_coloring(m);
  const auto a = split_gamma(m, c, PermGroup::symmetric(3), uniform_coloring_root(m), Perm::from_cycles(3, "(0 2)"));
  CHECK(parse_automorphism(m, format_automorphism(a)) == a);
}

TEST_CASE("cochain round trip") {
  Cochain2 o(5);
  o.set(0, 1, 2, 3);
  o.set(4, 1, 3, -2);
  CHECK(parse_cochain(format_cochain(o)) == o);
  CHECK(parse_cochain("n=4\n").is_zero());
}

TEST_CASE("malformed input names a parse error") {
  const auto m = DendriteModel::build(3, 2);
  const std::string model = format_model(m);
  const std::string coloring = format_coloring(m, random_coloring(m, 1));
  CHECK(error_code_of([] { parse_group("n=x\n"); }) == ErrorCode::kParseError);
  CHECK(error_code_of([] { parse_group("n=3\n(0 5)\n"); }) == ErrorCode::kParseError);
  CHECK(error_code_of([] { parse_group(""); }) == ErrorCode::kParseError);
  CHECK(error_code_of([&] { parse_model(replace_first(model, "10 9", "11 9")); }) == ErrorCode::kParseError);
  CHECK(error_code_of([&] { parse_model(replace_first(model, "2 B 1", "2 E 1")); }) == ErrorCode::kParseError);
  CHECK(error_code_of([&] { parse_model(model.substr(0, model.size() / 2)); }) == ErrorCode::kParseError);
  CHECK(error_code_of([&] { parse_coloring(m, coloring.substr(0, coloring.find('\n') + 1)); }) ==
        ErrorCode::kParseError);
  CHECK(error_code_of([] { parse_cochain("n=4\n2 1 3 1\n"); }) == ErrorCode::kParseError);
  CHECK(error_code_of([] { parse_cochain("n=4\n0 1 2 x\n"); }) == ErrorCode::kParseError);
  CHECK(error_code_of([&] { parse_automorphism(m, "0 -> 0\n"); }) == ErrorCode::kParseError);
}

TEST_CASE("parse errors carry the line number") {
  std::string message;
  try {
    parse_cochain("n=4\n# comment\n0 1 2 1\n3 1 2 1\n");
  } catch (const Error& e) {
    message = e.what();
  }
  CHECK(message.rfind("line 4:", 0) == 0);
}

TEST_CASE("content digest is 64-bit FNV-1a") {
  CHECK(content_digest("") == "cbf29ce484222325");
  CHECK(content_digest("a") == "af63dc4c8601ec8c");
  CHECK(error_code_of([] { read_file("/nonexistent/dendroscope"); }) == ErrorCode::kInvalidArgument);
}

}  // TEST_SUITE
