// Copyright 2026 The covdeg Authors
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

#include "doctest.h"

#include "covdeg/error.hpp"
#include "covdeg/inversion.hpp"
#include "covdeg/io.hpp"
#include "support.hpp"

using namespace covdeg;
using namespace covdeg::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("text family parsing") {
  const auto raw = io::parse_family_text("# universe: a b c\n# note\n a b \n\nc\n");
  REQUIRE(raw.universe.has_value());
  CHECK(*raw.universe == std::vector<std::string>{"a", "b", "c"});
  CHECK(raw.blocks == std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}});

  const auto bare = io::parse_family_text("1 2\n2 3\n");
  CHECK_FALSE(bare.universe.has_value());
  CHECK(bare.blocks.size() == 2);
}

TEST_CASE("json family parsing") {
  const auto raw = io::parse_family(R"({"universe": ["x", "y"], "blocks": [["x"], ["x", "y"]]})");
  REQUIRE(raw.universe.has_value());
  CHECK(raw.universe->size() == 2);
  CHECK(raw.blocks.size() == 2);
  CHECK(kind_of([] { io::parse_family_json("{\"blocks\": 3}"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_family_json("{not json"); }) == ErrorKind::Parse);
}

TEST_CASE("read_covering errors") {
  CHECK(kind_of([] { io::read_covering("# universe: a b\na\n"); }) == ErrorKind::NotACovering);
  CHECK(kind_of([] { io::read_covering("# universe: a b\na z\n"); }) ==
        ErrorKind::UnknownElement);
  CHECK(kind_of([] { io::read_covering(""); }) == ErrorKind::EmptyFamily);
  CHECK(kind_of([] { io::read_covering("{\"universe\": [\"a\"], \"blocks\": [[]]}"); }) ==
        ErrorKind::EmptyBlock);
  CHECK(kind_of([] { io::read_covering("a b c\n", 2); }) == ErrorKind::UniverseTooLarge);
}

TEST_CASE("family render and reparse") {
  const Covering c = staircase();
  const std::string text = io::render_family(c);
  CHECK(text == "# universe: 1 2 3 4\n1 2\n3 4\n2 3 4\n");
  CHECK(io::read_covering(text) == c);
  const auto j = io::family_json(c);
  CHECK(io::read_covering(j.dump()) == c);
  CHECK(io::format_set(c.universe(), c.universe().block_of({"2", "4"})) == "{2,4}");
  CHECK(io::format_set(c.universe(), c.universe().empty_block()) == "{}");
}

TEST_CASE("degree table render and reparse") {
  const Covering c = staircase();
  for (const auto& w : {CardinalityWindow::full(4), CardinalityWindow{1, 2}, CardinalityWindow{3}}) {
    const DegreeTable t = degree_table(c, w);
    const std::string text = io::render_degree_table(t);
    const DegreeTable back = io::read_degree_table(text);
    CHECK(back.window() == w);
    CHECK(back.entries() == t.entries());
    CHECK(io::render_degree_table(back) == text);
  }
  const DegreeTable t = io::read_degree_table(
      "# universe: a b\n# window: 1 2\na : 2\nb : 1\na b : 1\n");
  CHECK(t.at(t.universe().block_of({"a"})) == 2);
  CHECK(io::degree_table_json(t)["entries"].size() == 3);
}

TEST_CASE("degree table parse errors") {
  CHECK(kind_of([] { io::read_degree_table("# window: 1\na : 1\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::read_degree_table("# universe: a\na : 1\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::read_degree_table("# universe: a\n# window: 1\na : x\n"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::read_degree_table("# universe: a\n# window: 1\na 1\n"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { io::read_degree_table("# universe: a\n# window: 1\nq : 1\n"); }) ==
        ErrorKind::UnknownElement);
  CHECK(kind_of([] {
          io::read_degree_table("# universe: a b\n# window: 1 2\na : 1\nb : 1\n");
        }) == ErrorKind::IncompleteTable);
}

TEST_CASE("neighborhood and relation rendering") {
  const Covering c = twin_c1();
  CHECK(io::render_neighborhoods(neighborhoods(c)) == "1 : {1,2}\n2 : {2}\n3 : {3}\n");
  CHECK(io::render_relation(relation(c)) == "(1,1)\n(1,2)\n(2,2)\n(3,3)\n");
}
