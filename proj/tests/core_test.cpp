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

#include <algorithm>

#include "doctest.h"

#include "covdeg/error.hpp"
#include "covdeg/family.hpp"
#include "covdeg/random.hpp"
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
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("block basics") {
  Block b = Block::of(70, {0, 3, 64, 69});
  CHECK(b.count() == 4);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(65));
  b.reset(3);
  CHECK(b.count() == 3);
  CHECK(b.members() == std::vector<std::size_t>{0, 64, 69});
  CHECK(b.complement().count() == 67);
  CHECK((b | b.complement()) == Block::full(70));
  CHECK(Block::of(70, {64}).is_proper_subset_of(b));
  CHECK_FALSE(b.is_subset_of(Block::of(70, {0, 64})));
}

TEST_CASE("canonical order is cardinality then lexicographic") {
  const Block a = Block::of(4, {0, 1});
  const Block b = Block::of(4, {0, 2});
  const Block c = Block::of(4, {1, 2});
  const Block d = Block::of(4, {3});
  CHECK(canonical_less(d, a));
  CHECK(canonical_less(a, b));
  CHECK(canonical_less(b, c));
  CHECK_FALSE(canonical_less(c, a));
  CHECK_FALSE(canonical_less(a, a));
  // Multi-word blocks compare the same way.
  CHECK(canonical_less(Block::of(100, {5, 90}), Block::of(100, {6, 7})));
}

TEST_CASE("universe rejects bad input") {
  CHECK(kind_of([] { Universe({}); }) == ErrorKind::InvalidUniverse);
  CHECK(kind_of([] { Universe({"a", "a"}); }) == ErrorKind::InvalidUniverse);
  CHECK(kind_of([] { Universe({"a", "b", "c"}, 2); }) == ErrorKind::UniverseTooLarge);
  const Universe u({"a", "b"});
  CHECK(u.index_of("b") == 1);
  CHECK(kind_of([&] { u.index_of("z"); }) == ErrorKind::UnknownElement);
}

TEST_CASE("build_covering on the four element example") {
  const Covering c = staircase();
  REQUIRE(c.size() == 3);
  // Canonical order: {1,2}, {3,4}, {2,3,4}.
  CHECK(c.universe().names_of(c.blocks()[0]) == std::vector<std::string>{"1", "2"});
  CHECK(c.universe().names_of(c.blocks()[1]) == std::vector<std::string>{"3", "4"});
  CHECK(c.universe().names_of(c.blocks()[2]) == std::vector<std::string>{"2", "3", "4"});
}

TEST_CASE("build_covering edge cases") {
  const Covering single = make({"a"}, {{"a"}});
  CHECK(single.size() == 1);

  CHECK(kind_of([] { make({"1", "2"}, {{"1"}}); }) == ErrorKind::NotACovering);
  CHECK(kind_of([] { make({"1", "2"}, {{"1", "2"}, {}}); }) == ErrorKind::EmptyBlock);
  CHECK(kind_of([] { make({"1", "2"}, {{"1", "3"}}); }) == ErrorKind::UnknownElement);

  const Covering merged = make({"1", "2"}, {{"1", "2"}, {"2", "1"}, {"1"}});
  CHECK(merged.size() == 2);
}

TEST_CASE("infer_universe uses first appearance order") {
  CHECK(infer_universe({{"1", "2"}, {"2", "3"}}).names() ==
        std::vector<std::string>{"1", "2", "3"});
  CHECK(infer_universe({{"a", "b"}, {"b", "c"}, {"a", "c"}}).names() ==
        std::vector<std::string>{"a", "b", "c"});
  CHECK(kind_of([] { infer_universe({}); }) == ErrorKind::EmptyFamily);
  CHECK(kind_of([] { infer_universe({{}, {}}); }) == ErrorKind::EmptyFamily);
}

TEST_CASE("canonical_equal") {
  const Universe u({"1", "2", "3"});
  const SetFamily f1(u, {u.block_of({"1", "2"}), u.block_of({"2", "3"})});
  const SetFamily f2(u, {u.block_of({"2", "3"}), u.block_of({"1", "2"})});
  CHECK(canonical_equal(f1, f2));
  CHECK_FALSE(canonical_equal(twin_c1(), twin_c2()));
  CHECK(canonical_equal(SetFamily(u, {}), SetFamily(u, {})));

  // Same names in another order still compare by name.
  const Universe v({"3", "1", "2"});
  const SetFamily f3(v, {v.block_of({"2", "1"}), v.block_of({"3", "2"})});
  CHECK(canonical_equal(f1, f3));

  const Universe w({"1", "2", "4"});
  CHECK(kind_of([&] { canonical_equal(f1, SetFamily(w, {})); }) == ErrorKind::UniverseMismatch);
}

TEST_CASE("permuted input gives identical canonical blocks") {
  Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Universe u = numbered_universe(1 + iter % 9);
    const Covering c = random_covering(u, rng);
    std::vector<Block> blocks = c.blocks();
    std::shuffle(blocks.begin(), blocks.end(), rng);
    const Covering again(u, blocks);
    CHECK(again.blocks() == c.blocks());
    Block acc = u.empty_block();
    for (const auto& b : c.blocks()) {
      CHECK_FALSE(b.empty());
      acc |= b;
    }
    CHECK(acc == u.full_block());
  }
}

TEST_CASE("multi-word universes") {
  std::vector<std::string> names;
  for (int i = 0; i < 100; ++i) names.push_back("e" + std::to_string(i));
  const Universe u(names, 128);
  Rng rng(3);
  const Covering c = random_covering(u, rng);
  CHECK(c.union_of_blocks() == u.full_block());
}
