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

#include "covdeg/degree.hpp"
#include "covdeg/error.hpp"
#include "covdeg/inversion.hpp"
#include "covdeg/neighborhood.hpp"
#include "support.hpp"

using namespace covdeg;
using namespace covdeg::testing;

TEST_CASE("repeat degrees of the four element example") {
  const Covering c = staircase();
  const Universe& u = c.universe();
  CHECK(repeat_degree(c, u.block_of({"1"})) == 1);
  CHECK(repeat_degree(c, u.block_of({"2"})) == 2);
  CHECK(repeat_degree(c, u.block_of({"3", "4"})) == 2);
  CHECK(repeat_degree(c, u.block_of({"1", "3"})) == 0);
  CHECK(repeat_degree(c, u.empty_block()) == 3);
  CHECK(repeat_degree(c, u.full_block()) == 0);
  CHECK_THROWS_AS(repeat_degree(c, Block(3)), Error);
}

TEST_CASE("p_set") {
  const Covering c = staircase();
  CHECK(to_ints(p_set(c, "2")) == Ints{1});
  const Covering singles = make({"a", "b"}, {{"a"}, {"b"}});
  CHECK(to_ints(p_set(singles, "b")) == Ints{1});
  CHECK(to_ints(p_set(twin_c1(), "1")) == Ints{0, 1});
  CHECK_THROWS_AS(p_set(c, "zz"), Error);
}

TEST_CASE("cov_from_pair_degrees") {
  const auto pairs = CardinalityWindow{1, 2};
  const Covering c6 = staircase();
  CHECK(cov_from_pair_degrees(degree_table(c6, pairs)) == cov(c6));

  const Covering partition = make({"1", "2", "3"}, {{"1"}, {"2", "3"}});
  CHECK(cov_from_pair_degrees(degree_table(partition, pairs)) == partition);

  const Covering c53 = triangle();
  const Universe& u = c53.universe();
  const Covering expected(u, {u.block_of({"a"}), u.block_of({"b"}), u.block_of({"c"})});
  CHECK(cov_from_pair_degrees(degree_table(c53, pairs)) == expected);

  // Missing pairs.
  const DegreeTable only_singles = degree_table(c6, CardinalityWindow{1});
  try {
    cov_from_pair_degrees(only_singles);
    FAIL("expected IncompleteTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteTable);
  }
}

TEST_CASE("gamma examples") {
  const Covering c = gamma_gap();
  const Universe& u = c.universe();
  CHECK(gamma(c, "1") == u.block_of({"1", "2"}));
  CHECK(gamma(c, "2") == u.block_of({"1", "2"}));
  CHECK_FALSE(gamma(c, "3").has_value());
  CHECK(gamma(c, "4") == u.block_of({"3", "4"}));

  const Covering partition = make({"1", "2", "3"}, {{"1"}, {"2", "3"}});
  CHECK(gamma(partition, "3") == partition.universe().block_of({"2", "3"}));

  CHECK_FALSE(gamma(staircase(), "2").has_value());
}

TEST_CASE("same_p") {
  CHECK(same_p(twin_c1(), twin_c2()));
  CHECK(same_p(staircase(), staircase()));
  // The triangle and the star have P(x) = {x} for every x.
  CHECK(same_p(triangle(), star()));
  CHECK(first_p_difference(staircase(), gamma_gap()) == std::size_t{1});
}

TEST_CASE("degree properties on random coverings") {
  Rng rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + iter % 8;
    const Universe u = numbered_universe(n);
    const Covering c = random_covering(u, rng);
    const IntFamily ic = to_ints(c);
    const auto map = neighborhoods(c);
    for (std::size_t x = 0; x < n; ++x) {
      const auto dx = oracle_degree(ic, {x});
      CHECK(repeat_degree(c, to_block(n, {x})) == dx);
      for (std::size_t y = 0; y < n; ++y) {
        const bool in_n = map.of(x).test(y);
        CHECK(in_n == (oracle_degree(ic, {x, y}) == dx));
      }
      CHECK(p_set(c, x) == map.of(x));
      CHECK(gamma_family(c, x).size() <= 1);
      const auto g = gamma(c, x);
      CHECK(g.has_value() == c.contains(map.of(x)));
      if (g) CHECK(*g == map.of(x));
    }
    for (int s = 0; s < 10; ++s) {
      const Block a = random_nonempty_block(u, rng);
      const Block b = a | random_nonempty_block(u, rng);
      CHECK(repeat_degree(c, a) >= repeat_degree(c, b));
      CHECK(repeat_degree(c, a) == oracle_degree(ic, to_ints(a)));
    }
    const Covering d = (iter % 2 == 0) ? augment_with_unions(c, rng, 2) : random_covering(u, rng);
    const bool p = same_p(c, d);
    CHECK(p == same_relation(c, d));
    CHECK(p == canonical_equal(cov(c), cov(d)));
  }
}
