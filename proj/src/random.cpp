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

#include "covdeg/random.hpp"

#include <string>
#include <vector>

namespace covdeg {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Rejection sampling keeps results identical across standard libraries,
  // unlike std::uniform_int_distribution.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

Universe numbered_universe(std::size_t n, std::size_t cap) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Universe(std::move(names), cap);
}

Block random_nonempty_block(const Universe& u, Rng& rng) {
  const std::size_t n = u.size();
  while (true) {
    Block b(n);
    for (std::size_t base = 0; base < n; base += Block::kWordBits) {
      const std::uint64_t bits = rng();
      for (std::size_t i = base; i < n && i < base + Block::kWordBits; ++i) {
        if ((bits >> (i - base)) & 1U) b.set(i);
      }
    }
    if (!b.empty()) return b;
  }
}

Covering random_covering(const Universe& u, Rng& rng, std::size_t max_blocks) {
  std::uint64_t upper = 3 * u.size();
  if (max_blocks != 0 && max_blocks < upper) upper = max_blocks;
  const std::uint64_t count = 1 + uniform_below(rng, upper);
  std::vector<Block> blocks;
  blocks.reserve(count + u.size());
  Block covered = u.empty_block();
  for (std::uint64_t i = 0; i < count; ++i) {
    blocks.push_back(random_nonempty_block(u, rng));
    covered |= blocks.back();
  }
  (u.full_block() - covered).for_each([&](std::size_t x) {
    Block single = u.empty_block();
    single.set(x);
    blocks.push_back(std::move(single));
  });
  return Covering(u, std::move(blocks));
}

Covering augment_with_unions(const Covering& c, Rng& rng, std::size_t additions) {
  std::vector<Block> blocks = c.blocks();
  const std::size_t base = blocks.size();
  for (std::size_t a = 0; a < additions; ++a) {
    Block acc = c.universe().empty_block();
    while (acc.empty()) {
      for (std::size_t i = 0; i < base; ++i) {
        if (rng() & 1U) acc |= blocks[i];
      }
    }
    blocks.push_back(std::move(acc));
  }
  return Covering(c.universe(), std::move(blocks));
}

}  // namespace covdeg
