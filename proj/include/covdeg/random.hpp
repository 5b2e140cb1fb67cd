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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "covdeg/family.hpp"

namespace covdeg {

using Rng = std::mt19937_64;

/// Universe named "1", "2", ..., "n".
Universe numbered_universe(std::size_t n, std::size_t cap = kDefaultUniverseCap);

/// Uniform nonempty subset of the universe (each element kept with
/// probability 1/2, redrawn while empty).
Block random_nonempty_block(const Universe& u, Rng& rng);

/// Draws a block count in [1, min(3n, max_blocks)], fills each block with a
/// random nonempty subset, then adds a singleton for every element left
/// uncovered. max_blocks = 0 means no extra limit.
Covering random_covering(const Universe& u, Rng& rng, std::size_t max_blocks = 0);

/// Adds `additions` blocks, each the union of a random nonempty subfamily of
/// the current blocks. Neighborhoods are unchanged by such additions.
Covering augment_with_unions(const Covering& c, Rng& rng, std::size_t additions);

/// Uniform draw from [0, bound).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace covdeg
