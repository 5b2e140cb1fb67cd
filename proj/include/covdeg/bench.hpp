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
#include <span>
#include <vector>

#include "covdeg/inversion.hpp"

namespace covdeg {

/// Superset sums by the definition: for every Y, loop over every X and add
/// v[X] when Y is inside X. O(4^n); used as the baseline in benchmarks.
std::vector<std::int64_t> naive_superset_sum(std::span<const std::int64_t> v);

struct TransformBenchmark {
  std::size_t n = 0;
  double naive_seconds = 0;
  double fast_seconds = 0;
  double speedup = 0;
  bool outputs_match = false;
};

/// Times the naive superset sum against the in-place transform on random
/// integers over an n-element lattice.
TransformBenchmark benchmark_transforms(std::size_t n, std::uint64_t seed);

struct InversionBenchmark {
  std::size_t n = 0;
  std::size_t blocks = 0;
  double table_seconds = 0;
  double reconstruct_seconds = 0;
  bool roundtrip_ok = false;
};

/// Builds the full degree table of a random covering over n elements and
/// times its reconstruction.
InversionBenchmark benchmark_inversion(std::size_t n, std::uint64_t seed,
                                       std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace covdeg
