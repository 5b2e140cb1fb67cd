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

#include "covdeg/bench.hpp"

#include <chrono>

#include "covdeg/random.hpp"

namespace covdeg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<std::int64_t> naive_superset_sum(std::span<const std::int64_t> v) {
  std::vector<std::int64_t> out(v.size(), 0);
  for (std::size_t y = 0; y < v.size(); ++y) {
    std::int64_t sum = 0;
    for (std::size_t x = 0; x < v.size(); ++x) {
      if ((y & ~x) == 0) sum += v[x];
    }
    out[y] = sum;
  }
  return out;
}

TransformBenchmark benchmark_transforms(std::size_t n, std::uint64_t seed) {
  check_lattice_cap(n, kDefaultLatticeCap);
  Rng rng(seed);
  std::vector<std::int64_t> input(std::size_t{1} << n);
  for (auto& x : input) x = static_cast<std::int64_t>(uniform_below(rng, 2001)) - 1000;

  TransformBenchmark result;
  result.n = n;

  auto start = Clock::now();
  const auto naive = naive_superset_sum(input);
  result.naive_seconds = seconds_since(start);

  // Repeat the fast transform until the measurement is long enough to be
  // meaningful, then report the per-run average.
  std::vector<std::int64_t> fast;
  std::size_t runs = 0;
  start = Clock::now();
  do {
    fast = input;
    superset_zeta_inplace(std::span<std::int64_t>(fast));
    ++runs;
  } while (seconds_since(start) < 0.05);
  result.fast_seconds = seconds_since(start) / static_cast<double>(runs);

  result.speedup = result.naive_seconds / result.fast_seconds;
  result.outputs_match = naive == fast;
  return result;
}

InversionBenchmark benchmark_inversion(std::size_t n, std::uint64_t seed,
                                       std::size_t lattice_cap) {
  Rng rng(seed);
  const Covering c = random_covering(numbered_universe(n), rng);
  InversionBenchmark result;
  result.n = n;
  result.blocks = c.size();

  auto start = Clock::now();
  const DegreeTable table = degree_table(c, CardinalityWindow::full(n), lattice_cap);
  result.table_seconds = seconds_since(start);

  start = Clock::now();
  const Covering back = reconstruct_covering(table, lattice_cap);
  result.reconstruct_seconds = seconds_since(start);
  result.roundtrip_ok = back == c;
  return result;
}

}  // namespace covdeg
