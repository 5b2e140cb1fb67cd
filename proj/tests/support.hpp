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

// Fixtures and independent oracles shared by the unit and acceptance tests.
// The oracles work on std::set<std::size_t> families and plain loops, never
// on the library's bitset code paths.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "covdeg/family.hpp"
#include "covdeg/random.hpp"

namespace covdeg::testing {

using Ints = std::set<std::size_t>;
using IntFamily = std::set<Ints>;

inline Covering make(const std::vector<std::string>& universe,
                     const std::vector<std::vector<std::string>>& blocks) {
  return build_covering(Universe(universe), blocks);
}

/// U={1,2,3,4}, C={{1,2},{2,3,4},{3,4}}.
inline Covering staircase() {
  return make({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3", "4"}, {"3", "4"}});
}

/// C={{1,2},{1,2,3},{3,4}}.
inline Covering gamma_gap() {
  return make({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "2", "3"}, {"3", "4"}});
}

/// U={1,2,3}, C1={{1,2},{2,3},{3}}.
inline Covering twin_c1() {
  return make({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3"}});
}

/// C2={{1,2,3},{1,2},{2,3},{3}}.
inline Covering twin_c2() {
  return make({"1", "2", "3"}, {{"1", "2", "3"}, {"1", "2"}, {"2", "3"}, {"3"}});
}

/// The three pairs of {a,b,c}.
inline Covering triangle() {
  return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

/// The odd-size subsets of {a,b,c}.
inline Covering star() {
  return make({"a", "b", "c"}, {{"a", "b", "c"}, {"a"}, {"b"}, {"c"}});
}

inline Ints to_ints(const Block& b) {
  Ints out;
  for (std::size_t i = 0; i < b.width(); ++i) {
    if (b.test(i)) out.insert(i);
  }
  return out;
}

inline IntFamily to_ints(const SetFamily& f) {
  IntFamily out;
  for (const auto& b : f.blocks()) out.insert(to_ints(b));
  return out;
}

inline Block to_block(std::size_t width, const Ints& s) {
  Block b(width);
  for (auto i : s) b.set(i);
  return b;
}

inline bool includes(const Ints& big, const Ints& small) {
  for (auto x : small) {
    if (!big.count(x)) return false;
  }
  return true;
}

/// Number of blocks containing x, by definition.
inline std::uint64_t oracle_degree(const IntFamily& c, const Ints& x) {
  std::uint64_t n = 0;
  for (const auto& k : c) n += includes(k, x) ? 1 : 0;
  return n;
}

/// Intersection of the blocks containing x.
inline Ints oracle_neighborhood(const IntFamily& c, std::size_t n, std::size_t x) {
  Ints acc;
  for (std::size_t i = 0; i < n; ++i) acc.insert(i);
  for (const auto& k : c) {
    if (!k.count(x)) continue;
    Ints next;
    for (auto y : acc) {
      if (k.count(y)) next.insert(y);
    }
    acc = next;
  }
  return acc;
}

inline IntFamily oracle_cov(const IntFamily& c, std::size_t n) {
  IntFamily out;
  for (std::size_t x = 0; x < n; ++x) out.insert(oracle_neighborhood(c, n, x));
  return out;
}

/// Whether k is the union of some subfamily, trying all 2^|family| choices.
inline bool oracle_in_closure(const std::vector<Ints>& family, const Ints& k) {
  const std::size_t m = family.size();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
    Ints acc;
    for (std::size_t i = 0; i < m; ++i) {
      if ((sel >> i) & 1U) acc.insert(family[i].begin(), family[i].end());
    }
    if (acc == k) return true;
  }
  return false;
}

inline IntFamily oracle_reducible(const IntFamily& c) {
  IntFamily out;
  for (const auto& k : c) {
    std::vector<Ints> rest;
    for (const auto& l : c) {
      if (l != k) rest.push_back(l);
    }
    if (oracle_in_closure(rest, k)) out.insert(k);
  }
  return out;
}

/// f(Y) = sum of g(X) over supersets X of Y, by a double loop over masks.
template <typename T>
std::vector<T> oracle_zeta(const std::vector<T>& g) {
  std::vector<T> f(g.size(), T{});
  for (std::size_t y = 0; y < g.size(); ++y) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if ((x & y) == y) f[y] += g[x];
    }
  }
  return f;
}

/// g(V) = sum over supersets Z of V of (-1)^(|Z|-|V|) f(Z), by a double loop.
template <typename T>
std::vector<T> oracle_mobius(const std::vector<T>& f) {
  std::vector<T> g(f.size(), T{});
  for (std::size_t v = 0; v < f.size(); ++v) {
    for (std::size_t z = 0; z < f.size(); ++z) {
      if ((z & v) != v) continue;
      const int sign = (__builtin_popcountll(z) - __builtin_popcountll(v)) % 2 == 0 ? 1 : -1;
      g[v] += sign * f[z];
    }
  }
  return g;
}

/// Random covering with at most max_blocks blocks after coverage patching.
inline Covering bounded_random_covering(const Universe& u, Rng& rng, std::size_t max_blocks) {
  while (true) {
    Covering c = random_covering(u, rng, max_blocks);
    if (c.size() <= max_blocks) return c;
  }
}

}  // namespace covdeg::testing
