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

#include "covdeg/inversion.hpp"

#include <algorithm>

#include "covdeg/degree.hpp"

namespace covdeg {

namespace {

// Stays well below 64 so dense index arithmetic cannot overflow.
constexpr std::size_t kHardLatticeLimit = 40;

template <typename T>
SubsetFunction<T> zeta_of(const SubsetFunction<T>& g) {
  SubsetFunction<T> f = g;
  superset_zeta_inplace(f.values());
  return f;
}

template <typename T>
SubsetFunction<T> mobius_of(const SubsetFunction<T>& f) {
  SubsetFunction<T> g = f;
  superset_mobius_inplace(g.values());
  return g;
}

// Calls fn(block) for every k-subset of {0..n-1}, lexicographic on the
// sorted positions, which is canonical order within one cardinality.
template <typename Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Block b(n);
    for (std::size_t i : idx) b.set(i);
    fn(std::move(b));
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void check_lattice_cap(std::size_t n, std::size_t lattice_cap) {
  if (n > std::min(lattice_cap, kHardLatticeLimit)) {
    throw Error(ErrorKind::UniverseTooLarge,
                "universe of " + std::to_string(n) + " elements exceeds the lattice cap of " +
                    std::to_string(std::min(lattice_cap, kHardLatticeLimit)));
  }
}

RealSubsetFunction zeta_transform(const RealSubsetFunction& g) { return zeta_of(g); }
IntSubsetFunction zeta_transform(const IntSubsetFunction& g) { return zeta_of(g); }
RealSubsetFunction mobius_transform(const RealSubsetFunction& f) { return mobius_of(f); }
IntSubsetFunction mobius_transform(const IntSubsetFunction& f) { return mobius_of(f); }

IndicatorTable::IndicatorTable(const Covering& c, std::size_t lattice_cap)
    : universe_(c.universe()) {
  check_lattice_cap(universe_.size(), lattice_cap);
  flags_.assign(std::size_t{1} << universe_.size(), 0);
  for (const auto& k : c.blocks()) flags_[k.mask()] = 1;
}

std::uint8_t IndicatorTable::at(const Block& subset) const {
  if (subset.width() != universe_.size()) {
    throw Error(ErrorKind::UniverseMismatch, "subset width does not match the table");
  }
  if (subset.empty()) {
    throw Error(ErrorKind::InvalidSize, "indicator table has no entry for the empty set");
  }
  return flags_[subset.mask()];
}

IntSubsetFunction IndicatorTable::as_function() const {
  std::vector<std::int64_t> v(flags_.begin(), flags_.end());
  v[0] = 0;
  return IntSubsetFunction(universe_, std::move(v), universe_.size());
}

IndicatorTable indicator_table(const Covering& c, std::size_t lattice_cap) {
  return IndicatorTable(c, lattice_cap);
}

DegreeTable degree_table(const Covering& c, const CardinalityWindow& window,
                         std::size_t lattice_cap) {
  const std::size_t n = c.universe().size();
  const std::size_t cap = std::min(lattice_cap, kHardLatticeLimit);
  if (window_subset_count(n, window) > (std::uint64_t{1} << cap)) {
    throw Error(ErrorKind::UniverseTooLarge,
                "window admits more than 2^" + std::to_string(cap) + " subsets");
  }
  std::vector<DegreeTable::Entry> entries;
  entries.reserve(static_cast<std::size_t>(window_subset_count(n, window)));
  for (std::size_t k : window.sizes()) {
    for_each_k_subset(n, k, [&](Block b) {
      const auto d = repeat_degree(c, b);
      entries.push_back({std::move(b), d});
    });
  }
  return DegreeTable::trusted(c.universe(), window, std::move(entries));
}

Covering reconstruct_covering(const DegreeTable& table, std::size_t lattice_cap) {
  const Universe& u = table.universe();
  const std::size_t n = u.size();
  check_lattice_cap(n, lattice_cap);
  if (!table.window().covers_nonempty(n) || !table.is_complete()) {
    throw Error(ErrorKind::IncompleteTable,
                "reconstruction needs degrees of every nonempty subset");
  }

  // The empty-set slot only feeds the empty-set result, which is discarded.
  std::vector<std::int64_t> dense(std::size_t{1} << n, 0);
  for (const auto& e : table.entries()) {
    if (!e.subset.empty()) dense[e.subset.mask()] = static_cast<std::int64_t>(e.degree);
  }
  superset_mobius_inplace(std::span<std::int64_t>(dense));

  std::vector<Block> blocks;
  for (const auto& e : table.entries()) {
    if (e.subset.empty()) continue;
    const std::int64_t flag = dense[e.subset.mask()];
    if (flag != 0 && flag != 1) {
      std::string names;
      for (const auto& s : u.names_of(e.subset)) names += (names.empty() ? "" : " ") + s;
      throw InconsistentTableError("recovered indicator " + std::to_string(flag) + " at {" +
                                       names + "} is not 0 or 1",
                                   e.subset, flag);
    }
    if (flag == 1) blocks.push_back(e.subset);
  }

  SetFamily family(u, std::move(blocks));
  if (family.union_of_blocks().count() != n) {
    throw NotACoveringError("recovered family does not cover the universe", std::move(family));
  }
  return Covering::from_family(family);
}

ParityPair parity_pair(std::size_t n, std::vector<std::string> names, std::size_t lattice_cap) {
  if (n <= 1) throw Error(ErrorKind::InvalidSize, "parity pair needs n > 1");
  check_lattice_cap(n, lattice_cap);
  if (names.empty()) {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  if (names.size() != n) {
    throw Error(ErrorKind::InvalidSize, "parity pair needs exactly n element names");
  }
  Universe u(std::move(names), std::max(n, kDefaultUniverseCap));
  std::vector<Block> even;
  std::vector<Block> odd;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < limit; ++m) {
    (std::popcount(m) % 2 == 0 ? even : odd).push_back(Block::from_mask(n, m));
  }
  return ParityPair{Covering(u, std::move(even)), Covering(u, std::move(odd))};
}

bool tables_equal(const DegreeTable& t1, const DegreeTable& t2) {
  if (!t1.universe().same_elements(t2.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "tables are over different universes");
  }
  if (t1.window() != t2.window()) {
    throw Error(ErrorKind::WindowMismatch, "tables have different windows");
  }
  if (t1.size() != t2.size()) return false;
  if (t1.universe() == t2.universe()) return t1.entries() == t2.entries();
  for (const auto& e : t2.entries()) {
    auto v = t1.find(t1.universe().translate(e.subset, t2.universe()));
    if (!v || *v != e.degree) return false;
  }
  return true;
}

}  // namespace covdeg
