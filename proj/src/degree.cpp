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

#include "covdeg/degree.hpp"

#include "covdeg/error.hpp"

namespace covdeg {

namespace {

void check_element(const Universe& u, std::size_t x) {
  if (x >= u.size()) {
    throw Error(ErrorKind::UnknownElement,
                "element position " + std::to_string(x) + " is outside the universe");
  }
}

// deg({x, y}) for every y; entry x holds deg({x}).
std::vector<std::uint64_t> pair_degree_row(const Covering& c, std::size_t x) {
  std::vector<std::uint64_t> row(c.universe().size(), 0);
  for (const auto& k : c.blocks()) {
    if (!k.test(x)) continue;
    k.for_each([&](std::size_t y) { ++row[y]; });
  }
  return row;
}

}  // namespace

std::uint64_t repeat_degree(const Covering& c, const Block& subset) {
  if (subset.width() != c.universe().size()) {
    throw Error(ErrorKind::UniverseMismatch, "subset width does not match the covering");
  }
  std::uint64_t n = 0;
  for (const auto& k : c.blocks()) {
    if (subset.is_subset_of(k)) ++n;
  }
  return n;
}

Block p_set(const Covering& c, std::size_t x) {
  check_element(c.universe(), x);
  const auto row = pair_degree_row(c, x);
  Block out = c.universe().empty_block();
  for (std::size_t y = 0; y < row.size(); ++y) {
    if (row[y] == row[x]) out.set(y);
  }
  return out;
}

Block p_set(const Covering& c, std::string_view x) {
  return p_set(c, c.universe().index_of(x));
}

Covering cov_from_pair_degrees(const DegreeTable& table) {
  const Universe& u = table.universe();
  const std::size_t n = u.size();
  std::vector<Block> ps;
  ps.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Block single = u.empty_block();
    single.set(x);
    const std::uint64_t own = table.at(single);
    Block p = single;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      Block pair = single;
      pair.set(y);
      if (table.at(pair) == own) p.set(y);
    }
    ps.push_back(std::move(p));
  }
  return Covering(u, std::move(ps));
}

std::vector<Block> gamma_family(const Covering& c, std::size_t x) {
  check_element(c.universe(), x);
  const auto row = pair_degree_row(c, x);
  std::vector<Block> out;
  for (const auto& k : c.blocks()) {
    if (!k.test(x)) continue;
    bool ok = true;
    k.for_each([&](std::size_t y) { ok = ok && row[y] == row[x]; });
    if (ok) out.push_back(k);
  }
  return out;
}

std::optional<Block> gamma(const Covering& c, std::size_t x) {
  auto fam = gamma_family(c, x);
  if (fam.empty()) return std::nullopt;
  return std::move(fam.front());
}

std::optional<Block> gamma(const Covering& c, std::string_view x) {
  return gamma(c, c.universe().index_of(x));
}

GammaMap gammas(const Covering& c) {
  GammaMap out{c.universe(), {}};
  out.gamma.reserve(c.universe().size());
  for (std::size_t x = 0; x < c.universe().size(); ++x) out.gamma.push_back(gamma(c, x));
  return out;
}

std::optional<std::size_t> first_p_difference(const Covering& c1, const Covering& c2) {
  if (!c1.universe().same_elements(c2.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "coverings are over different universes");
  }
  const Covering aligned = align_to(c2, c1.universe());
  for (std::size_t x = 0; x < c1.universe().size(); ++x) {
    if (p_set(c1, x) != p_set(aligned, x)) return x;
  }
  return std::nullopt;
}

bool same_p(const Covering& c1, const Covering& c2) {
  return !first_p_difference(c1, c2).has_value();
}

}  // namespace covdeg
