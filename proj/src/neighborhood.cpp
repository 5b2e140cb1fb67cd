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

#include "covdeg/neighborhood.hpp"

#include "covdeg/error.hpp"

namespace covdeg {

namespace {

void check_element(const Universe& u, std::size_t x) {
  if (x >= u.size()) {
    throw Error(ErrorKind::UnknownElement,
                "element position " + std::to_string(x) + " is outside the universe");
  }
}

}  // namespace

RelationEdges::RelationEdges(Universe universe, std::vector<Block> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
  if (rows_.size() != universe_.size()) {
    throw Error(ErrorKind::UniverseMismatch, "relation needs one row per element");
  }
  for (const auto& r : rows_) {
    if (r.width() != universe_.size()) {
      throw Error(ErrorKind::UniverseMismatch, "relation row width mismatch");
    }
  }
}

std::size_t RelationEdges::size() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> RelationEdges::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(size());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  }
  return out;
}

NeighborhoodMap neighborhoods(const Covering& c) {
  const Universe& u = c.universe();
  // Every element lies in some block, so each accumulator is narrowed at
  // least once.
  std::vector<Block> acc(u.size(), u.full_block());
  for (const auto& k : c.blocks()) {
    k.for_each([&](std::size_t x) { acc[x] &= k; });
  }
  return NeighborhoodMap{u, std::move(acc)};
}

Block neighborhood(const Covering& c, std::size_t x) {
  check_element(c.universe(), x);
  Block acc = c.universe().full_block();
  for (const auto& k : c.blocks()) {
    if (k.test(x)) acc &= k;
  }
  return acc;
}

Block neighborhood(const Covering& c, std::string_view x) {
  return neighborhood(c, c.universe().index_of(x));
}

Covering cov(const Covering& c) {
  auto map = neighborhoods(c);
  return Covering(c.universe(), std::move(map.neighborhoods));
}

RelationEdges relation(const Covering& c) {
  auto map = neighborhoods(c);
  return RelationEdges(c.universe(), std::move(map.neighborhoods));
}

Block successor_neighborhood(const RelationEdges& r, std::size_t x) {
  check_element(r.universe(), x);
  return r.rows()[x];
}

Block successor_neighborhood(const RelationEdges& r, std::string_view x) {
  return successor_neighborhood(r, r.universe().index_of(x));
}

std::optional<std::size_t> first_neighborhood_difference(const Covering& c1,
                                                         const Covering& c2) {
  if (!c1.universe().same_elements(c2.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "coverings are over different universes");
  }
  const Covering aligned = align_to(c2, c1.universe());
  const auto n1 = neighborhoods(c1);
  const auto n2 = neighborhoods(aligned);
  for (std::size_t x = 0; x < n1.neighborhoods.size(); ++x) {
    if (n1.neighborhoods[x] != n2.neighborhoods[x]) return x;
  }
  return std::nullopt;
}

bool same_relation(const Covering& c1, const Covering& c2) {
  return !first_neighborhood_difference(c1, c2).has_value();
}

}  // namespace covdeg
