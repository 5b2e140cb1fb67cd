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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "covdeg/family.hpp"

namespace covdeg {

/// N(x) for every element, indexed by universe position.
struct NeighborhoodMap {
  Universe universe;
  std::vector<Block> neighborhoods;

  const Block& of(std::size_t x) const { return neighborhoods.at(x); }
};

/// Binary relation over a universe stored as adjacency rows: row x holds
/// every y with (x, y) in the relation.
class RelationEdges {
 public:
  RelationEdges(Universe universe, std::vector<Block> rows);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Block>& rows() const noexcept { return rows_; }
  bool contains(std::size_t x, std::size_t y) const { return rows_.at(x).test(y); }
  std::size_t size() const;

  /// All pairs, sorted by (x, y) position.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const RelationEdges& a, const RelationEdges& b) {
    return a.universe_ == b.universe_ && a.rows_ == b.rows_;
  }

 private:
  Universe universe_;
  std::vector<Block> rows_;
};

/// All neighborhoods in one pass over the blocks.
NeighborhoodMap neighborhoods(const Covering& c);

/// Intersection of every block containing x.
Block neighborhood(const Covering& c, std::size_t x);
Block neighborhood(const Covering& c, std::string_view x);

/// The covering of neighborhoods {N(x) : x in U}.
Covering cov(const Covering& c);

/// {(x, y) : y in N(x)}.
RelationEdges relation(const Covering& c);

/// {y : (x, y) in r}.
Block successor_neighborhood(const RelationEdges& r, std::size_t x);
Block successor_neighborhood(const RelationEdges& r, std::string_view x);

/// First element (in c1's universe order) whose neighborhoods differ, if any.
/// Throws Error(UniverseMismatch) unless both coverings share element names.
std::optional<std::size_t> first_neighborhood_difference(const Covering& c1,
                                                         const Covering& c2);

/// True iff both coverings induce the same relation, decided by comparing
/// neighborhoods element by element.
bool same_relation(const Covering& c1, const Covering& c2);

}  // namespace covdeg
