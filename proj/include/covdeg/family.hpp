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
#include <string>
#include <vector>

#include "covdeg/block.hpp"
#include "covdeg/universe.hpp"

namespace covdeg {

/// A duplicate-free family of blocks over a universe, held in canonical
/// order. The empty block is allowed and the union need not be the whole
/// universe.
class SetFamily {
 public:
  /// Sorts and deduplicates. Throws Error(UniverseMismatch) when a block's
  /// width differs from the universe size.
  SetFamily(Universe universe, std::vector<Block> blocks);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  bool contains(const Block& b) const;
  Block union_of_blocks() const;

  /// Blocks of this family that are not in `other`.
  SetFamily minus(const SetFamily& other) const;
  /// True when every block of this family is also in `other`.
  bool is_subfamily_of(const SetFamily& other) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
  }

 protected:
  struct Canonical {};
  SetFamily(Canonical, Universe universe, std::vector<Block> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {}

  Universe universe_;
  std::vector<Block> blocks_;
};

/// A set family with no empty block whose union is the whole universe.
class Covering : public SetFamily {
 public:
  /// Throws Error(EmptyBlock) or Error(NotACovering) when the invariants
  /// cannot hold.
  Covering(Universe universe, std::vector<Block> blocks);

  /// Validates an existing family.
  static Covering from_family(const SetFamily& family);
};

/// Builds a covering from element-name sets. Duplicate blocks merge.
Covering build_covering(const Universe& universe,
                        const std::vector<std::vector<std::string>>& raw_blocks);

/// Universe = union of the blocks, in first-appearance order.
/// Throws Error(EmptyFamily) when there is no element at all.
Universe infer_universe(const std::vector<std::vector<std::string>>& raw_blocks,
                        std::size_t cap = kDefaultUniverseCap);

/// Equality of the block sets, aligning universes by element name.
/// Throws Error(UniverseMismatch) when the element name sets differ.
bool canonical_equal(const SetFamily& a, const SetFamily& b);

/// Re-expresses a family over a universe holding the same names.
SetFamily align_to(const SetFamily& family, const Universe& target);
Covering align_to(const Covering& covering, const Universe& target);

}  // namespace covdeg
