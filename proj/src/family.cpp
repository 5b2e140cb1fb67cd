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

#include "covdeg/family.hpp"

#include <algorithm>
#include <unordered_set>

#include "covdeg/error.hpp"

namespace covdeg {

namespace {

std::vector<Block> canonicalize(const Universe& universe, std::vector<Block> blocks) {
  for (const auto& b : blocks) {
    if (b.width() != universe.size()) {
      throw Error(ErrorKind::UniverseMismatch,
                  "block width " + std::to_string(b.width()) +
                      " does not match universe size " + std::to_string(universe.size()));
    }
  }
  std::sort(blocks.begin(), blocks.end(), CanonicalLess{});
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

void require_same_elements(const Universe& a, const Universe& b) {
  if (!a.same_elements(b)) {
    throw Error(ErrorKind::UniverseMismatch, "families are over different universes");
  }
}

}  // namespace

SetFamily::SetFamily(Universe universe, std::vector<Block> blocks)
    : universe_(std::move(universe)) {
  blocks_ = canonicalize(universe_, std::move(blocks));
}

bool SetFamily::contains(const Block& b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b, CanonicalLess{});
}

Block SetFamily::union_of_blocks() const {
  Block acc = universe_.empty_block();
  for (const auto& b : blocks_) acc |= b;
  return acc;
}

SetFamily SetFamily::minus(const SetFamily& other) const {
  std::vector<Block> kept;
  for (const auto& b : blocks_) {
    if (!other.contains(b)) kept.push_back(b);
  }
  return SetFamily(Canonical{}, universe_, std::move(kept));
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [&](const Block& b) { return other.contains(b); });
}

Covering::Covering(Universe universe, std::vector<Block> blocks)
    : SetFamily(std::move(universe), std::move(blocks)) {
  if (!blocks_.empty() && blocks_.front().empty()) {
    throw Error(ErrorKind::EmptyBlock, "a covering cannot contain the empty block");
  }
  if (union_of_blocks().count() != universe_.size()) {
    const Block missing = universe_.full_block() - union_of_blocks();
    throw Error(ErrorKind::NotACovering,
                "blocks do not cover element '" + universe_.name(missing.members().front()) +
                    "'");
  }
}

Covering Covering::from_family(const SetFamily& family) {
  return Covering(family.universe(), family.blocks());
}

Covering build_covering(const Universe& universe,
                        const std::vector<std::vector<std::string>>& raw_blocks) {
  std::vector<Block> blocks;
  blocks.reserve(raw_blocks.size());
  for (const auto& raw : raw_blocks) {
    if (raw.empty()) throw Error(ErrorKind::EmptyBlock, "empty block in input");
    blocks.push_back(universe.block_of(raw));
  }
  return Covering(universe, std::move(blocks));
}

Universe infer_universe(const std::vector<std::vector<std::string>>& raw_blocks,
                        std::size_t cap) {
  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  for (const auto& raw : raw_blocks) {
    for (const auto& n : raw) {
      if (seen.insert(n).second) names.push_back(n);
    }
  }
  if (names.empty()) throw Error(ErrorKind::EmptyFamily, "no elements in block family");
  return Universe(std::move(names), cap);
}

SetFamily align_to(const SetFamily& family, const Universe& target) {
  if (family.universe() == target) return family;
  require_same_elements(family.universe(), target);
  std::vector<Block> blocks;
  blocks.reserve(family.size());
  for (const auto& b : family.blocks()) blocks.push_back(target.translate(b, family.universe()));
  return SetFamily(target, std::move(blocks));
}

Covering align_to(const Covering& covering, const Universe& target) {
  if (covering.universe() == target) return covering;
  return Covering::from_family(align_to(static_cast<const SetFamily&>(covering), target));
}

bool canonical_equal(const SetFamily& a, const SetFamily& b) {
  require_same_elements(a.universe(), b.universe());
  if (a.size() != b.size()) return false;
  return align_to(b, a.universe()).blocks() == a.blocks();
}

}  // namespace covdeg
