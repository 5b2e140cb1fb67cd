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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace covdeg {

/// A subset of a universe of fixed width, stored as a bitset. Bit i stands
/// for the element at position i of the universe. Universes of up to 64
/// elements fit in a single inline word; wider ones spill to the heap.
///
/// The population count is cached and kept in sync by every mutator.
class Block {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Block() = default;
  explicit Block(std::size_t width);

  /// Builds a block of width <= 64 from a raw mask. Bits above width are
  /// discarded.
  static Block from_mask(std::size_t width, Word mask);
  static Block full(std::size_t width);
  static Block of(std::size_t width, std::initializer_list<std::size_t> members);

  std::size_t width() const noexcept { return width_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  void set(std::size_t i);
  void reset(std::size_t i);

  /// Low 64 bits. Only meaningful as the whole set when width() <= 64.
  Word mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::size_t word_count() const noexcept { return words_.size(); }
  Word word(std::size_t w) const noexcept { return words_[w]; }

  bool is_subset_of(const Block& other) const noexcept;
  bool is_proper_subset_of(const Block& other) const noexcept {
    return count_ < other.count_ && is_subset_of(other);
  }
  bool intersects(const Block& other) const noexcept;

  Block& operator|=(const Block& other) noexcept;
  Block& operator&=(const Block& other) noexcept;
  /// Set difference.
  Block& operator-=(const Block& other) noexcept;

  friend Block operator|(Block a, const Block& b) noexcept { return a |= b; }
  friend Block operator&(Block a, const Block& b) noexcept { return a &= b; }
  friend Block operator-(Block a, const Block& b) noexcept { return a -= b; }

  /// Complement within the width.
  Block complement() const;

  /// Member positions in increasing order.
  std::vector<std::size_t> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(w * kWordBits + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const Block& a, const Block& b) noexcept {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

 private:
  void recount() noexcept;

  std::size_t width_ = 0;
  std::size_t count_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

/// Canonical order: by cardinality, then lexicographically on the sorted
/// member positions. For equal cardinalities the block owning the lowest
/// differing position comes first.
bool canonical_less(const Block& a, const Block& b) noexcept;

struct CanonicalLess {
  bool operator()(const Block& a, const Block& b) const noexcept {
    return canonical_less(a, b);
  }
};

struct BlockHash {
  std::size_t operator()(const Block& b) const noexcept { return b.hash(); }
};

}  // namespace covdeg
