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

#include "covdeg/block.hpp"

#include <cassert>

namespace covdeg {

namespace {

std::size_t words_for(std::size_t width) {
  return (width + Block::kWordBits - 1) / Block::kWordBits;
}

Block::Word tail_mask(std::size_t width) {
  const std::size_t rem = width % Block::kWordBits;
  return rem == 0 ? ~Block::Word{0} : ((Block::Word{1} << rem) - 1);
}

}  // namespace

Block::Block(std::size_t width) : width_(width), words_(words_for(width), 0) {}

Block Block::from_mask(std::size_t width, Word mask) {
  assert(width <= kWordBits);
  Block b(width);
  if (width > 0) {
    b.words_[0] = mask & tail_mask(width);
    b.recount();
  }
  return b;
}

Block Block::full(std::size_t width) {
  Block b(width);
  for (auto& w : b.words_) w = ~Word{0};
  if (!b.words_.empty()) b.words_.back() &= tail_mask(width);
  b.count_ = width;
  return b;
}

Block Block::of(std::size_t width, std::initializer_list<std::size_t> members) {
  Block b(width);
  for (std::size_t i : members) b.set(i);
  return b;
}

void Block::set(std::size_t i) {
  assert(i < width_);
  Word& w = words_[i / kWordBits];
  const Word bit = Word{1} << (i % kWordBits);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void Block::reset(std::size_t i) {
  assert(i < width_);
  Word& w = words_[i / kWordBits];
  const Word bit = Word{1} << (i % kWordBits);
  if ((w & bit) != 0) {
    w &= ~bit;
    --count_;
  }
}

bool Block::is_subset_of(const Block& other) const noexcept {
  assert(width_ == other.width_);
  if (count_ > other.count_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Block::intersects(const Block& other) const noexcept {
  assert(width_ == other.width_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

Block& Block::operator|=(const Block& other) noexcept {
  assert(width_ == other.width_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

Block& Block::operator&=(const Block& other) noexcept {
  assert(width_ == other.width_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  recount();
  return *this;
}

Block& Block::operator-=(const Block& other) noexcept {
  assert(width_ == other.width_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  recount();
  return *this;
}

Block Block::complement() const {
  return full(width_) - *this;
}

std::vector<std::size_t> Block::members() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Block::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(width_);
  for (Word w : words_) {
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void Block::recount() noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  count_ = c;
}

bool canonical_less(const Block& a, const Block& b) noexcept {
  if (a.count() != b.count()) return a.count() < b.count();
  assert(a.width() == b.width());
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    const Block::Word diff = a.word(w) ^ b.word(w);
    if (diff != 0) {
      const Block::Word lowest = diff & (~diff + 1);
      return (a.word(w) & lowest) != 0;
    }
  }
  return false;
}

}  // namespace covdeg
