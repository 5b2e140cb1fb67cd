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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covdeg/block.hpp"

namespace covdeg {

/// Default upper bound on the number of elements in a universe.
inline constexpr std::size_t kDefaultUniverseCap = 64;

/// An ordered, interned set of element names. Position i of the universe is
/// bit i of every Block built over it. Copies share the same immutable data.
class Universe {
 public:
  /// Throws Error(InvalidUniverse) on an empty list or duplicate names, and
  /// Error(UniverseTooLarge) when names.size() exceeds cap.
  explicit Universe(std::vector<std::string> names,
                    std::size_t cap = kDefaultUniverseCap);

  std::size_t size() const noexcept { return data_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error(UnknownElement) when name is not part of the universe.
  std::size_t index_of(std::string_view name) const;

  Block empty_block() const { return Block(size()); }
  Block full_block() const { return Block::full(size()); }
  /// Throws Error(UnknownElement) for names outside the universe.
  Block block_of(std::span<const std::string> names) const;
  Block block_of(std::initializer_list<std::string_view> names) const;

  /// Member names of b in universe order.
  std::vector<std::string> names_of(const Block& b) const;

  /// True when both universes hold the same names, in any order.
  bool same_elements(const Universe& other) const;

  /// Maps b, a block over `from`, onto this universe by name.
  Block translate(const Block& b, const Universe& from) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace covdeg
