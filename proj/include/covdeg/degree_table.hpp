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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "covdeg/block.hpp"
#include "covdeg/universe.hpp"

namespace covdeg {

/// A set of admitted subset cardinalities, kept sorted and unique.
class CardinalityWindow {
 public:
  CardinalityWindow() = default;
  CardinalityWindow(std::initializer_list<std::size_t> sizes);
  explicit CardinalityWindow(std::vector<std::size_t> sizes);

  /// {1, ..., n}.
  static CardinalityWindow full(std::size_t n);
  /// {lo, ..., hi}; empty when lo > hi.
  static CardinalityWindow range(std::size_t lo, std::size_t hi);

  bool contains(std::size_t k) const;
  /// True when every size in {1, ..., n} is admitted.
  bool covers_nonempty(std::size_t n) const;
  std::size_t max() const { return sizes_.empty() ? 0 : sizes_.back(); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  bool empty() const noexcept { return sizes_.empty(); }

  friend bool operator==(const CardinalityWindow&, const CardinalityWindow&) = default;

 private:
  std::vector<std::size_t> sizes_;
};

/// Map from subsets to repeat degrees, restricted to a cardinality window.
/// Entries are stored in canonical block order.
class DegreeTable {
 public:
  struct Entry {
    Block subset;
    std::uint64_t degree = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Validates: widths match the universe, every cardinality is in the
  /// window, no subset repeats, values do not increase from a subset to a
  /// superset one element larger, and a window covering {1..n} has every
  /// nonempty subset (Error(IncompleteTable) otherwise).
  DegreeTable(Universe universe, CardinalityWindow window, std::vector<Entry> entries);

  /// Skips validation; entries must already be canonical and consistent.
  static DegreeTable trusted(Universe universe, CardinalityWindow window,
                             std::vector<Entry> entries);

  const Universe& universe() const noexcept { return universe_; }
  const CardinalityWindow& window() const noexcept { return window_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<std::uint64_t> find(const Block& subset) const;
  /// Throws Error(IncompleteTable) when subset has no entry.
  std::uint64_t at(const Block& subset) const;

  /// True when every subset whose size lies in the window has an entry.
  bool is_complete() const;

 private:
  struct Trusted {};
  DegreeTable(Trusted, Universe universe, CardinalityWindow window, std::vector<Entry> entries)
      : universe_(std::move(universe)), window_(std::move(window)), entries_(std::move(entries)) {}

  Universe universe_;
  CardinalityWindow window_;
  std::vector<Entry> entries_;
};

/// Number of subsets of an n-set with a size in the window, saturating at
/// UINT64_MAX.
std::uint64_t window_subset_count(std::size_t n, const CardinalityWindow& window);

}  // namespace covdeg
