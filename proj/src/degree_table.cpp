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

#include "covdeg/degree_table.hpp"

#include <algorithm>
#include <limits>

#include "covdeg/error.hpp"

namespace covdeg {

CardinalityWindow::CardinalityWindow(std::initializer_list<std::size_t> sizes)
    : CardinalityWindow(std::vector<std::size_t>(sizes)) {}

CardinalityWindow::CardinalityWindow(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  std::sort(sizes_.begin(), sizes_.end());
  sizes_.erase(std::unique(sizes_.begin(), sizes_.end()), sizes_.end());
}

CardinalityWindow CardinalityWindow::full(std::size_t n) { return range(1, n); }

CardinalityWindow CardinalityWindow::range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> s;
  for (std::size_t k = lo; k <= hi; ++k) s.push_back(k);
  return CardinalityWindow(std::move(s));
}

bool CardinalityWindow::contains(std::size_t k) const {
  return std::binary_search(sizes_.begin(), sizes_.end(), k);
}

bool CardinalityWindow::covers_nonempty(std::size_t n) const {
  for (std::size_t k = 1; k <= n; ++k) {
    if (!contains(k)) return false;
  }
  return true;
}

std::uint64_t window_subset_count(std::size_t n, const CardinalityWindow& window) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t k : window.sizes()) {
    if (k > n) continue;
    // C(n, k) computed incrementally; C(n, i) * (n - i) is divisible by i + 1.
    unsigned __int128 binom = 1;
    for (std::size_t i = 0; i < k; ++i) {
      binom = binom * (n - i) / (i + 1);
      if (binom > kMax) return kMax;
    }
    if (total > kMax - static_cast<std::uint64_t>(binom)) return kMax;
    total += static_cast<std::uint64_t>(binom);
  }
  return total;
}

DegreeTable DegreeTable::trusted(Universe universe, CardinalityWindow window,
                                 std::vector<Entry> entries) {
  return DegreeTable(Trusted{}, std::move(universe), std::move(window), std::move(entries));
}

DegreeTable::DegreeTable(Universe universe, CardinalityWindow window, std::vector<Entry> entries)
    : universe_(std::move(universe)), window_(std::move(window)), entries_(std::move(entries)) {
  const std::size_t n = universe_.size();
  for (const auto& e : entries_) {
    if (e.subset.width() != n) {
      throw Error(ErrorKind::UniverseMismatch, "table entry width does not match universe");
    }
    if (!window_.contains(e.subset.count())) {
      throw Error(ErrorKind::WindowMismatch,
                  "entry of size " + std::to_string(e.subset.count()) + " lies outside the window");
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return canonical_less(a.subset, b.subset); });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].subset == entries_[i - 1].subset) {
      throw Error(ErrorKind::Parse, "duplicate table entry");
    }
  }
  if (window_.covers_nonempty(n) && !is_complete()) {
    throw Error(ErrorKind::IncompleteTable,
                "window covers every nonempty size but the table is missing entries");
  }
  for (const auto& e : entries_) {
    for (std::size_t y = 0; y < n; ++y) {
      if (e.subset.test(y)) continue;
      Block bigger = e.subset;
      bigger.set(y);
      if (auto v = find(bigger); v && *v > e.degree) {
        throw Error(ErrorKind::InconsistentTable,
                    "degree increases from a subset to its superset");
      }
    }
  }
}

std::optional<std::uint64_t> DegreeTable::find(const Block& subset) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), subset,
      [](const Entry& e, const Block& b) { return canonical_less(e.subset, b); });
  if (it == entries_.end() || it->subset != subset) return std::nullopt;
  return it->degree;
}

std::uint64_t DegreeTable::at(const Block& subset) const {
  if (auto v = find(subset)) return *v;
  std::string names;
  for (const auto& s : universe_.names_of(subset)) names += (names.empty() ? "" : " ") + s;
  throw Error(ErrorKind::IncompleteTable, "table has no entry for {" + names + "}");
}

bool DegreeTable::is_complete() const {
  return entries_.size() == window_subset_count(universe_.size(), window_);
}

}  // namespace covdeg
