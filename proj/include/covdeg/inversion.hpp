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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covdeg/degree_table.hpp"
#include "covdeg/error.hpp"
#include "covdeg/family.hpp"

namespace covdeg {

/// Largest universe for which a dense table over all 2^n subsets is built.
inline constexpr std::size_t kDefaultLatticeCap = 24;

/// Throws Error(UniverseTooLarge) when n exceeds the cap.
void check_lattice_cap(std::size_t n, std::size_t lattice_cap);

// Dense kernels over arrays indexed by bitmask. The array length must be a
// power of two; one pass per bit position.

/// v[Y] <- sum of v[X] over all supersets X of Y.
template <typename T>
void superset_zeta_inplace(std::span<T> v) {
  for (std::size_t bit = 1; bit < v.size(); bit <<= 1) {
    for (std::size_t m = 0; m < v.size(); ++m) {
      if ((m & bit) == 0) v[m] += v[m | bit];
    }
  }
}

/// Inverse of superset_zeta_inplace:
/// v[V] <- sum over supersets Z of V of (-1)^(|Z|-|V|) v[Z].
template <typename T>
void superset_mobius_inplace(std::span<T> v) {
  for (std::size_t bit = 1; bit < v.size(); bit <<= 1) {
    for (std::size_t m = 0; m < v.size(); ++m) {
      if ((m & bit) == 0) v[m] -= v[m | bit];
    }
  }
}

/// A function on every subset of a universe (the empty set included),
/// stored densely by bitmask.
template <typename T>
class SubsetFunction {
 public:
  /// values.size() must be 2^|universe|; throws Error(InvalidSize) otherwise.
  SubsetFunction(Universe universe, std::vector<T> values,
                 std::size_t lattice_cap = kDefaultLatticeCap)
      : universe_(std::move(universe)), values_(std::move(values)) {
    check_lattice_cap(universe_.size(), lattice_cap);
    if (values_.size() != (std::size_t{1} << universe_.size())) {
      throw Error(ErrorKind::InvalidSize, "subset function needs 2^n values");
    }
  }

  static SubsetFunction zeros(Universe universe, std::size_t lattice_cap = kDefaultLatticeCap) {
    check_lattice_cap(universe.size(), lattice_cap);
    const std::size_t len = std::size_t{1} << universe.size();
    return SubsetFunction(std::move(universe), std::vector<T>(len, T{}), lattice_cap);
  }

  const Universe& universe() const noexcept { return universe_; }
  std::span<const T> values() const noexcept { return values_; }
  std::span<T> values() noexcept { return values_; }
  T operator[](std::uint64_t mask) const { return values_[mask]; }
  T& operator[](std::uint64_t mask) { return values_[mask]; }
  T at(const Block& b) const { return values_.at(b.mask()); }

  friend bool operator==(const SubsetFunction&, const SubsetFunction&) = default;

 private:
  Universe universe_;
  std::vector<T> values_;
};

using RealSubsetFunction = SubsetFunction<double>;
using IntSubsetFunction = SubsetFunction<std::int64_t>;

/// f(Y) = sum of g(X) over X containing Y.
RealSubsetFunction zeta_transform(const RealSubsetFunction& g);
IntSubsetFunction zeta_transform(const IntSubsetFunction& g);

/// g(V) = sum over Z containing V of (-1)^(|Z|-|V|) f(Z). Exact inverse of
/// zeta_transform.
RealSubsetFunction mobius_transform(const RealSubsetFunction& f);
IntSubsetFunction mobius_transform(const IntSubsetFunction& f);

/// Membership flags of a covering over every nonempty subset.
class IndicatorTable {
 public:
  IndicatorTable(const Covering& c, std::size_t lattice_cap = kDefaultLatticeCap);

  const Universe& universe() const noexcept { return universe_; }
  /// Throws Error(InvalidSize) for the empty subset, which has no entry.
  std::uint8_t at(const Block& subset) const;
  std::uint8_t at_mask(std::uint64_t mask) const { return flags_.at(mask); }
  /// Number of entries: 2^n - 1.
  std::size_t size() const noexcept { return flags_.size() - 1; }
  /// Flags as a dense integer function with 0 at the empty set.
  IntSubsetFunction as_function() const;

  friend bool operator==(const IndicatorTable& a, const IndicatorTable& b) {
    return a.universe_ == b.universe_ && a.flags_ == b.flags_;
  }

 private:
  Universe universe_;
  std::vector<std::uint8_t> flags_;
};

IndicatorTable indicator_table(const Covering& c, std::size_t lattice_cap = kDefaultLatticeCap);

/// Degrees of every subset whose size is in the window, each counted
/// directly over the blocks. Throws Error(UniverseTooLarge) when the window
/// admits more than 2^lattice_cap subsets.
DegreeTable degree_table(const Covering& c, const CardinalityWindow& window,
                         std::size_t lattice_cap = kDefaultLatticeCap);

/// Raised when the alternating sum recovers a value outside {0, 1}. Reports
/// the first such subset in canonical order.
class InconsistentTableError : public Error {
 public:
  InconsistentTableError(const std::string& message, Block subset, std::int64_t value)
      : Error(ErrorKind::InconsistentTable, message), subset_(std::move(subset)), value_(value) {}
  const Block& subset() const noexcept { return subset_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  Block subset_;
  std::int64_t value_;
};

/// Raised when the recovered family does not cover the universe.
class NotACoveringError : public Error {
 public:
  NotACoveringError(const std::string& message, SetFamily recovered)
      : Error(ErrorKind::NotACovering, message), recovered_(std::move(recovered)) {}
  const SetFamily& recovered() const noexcept { return recovered_; }

 private:
  SetFamily recovered_;
};

/// Recovers the unique covering with the given full degree table. The table
/// must cover sizes 1..n; an entry for the empty set is ignored.
Covering reconstruct_covering(const DegreeTable& table,
                              std::size_t lattice_cap = kDefaultLatticeCap);

struct ParityPair {
  /// Nonempty subsets of even size.
  Covering even;
  /// Subsets of odd size.
  Covering odd;
};

/// The two coverings whose degree tables agree on sizes 1..n-1. Names
/// default to x1..xn. Throws Error(InvalidSize) when n <= 1 or the name
/// count differs from n.
ParityPair parity_pair(std::size_t n, std::vector<std::string> names = {},
                       std::size_t lattice_cap = kDefaultLatticeCap);

/// Entry-for-entry equality. Throws Error(UniverseMismatch) or
/// Error(WindowMismatch).
bool tables_equal(const DegreeTable& t1, const DegreeTable& t2);

}  // namespace covdeg
