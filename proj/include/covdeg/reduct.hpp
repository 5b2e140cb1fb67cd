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
#include <vector>

#include "covdeg/family.hpp"

namespace covdeg {

/// Whether k is the union of some subfamily of family (the empty subfamily
/// gives the empty set).
///
/// Any subfamily with union k consists of subsets of k, and adding further
/// subsets of k never overshoots, so k is reachable iff the union of all
/// family blocks contained in k equals k.
bool in_union_closure(const SetFamily& family, const Block& k);

/// Blocks K that are unions of other blocks of the family.
SetFamily reducible_elements(const SetFamily& family);

struct ReductReport {
  Covering reduct;
  /// Removed blocks in canonical order.
  std::vector<Block> removed;
  bool cov_equals_reduct = false;
  /// An element whose gamma is empty when cov_equals_reduct is false.
  std::optional<std::size_t> gamma_witness;
};

/// Removes every reducible block at once.
ReductReport reduct(const Covering& c);

/// b is the reduct of c iff every block of c is a union of blocks of b and
/// no block of b can be dropped without losing that. b must be a subfamily
/// of c, otherwise the answer is false.
bool is_reduct_of(const SetFamily& b, const Covering& c);

struct CovReductVerdict {
  bool equal = false;
  std::optional<std::size_t> witness;
};

/// Whether the covering of neighborhoods is the reduct, decided by the
/// gamma criterion. On a negative verdict the first element with an empty
/// gamma is returned as witness.
CovReductVerdict cov_is_reduct(const Covering& c);

}  // namespace covdeg
