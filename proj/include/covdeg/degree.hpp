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
#include <optional>
#include <string_view>
#include <vector>

#include "covdeg/degree_table.hpp"
#include "covdeg/family.hpp"

namespace covdeg {

/// Number of blocks of c containing subset. The empty subset is contained in
/// every block. Throws Error(UniverseMismatch) on a width mismatch.
std::uint64_t repeat_degree(const Covering& c, const Block& subset);

/// {y : deg({x, y}) = deg({x})}. Always equal to the neighborhood of x.
Block p_set(const Covering& c, std::size_t x);
Block p_set(const Covering& c, std::string_view x);

/// Rebuilds the covering of neighborhoods from singleton and pair degrees
/// alone. Throws Error(IncompleteTable) when a required entry is missing.
Covering cov_from_pair_degrees(const DegreeTable& table);

/// Every block K containing x on which deg({x, y}) = deg({x}) for all y in K.
/// At most one block ever qualifies.
std::vector<Block> gamma_family(const Covering& c, std::size_t x);

/// The qualifying block for x, if any. Present exactly when N(x) is a block.
std::optional<Block> gamma(const Covering& c, std::size_t x);
std::optional<Block> gamma(const Covering& c, std::string_view x);

struct GammaMap {
  Universe universe;
  std::vector<std::optional<Block>> gamma;
};

GammaMap gammas(const Covering& c);

/// First element (in c1's universe order) whose P sets differ.
std::optional<std::size_t> first_p_difference(const Covering& c1, const Covering& c2);
bool same_p(const Covering& c1, const Covering& c2);

}  // namespace covdeg
