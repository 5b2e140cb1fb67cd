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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "covdeg/family.hpp"
#include "covdeg/inversion.hpp"
#include "covdeg/io.hpp"
#include "covdeg/reduct.hpp"

namespace covdeg {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  /// First failure only.
  std::string counterexample;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  /// Verdict lines that are facts about the input rather than properties,
  /// e.g. whether two tables agree.
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<PropertyResult> properties;

  bool passed() const;
  std::string render() const;
  io::Json to_json() const;
};

/// Implementations under test. Swapping one for a broken variant must make
/// the suite fail.
struct VerifyHooks {
  std::function<ReductReport(const Covering&)> reduct;
  std::function<Covering(const Covering&)> cov;
  std::function<SetFamily(const SetFamily&)> reducible_elements;

  static VerifyHooks library();
};

struct VerifyOptions {
  VerifyHooks hooks = VerifyHooks::library();
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Lattice properties run only up to this universe size.
  std::size_t max_lattice_n = 16;
  /// Brute-force subfamily oracles run only up to this family size.
  std::size_t max_brute_family = 14;
  /// Parity-pair properties run only up to this universe size.
  std::size_t max_parity_n = 10;
};

/// Checks every module invariant on c and on `iterations` seeded variants:
/// odd iterations add unions of existing blocks to c, even iterations draw
/// an unrelated random covering over the same universe.
VerifyReport verify_suite(const Covering& c, std::uint64_t seed, std::size_t iterations,
                          const VerifyOptions& options = {});

/// Pair checks: the three-way equivalence of relation, P sets and covering
/// of neighborhoods, table injectivity, and the parity-pair
/// characterization of equal partial tables.
VerifyReport verify_pair(const Covering& c1, const Covering& c2,
                         const VerifyOptions& options = {});

}  // namespace covdeg
