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

#include "covdeg/reduct.hpp"

#include "covdeg/degree.hpp"
#include "covdeg/error.hpp"

namespace covdeg {

namespace {

bool union_of_proper_subsets_equals(const std::vector<Block>& blocks, const Block& k) {
  Block acc(k.width());
  for (const auto& l : blocks) {
    if (l.is_proper_subset_of(k)) acc |= l;
  }
  return acc == k;
}

}  // namespace

bool in_union_closure(const SetFamily& family, const Block& k) {
  if (k.width() != family.universe().size()) {
    throw Error(ErrorKind::UniverseMismatch, "block width does not match the family");
  }
  Block acc(k.width());
  for (const auto& l : family.blocks()) {
    if (l.is_subset_of(k)) acc |= l;
  }
  return acc == k;
}

SetFamily reducible_elements(const SetFamily& family) {
  std::vector<Block> out;
  for (const auto& k : family.blocks()) {
    // The empty block is the union of the empty subfamily.
    if (k.empty() || union_of_proper_subsets_equals(family.blocks(), k)) out.push_back(k);
  }
  return SetFamily(family.universe(), std::move(out));
}

ReductReport reduct(const Covering& c) {
  const SetFamily removable = reducible_elements(c);
  const SetFamily kept = c.minus(removable);
  const auto verdict = cov_is_reduct(c);
  return ReductReport{Covering::from_family(kept), removable.blocks(), verdict.equal,
                      verdict.witness};
}

bool is_reduct_of(const SetFamily& b, const Covering& c) {
  if (!b.universe().same_elements(c.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "families are over different universes");
  }
  const SetFamily aligned = align_to(b, c.universe());
  if (!aligned.is_subfamily_of(c)) return false;
  for (const auto& k : c.blocks()) {
    if (!in_union_closure(aligned, k)) return false;
  }
  for (const auto& dropped : aligned.blocks()) {
    std::vector<Block> rest;
    rest.reserve(aligned.size() - 1);
    for (const auto& l : aligned.blocks()) {
      if (l != dropped) rest.push_back(l);
    }
    const SetFamily smaller(c.universe(), std::move(rest));
    bool still_generates = true;
    for (const auto& k : c.blocks()) {
      if (!in_union_closure(smaller, k)) {
        still_generates = false;
        break;
      }
    }
    if (still_generates) return false;
  }
  return true;
}

CovReductVerdict cov_is_reduct(const Covering& c) {
  for (std::size_t x = 0; x < c.universe().size(); ++x) {
    if (!gamma(c, x)) return CovReductVerdict{false, x};
  }
  return CovReductVerdict{true, std::nullopt};
}

}  // namespace covdeg
