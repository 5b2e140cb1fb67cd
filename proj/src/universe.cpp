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

#include "covdeg/universe.hpp"

#include <algorithm>

#include "covdeg/error.hpp"

namespace covdeg {

Universe::Universe(std::vector<std::string> names, std::size_t cap) {
  if (names.empty()) {
    throw Error(ErrorKind::InvalidUniverse, "universe must be nonempty");
  }
  if (names.size() > cap) {
    throw Error(ErrorKind::UniverseTooLarge,
                "universe has " + std::to_string(names.size()) +
                    " elements, cap is " + std::to_string(cap));
  }
  auto data = std::make_shared<Data>();
  data->index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw Error(ErrorKind::InvalidUniverse, "element names must be nonempty");
    }
    if (!data->index.emplace(names[i], i).second) {
      throw Error(ErrorKind::InvalidUniverse,
                  "duplicate element '" + names[i] + "' in universe");
    }
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownElement,
              "element '" + std::string(name) + "' is not in the universe");
}

Block Universe::block_of(std::span<const std::string> names) const {
  Block b(size());
  for (const auto& n : names) b.set(index_of(n));
  return b;
}

Block Universe::block_of(std::initializer_list<std::string_view> names) const {
  Block b(size());
  for (auto n : names) b.set(index_of(n));
  return b;
}

std::vector<std::string> Universe::names_of(const Block& b) const {
  std::vector<std::string> out;
  out.reserve(b.count());
  b.for_each([&](std::size_t i) { out.push_back(data_->names[i]); });
  return out;
}

bool Universe::same_elements(const Universe& other) const {
  if (size() != other.size()) return false;
  return std::all_of(other.names().begin(), other.names().end(),
                     [&](const std::string& n) { return find(n).has_value(); });
}

Block Universe::translate(const Block& b, const Universe& from) const {
  if (*this == from) return b;
  Block out(size());
  b.for_each([&](std::size_t i) { out.set(index_of(from.name(i))); });
  return out;
}

}  // namespace covdeg
