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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "covdeg/degree_table.hpp"
#include "covdeg/family.hpp"
#include "covdeg/neighborhood.hpp"

namespace covdeg::io {

using Json = nlohmann::ordered_json;

/// Block list as read from a file, before validation.
struct RawFamily {
  std::optional<std::vector<std::string>> universe;
  std::vector<std::vector<std::string>> blocks;
};

/// Text format: an optional `# universe: e1 e2 ...` header, other `#` lines
/// are comments, every other nonblank line is one block of whitespace
/// separated element names.
RawFamily parse_family_text(std::string_view text);

/// {"universe": [...] (optional), "blocks": [[...], ...]}
RawFamily parse_family_json(std::string_view text);

/// Picks the JSON reader when the first non-space character is '{'.
RawFamily parse_family(std::string_view text);

/// Parses and validates a covering. Without a universe header the universe
/// is the union of the blocks in first-appearance order.
Covering read_covering(std::string_view text, std::size_t universe_cap = kDefaultUniverseCap);

/// Degree table format: `# universe: ...` and `# window: 1 2 ...` headers,
/// then one `e_i e_j ... : value` line per entry.
DegreeTable read_degree_table(std::string_view text,
                              std::size_t universe_cap = kDefaultUniverseCap);

/// `{a,b}` with members in universe order.
std::string format_set(const Universe& u, const Block& b);

/// Universe header followed by one block per line, canonical order.
std::string render_family(const SetFamily& f);
std::string render_degree_table(const DegreeTable& t);
/// `x : {members}` per element, universe order.
std::string render_neighborhoods(const NeighborhoodMap& m);
/// `(x,y)` per line, sorted by position.
std::string render_relation(const RelationEdges& r);

Json names_json(const Universe& u, const Block& b);
Json family_json(const SetFamily& f);
Json degree_table_json(const DegreeTable& t);

}  // namespace covdeg::io
