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

#include "covdeg/io.hpp"

#include <charconv>
#include <sstream>

#include "covdeg/error.hpp"

namespace covdeg::io {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// "# key: rest" -> rest, when the comment names key.
std::optional<std::string_view> header_value(std::string_view line, std::string_view key) {
  std::string_view body = trim(line.substr(1));
  if (body.substr(0, key.size()) != key) return std::nullopt;
  body = trim(body.substr(key.size()));
  if (body.empty() || body.front() != ':') return std::nullopt;
  return trim(body.substr(1));
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    ++line_no;
    fn(trim(line), line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

std::string json_token(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  throw Error(ErrorKind::Parse, "element names must be strings or numbers");
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

RawFamily parse_family_text(std::string_view text) {
  RawFamily raw;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line.empty()) return;
    if (line.front() == '#') {
      if (auto v = header_value(line, "universe")) {
        if (raw.universe) parse_error(line_no, "repeated universe header");
        if (!raw.blocks.empty()) parse_error(line_no, "universe header after blocks");
        raw.universe = split_ws(*v);
      }
      return;
    }
    raw.blocks.push_back(split_ws(line));
  });
  return raw;
}

RawFamily parse_family_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    throw Error(ErrorKind::Parse, "JSON covering needs a \"blocks\" array");
  }
  RawFamily raw;
  if (j.contains("universe")) {
    if (!j["universe"].is_array()) throw Error(ErrorKind::Parse, "\"universe\" must be an array");
    std::vector<std::string> names;
    for (const auto& e : j["universe"]) names.push_back(json_token(e));
    raw.universe = std::move(names);
  }
  for (const auto& b : j["blocks"]) {
    if (!b.is_array()) throw Error(ErrorKind::Parse, "each block must be an array");
    std::vector<std::string> names;
    for (const auto& e : b) names.push_back(json_token(e));
    raw.blocks.push_back(std::move(names));
  }
  return raw;
}

RawFamily parse_family(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_family_json(t);
  return parse_family_text(text);
}

Covering read_covering(std::string_view text, std::size_t universe_cap) {
  RawFamily raw = parse_family(text);
  const Universe u = raw.universe ? Universe(*raw.universe, universe_cap)
                                  : infer_universe(raw.blocks, universe_cap);
  return build_covering(u, raw.blocks);
}

DegreeTable read_degree_table(std::string_view text, std::size_t universe_cap) {
  std::optional<std::vector<std::string>> names;
  std::optional<CardinalityWindow> window;
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> rows;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line.empty()) return;
    if (line.front() == '#') {
      if (auto v = header_value(line, "universe")) {
        names = split_ws(*v);
      } else if (auto w = header_value(line, "window")) {
        std::string spaced(*w);
        for (char& ch : spaced) {
          if (ch == ',') ch = ' ';
        }
        std::vector<std::size_t> sizes;
        for (const auto& tok : split_ws(spaced)) {
          std::size_t k = 0;
          auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
          if (ec != std::errc() || p != tok.data() + tok.size()) {
            parse_error(line_no, "bad window size '" + tok + "'");
          }
          sizes.push_back(k);
        }
        window = CardinalityWindow(std::move(sizes));
      }
      return;
    }
    const auto colon = line.rfind(':');
    if (colon == std::string_view::npos) parse_error(line_no, "expected 'elements : value'");
    const std::string_view value = trim(line.substr(colon + 1));
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || p != value.data() + value.size()) {
      parse_error(line_no, "bad degree '" + std::string(value) + "'");
    }
    rows.emplace_back(split_ws(line.substr(0, colon)), v);
  });
  if (!names) throw Error(ErrorKind::Parse, "degree table needs a '# universe:' header");
  if (!window) throw Error(ErrorKind::Parse, "degree table needs a '# window:' header");

  Universe u(*names, universe_cap);
  std::vector<DegreeTable::Entry> entries;
  entries.reserve(rows.size());
  for (const auto& [elems, v] : rows) {
    Block b = u.block_of(elems);
    if (b.count() != elems.size()) throw Error(ErrorKind::Parse, "repeated element in entry");
    entries.push_back({std::move(b), v});
  }
  return DegreeTable(u, *window, std::move(entries));
}

std::string format_set(const Universe& u, const Block& b) {
  return "{" + join(u.names_of(b), ",") + "}";
}

std::string render_family(const SetFamily& f) {
  std::string out = "# universe: " + join(f.universe().names(), " ") + "\n";
  for (const auto& b : f.blocks()) out += join(f.universe().names_of(b), " ") + "\n";
  return out;
}

std::string render_degree_table(const DegreeTable& t) {
  std::string out = "# universe: " + join(t.universe().names(), " ") + "\n# window:";
  for (std::size_t k : t.window().sizes()) out += " " + std::to_string(k);
  out += "\n";
  for (const auto& e : t.entries()) {
    const std::string elems = join(t.universe().names_of(e.subset), " ");
    out += elems + (elems.empty() ? ": " : " : ") + std::to_string(e.degree) + "\n";
  }
  return out;
}

std::string render_neighborhoods(const NeighborhoodMap& m) {
  std::string out;
  for (std::size_t x = 0; x < m.neighborhoods.size(); ++x) {
    out += m.universe.name(x) + " : " + format_set(m.universe, m.neighborhoods[x]) + "\n";
  }
  return out;
}

std::string render_relation(const RelationEdges& r) {
  std::string out;
  for (const auto& [x, y] : r.pairs()) {
    out += "(" + r.universe().name(x) + "," + r.universe().name(y) + ")\n";
  }
  return out;
}

Json names_json(const Universe& u, const Block& b) { return Json(u.names_of(b)); }

Json family_json(const SetFamily& f) {
  Json j;
  j["universe"] = f.universe().names();
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) blocks.push_back(names_json(f.universe(), b));
  j["blocks"] = std::move(blocks);
  return j;
}

Json degree_table_json(const DegreeTable& t) {
  Json j;
  j["universe"] = t.universe().names();
  j["window"] = t.window().sizes();
  Json entries = Json::array();
  for (const auto& e : t.entries()) {
    Json row;
    row["set"] = names_json(t.universe(), e.subset);
    row["degree"] = e.degree;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace covdeg::io
