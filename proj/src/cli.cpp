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

#include "covdeg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "covdeg/bench.hpp"
#include "covdeg/degree.hpp"
#include "covdeg/error.hpp"
#include "covdeg/inversion.hpp"
#include "covdeg/io.hpp"
#include "covdeg/neighborhood.hpp"
#include "covdeg/reduct.hpp"
#include "covdeg/verify.hpp"

namespace covdeg::cli {

namespace {

using io::Json;

struct Settings {
  bool json = false;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t universe_cap = kDefaultUniverseCap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Covering load_covering(const std::string& path, const Settings& s) {
  return io::read_covering(read_file(path), s.universe_cap);
}

std::vector<std::string> split_list(const std::string& s) {
  std::string spaced = s;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

CardinalityWindow parse_window(const std::string& s) {
  std::vector<std::size_t> sizes;
  for (const auto& tok : split_list(s)) {
    std::size_t k = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw Error(ErrorKind::Parse, "bad window size '" + tok + "'");
    }
    sizes.push_back(k);
  }
  if (sizes.empty()) throw Error(ErrorKind::Parse, "empty window");
  return CardinalityWindow(std::move(sizes));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string verdict_word(bool equal) { return equal ? "equal" : "differ"; }

CommandOutcome cmd_neigh(const std::string& file, const Settings& s) {
  const Covering c = load_covering(file, s);
  const auto map = neighborhoods(c);
  if (!s.json) return {kOk, io::render_neighborhoods(map), {}};
  Json rows = Json::array();
  for (std::size_t x = 0; x < map.neighborhoods.size(); ++x) {
    Json row;
    row["element"] = c.universe().name(x);
    row["neighborhood"] = io::names_json(c.universe(), map.neighborhoods[x]);
    rows.push_back(std::move(row));
  }
  Json j;
  j["universe"] = c.universe().names();
  j["neighborhoods"] = std::move(rows);
  return {kOk, dump(j), {}};
}

CommandOutcome cmd_cov(const std::string& file, const Settings& s) {
  const Covering c = cov(load_covering(file, s));
  return {kOk, s.json ? dump(io::family_json(c)) : io::render_family(c), {}};
}

CommandOutcome cmd_relation(const std::string& file, const Settings& s) {
  const RelationEdges r = relation(load_covering(file, s));
  if (!s.json) return {kOk, io::render_relation(r), {}};
  Json pairs = Json::array();
  for (const auto& [x, y] : r.pairs()) {
    pairs.push_back(Json::array({r.universe().name(x), r.universe().name(y)}));
  }
  Json j;
  j["universe"] = r.universe().names();
  j["pairs"] = std::move(pairs);
  return {kOk, dump(j), {}};
}

CommandOutcome cmd_gamma(const std::string& file, const Settings& s) {
  const Covering c = load_covering(file, s);
  const GammaMap g = gammas(c);
  const Universe& u = c.universe();
  if (!s.json) {
    std::string out;
    for (std::size_t x = 0; x < u.size(); ++x) {
      out += u.name(x) + " : " + (g.gamma[x] ? io::format_set(u, *g.gamma[x]) : "-") + "\n";
    }
    return {kOk, out, {}};
  }
  Json rows = Json::array();
  for (std::size_t x = 0; x < u.size(); ++x) {
    Json row;
    row["element"] = u.name(x);
    row["block"] = g.gamma[x] ? io::names_json(u, *g.gamma[x]) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  Json j;
  j["universe"] = u.names();
  j["gamma"] = std::move(rows);
  return {kOk, dump(j), {}};
}

std::string witness_suffix(const Universe& u, const std::optional<std::size_t>& w) {
  return w ? " (witness: " + u.name(*w) + ")" : "";
}

CommandOutcome cmd_reduct(const std::string& file, const Settings& s) {
  const Covering c = load_covering(file, s);
  const ReductReport rep = reduct(c);
  const Universe& u = c.universe();
  if (s.json) {
    Json j;
    j["universe"] = u.names();
    Json kept = Json::array();
    for (const auto& b : rep.reduct.blocks()) kept.push_back(io::names_json(u, b));
    Json removed = Json::array();
    for (const auto& b : rep.removed) removed.push_back(io::names_json(u, b));
    j["reduct"] = std::move(kept);
    j["removed"] = std::move(removed);
    j["cov_equals_reduct"] = rep.cov_equals_reduct;
    j["witness"] = rep.gamma_witness ? Json(u.name(*rep.gamma_witness)) : Json(nullptr);
    return {kOk, dump(j), {}};
  }
  std::string out = "reduct:\n";
  for (const auto& b : rep.reduct.blocks()) out += io::format_set(u, b) + "\n";
  out += "removed:\n";
  for (const auto& b : rep.removed) out += io::format_set(u, b) + "\n";
  out += std::string("cov==reduct: ") + (rep.cov_equals_reduct ? "yes" : "no") +
         witness_suffix(u, rep.gamma_witness) + "\n";
  return {kOk, out, {}};
}

CommandOutcome cmd_degree(const std::string& file, const std::string& window,
                          const std::string& set, const Settings& s) {
  const Covering c = load_covering(file, s);
  if (!set.empty()) {
    const Block b = c.universe().block_of(split_list(set));
    const auto d = repeat_degree(c, b);
    if (!s.json) return {kOk, std::to_string(d) + "\n", {}};
    Json j;
    j["set"] = io::names_json(c.universe(), b);
    j["degree"] = d;
    return {kOk, dump(j), {}};
  }
  const CardinalityWindow w =
      window.empty() ? CardinalityWindow::full(c.universe().size()) : parse_window(window);
  const DegreeTable t = degree_table(c, w, s.lattice_cap);
  return {kOk, s.json ? dump(io::degree_table_json(t)) : io::render_degree_table(t), {}};
}

CommandOutcome cmd_same(const std::string& f1, const std::string& f2, const Settings& s) {
  const Covering c1 = load_covering(f1, s);
  const Covering c2 = load_covering(f2, s);
  const auto r_diff = first_neighborhood_difference(c1, c2);
  const bool cov_eq = canonical_equal(cov(c1), cov(c2));
  const auto p_diff = first_p_difference(c1, c2);
  const bool all = !r_diff && cov_eq && !p_diff;
  const auto witness = r_diff ? r_diff : p_diff;
  const int code = all ? kOk : kNegative;
  if (s.json) {
    Json j;
    j["relation"] = verdict_word(!r_diff);
    j["cov"] = verdict_word(cov_eq);
    j["P"] = verdict_word(!p_diff);
    j["witness"] = witness ? Json(c1.universe().name(*witness)) : Json(nullptr);
    return {code, dump(j), {}};
  }
  std::string out = "relation: " + verdict_word(!r_diff) + ", cov: " + verdict_word(cov_eq) +
                    ", P: " + verdict_word(!p_diff) + "\n";
  if (witness) out += "witness: " + c1.universe().name(*witness) + "\n";
  return {code, out, {}};
}

CommandOutcome cmd_cov_is_reduct(const std::string& file, const Settings& s) {
  const Covering c = load_covering(file, s);
  const auto v = cov_is_reduct(c);
  const int code = v.equal ? kOk : kNegative;
  if (s.json) {
    Json j;
    j["cov_equals_reduct"] = v.equal;
    j["witness"] = v.witness ? Json(c.universe().name(*v.witness)) : Json(nullptr);
    return {code, dump(j), {}};
  }
  return {code,
          std::string("cov==reduct: ") + (v.equal ? "yes" : "no") +
              witness_suffix(c.universe(), v.witness) + "\n",
          {}};
}

CommandOutcome cmd_invert(const std::string& file, const Settings& s) {
  const std::string text = read_file(file);
  std::optional<DegreeTable> parsed;
  try {
    parsed.emplace(io::read_degree_table(text, s.universe_cap));
  } catch (const Error& e) {
    // Well formed but not monotone: no covering has this table.
    if (e.kind() != ErrorKind::InconsistentTable) throw;
    return {kNegative, {}, std::string("inconsistent table: ") + e.what() + "\n"};
  }
  const DegreeTable& t = *parsed;
  try {
    const Covering c = reconstruct_covering(t, s.lattice_cap);
    return {kOk, s.json ? dump(io::family_json(c)) : io::render_family(c), {}};
  } catch (const InconsistentTableError& e) {
    return {kNegative, {}, std::string("inconsistent table: ") + e.what() + "\n"};
  } catch (const NotACoveringError& e) {
    const SetFamily& f = e.recovered();
    return {kNegative, s.json ? dump(io::family_json(f)) : io::render_family(f),
            std::string("not a covering: ") + e.what() + "\n"};
  }
}

CommandOutcome cmd_parity(std::size_t n, const std::string& names, const Settings& s) {
  const ParityPair pp = parity_pair(n, split_list(names), s.lattice_cap);
  const Universe& u = pp.even.universe();
  if (s.json) {
    Json j;
    j["universe"] = u.names();
    j["even"] = io::family_json(pp.even)["blocks"];
    j["odd"] = io::family_json(pp.odd)["blocks"];
    return {kOk, dump(j), {}};
  }
  std::string out = "# universe:";
  for (const auto& name : u.names()) out += " " + name;
  out += "\n# even\n";
  auto body = [](const Covering& c) {
    const std::string text = io::render_family(c);
    return text.substr(text.find('\n') + 1);
  };
  out += body(pp.even) + "# odd\n" + body(pp.odd);
  return {kOk, out, {}};
}

CommandOutcome cmd_verify(const std::vector<std::string>& files, std::uint64_t seed,
                          std::size_t iters, const Settings& s) {
  VerifyOptions opts;
  opts.lattice_cap = s.lattice_cap;
  const Covering c = load_covering(files[0], s);
  VerifyReport report = verify_suite(c, seed, iters, opts);
  if (files.size() == 2) {
    const VerifyReport pair = verify_pair(c, load_covering(files[1], s), opts);
    report.facts = pair.facts;
    report.properties.insert(report.properties.end(), pair.properties.begin(),
                             pair.properties.end());
  }
  const int code = report.passed() ? kOk : kNegative;
  return {code, s.json ? dump(report.to_json()) : report.render(), {}};
}

CommandOutcome cmd_bench(std::size_t n, std::size_t invert_n, std::uint64_t seed,
                         const Settings& s) {
  const TransformBenchmark tb = benchmark_transforms(n, seed);
  const InversionBenchmark ib = benchmark_inversion(invert_n, seed, s.lattice_cap);
  const int code = tb.outputs_match && ib.roundtrip_ok ? kOk : kNegative;
  if (s.json) {
    Json j;
    j["transform"] = {{"n", tb.n},
                      {"naive_seconds", tb.naive_seconds},
                      {"fast_seconds", tb.fast_seconds},
                      {"speedup", tb.speedup},
                      {"outputs_match", tb.outputs_match}};
    j["inversion"] = {{"n", ib.n},
                      {"blocks", ib.blocks},
                      {"table_seconds", ib.table_seconds},
                      {"reconstruct_seconds", ib.reconstruct_seconds},
                      {"roundtrip_ok", ib.roundtrip_ok}};
    return {code, dump(j), {}};
  }
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << "transform n=" << tb.n << " naive=" << tb.naive_seconds << "s fast=" << tb.fast_seconds
      << "s speedup=" << std::setprecision(1) << tb.speedup
      << "x match=" << (tb.outputs_match ? "yes" : "no") << "\n";
  out << std::setprecision(6);
  out << "inversion n=" << ib.n << " blocks=" << ib.blocks << " table=" << ib.table_seconds
      << "s reconstruct=" << ib.reconstruct_seconds
      << "s roundtrip=" << (ib.roundtrip_ok ? "yes" : "no") << "\n";
  return {code, out.str(), {}};
}

std::size_t lattice_cap_from_env() {
  const char* v = std::getenv(kLatticeCapEnv);
  if (v == nullptr || *v == '\0') return kDefaultLatticeCap;
  std::size_t cap = 0;
  const std::string_view sv(v);
  auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), cap);
  if (ec != std::errc() || p != sv.data() + sv.size()) {
    throw Error(ErrorKind::Parse, std::string("bad ") + kLatticeCapEnv + " value '" + v + "'");
  }
  return cap;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  Settings s;
  CLI::App app{"Repeat-degree calculus for coverings of finite universes", "covdeg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every command");
  app.add_flag("--json", s.json, "Structured JSON output");
  std::optional<std::size_t> lattice_cap;
  app.add_option("--lattice-cap", lattice_cap,
                 "Largest universe for dense subset-lattice tables (default 24, env " +
                     std::string(kLatticeCapEnv) + ")");
  app.add_option("--universe-cap", s.universe_cap, "Largest accepted universe (default 64)");

  std::string file;
  std::string file2;
  std::vector<std::string> files;
  std::string window;
  std::string set;
  std::string names;
  std::size_t n = 0;
  std::size_t invert_n = 20;
  std::uint64_t seed = 1;
  std::size_t iters = 20;

  std::function<CommandOutcome()> action;
  auto single = [&](const char* name, const char* help,
                    CommandOutcome (*fn)(const std::string&, const Settings&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "Covering file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(file, s); }; });
  };
  single("neigh", "Neighborhood of every element", cmd_neigh);
  single("cov", "Covering of neighborhoods", cmd_cov);
  single("relation", "Induced relation as sorted pairs", cmd_relation);
  single("gamma", "Gamma block of every element", cmd_gamma);
  single("reduct", "Reduct, removed blocks and the cov==reduct verdict", cmd_reduct);
  single("cov-is-reduct", "Whether the covering of neighborhoods is the reduct",
         cmd_cov_is_reduct);

  auto* degree = app.add_subcommand("degree", "Repeat degrees");
  degree->add_option("FILE", file, "Covering file")->required();
  auto* wopt = degree->add_option("--window", window, "Subset sizes, e.g. 1,2");
  degree->add_option("--set", set, "Single subset, e.g. \"a b\"")->excludes(wopt);
  degree->callback([&] { action = [&] { return cmd_degree(file, window, set, s); }; });

  auto* same = app.add_subcommand("same", "Compare relation, cov and P of two coverings");
  same->add_option("FILE1", file, "Covering file")->required();
  same->add_option("FILE2", file2, "Covering file")->required();
  same->callback([&] { action = [&] { return cmd_same(file, file2, s); }; });

  auto* invert = app.add_subcommand("invert", "Reconstruct a covering from its degree table");
  invert->add_option("TABLEFILE", file, "Degree table file")->required();
  invert->callback([&] { action = [&] { return cmd_invert(file, s); }; });

  auto* parity = app.add_subcommand("parity-pair", "Even/odd coverings with equal partial tables");
  parity->add_option("-n", n, "Universe size (> 1)")->required();
  parity->add_option("--names", names, "Element names, e.g. a,b,c");
  parity->callback([&] { action = [&] { return cmd_parity(n, names, s); }; });

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("FILES", files, "Covering file, optionally a second one for pair checks")
      ->required()
      ->expected(1, 2);
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--iters", iters, "Number of random variants");
  verify->callback([&] { action = [&] { return cmd_verify(files, seed, iters, s); }; });

  auto* bench = app.add_subcommand("bench", "Time transforms and full inversion");
  n = 12;
  bench->add_option("-n", n, "Lattice size for naive vs fast transform (default 12)");
  bench->add_option("--invert-n", invert_n, "Universe size for inversion (default 20)");
  bench->add_option("--seed", seed, "PRNG seed");
  bench->callback([&] { action = [&] { return cmd_bench(n, invert_n, seed, s); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kInputError, out.str(), err.str()};
  }

  try {
    s.lattice_cap = lattice_cap ? *lattice_cap : lattice_cap_from_env();
    return action();
  } catch (const Error& e) {
    return {kInputError, {}, std::string(to_string(e.kind())) + ": " + e.what() + "\n"};
  }
}

}  // namespace covdeg::cli
