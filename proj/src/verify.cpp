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

#include "covdeg/verify.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <sstream>

#include "covdeg/degree.hpp"
#include "covdeg/neighborhood.hpp"
#include "covdeg/random.hpp"

namespace covdeg {

namespace {

std::string describe(const SetFamily& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ",";
    out += io::format_set(f.universe(), f.blocks()[i]);
  }
  return out + "}";
}

// Collects results per property name, in first-use order.
class Recorder {
 public:
  template <std::invocable Explain>
  void check(const std::string& name, bool ok, Explain&& explain) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, results_.size()).first;
      results_.push_back(PropertyResult{name, true, 0, {}});
    }
    PropertyResult& r = results_[it->second];
    ++r.checks;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = explain();
    }
  }

  void check(const std::string& name, bool ok, const SetFamily& where) {
    check(name, ok, [&] { return "covering " + describe(where); });
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

bool brute_in_closure(const std::vector<Block>& family, const Block& k) {
  const std::size_t m = family.size();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
    Block acc(k.width());
    for (std::size_t i = 0; i < m; ++i) {
      if ((sel >> i) & 1U) acc |= family[i];
    }
    if (acc == k) return true;
  }
  return false;
}

std::vector<Block> brute_reducible(const SetFamily& f) {
  std::vector<Block> out;
  for (const auto& k : f.blocks()) {
    std::vector<Block> rest;
    for (const auto& l : f.blocks()) {
      if (l != k) rest.push_back(l);
    }
    if (brute_in_closure(rest, k)) out.push_back(k);
  }
  return out;
}

SetFamily random_subfamily(const SetFamily& f, Rng& rng) {
  std::vector<Block> picked;
  for (const auto& b : f.blocks()) {
    if (rng() & 1U) picked.push_back(b);
  }
  return SetFamily(f.universe(), std::move(picked));
}

Block random_block(const Universe& u, Rng& rng) {
  Block b = u.empty_block();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (rng() & 1U) b.set(i);
  }
  return b;
}

Block union_of_random(const SetFamily& f, Rng& rng) {
  Block acc = f.universe().empty_block();
  for (const auto& b : f.blocks()) {
    if (rng() & 1U) acc |= b;
  }
  return acc;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Degrees in the parity pair for a proper subset of size t of an n-set:
// supersets of odd size, resp. of even size.
std::pair<std::uint64_t, std::uint64_t> parity_closed_form(std::size_t n, std::size_t t) {
  std::uint64_t odd_step = 0;  // sum over i of C(n-t, 2i+1)
  for (std::size_t i = 0; 2 * i + 1 <= n - t; ++i) odd_step += binomial(n - t, 2 * i + 1);
  std::uint64_t even_step = 0;  // sum over i of C(n-t, 2i)
  for (std::size_t i = 0; 2 * i <= n - t; ++i) even_step += binomial(n - t, 2 * i);
  // Returns {deg in odd family, deg in even family}.
  if (t % 2 == 0) return {odd_step, even_step};
  return {even_step, odd_step};
}

void check_core(Recorder& rec, const Covering& c, Rng& rng) {
  std::vector<Block> shuffled = c.blocks();
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  shuffled.push_back(shuffled.front());
  const Covering rebuilt(c.universe(), std::move(shuffled));
  rec.check("core.canonical_order", rebuilt.blocks() == c.blocks(), c);

  bool nonempty = std::none_of(c.blocks().begin(), c.blocks().end(),
                               [](const Block& b) { return b.empty(); });
  rec.check("core.covers_universe",
            nonempty && c.union_of_blocks() == c.universe().full_block(), c);
}

void check_neighborhood(Recorder& rec, const Covering& c, const Covering& partner,
                        const VerifyHooks& hooks) {
  const auto map = neighborhoods(c);
  const std::size_t n = c.universe().size();
  for (std::size_t x = 0; x < n; ++x) {
    const Block& nx = map.neighborhoods[x];
    rec.check("neighborhood.contains_self", nx.test(x), c);
    rec.check("neighborhood.direct_intersection", nx == neighborhood(c, x), c);
    for (const auto& k : c.blocks()) {
      if (k.test(x)) rec.check("neighborhood.inside_blocks", nx.is_subset_of(k), c);
    }
    nx.for_each([&](std::size_t y) {
      rec.check("neighborhood.nested", map.neighborhoods[y].is_subset_of(nx), [&] {
        return "covering " + describe(c) + ", x=" + c.universe().name(x) +
               ", y=" + c.universe().name(y);
      });
    });
  }
  const Covering cv = hooks.cov(c);
  rec.check("neighborhood.cov_union", cv.union_of_blocks() == c.union_of_blocks(), c);

  const RelationEdges r = relation(c);
  bool roundtrip = true;
  for (std::size_t x = 0; x < n; ++x) {
    roundtrip = roundtrip && successor_neighborhood(r, x) == map.neighborhoods[x];
  }
  rec.check("neighborhood.relation_roundtrip", roundtrip, c);

  rec.check("neighborhood.same_relation_iff_cov_equal",
            same_relation(c, partner) == canonical_equal(hooks.cov(c), hooks.cov(partner)),
            [&] { return "pair " + describe(c) + " / " + describe(partner); });
}

void check_degree(Recorder& rec, const Covering& c, const Covering& partner, Rng& rng,
                  const VerifyHooks& hooks) {
  const Universe& u = c.universe();
  const std::size_t n = u.size();
  const auto map = neighborhoods(c);
  for (std::size_t x = 0; x < n; ++x) {
    Block sx = u.empty_block();
    sx.set(x);
    const auto dx = repeat_degree(c, sx);
    for (std::size_t y = 0; y < n; ++y) {
      Block sxy = sx;
      sxy.set(y);
      rec.check("degree.pair_degree_membership",
                map.neighborhoods[x].test(y) == (repeat_degree(c, sxy) == dx), [&] {
                  return "covering " + describe(c) + ", x=" + u.name(x) + ", y=" + u.name(y);
                });
    }
    rec.check("degree.p_equals_neighborhood", p_set(c, x) == map.neighborhoods[x], c);

    const auto fam = gamma_family(c, x);
    rec.check("degree.gamma_at_most_one", fam.size() <= 1, c);
    const auto g = gamma(c, x);
    if (g) rec.check("degree.gamma_is_neighborhood", *g == map.neighborhoods[x], c);
    rec.check("degree.gamma_iff_neighborhood_block",
              g.has_value() == c.contains(map.neighborhoods[x]), c);
  }

  for (int s = 0; s < 8; ++s) {
    const Block small = random_block(u, rng);
    const Block big = small | random_block(u, rng);
    rec.check("degree.monotone", repeat_degree(c, small) >= repeat_degree(c, big), c);
  }
  rec.check("degree.empty_set_degree", repeat_degree(c, u.empty_block()) == c.size(), c);

  std::vector<DegreeTable::Entry> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      Block b = u.empty_block();
      b.set(x);
      b.set(y);
      pairs.push_back({b, repeat_degree(c, b)});
    }
  }
  const DegreeTable pair_table(u, CardinalityWindow{1, 2}, std::move(pairs));
  rec.check("degree.cov_from_pair_degrees",
            canonical_equal(cov_from_pair_degrees(pair_table), hooks.cov(c)), c);

  const bool p = same_p(c, partner);
  const bool r = same_relation(c, partner);
  const bool v = canonical_equal(hooks.cov(c), hooks.cov(partner));
  rec.check("degree.p_relation_cov_equivalence", p == r && r == v,
            [&] { return "pair " + describe(c) + " / " + describe(partner); });
}

void check_reduct(Recorder& rec, const Covering& c, Rng& rng, const VerifyOptions& opts) {
  const VerifyHooks& hooks = opts.hooks;
  const Universe& u = c.universe();
  const bool brute_ok = c.size() <= opts.max_brute_family;

  if (brute_ok) {
    for (int s = 0; s < 8; ++s) {
      const Block k = (s % 2 == 0) ? union_of_random(c, rng) : random_block(u, rng);
      rec.check("reduct.closure_matches_brute_force",
                in_union_closure(c, k) == brute_in_closure(c.blocks(), k), [&] {
                  return "covering " + describe(c) + ", k=" + io::format_set(u, k);
                });
    }
    rec.check("reduct.reducible_matches_brute_force",
              hooks.reducible_elements(c).blocks() == brute_reducible(c), c);
  }

  const SetFamily sub = random_subfamily(c, rng);
  for (int s = 0; s < 8; ++s) {
    const Block k = (s % 2 == 0) ? union_of_random(sub, rng) : random_block(u, rng);
    rec.check("reduct.closure_monotone", !in_union_closure(sub, k) || in_union_closure(c, k),
              c);
  }

  const SetFamily s_c = hooks.reducible_elements(c);
  rec.check("reduct.reducible_monotone", hooks.reducible_elements(sub).is_subfamily_of(s_c),
            [&] { return "B=" + describe(sub) + " inside " + describe(c); });

  const SetFamily f = random_subfamily(s_c, rng);
  rec.check("reduct.batch_removal", hooks.reducible_elements(c.minus(f)) == s_c.minus(f),
            [&] { return "covering " + describe(c) + ", F=" + describe(f); });

  const ReductReport rep = hooks.reduct(c);
  std::vector<Block> rejoined = rep.reduct.blocks();
  rejoined.insert(rejoined.end(), rep.removed.begin(), rep.removed.end());
  const SetFamily whole(u, rejoined);
  const bool disjoint = std::none_of(rep.removed.begin(), rep.removed.end(),
                                     [&](const Block& b) { return rep.reduct.contains(b); });
  rec.check("reduct.report_partition", disjoint && whole == static_cast<const SetFamily&>(c), c);
  rec.check("reduct.irreducible", hooks.reducible_elements(rep.reduct).empty(), c);
  rec.check("reduct.is_reduct_of", is_reduct_of(rep.reduct, c), c);

  const Covering cv = hooks.cov(c);
  rec.check("reduct.reduct_of_cov", canonical_equal(hooks.reduct(cv).reduct, cv), c);
  rec.check("reduct.cov_generates_blocks",
            std::all_of(c.blocks().begin(), c.blocks().end(),
                        [&](const Block& k) { return in_union_closure(cv, k); }),
            c);

  const auto verdict = cov_is_reduct(c);
  const bool direct = canonical_equal(cv, rep.reduct);
  rec.check("reduct.cov_is_reduct_iff_gamma", verdict.equal == direct, c);
  rec.check("reduct.report_verdict",
            rep.cov_equals_reduct == direct && rep.gamma_witness.has_value() != direct, c);
  if (verdict.witness) {
    rec.check("reduct.witness_has_empty_gamma", !gamma(c, *verdict.witness).has_value(), c);
  }
}

void check_lattice(Recorder& rec, const Covering& c, const Covering& partner,
                   const VerifyOptions& opts) {
  const std::size_t n = c.universe().size();
  const std::size_t cap = opts.lattice_cap;
  const DegreeTable with_empty = degree_table(c, CardinalityWindow::range(0, n), cap);
  const IndicatorTable delta = indicator_table(c, cap);
  const IntSubsetFunction rho = delta.as_function();
  const IntSubsetFunction zeta = zeta_transform(rho);
  bool match = true;
  for (const auto& e : with_empty.entries()) {
    match = match && zeta[e.subset.mask()] == static_cast<std::int64_t>(e.degree);
  }
  rec.check("inversion.zeta_of_indicator_is_degree", match, c);
  rec.check("inversion.mobius_inverts_zeta", mobius_transform(zeta) == rho, c);

  const DegreeTable full = degree_table(c, CardinalityWindow::full(n), cap);
  bool roundtrip = false;
  try {
    roundtrip = canonical_equal(reconstruct_covering(full, cap), c);
  } catch (const Error&) {
    roundtrip = false;
  }
  rec.check("inversion.roundtrip", roundtrip, c);

  if (!canonical_equal(c, partner)) {
    const Covering aligned = align_to(partner, c.universe());
    rec.check("inversion.indicator_injective", !(indicator_table(aligned, cap) == delta),
              [&] { return "pair " + describe(c) + " / " + describe(partner); });
    rec.check("inversion.table_injective",
              !tables_equal(full, degree_table(aligned, CardinalityWindow::full(n), cap)),
              [&] { return "pair " + describe(c) + " / " + describe(partner); });
  }
}

void check_parity(Recorder& rec, std::size_t n, std::size_t cap) {
  const ParityPair pp = parity_pair(n, {}, cap);
  const auto partial = CardinalityWindow::range(1, n - 1);
  rec.check("inversion.parity_partial_tables_equal",
            tables_equal(degree_table(pp.even, partial, cap), degree_table(pp.odd, partial, cap)),
            [&] { return "n=" + std::to_string(n); });
  rec.check("inversion.parity_full_tables_differ",
            !tables_equal(degree_table(pp.even, CardinalityWindow::full(n), cap),
                          degree_table(pp.odd, CardinalityWindow::full(n), cap)),
            [&] { return "n=" + std::to_string(n); });
  const DegreeTable odd = degree_table(pp.odd, partial, cap);
  const DegreeTable even = degree_table(pp.even, partial, cap);
  bool closed = true;
  for (const auto& e : odd.entries()) {
    const auto [want_odd, want_even] = parity_closed_form(n, e.subset.count());
    closed = closed && e.degree == want_odd && even.at(e.subset) == want_even;
  }
  rec.check("inversion.parity_closed_form", closed, [&] { return "n=" + std::to_string(n); });
}

bool is_parity_pair(const Covering& a, const Covering& b, std::size_t cap) {
  const std::size_t n = a.universe().size();
  if (n < 2) return false;
  const ParityPair pp = parity_pair(n, a.universe().names(), cap);
  const Covering bb = align_to(b, a.universe());
  return (a == pp.even && bb == pp.odd) || (a == pp.odd && bb == pp.even);
}

}  // namespace

VerifyHooks VerifyHooks::library() {
  return VerifyHooks{
      [](const Covering& c) { return covdeg::reduct(c); },
      [](const Covering& c) { return covdeg::cov(c); },
      [](const SetFamily& f) { return covdeg::reducible_elements(f); },
  };
}

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  out << "seed: " << seed << "\n";
  out << "iterations: " << iterations << "\n";
  for (const auto& [k, v] : facts) out << k << ": " << v << "\n";
  for (const auto& p : properties) {
    out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.checks << " checks)";
    if (!p.passed) out << ": " << p.counterexample;
    out << "\n";
  }
  out << (passed() ? "all properties hold" : "property violated") << "\n";
  return out.str();
}

io::Json VerifyReport::to_json() const {
  io::Json j;
  j["seed"] = seed;
  j["iterations"] = iterations;
  io::Json f = io::Json::object();
  for (const auto& [k, v] : facts) f[k] = v;
  j["facts"] = std::move(f);
  io::Json props = io::Json::array();
  for (const auto& p : properties) {
    io::Json row;
    row["name"] = p.name;
    row["passed"] = p.passed;
    row["checks"] = p.checks;
    if (!p.passed) row["counterexample"] = p.counterexample;
    props.push_back(std::move(row));
  }
  j["properties"] = std::move(props);
  j["passed"] = passed();
  return j;
}

VerifyReport verify_suite(const Covering& c, std::uint64_t seed, std::size_t iterations,
                          const VerifyOptions& options) {
  Rng rng(seed);
  std::vector<Covering> instances{c};
  for (std::size_t i = 1; i <= iterations; ++i) {
    if (i % 2 == 1) {
      instances.push_back(augment_with_unions(c, rng, 1 + uniform_below(rng, 3)));
    } else {
      instances.push_back(random_covering(c.universe(), rng));
    }
  }

  Recorder rec;
  const std::size_t n = c.universe().size();
  const bool lattice = n <= std::min(options.lattice_cap, options.max_lattice_n);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Covering& inst = instances[i];
    const Covering& partner = i == 0 ? instances.back() : instances[0];
    check_core(rec, inst, rng);
    check_neighborhood(rec, inst, partner, options.hooks);
    check_degree(rec, inst, partner, rng, options.hooks);
    check_reduct(rec, inst, rng, options);
    if (lattice) check_lattice(rec, inst, partner, options);
  }
  if (n >= 2 && n <= std::min(options.lattice_cap, options.max_parity_n)) {
    check_parity(rec, n, options.lattice_cap);
  }

  VerifyReport report;
  report.seed = seed;
  report.iterations = iterations;
  report.properties = rec.take();
  return report;
}

VerifyReport verify_pair(const Covering& c1, const Covering& c2, const VerifyOptions& options) {
  if (!c1.universe().same_elements(c2.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "coverings are over different universes");
  }
  const Covering b = align_to(c2, c1.universe());
  const std::size_t n = c1.universe().size();
  const std::size_t cap = options.lattice_cap;
  VerifyReport report;
  Recorder rec;

  const bool r = same_relation(c1, b);
  const bool v = canonical_equal(options.hooks.cov(c1), options.hooks.cov(b));
  const bool p = same_p(c1, b);
  const bool equal = canonical_equal(c1, b);
  auto word = [](bool e) { return std::string(e ? "equal" : "differ"); };
  report.facts.emplace_back("coverings", word(equal));
  report.facts.emplace_back("relation", word(r));
  report.facts.emplace_back("cov", word(v));
  report.facts.emplace_back("P", word(p));
  auto pair_text = [&] { return "pair " + describe(c1) + " / " + describe(b); };
  rec.check("degree.p_relation_cov_equivalence", p == r && r == v, pair_text);

  if (n <= cap) {
    const auto full = CardinalityWindow::full(n);
    const bool full_equal = tables_equal(degree_table(c1, full, cap), degree_table(b, full, cap));
    report.facts.emplace_back("full tables", word(full_equal));
    rec.check("inversion.table_injective", full_equal == equal, pair_text);
    rec.check("inversion.indicator_injective",
              (indicator_table(c1, cap) == indicator_table(b, cap)) == equal, pair_text);
    if (n >= 2) {
      const auto partial = CardinalityWindow::range(1, n - 1);
      const bool partial_equal =
          tables_equal(degree_table(c1, partial, cap), degree_table(b, partial, cap));
      report.facts.emplace_back("tables on sizes 1.." + std::to_string(n - 1),
                                word(partial_equal));
      rec.check("inversion.equal_partial_tables_only_for_parity_pair",
                (partial_equal && !equal) == is_parity_pair(c1, b, cap), pair_text);
    }
  }
  report.properties = rec.take();
  return report;
}

}  // namespace covdeg
