#include "csf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "csf/error.hpp"
#include "csf/samplers.hpp"

namespace csf {

Graph strongly_nice_not_schur_positive_graph() {
  // 0 = (-1,0), 1 = (0,1), 2 = (0,-1), 3 = (1.5,1), 4 = (1.5,-1), 5 = (2.5,0)
  return Graph(6, {{0, 1}, {1, 3}, {3, 5}, {4, 5}, {0, 2}, {2, 3}, {1, 4}, {2, 4}});
}

WordFixture word_fixture() {
  auto v = [](unsigned label) { return label - 1; };
  auto set = [&](std::initializer_list<unsigned> labels) {
    VertexSet s = 0;
    for (auto l : labels) s |= singleton(v(l));
    return s;
  };
  std::vector<Edge> edges;
  for (auto [a, b] : std::vector<Edge>{{5, 6}, {3, 5}, {3, 7}, {6, 7}, {1, 11}, {2, 11}, {9, 12}})
    edges.emplace_back(v(a), v(b));
  std::vector<std::string> names;
  for (unsigned l = 1; l <= 12; ++l) names.push_back(std::to_string(l));

  const Partition lambda{7, 5}, mu{6, 6};
  CoveringPair pair;
  for (const auto& c : covering_pairs(12))
    if (c.lambda == lambda && c.mu == mu) pair = c;

  return {Graph(12, edges, std::move(names)), pair,
          SemiOrderedStablePartition({set({5, 7, 1, 2, 9, 10, 8}), set({3, 6, 11, 12, 4})}),
          SemiOrderedStablePartition({set({5, 7, 1, 2, 9, 8}), set({3, 6, 11, 12, 4, 10})})};
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json SuiteReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", suite}, {"passed", passed()}, {"checks", list}};
}

std::string SuiteReport::to_text() const {
  std::string out = "suite " + suite + ": " + (passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : checks) out += std::string("  [") + (c.passed ? "PASS" : "FAIL") + "] " + c.name + "  " + c.detail.dump() + "\n";
  return out;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

// Runs `fn(k)` for k in [0, count) in parallel. Returns the number of failures
// and the failure message with the smallest index, so output does not depend
// on scheduling.
struct SweepResult {
  std::uint64_t failures = 0;
  std::optional<std::string> first;
};

SweepResult parallel_sweep(std::uint64_t count, const std::function<std::optional<std::string>(std::uint64_t)>& fn) {
  SweepResult result;
  std::uint64_t first_index = count;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < n; ++k) {
    std::optional<std::string> failure;
    try {
      failure = fn(static_cast<std::uint64_t>(k));
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
#pragma omp critical(csf_sweep)
      {
        ++result.failures;
        if (static_cast<std::uint64_t>(k) < first_index) {
          first_index = static_cast<std::uint64_t>(k);
          result.first = std::move(failure);
        }
      }
    }
  }
  return result;
}

Json sweep_detail(const SweepResult& r, std::uint64_t examined) {
  return {{"examined", examined},
          {"violations", r.failures},
          {"first_violation", r.first ? Json(*r.first) : Json(nullptr)}};
}

// Claw-free labeled graphs on d vertices, as edge masks.
std::vector<std::uint64_t> claw_free_masks(unsigned d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < labeled_graph_count(d); ++mask)
    if (is_claw_free(labeled_graph(d, mask))) out.push_back(mask);
  return out;
}

std::vector<Graph> random_claw_free_graphs(std::uint64_t seed, unsigned count, unsigned min_d, unsigned max_d) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (unsigned k = 0; k < count; ++k) {
    const unsigned d = min_d + static_cast<unsigned>(uniform_below(rng, max_d - min_d + 1));
    out.push_back(random_claw_free_graph(d, rng));
  }
  return out;
}

std::optional<std::string> strongly_nice_failure(const Graph& g) {
  const auto v = graph_is_strongly_nice(g);
  if (v.holds) return std::nullopt;
  return format_graph6(g) + " " + to_json(v).dump();
}

std::optional<std::string> injection_failure(const Graph& g) {
  for (const auto& pair : covering_pairs(g.vertex_count())) {
    const auto report = verify_injection(g, pair);
    if (!report.passed()) return format_graph6(g) + " " + to_json(report).dump();
  }
  return std::nullopt;
}

SuiteReport claw_expansion_suite() {
  SuiteReport r{"claw-expansion", {}};
  const MExpansion x = csf_m(gen_claw());
  MExpansion expected(4);
  expected.set({1, 1, 1, 1}, 24);
  expected.set({2, 1, 1}, 6);
  expected.set({3, 1}, 1);
  r.checks.push_back({"claw m-expansion is 24 m(1,1,1,1) + 6 m(2,1,1) + m(3,1)", x == expected, to_json(x)});

  const auto v = is_strongly_nice(x);
  const bool witness_ok = v.witness && v.witness->lambda == Partition{3, 1} && v.witness->mu == Partition{2, 2} &&
                          v.witness->coeff_lambda == 1 && v.witness->coeff_mu == 0;
  r.checks.push_back({"claw is not strongly nice, witness ((3,1),(2,2))", !v.holds && witness_ok, to_json(v)});
  return r;
}

SuiteReport figure2_suite() {
  SuiteReport r{"figure2", {}};
  const Graph g = strongly_nice_not_schur_positive_graph();
  const MExpansion m = csf_m(g);
  MExpansion m_expected(6);
  SExpansion s_expected(6);
  const std::vector<std::pair<Partition, std::pair<std::int64_t, std::int64_t>>> terms = {
      {{1, 1, 1, 1, 1, 1}, {720, 152}}, {{2, 1, 1, 1, 1}, {168, 52}}, {{2, 2, 1, 1}, {44, 26}},
      {{2, 2, 2}, {6, -4}},             {{3, 1, 1, 1}, {12, 2}},      {{3, 2, 1}, {6, 4}},
      {{3, 3}, {2, 2}}};
  for (const auto& [lambda, c] : terms) {
    m_expected.set(lambda, c.first);
    s_expected.set(lambda, c.second);
  }
  r.checks.push_back({"m-expansion matches", m == m_expected, to_json(m)});
  const auto schur = is_schur_positive(m);
  r.checks.push_back({"s-expansion matches", schur.schur == s_expected, to_json(schur.schur)});
  r.checks.push_back({"s_to_m maps the s-expansion back", s_to_m(s_expected) == m_expected, nullptr});
  const auto strongly = is_strongly_nice(m);
  r.checks.push_back({"strongly nice", strongly.holds, to_json(strongly)});
  r.checks.push_back({"not Schur positive, witness (2,2,2) with -4",
                      !schur.positive && schur.witness == Partition{2, 2, 2} && schur.witness_coeff == -4,
                      schur_verdict_json(schur)});
  return r;
}

SuiteReport thm41_suite(const VerifyOptions& o) {
  SuiteReport r{"thm41", {}};
  const unsigned top = o.allow_slow ? o.max_n : std::min(o.max_n, 4u);
  for (unsigned n = 3; n <= top; ++n) {
    const Graph sq = gen_squid(n);
    const Partition mu{n, n, n - 1}, lambda{n + 1, n - 1, n - 1};
    const std::uint64_t a = count_of_type(sq, mu), b = count_of_type(sq, lambda);
    const std::uint64_t fa = 2 * (n - 1) * binomial(2 * n - 2, n - 1), fb = 4 * (n - 1) * binomial(2 * n - 2, n);
    Json detail{{"n", n},
                {"mu", to_json(mu)},
                {"lambda", to_json(lambda)},
                {"coeff_mu", a},
                {"coeff_lambda", b},
                {"formula_mu", fa},
                {"formula_lambda", fb}};
    r.checks.push_back({"Sq(" + std::to_string(2 * n - 1) + ";1^" + std::to_string(n) + ") coefficients match closed forms",
                        a == fa && b == fb, detail});
    r.checks.push_back({"n=" + std::to_string(n) + ": [m_mu] < [m_lambda], not strongly nice", a < b, detail});
  }
  if (top < o.max_n)
    r.checks.push_back({"n > 4 skipped without --allow-slow", true, {{"requested_max_n", o.max_n}}});
  return r;
}

SuiteReport thm42_suite(const VerifyOptions& o) {
  SuiteReport r{"thm42", {}};
  const unsigned top = o.allow_slow ? o.max_n : std::min(o.max_n, 4u);
  for (unsigned n = 3; n <= top; ++n) {
    const Graph sq = gen_squid(n);
    const MExpansion x = csf_m(sq);
    const auto nice = is_nice(x);
    r.checks.push_back({"Sq(" + std::to_string(2 * n - 1) + ";1^" + std::to_string(n) + ") is nice", nice.holds, to_json(nice)});
    const Partition top_type{2 * n - 1, n - 1, 1};
    bool downset = true;
    for (std::size_t k = 0; k < x.table().size(); ++k)
      downset = downset && ((x.at(k) > 0) == dominance_leq(x.table()[k], top_type));
    r.checks.push_back({"n=" + std::to_string(n) + ": types present are exactly those below " + top_type.to_string(),
                        downset, nullptr});
  }
  for (unsigned n = 3; n <= 6; ++n) {
    const Partition type{2 * n - 1, n - 1, 1};
    const auto found = find_stable_partition_of_type(gen_squid(n), type);
    r.checks.push_back({"Sq(" + std::to_string(2 * n - 1) + ";1^" + std::to_string(n) + ") has type " + type.to_string(),
                        found.has_value(), found ? to_json(*found) : Json(nullptr)});
  }
  return r;
}

SuiteReport thm31_suite(const VerifyOptions& o) {
  SuiteReport r{"thm31", {}};
  for (unsigned d = 1; d <= 6; ++d) {
    const auto masks = claw_free_masks(d);
    const auto sweep = parallel_sweep(masks.size(), [&](std::uint64_t k) { return strongly_nice_failure(labeled_graph(d, masks[k])); });
    r.checks.push_back({"every claw-free labeled graph on " + std::to_string(d) + " vertices is strongly nice",
                        sweep.failures == 0, sweep_detail(sweep, masks.size())});
  }
  const auto graphs = random_claw_free_graphs(o.seed, 200, 7, 9);
  const auto sweep = parallel_sweep(graphs.size(), [&](std::uint64_t k) { return strongly_nice_failure(graphs[k]); });
  r.checks.push_back({"200 random claw-free graphs on 7-9 vertices are strongly nice", sweep.failures == 0,
                      sweep_detail(sweep, graphs.size())});

  const auto claw = graph_is_strongly_nice(gen_claw());
  r.checks.push_back({"the claw is not strongly nice", !claw.holds, to_json(claw)});
  return r;
}

SuiteReport injection_suite(const VerifyOptions& o) {
  SuiteReport r{"injection", {}};
  for (unsigned d = 1; d <= 6; ++d) {
    const auto masks = claw_free_masks(d);
    const auto sweep = parallel_sweep(masks.size(), [&](std::uint64_t k) { return injection_failure(labeled_graph(d, masks[k])); });
    r.checks.push_back({"phi is injective on every covering pair, claw-free graphs on " + std::to_string(d) + " vertices",
                        sweep.failures == 0, sweep_detail(sweep, masks.size())});
  }
  const auto graphs = random_claw_free_graphs(o.seed + 1, 100, 7, 8);
  const auto sweep = parallel_sweep(graphs.size(), [&](std::uint64_t k) { return injection_failure(graphs[k]); });
  r.checks.push_back({"phi is injective on 100 random claw-free graphs on 7-8 vertices", sweep.failures == 0,
                      sweep_detail(sweep, graphs.size())});

  bool raised = false;
  try {
    verify_injection(gen_claw(), {{3, 1}, {2, 2}, 0, 1});
  } catch (const Error& e) {
    raised = e.code() == ErrorCode::NotClawFree;
  }
  r.checks.push_back({"the claw is rejected with NotClawFree", raised, nullptr});
  return r;
}

SuiteReport words_suite() {
  SuiteReport r{"words", {}};
  const auto f = word_fixture();
  const auto d = decompose(f.graph, f.source, f.pair.i, f.pair.j);
  const Word w = word_of(d);
  r.checks.push_back({"source has 4 odd paths and word 1211", d.odd_paths.size() == 4 && w.to_string() == "1211",
                      {{"word", w.to_string()}}});
  const auto image = phi(f.graph, f.source, f.pair);
  const Word wi = word_of(decompose(f.graph, image, f.pair.i, f.pair.j));
  r.checks.push_back({"phi moves vertex 10 into B_j, word 1212", image == f.image && wi.to_string() == "1212",
                      {{"image", to_json(image)}, {"word", wi.to_string()}}});
  const auto back = varphi(f.graph, image, f.pair);
  r.checks.push_back({"varphi returns the source", back == f.source, {{"result", to_json(back)}}});
  return r;
}

SuiteReport white_suite() {
  SuiteReport r{"white", {}};
  for (unsigned n = 1; n <= 8; ++n) {
    const auto& table = partition_table(n);
    const auto& K = kostka_matrix(n);
    const std::size_t p = table.size();
    std::uint64_t checked = 0, violations = 0;
    Json first = nullptr;
    for (const auto& pair : table.covering_pairs()) {
      const std::size_t l = table.index_of(pair.lambda), m = table.index_of(pair.mu);
      for (std::size_t nu = 0; nu < p; ++nu, ++checked)
        if (K[nu * p + m] < K[nu * p + l]) {
          ++violations;
          if (first.is_null()) first = {{"nu", to_json(table[nu])}, {"lambda", to_json(pair.lambda)}, {"mu", to_json(pair.mu)}};
        }
    }
    r.checks.push_back({"K_{nu,mu} >= K_{nu,lambda} for covering pairs of weight " + std::to_string(n), violations == 0,
                        {{"examined", checked}, {"violations", violations}, {"first_violation", first}}});
  }
  return r;
}

SuiteReport lemma22_suite(const VerifyOptions& o) {
  SuiteReport r{"lemma22", {}};
  Rng rng(o.seed);
  std::uint64_t failures = 0;
  Json first = nullptr;
  for (unsigned s = 0; s < o.samples; ++s) {
    const unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 8));
    SExpansion e(d);
    for (std::size_t k = 0; k < e.table().size(); ++k)
      if (uniform_below(rng, 10) < 3) e.set_at(k, static_cast<std::int64_t>(uniform_below(rng, 11)));
    if (!implication_chain_check(e)) {
      ++failures;
      if (first.is_null()) first = to_json(e);
    }
  }
  r.checks.push_back({"random Schur-nonnegative expansions are strongly nice and nice", failures == 0,
                      {{"examined", o.samples}, {"violations", failures}, {"first_violation", first}}});

  // Nonnegative strongly nice expansions: c(mu) = max of random values over
  // everything dominating mu.
  failures = 0;
  first = nullptr;
  for (unsigned s = 0; s < o.samples; ++s) {
    const unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 8));
    const auto& table = partition_table(d);
    std::vector<std::int64_t> raw(table.size());
    for (auto& c : raw) c = uniform_below(rng, 4) == 0 ? static_cast<std::int64_t>(uniform_below(rng, 20)) : 0;
    MExpansion e(d);
    for (std::size_t mu = 0; mu < table.size(); ++mu) {
      std::int64_t best = 0;
      for (std::size_t lambda = 0; lambda < table.size(); ++lambda)
        if (table.leq(mu, lambda)) best = std::max(best, raw[lambda]);
      e.set_at(mu, best);
    }
    if (!is_strongly_nice(e).holds || !is_nice(e).holds) {
      ++failures;
      if (first.is_null()) first = to_json(e);
    }
  }
  r.checks.push_back({"nonnegative strongly nice expansions are nice", failures == 0,
                      {{"examined", o.samples}, {"violations", failures}, {"first_violation", first}}});
  return r;
}

SuiteReport oracle_suite(const VerifyOptions& o) {
  SuiteReport r{"oracle", {}};
  Rng rng(o.seed + 2);
  std::uint64_t compositions = 0, failures = 0;
  Json first = nullptr;
  for (unsigned s = 0; s < 50; ++s) {
    const unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 7));
    const Graph g = random_graph(d, static_cast<unsigned>(uniform_below(rng, 101)), rng);
    const MExpansion x = csf_m(g);
    // Compositions of d from the cut positions between d units.
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (d - 1)); ++cuts, ++compositions) {
      std::vector<unsigned> alpha{1};
      for (unsigned k = 0; k + 1 < d; ++k) {
        if ((cuts >> k) & 1u)
          alpha.push_back(1);
        else
          ++alpha.back();
      }
      const std::uint64_t oracle = coloring_distribution_oracle(g, alpha);
      const auto sorted = Partition::from_unsorted({alpha.begin(), alpha.end()});
      if (static_cast<std::int64_t>(oracle) != x[sorted]) {
        ++failures;
        if (first.is_null()) first = {{"graph", format_graph6(g)}, {"alpha", alpha}, {"oracle", oracle}, {"csf", x[sorted]}};
      }
    }
  }
  r.checks.push_back({"coloring oracle matches csf_m on every composition of 50 random graphs", failures == 0,
                      {{"compositions", compositions}, {"violations", failures}, {"first_violation", first}}});
  return r;
}

SuiteReport inc_boolean_suite(const VerifyOptions& o) {
  SuiteReport r{"inc-boolean", {}};
  const unsigned top = o.allow_slow ? 4 : 3;
  for (unsigned n = 3; n <= top; ++n) {
    const Graph g = incomparability_graph(gen_boolean_lattice(n));
    const MExpansion x = csf_m(g);
    const auto nice = is_nice(x);
    const auto strongly = is_strongly_nice(x);
    const auto schur = is_schur_positive(x);
    const std::string name = "inc(B_" + std::to_string(n) + ")";
    r.checks.push_back({name + " is nice", nice.holds, to_json(nice)});
    // Reported, not asserted.
    r.checks.push_back({name + " strong niceness (reported)", true,
                        {{"strongly_nice", to_json(strongly)}, {"schur_positive", schur_verdict_json(schur)}}});
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"claw-expansion", "figure2", "thm41", "thm42", "thm31", "injection",
                                                 "words",          "white",   "lemma22", "oracle", "inc-boolean"};
  return names;
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suites(n, options).front());
    return out;
  }
  if (name == "claw-expansion") return {claw_expansion_suite()};
  if (name == "figure2") return {figure2_suite()};
  if (name == "thm41") return {thm41_suite(options)};
  if (name == "thm42") return {thm42_suite(options)};
  if (name == "thm31") return {thm31_suite(options)};
  if (name == "injection") return {injection_suite(options)};
  if (name == "words") return {words_suite()};
  if (name == "white") return {white_suite()};
  if (name == "lemma22") return {lemma22_suite(options)};
  if (name == "oracle") return {oracle_suite(options)};
  if (name == "inc-boolean") return {inc_boolean_suite(options)};
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace csf
