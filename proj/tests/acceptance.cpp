// Property-based acceptance run: one line per criterion, nonzero exit when
// any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gsearch/bounded_fptas.hpp"
#include "gsearch/generate.hpp"
#include "gsearch/graph_search.hpp"
#include "gsearch/monotone_lp.hpp"
#include "gsearch/oracles.hpp"
#include "gsearch/separation.hpp"
#include "gsearch/separator.hpp"
#include "gsearch/tree_search.hpp"

using namespace gsearch;

namespace {

struct Outcome {
  int cases = 0;
  int violations = 0;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    ++violations;
    if (first_failure.empty()) first_failure = what;
  }
};

// Trees handed to the identity checks of criterion 10.
struct IdentityLog {
  int oracle_trees = 0, bound_trees = 0, skipped_pairwise = 0;
  Outcome outcome;

  void note(const SearchInstance& inst, const DecisionTree& d, bool from_oracle, const std::string& tag) {
    if (!inst.cost.is_vertex()) {
      ++skipped_pairwise;
      return;
    }
    const Cost avg = average_cost(inst, d);
    const auto levels = decompose_levels(inst, d);
    ++outcome.cases;
    if (from_oracle) {
      ++oracle_trees;
      if (contribution_sum(inst, d) != avg) outcome.fail(tag + ": contribution identity");
      if (level_sum(inst, levels) != avg) outcome.fail(tag + ": level identity");
    }
    ++bound_trees;
    if (halved_level_sum(inst, levels) > 2 * avg) outcome.fail(tag + ": halved level bound");
  }
};

IdentityLog identities;

std::string tag(const char* suite, std::uint64_t seed) { return std::string(suite) + " seed " + std::to_string(seed); }

GeneratorParams params(int n, Cost lo, Cost hi) {
  GeneratorParams p;
  p.n = n;
  p.weight_min = p.cost_min = lo;
  p.weight_max = p.cost_max = hi;
  return p;
}

double median(std::vector<double> v) {
  if (v.empty()) return NAN;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

const std::vector<Rational> kAlphas{Rational(3, 2), Rational(2), Rational(3)};

SearchInstance separator_tree(std::uint64_t seed) {
  return generate(GeneratorKind::RandomTree, params(1 + static_cast<int>(seed % 14), 0, 10), seed);
}

Outcome separator_exactness() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto inst = separator_tree(seed);
    for (const auto& alpha : kAlphas) {
      ++out.cases;
      const auto dp = separator_dp(inst, alpha);
      const auto exact = exact_alpha_separator(inst, alpha);
      if (dp.cost != exact.cost) out.fail(tag("separator", seed) + " alpha " + to_string(alpha));
      if (!is_alpha_separator(inst, dp.separator, alpha)) out.fail(tag("separator", seed) + " not a separator");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60) out.fail("runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << "runtime " << secs << " s";
  out.detail = s.str();
  return out;
}

Outcome separator_bicriteria() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto inst = separator_tree(seed);
    const Cost total = inst.total_weight();
    for (const auto& alpha : kAlphas) {
      const Cost opt = exact_alpha_separator(inst, alpha).cost;
      for (const auto& delta : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
        ++out.cases;
        const auto res = separator_fptas(inst, alpha, delta);
        if (res.cost > opt) out.fail(tag("fptas", seed) + " cost above optimum");
        for (Cost w : component_weights(inst, all_vertices(inst.size()), res.separator))
          if (Rational(w) * alpha > (1 + delta) * Rational(total)) out.fail(tag("fptas", seed) + " heavy component");
      }
    }
  }
  return out;
}

Outcome tree_four_eps() {
  Outcome out;
  std::vector<double> ratios;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto inst = generate(GeneratorKind::RandomTree, params(1 + static_cast<int>(seed % 12), 0, 10), seed);
    const auto opt = opt_average_subset_dp(inst);
    identities.note(inst, opt.tree, true, tag("tree4eps oracle", seed));
    for (const auto& eps : {Rational(1, 2), Rational(1)}) {
      ++out.cases;
      const auto d = tree_search_4eps(inst, eps);
      if (!validate_decision_tree(inst, d).empty()) {
        out.fail(tag("tree4eps", seed) + " invalid tree");
        continue;
      }
      identities.note(inst, d, false, tag("tree4eps", seed));
      const Cost cost = average_cost(inst, d);
      if (Rational(cost) > (4 + eps) * Rational(opt.cost)) out.fail(tag("tree4eps", seed) + " ratio");
      if (opt.cost > 0) ratios.push_back(static_cast<double>(cost) / static_cast<double>(opt.cost));
    }
  }
  std::ostringstream s;
  s << "median ratio " << median(ratios) << ", max " << *std::max_element(ratios.begin(), ratios.end());
  out.detail = s.str();
  return out;
}

// cost <= (12 + 4 sqrt 5) * opt, exactly.
bool within_graph_bound(Cost cost, Cost opt) {
  const __int128 lhs = static_cast<__int128>(cost) - 12 * static_cast<__int128>(opt);
  return lhs <= 0 || lhs * lhs <= 80 * static_cast<__int128>(opt) * opt;
}

Outcome graph_recursion() {
  Outcome out;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto p = params(1 + static_cast<int>(seed % 10), 0, 10);
    p.edge_probability = 0.1 + 0.1 * static_cast<double>(seed % 5);
    const auto inst = generate(GeneratorKind::RandomConnectedGraph, p, seed);
    ++out.cases;
    const auto opt = opt_average_subset_dp(inst);
    identities.note(inst, opt.tree, true, tag("graphrec oracle", seed));
    const auto d = graph_search_recursive(inst, exact_cut_oracle);
    if (!validate_decision_tree(inst, d).empty()) {
      out.fail(tag("graphrec", seed) + " invalid tree");
      continue;
    }
    identities.note(inst, d, false, tag("graphrec", seed));
    const Cost cost = average_cost(inst, d);
    if (!within_graph_bound(cost, opt.cost)) out.fail(tag("graphrec", seed) + " ratio");
    if (opt.cost > 0) worst = std::max(worst, static_cast<double>(cost) / static_cast<double>(opt.cost));
  }
  out.detail = "max ratio " + std::to_string(worst);
  return out;
}

Outcome balanced_partitions() {
  Outcome out;
  std::mt19937_64 rng(5);
  int cases[2][4] = {};
  while (out.cases < 1000) {
    const int k = 1 + static_cast<int>(rng() % 7);
    std::vector<Cost> comps;
    const Cost scale = rng() % 2 ? 10 : 1000;
    for (int i = 0; i < k; ++i) comps.push_back(static_cast<Cost>(rng() % static_cast<std::uint64_t>(scale + 1)));
    const Cost ws = rng() % 3 == 0 ? 0 : static_cast<Cost>(rng() % static_cast<std::uint64_t>(scale + 1));
    Cost total = ws;
    for (Cost c : comps) total += c;
    if (total == 0 || 2 * *std::max_element(comps.begin(), comps.end()) > total) continue;
    ++out.cases;
    for (auto variant : {LambdaVariant::Basic, LambdaVariant::Improved}) {
      const auto part = balanced_partition(comps, ws, variant);
      std::vector<int> seen;
      seen.insert(seen.end(), part.a.begin(), part.a.end());
      seen.insert(seen.end(), part.b.begin(), part.b.end());
      std::sort(seen.begin(), seen.end());
      Cost wa = 0, wb = 0;
      for (int i : part.a) wa += comps[static_cast<std::size_t>(i)];
      for (int i : part.b) wb += comps[static_cast<std::size_t>(i)];
      bool is_partition = static_cast<int>(seen.size()) == k && wa == part.weight_a && wb == part.weight_b;
      for (int i = 0; i < static_cast<int>(seen.size()) && is_partition; ++i) is_partition = seen[static_cast<std::size_t>(i)] == i;
      if (!is_partition) out.fail("not a partition of the components");
      if (!meets_product_bound(wa, wb, ws, variant)) {
        std::ostringstream s;
        s << "product bound (" << (variant == LambdaVariant::Basic ? "basic" : "improved") << ") comps";
        for (Cost c : comps) s << ' ' << c;
        s << " sep " << ws;
        out.fail(s.str());
      }
      ++cases[variant == LambdaVariant::Basic ? 0 : 1][std::clamp(part.case_used, 0, 3)];
    }
  }
  std::ostringstream s;
  s << "cases used basic " << cases[0][1] << '/' << cases[0][2] << '/' << cases[0][3] << ", improved " << cases[1][1]
    << '/' << cases[1][2] << '/' << cases[1][3];
  out.detail = s.str();
  return out;
}

SearchInstance monotone_tree(int n, std::uint64_t seed) {
  auto p = params(n, 1, 10);
  p.variant = CostVariant::Pairwise;
  p.monotone = true;
  return generate(seed % 3 == 0 ? GeneratorKind::Spider : GeneratorKind::RandomTree, p, seed);
}

Outcome lp_average() {
  Outcome out;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto inst = monotone_tree(1 + static_cast<int>(seed % 10), seed);
    ++out.cases;
    const auto opt = opt_average_subset_dp(inst);
    identities.note(inst, opt.tree, true, tag("lp2avg oracle", seed));
    const auto lp = build_avg_lp(inst);
    const auto res = two_approx_avg(inst);
    if (res.lp_objective > static_cast<double>(opt.cost) + 1e-6) out.fail(tag("lp2avg", seed) + " (a) LP above optimum");
    for (Vertex v = 0; v < inst.size(); ++v) {
      const auto col = x_column(lp, res.solution, v);
      double fractional = 0;
      for (Vertex u = 0; u < inst.size(); ++u) fractional += static_cast<double>(inst.cost(u, v)) * col[static_cast<std::size_t>(u)];
      const Cost rounded = assignment_cost(inst, res.assignment[static_cast<std::size_t>(v)], v);
      if (static_cast<double>(rounded) > 2 * fractional + 1e-6) out.fail(tag("lp2avg", seed) + " (b) rounding bound");
    }
    if (!is_pseudo_separator_assignment(inst.graph, res.assignment)) out.fail(tag("lp2avg", seed) + " (c) witness check");
    if (!validate_decision_tree(inst, res.tree).empty()) {
      out.fail(tag("lp2avg", seed) + " invalid tree");
      continue;
    }
    const Cost cost = average_cost(inst, res.tree);
    if (static_cast<double>(cost) > 2 * res.lp_objective + 2e-6) out.fail(tag("lp2avg", seed) + " (d) final cost");
    if (opt.cost > 0) worst = std::max(worst, static_cast<double>(cost) / static_cast<double>(opt.cost));
  }
  out.detail = "max ratio to optimum " + std::to_string(worst);
  return out;
}

Outcome lp_worst() {
  Outcome out;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto inst = monotone_tree(1 + static_cast<int>(seed % 8), 1000 + seed);
    ++out.cases;
    const auto opt = opt_worst_bruteforce(inst);
    const auto res = two_approx_worst(inst);
    if (!validate_decision_tree(inst, res.tree).empty()) {
      out.fail(tag("lp2worst", seed) + " invalid tree");
      continue;
    }
    const Cost cost = worst_cost(inst, res.tree);
    if (cost > 2 * opt.cost) out.fail(tag("lp2worst", seed) + " ratio");
    if (opt.cost > 0) worst = std::max(worst, static_cast<double>(cost) / static_cast<double>(opt.cost));
  }
  out.detail = "max ratio " + std::to_string(worst);
  return out;
}

Outcome star_scheme() {
  Outcome out;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto inst = generate(GeneratorKind::Star, params(1 + static_cast<int>(seed % 9), 0, 10), seed);
    const auto opt = opt_average_subset_dp(inst);
    identities.note(inst, opt.tree, true, tag("star oracle", seed));
    for (const auto& eps : {Rational(1, 2), Rational(1)}) {
      ++out.cases;
      const auto res = star_fptas(inst, eps);
      if (!validate_decision_tree(inst, res.tree).empty()) {
        out.fail(tag("star", seed) + " invalid tree");
        continue;
      }
      identities.note(inst, res.tree, false, tag("star", seed));
      if (Rational(res.cost) > (1 + eps) * Rational(opt.cost)) out.fail(tag("star", seed) + " ratio");
      if (opt.cost > 0) worst = std::max(worst, static_cast<double>(res.cost) / static_cast<double>(opt.cost));
    }
  }
  out.detail = "max ratio " + std::to_string(worst);
  return out;
}

// Two adjacent centers 0 and 1, each with at least one leaf.
SearchInstance double_star(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 3}};
  for (int v = 4; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % 2), v);
  SearchInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  std::vector<Cost> c;
  for (int v = 0; v < n; ++v) {
    inst.weights.push_back(static_cast<Cost>(rng() % 11));
    c.push_back(static_cast<Cost>(rng() % 11));
  }
  inst.cost = CostModel::vertex(std::move(c));
  return inst;
}

Outcome k_scheme() {
  Outcome out;
  double worst = 0;
  int stars = 0, doubles = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const bool star = seed % 2 == 1;
    const int n = star ? 1 + static_cast<int>(seed % 10) : 4 + static_cast<int>(seed % 7);
    const auto inst = star ? generate(GeneratorKind::Star, params(n, 0, 10), seed) : double_star(n, seed);
    ++out.cases;
    (star ? stars : doubles)++;
    const auto opt = opt_average_subset_dp(inst);
    identities.note(inst, opt.tree, true, tag("kfptas oracle", seed));
    const auto res = k_fptas(inst, Rational(1));
    if (!validate_decision_tree(inst, res.tree).empty()) {
      out.fail(tag("kfptas", seed) + " invalid tree");
      continue;
    }
    identities.note(inst, res.tree, false, tag("kfptas", seed));
    if (res.cost > 2 * opt.cost) out.fail(tag("kfptas", seed) + " ratio");
    if (star) {
      const auto via_star = star_fptas(inst, Rational(1));
      if (via_star.cost > 2 * opt.cost) out.fail(tag("kfptas", seed) + " star cross-check");
    }
    if (opt.cost > 0) worst = std::max(worst, static_cast<double>(res.cost) / static_cast<double>(opt.cost));
  }
  out.detail = std::to_string(stars) + " stars, " + std::to_string(doubles) + " double stars, max ratio " +
               std::to_string(worst);
  return out;
}

Outcome identity_checks() {
  Outcome out = identities.outcome;
  out.detail = std::to_string(identities.oracle_trees) + " oracle trees, " + std::to_string(identities.bound_trees) +
               " trees for the halved bound, " + std::to_string(identities.skipped_pairwise) +
               " pairwise-cost trees not applicable";
  return out;
}

Outcome reductions() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto p = params(1 + static_cast<int>(seed % 12), 0, 10);
    if (seed % 2 == 0) p.variant = CostVariant::Pairwise;
    const auto inst = generate(GeneratorKind::Path, p, seed);
    ++out.cases;
    const auto path = opt_path_arbitrary(inst);
    const auto subset = opt_average_subset_dp(inst);
    identities.note(inst, path.tree, true, tag("path oracle", seed));
    if (path.cost != subset.cost || average_cost(inst, path.tree) != path.cost) out.fail(tag("path", seed));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<std::vector<Cost>> a(static_cast<std::size_t>(n), std::vector<Cost>(static_cast<std::size_t>(n), 0));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<Cost>(rng() % 10);
    ++out.cases;
    if (opt_star_linear_ordering(a).cost != opt_average_subset_dp(linear_ordering_star(a)).cost)
      out.fail("linear ordering trial " + std::to_string(trial));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    bool runs_last = false;  // reads the trees collected by the others
  };
  const std::vector<Criterion> criteria{
      {"separator DP equals exhaustive optimum", separator_exactness},
      {"bicriteria separator scheme", separator_bicriteria},
      {"(4+eps) tree search", tree_four_eps},
      {"graph recursion with exact cuts within 12+4*sqrt(5)", graph_recursion},
      {"balanced partition product bounds", balanced_partitions},
      {"LP pipeline, average cost", lp_average},
      {"LP pipeline, worst case", lp_worst},
      {"star scheme within 1+eps", star_scheme},
      {"bounded non-leaf scheme within 1+eps", k_scheme},
      {"contribution, level and halved-level identities", identity_checks, true},
      {"path and linear-ordering cross-checks", reductions},
  };
  std::vector<std::size_t> run_order;
  for (bool last : {false, true})
    for (std::size_t i = 0; i < criteria.size(); ++i)
      if (criteria[i].runs_last == last) run_order.push_back(i);

  std::vector<std::string> lines(criteria.size());
  int failed = 0;
  const auto begin = std::chrono::steady_clock::now();
  for (std::size_t i : run_order) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.violations == 0;
    failed += !pass;
    char buf[1024];
    std::snprintf(buf, sizeof buf, "[%s] %2zu %s: %d cases, %d violations, %.2fs%s%s%s%s", pass ? "PASS" : "FAIL", i + 1,
                  criteria[i].name, out.cases, out.violations, secs, out.detail.empty() ? "" : "; ",
                  out.detail.c_str(), out.first_failure.empty() ? "" : "; first: ", out.first_failure.c_str());
    lines[i] = buf;
  }
  for (const auto& line : lines) std::printf("%s\n", line.c_str());
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  std::printf("%zu criteria, %d failed, %.1fs total\n", criteria.size(), failed, total);
  return failed == 0 ? 0 : 1;
}
