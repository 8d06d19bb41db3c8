#include "runner.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gsearch/bounded_fptas.hpp"
#include "gsearch/errors.hpp"
#include "gsearch/graph_search.hpp"
#include "gsearch/io.hpp"
#include "gsearch/monotone_lp.hpp"
#include "gsearch/oracles.hpp"
#include "gsearch/separation.hpp"
#include "gsearch/tree_search.hpp"

namespace gsearch::cli {

namespace {

// Queries the largest id of every candidate set. Claims optimality, which it
// does not have; used to check that the bench harness reports failures.
DecisionTree broken_stub(const SearchInstance& inst) {
  return assemble_by_separators(inst, [](const std::vector<Vertex>& candidate) {
    return std::vector<Vertex>{candidate.back()};
  });
}

DecisionTree lp_tree(const SearchInstance& inst, const AlgoParams& params, bool worst, RunResult& out) {
  if (!params.dump_lp.empty()) {
    auto lp = worst ? build_worst_lp(inst) : build_avg_lp(inst);
    write_file(params.dump_lp, to_lp_format(lp.program));
  }
  auto res = worst ? two_approx_worst(inst) : two_approx_avg(inst);
  out.lp_objective = res.lp_objective;
  return std::move(res.tree);
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"tree4eps",  "graphrec",   "lp2avg",       "lp2worst",
                                              "starfptas", "kfptas",     "oracle-avg",   "oracle-worst",
                                              "oracle-path", "stub-broken"};
  return names;
}

Guarantee guarantee_of(const std::string& algo, const AlgoParams& params) {
  const double eps = to_double(params.epsilon);
  if (algo == "tree4eps") return {Objective::Average, 4 + eps};
  if (algo == "graphrec") {
    if (params.cut == "exact") return {Objective::Average, 12 + 4 * std::sqrt(5.0)};
    return {Objective::Average, std::nullopt};
  }
  if (algo == "lp2avg") return {Objective::Average, 2.0};
  if (algo == "lp2worst") return {Objective::Worst, 2.0};
  if (algo == "starfptas" || algo == "kfptas") return {Objective::Average, 1 + eps};
  if (algo == "oracle-worst") return {Objective::Worst, 1.0};
  if (algo == "oracle-avg" || algo == "oracle-path" || algo == "stub-broken") return {Objective::Average, 1.0};
  throw InputError("unknown algorithm '" + algo + "'");
}

RunResult run_algorithm(const std::string& algo, const SearchInstance& inst, const AlgoParams& params) {
  require_valid(inst);
  RunResult out;
  const auto start = std::chrono::steady_clock::now();
  if (algo == "tree4eps") {
    out.tree = tree_search_4eps(inst, params.epsilon);
  } else if (algo == "graphrec") {
    if (params.cut == "exact") out.tree = graph_search_recursive(inst, exact_cut_oracle);
    else if (params.cut == "greedy") out.tree = graph_search_recursive(inst, greedy_min_ratio_cut);
    else throw InputError("--cut must be exact or greedy");
  } else if (algo == "lp2avg" || algo == "lp2worst") {
    out.tree = lp_tree(inst, params, algo == "lp2worst", out);
  } else if (algo == "starfptas") {
    out.tree = star_fptas(inst, params.epsilon).tree;
  } else if (algo == "kfptas") {
    out.tree = k_fptas(inst, params.epsilon, params.k_limit).tree;
  } else if (algo == "oracle-avg") {
    out.tree = opt_average_subset_dp(inst).tree;
  } else if (algo == "oracle-worst") {
    out.tree = opt_worst_bruteforce(inst).tree;
  } else if (algo == "oracle-path") {
    out.tree = opt_path_arbitrary(inst).tree;
  } else if (algo == "stub-broken") {
    out.tree = broken_stub(inst);
  } else {
    throw InputError("unknown algorithm '" + algo + "'");
  }
  out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (auto errors = validate_decision_tree(inst, out.tree); !errors.empty())
    throw std::logic_error(algo + " produced an invalid decision tree: " + errors.front());
  out.average = average_cost(inst, out.tree);
  out.worst = worst_cost(inst, out.tree);
  return out;
}

Verdict judge(const SearchInstance& inst, const RunResult& run, const Guarantee& g) {
  Verdict v;
  const bool avg = g.objective == Objective::Average;
  if (avg && inst.size() <= 15) v.oracle = opt_average_subset_dp(inst).cost;
  else if (!avg && inst.size() <= 8) v.oracle = opt_worst_bruteforce(inst).cost;
  if (!v.oracle) return v;
  const Cost got = avg ? run.average : run.worst;
  if (*v.oracle == 0) v.ratio = got == 0 ? 1.0 : INFINITY;
  else v.ratio = static_cast<double>(got) / static_cast<double>(*v.oracle);
  if (g.factor) {
    v.bound = *g.factor * static_cast<double>(*v.oracle);
    v.pass = static_cast<double>(got) <= *v.bound * (1 + 1e-12);
  }
  return v;
}

}  // namespace gsearch::cli
