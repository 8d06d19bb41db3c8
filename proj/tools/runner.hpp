#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsearch/arith.hpp"
#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"

namespace gsearch::cli {

enum class Objective { Average, Worst };

struct AlgoParams {
  Rational epsilon{1};
  std::string cut = "exact";
  int k_limit = 3;
  std::string dump_lp;  // lp2avg / lp2worst only
};

struct Guarantee {
  Objective objective = Objective::Average;
  std::optional<double> factor;  // none: heuristic, nothing to check
};

struct RunResult {
  DecisionTree tree;
  Cost average = 0;
  Cost worst = 0;
  double runtime_ms = 0;
  std::optional<double> lp_objective;
};

struct Verdict {
  std::optional<Cost> oracle;
  std::optional<double> ratio;
  std::optional<double> bound;
  bool pass = true;
};

const std::vector<std::string>& algorithm_names();
Guarantee guarantee_of(const std::string& algo, const AlgoParams& params);

/// Runs an algorithm, validates its tree and recomputes both costs. Throws
/// std::logic_error when the tree is invalid.
RunResult run_algorithm(const std::string& algo, const SearchInstance& inst, const AlgoParams& params);

/// Compares against the exact oracle of the guaranteed objective when the
/// instance is small enough for it (n <= 15 average, n <= 8 worst).
Verdict judge(const SearchInstance& inst, const RunResult& run, const Guarantee& g);

}  // namespace gsearch::cli
