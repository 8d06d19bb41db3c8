#pragma once

#include <limits>
#include <span>
#include <vector>

#include "gsearch/arith.hpp"
#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"

namespace gsearch {

/// A job that can never be accepted.
inline constexpr Cost kInfiniteProcessing = std::numeric_limits<Cost>::max();
inline constexpr Cost kDefaultProcessingBudget = 1'000'000;

struct Job {
  Cost processing = 0;
  Cost weight = 0;
  Cost rejection = 0;
};

struct Schedule {
  Cost cost = 0;
  std::vector<int> accepted;     // job indices in processing order
  std::vector<Cost> completion;  // completion time of each accepted job
  std::vector<int> rejected;     // ascending
};

/// Jobs by nondecreasing processing/weight; zero-weight jobs last; ties by index.
std::vector<int> smith_order(std::span<const Job> jobs);

/// Minimum of sum of weight * completion over accepted jobs plus the
/// rejection penalties of the others, every accepted job finishing by the
/// deadline. Exact DP over (job in Smith order, processing used). Throws
/// LimitError when min(deadline, total finite processing) exceeds the budget.
Schedule schedule_with_rejection(std::span<const Job> jobs, Cost deadline, Cost budget = kDefaultProcessingBudget);

/// Times on the moment grids are integers over this denominator.
inline constexpr Cost kGridScale = Cost{1} << 24;

/// {0, 1, g_2, ...} scaled by kGridScale with g_{j+1} = floor(g_j * (1 + delta)),
/// stopping at the first moment >= cap (scaled). Strictly increasing.
std::vector<Cost> moment_grid(const Rational& delta, Cost scaled_cap);

struct FptasResult {
  DecisionTree tree;
  Cost cost = 0;     // exact average cost of `tree`
  Rational bound{0};  // cost of the aligned schedule, an upper bound on `cost`
};

/// Average-cost (1+epsilon)-approximation on a star with vertex costs,
/// 0 < epsilon <= 3.
FptasResult star_fptas(const SearchInstance& inst, const Rational& epsilon);

/// Vertices of degree at least 2.
std::vector<Vertex> inner_vertices(const Graph& g);

/// Largest power of two not above epsilon * ln 2 / n.
Rational dyadic_delta(int n, const Rational& epsilon);

/// Average-cost (1+epsilon)-approximation for graphs with at most k_limit
/// vertices of degree >= 2, vertex costs, 0 < epsilon <= 1.
FptasResult k_fptas(const SearchInstance& inst, const Rational& epsilon, int k_limit = 3);

}  // namespace gsearch
