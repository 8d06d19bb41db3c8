#pragma once

#include <vector>

#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"
#include "gsearch/separation.hpp"

namespace gsearch {

// Exact solvers for desk-sized instances. Each refuses inputs above its
// vertex limit with LimitError. Ties go to the smallest query vertex.

struct OracleResult {
  Cost cost = 0;
  DecisionTree tree;
};

/// Minimum weighted average cost, memoized over connected vertex subsets.
/// Any cost model.
OracleResult opt_average_subset_dp(const SearchInstance& inst, int limit = 15);

/// Minimum worst-case cost by enumerating every decision tree.
OracleResult opt_worst_bruteforce(const SearchInstance& inst, int limit = 8);

/// Interval DP for paths with arbitrary pairwise costs, O(n^3).
OracleResult opt_path_arbitrary(const SearchInstance& inst);

struct LinearOrdering {
  Cost cost = 0;
  std::vector<int> order;  // row indices of A
};

/// Minimizes sum over i < j of A[order[i]][order[j]] by trying every permutation.
LinearOrdering opt_star_linear_ordering(const std::vector<std::vector<Cost>>& a, int limit = 9);

/// Cheapest S such that every component of G - S weighs at most w(G) / alpha.
/// Ties go to the numerically smallest vertex bitmask. Vertex costs only.
SeparatorResult exact_alpha_separator(const SearchInstance& inst, const Rational& alpha, int limit = 18);

/// Minimum-ratio vertex cut over all S; components of G - S are split into
/// A and B to maximize the weight product. Cuts with a zero denominator are
/// skipped; throws PreconditionError if every cut has one (zero total weight).
VertexCut exact_min_ratio_cut(const SearchInstance& inst, int limit = 14);

}  // namespace gsearch
