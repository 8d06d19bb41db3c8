#pragma once

#include <limits>
#include <span>
#include <vector>

#include "gsearch/arith.hpp"
#include "gsearch/instance.hpp"
#include "gsearch/separation.hpp"

namespace gsearch {

/// Marks an infeasible DP entry. Never used as an operand.
inline constexpr Cost kInfeasible = std::numeric_limits<Cost>::max();

/// Tables of the tree separator DP for component bound k, rooted at vertex 0.
/// c_out[v][w]: cheapest separator of the subtree of v that leaves v outside
/// S in a component of weight exactly w. c_in[v]: cheapest with v in S.
struct SeparatorDpTables {
  Cost k = 0;
  std::vector<Vertex> parent;
  std::vector<Cost> c_in;
  std::vector<std::vector<Cost>> c_out;
  /// min(c_in, min over w of c_out)
  std::vector<Cost> best;
};

SeparatorDpTables separator_tables(const SearchInstance& tree, std::span<const Cost> weights, Cost k);

/// Cheapest S leaving every component of T - S at weight <= k, under the
/// given weights. Ties keep vertices out of S, then prefer smaller component
/// weights, then lower child positions.
SeparatorResult separator_dp_bound(const SearchInstance& tree, std::span<const Cost> weights, Cost k);

/// Optimal weighted alpha-separator of a tree with vertex costs:
/// k = floor(w(T) / alpha).
SeparatorResult separator_dp(const SearchInstance& tree, const Rational& alpha);

/// Bicriteria approximation: cost at most the optimal alpha-separator and
/// every component at most (1 + delta) w(T) / alpha. Runs the DP on weights
/// rounded down to multiples of delta w(T) / (n alpha).
SeparatorResult separator_fptas(const SearchInstance& tree, const Rational& alpha, const Rational& delta);

}  // namespace gsearch
