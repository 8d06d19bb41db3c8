#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"
#include "gsearch/separation.hpp"

namespace gsearch {

/// Returns some vertex cut of a connected instance with vertex costs and
/// positive total weight.
using CutOracle = std::function<VertexCut(const SearchInstance&)>;

/// Exhaustive minimum-ratio cut (n <= 14).
VertexCut exact_cut_oracle(const SearchInstance& inst);

/// Heuristic without a ratio guarantee: from the highest w(v) * deg(v)
/// vertices, grow S one neighbouring vertex at a time while the ratio drops.
VertexCut greedy_min_ratio_cut(const SearchInstance& inst);

/// Recursive strategy for general graphs with vertex costs: every candidate
/// component is split by the separator S of an oracle cut (A and B are
/// ignored). Zero-weight components, or an empty S, fall back to a centroid.
/// Throws std::logic_error if the oracle returns something that is not a cut.
DecisionTree graph_search_recursive(const SearchInstance& inst, const CutOracle& oracle);

enum class LambdaVariant {
  Basic,     // lambda = 6 + 2 sqrt 5
  Improved,  // lambda = x^2 with x = (1 + sqrt 5 + sqrt(38 + 2 sqrt 5)) / 4
};

double lambda_value(LambdaVariant variant);

struct ComponentPartition {
  std::vector<int> a, b;  // indices into the component list
  Cost weight_a = 0, weight_b = 0;
  int case_used = 0;  // 1-based case of the construction
};

/// Splits the components of G - S into two sides so that
/// w(A u S) * w(B u S) >= w(G)^2 / lambda. Every component must weigh at most
/// w(G) / 2, where w(G) = w(S) + sum of component weights.
ComponentPartition balanced_partition(std::span<const Cost> component_weights, Cost separator_weight,
                                      LambdaVariant variant);

/// Exact test of (wa + ws) * (wb + ws) >= (wa + wb + ws)^2 / lambda.
bool meets_product_bound(Cost wa, Cost wb, Cost ws, LambdaVariant variant);

}  // namespace gsearch
