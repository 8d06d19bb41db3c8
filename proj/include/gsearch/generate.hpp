#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsearch/instance.hpp"

namespace gsearch {

enum class GeneratorKind { Path, Star, Spider, RandomTree, RandomConnectedGraph, LinearOrderingStar };

GeneratorKind parse_generator_kind(std::string_view name);
std::string to_string(GeneratorKind kind);

struct GeneratorParams {
  int n = 1;
  Cost weight_min = 1;
  Cost weight_max = 10;
  Cost cost_min = 1;
  Cost cost_max = 10;
  CostVariant variant = CostVariant::Vertex;
  bool monotone = false;
  /// Spider legs (vertex 0 is the body).
  int legs = 3;
  /// Probability of each non-tree edge in random_connected_graph.
  double edge_probability = 0.3;
  /// Square matrix for linear_ordering_star; n is ignored for that kind.
  std::vector<std::vector<Cost>> matrix;
};

/// Deterministic per (kind, params, seed). Path, star and spider use fixed
/// labels (path 0-1-...-n-1, center 0); random kinds shuffle labels.
/// Monotone pairwise costs are c(v,x) = f_x(dist(v,x)) for a random
/// nondecreasing f_x, and are only available on trees.
SearchInstance generate(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed);

/// The star whose optimal strategies encode minimum linear orderings of A:
/// center 0, leaf i+1 for row i, c(leaf_i, leaf_j) = A[i][j],
/// c(center, leaf) = sum(A) + 1, c(leaf, center) = 0, zero diagonal, unit weights.
SearchInstance linear_ordering_star(const std::vector<std::vector<Cost>>& a);

}  // namespace gsearch
