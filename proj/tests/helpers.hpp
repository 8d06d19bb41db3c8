#pragma once

#include <vector>

#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"

namespace testing {

using namespace gsearch;

inline SearchInstance vertex_instance(int n, std::vector<Edge> edges, std::vector<Cost> w, std::vector<Cost> c) {
  SearchInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.weights = std::move(w);
  inst.cost = CostModel::vertex(std::move(c));
  return inst;
}

inline SearchInstance pairwise_instance(int n, std::vector<Edge> edges, std::vector<Cost> w, std::vector<Cost> matrix,
                                        bool monotone) {
  SearchInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.weights = std::move(w);
  inst.cost = CostModel::pairwise(n, std::move(matrix), monotone);
  return inst;
}

/// Path 0-1-...-n-1 with unit weights and costs.
inline SearchInstance unit_path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return vertex_instance(n, edges, std::vector<Cost>(static_cast<std::size_t>(n), 1),
                         std::vector<Cost>(static_cast<std::size_t>(n), 1));
}

inline DecisionTree tree_from_parents(std::vector<Vertex> parent) {
  Vertex root = kNoVertex;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] == kNoVertex) root = static_cast<Vertex>(i);
  return DecisionTree(root, std::move(parent));
}

}  // namespace testing
