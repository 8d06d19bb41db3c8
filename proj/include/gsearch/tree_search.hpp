#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"

namespace gsearch {

/// Partial decision tree that queries exactly `queries` inside the connected
/// set `candidate`: the first listed query lying in the current component is
/// asked, and components holding no query stay open below the query that cut
/// them off. That query is the last one adjacent to the open component.
/// Throws InputError if a query lies outside `candidate`.
PartialDecisionTree partial_tree_from_set(const Graph& g, std::span<const Vertex> queries,
                                          std::span<const Vertex> candidate);

/// Chooses the query set for a connected candidate set (global vertex ids,
/// sorted). Must return a nonempty subset, listed in query order.
using SeparatorChooser = std::function<std::vector<Vertex>(const std::vector<Vertex>& candidate)>;

/// Builds a full decision tree by separating every open component with
/// `choose` and hanging the resulting partial trees below their attach points.
DecisionTree assemble_by_separators(const SearchInstance& inst, const SeparatorChooser& choose);

/// Sorts by ascending vertex cost, then id.
void order_cheapest_first(const SearchInstance& inst, std::vector<Vertex>& vertices);

/// (4 + epsilon)-approximate average-cost strategy for trees with vertex
/// costs: every component is split by a bicriteria 2-separator computed with
/// delta = epsilon / (4 + epsilon).
DecisionTree tree_search_4eps(const SearchInstance& inst, const Rational& epsilon);

}  // namespace gsearch
