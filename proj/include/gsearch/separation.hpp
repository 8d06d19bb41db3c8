#pragma once

#include <span>
#include <vector>

#include "gsearch/arith.hpp"
#include "gsearch/graph.hpp"
#include "gsearch/instance.hpp"

namespace gsearch {

struct SeparatorResult {
  Cost cost = 0;
  std::vector<Vertex> separator;  // sorted
};

/// Vertex cut (A, S, B) with its ratio c(S) / (w(A u S) * w(B u S)) kept as an
/// unreduced fraction so that comparisons stay exact.
struct VertexCut {
  std::vector<Vertex> a, s, b;
  Cost ratio_num = 0;
  Cost ratio_den = 0;

  double ratio() const { return static_cast<double>(ratio_num) / static_cast<double>(ratio_den); }
};

/// Fills ratio_num / ratio_den from the sets. Vertex costs only.
void compute_ratio(const SearchInstance& inst, VertexCut& cut);

/// -1, 0, 1 as p/q compares to r/s (q, s > 0).
int compare_fractions(Cost p, Cost q, Cost r, Cost s);

/// A, S, B partition V and no edge joins A to B.
bool is_vertex_cut(const Graph& g, const VertexCut& cut);

/// Weights of the components of G[vertices] - removed.
std::vector<Cost> component_weights(const SearchInstance& inst, std::span<const Vertex> vertices,
                                    std::span<const Vertex> removed);

/// True when every component of G - S weighs at most w(G) / alpha.
bool is_alpha_separator(const SearchInstance& inst, std::span<const Vertex> s, const Rational& alpha);

/// Splits items into two groups with sums as equal as possible (exact subset
/// sums up to a total of 4e6, largest-first greedy above). Returns flags for
/// the lighter group.
std::vector<char> balanced_split(std::span<const Cost> weights);

/// Vertex of `vertices` minimizing the largest remaining component, measured
/// in vertex weight (or vertex count when `by_count`). Ties go to the smaller id.
Vertex centroid(const SearchInstance& inst, std::span<const Vertex> vertices, bool by_count);

}  // namespace gsearch
