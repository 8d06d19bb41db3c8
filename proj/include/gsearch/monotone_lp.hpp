#pragma once

#include <span>
#include <vector>

#include "gsearch/decision_tree.hpp"
#include "gsearch/instance.hpp"
#include "gsearch/lp_solver.hpp"

namespace gsearch {

/// S(v) for every vertex v, each sorted.
using SeparatorAssignment = std::vector<std::vector<Vertex>>;

/// LP relaxation of the separator-assignment formulation on a tree with
/// monotone pairwise costs. x(u,v) exists for every ordered pair; y(u,v,w)
/// only for u on the path between v and w, once per unordered pair {v,w}.
struct SearchLp {
  int n = 0;
  bool worst_case = false;
  LinearProgram program;
  std::vector<int> x;  // variable index of x(u,v) at [u * n + v]
  int m = -1;          // the worst-case bound variable

  int x_index(Vertex u, Vertex v) const { return x[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; }
};

/// Objective: sum over v of w(v) * sum over u of c(u,v) x(u,v).
SearchLp build_avg_lp(const SearchInstance& inst);
/// Objective: M, with sum over u of c(u,v) x(u,v) <= M for every v.
SearchLp build_worst_lp(const SearchInstance& inst);

/// x(u, target) for every u, read from an LP solution.
std::vector<double> x_column(const SearchLp& lp, const LpSolution& sol, Vertex target);

/// Rounds one column of the LP solution: walking the tree rooted at the
/// target bottom-up, a vertex joins S when the not-yet-claimed x-mass of its
/// subtree reaches 1/2 (minus 1e-9), and that mass is then claimed.
std::vector<Vertex> pseudo_sep_assignment(const Graph& tree, Vertex target, std::span<const double> column);

/// For every pair u, v there are v' in S(v), u' in S(u) with u' on the path
/// v..v' and v' on the path u..u'.
bool is_pseudo_separator_assignment(const Graph& tree, const SeparatorAssignment& s);

/// For every pair u, v the path u..v meets both T^S(u) and T^S(v) in a common
/// vertex, where T^S(v) is v plus the union of the paths from v to S(v).
bool has_path_overlap(const Graph& tree, const SeparatorAssignment& s);

/// Decision tree whose root lies in the intersection of all T^S(v) (smallest
/// id), recursing on the components with every S(v) restricted to the
/// component. T^S(v) always contains v, so a vertex whose restricted set is
/// empty still spans itself.
/// Throws std::logic_error when an intersection is empty.
DecisionTree reconstruct_decision_tree(const Graph& tree, const SeparatorAssignment& s);

/// sum over u in S of c(u, target)
Cost assignment_cost(const SearchInstance& inst, std::span<const Vertex> s, Vertex target);

struct LpPipelineResult {
  DecisionTree tree;
  double lp_objective = 0;
  LpSolution solution;
  SeparatorAssignment assignment;
};

/// Average-cost 2-approximation for trees with monotone costs.
LpPipelineResult two_approx_avg(const SearchInstance& inst);
/// Worst-case 2-approximation for trees with monotone costs.
LpPipelineResult two_approx_worst(const SearchInstance& inst);

}  // namespace gsearch
