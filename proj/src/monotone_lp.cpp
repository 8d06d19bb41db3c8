#include "gsearch/monotone_lp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "gsearch/errors.hpp"

namespace gsearch {

namespace {

void require_monotone_tree(const SearchInstance& inst, const char* name) {
  require_tree(inst, name);
  if (inst.cost.is_vertex() || !inst.cost.monotone())
    throw PreconditionError(std::string(name) + " requires pairwise costs flagged monotone");
  require_valid(inst);
}

std::string var_name(const char* prefix, std::initializer_list<Vertex> ids) {
  std::string out = prefix;
  for (Vertex v : ids) out += "_" + std::to_string(v);
  return out;
}

SearchLp build(const SearchInstance& inst, bool worst_case) {
  require_monotone_tree(inst, worst_case ? "build_worst_lp" : "build_avg_lp");
  const int n = inst.size();
  TreePaths paths(inst.graph);
  SearchLp lp;
  lp.n = n;
  lp.worst_case = worst_case;
  auto& prog = lp.program;
  lp.x.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      const double cost = worst_case ? 0.0
                                     : static_cast<double>(inst.weights[static_cast<std::size_t>(v)]) *
                                           static_cast<double>(inst.cost(u, v));
      lp.x[static_cast<std::size_t>(u * n + v)] = prog.add_variable(var_name("x", {u, v}), cost, 1.0);
    }
  if (worst_case) lp.m = prog.add_variable("M", 1.0, std::numeric_limits<double>::infinity());

  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v; w < n; ++w) {
      std::vector<std::pair<int, double>> cover;
      for (Vertex u : paths.path(v, w)) {
        const int y = prog.add_variable(var_name("y", {u, v, w}), 0.0, 1.0);
        cover.emplace_back(y, 1.0);
        prog.add_row(var_name("link", {u, v, w, v}), {{lp.x_index(u, v), 1.0}, {y, -1.0}}, 0.0);
        if (w != v) prog.add_row(var_name("link", {u, v, w, w}), {{lp.x_index(u, w), 1.0}, {y, -1.0}}, 0.0);
      }
      prog.add_row(var_name("cover", {v, w}), std::move(cover), 1.0);
    }
  if (worst_case)
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::pair<int, double>> terms{{lp.m, 1.0}};
      for (Vertex u = 0; u < n; ++u)
        if (inst.cost(u, v) != 0) terms.emplace_back(lp.x_index(u, v), -static_cast<double>(inst.cost(u, v)));
      prog.add_row(var_name("bound", {v}), std::move(terms), 0.0);
    }
  return lp;
}

// v together with the union of paths from v to each member of s, as flags.
std::vector<char> spanned(const TreePaths& paths, int n, Vertex v, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  in[static_cast<std::size_t>(v)] = 1;
  for (Vertex u : s)
    for (Vertex z : paths.path(v, u)) in[static_cast<std::size_t>(z)] = 1;
  return in;
}

}  // namespace

SearchLp build_avg_lp(const SearchInstance& inst) { return build(inst, false); }
SearchLp build_worst_lp(const SearchInstance& inst) { return build(inst, true); }

std::vector<double> x_column(const SearchLp& lp, const LpSolution& sol, Vertex target) {
  std::vector<double> col(static_cast<std::size_t>(lp.n));
  for (Vertex u = 0; u < lp.n; ++u) col[static_cast<std::size_t>(u)] = sol.values[static_cast<std::size_t>(lp.x_index(u, target))];
  return col;
}

std::vector<Vertex> pseudo_sep_assignment(const Graph& tree, Vertex target, std::span<const double> column) {
  const int n = tree.size();
  std::vector<Vertex> order, parent(static_cast<std::size_t>(n), kNoVertex);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<Vertex> queue{target};
  seen[static_cast<std::size_t>(target)] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (Vertex c : tree.neighbors(u))
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        parent[static_cast<std::size_t>(c)] = u;
        queue.push_back(c);
      }
  }
  // mass[u]: unclaimed column mass in the subtree of u.
  std::vector<double> mass(column.begin(), column.end());
  std::vector<Vertex> s;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    if (mass[static_cast<std::size_t>(u)] >= 0.5 - 1e-9) {
      s.push_back(u);
      mass[static_cast<std::size_t>(u)] = 0;
    }
    if (parent[static_cast<std::size_t>(u)] != kNoVertex)
      mass[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])] += mass[static_cast<std::size_t>(u)];
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool is_pseudo_separator_assignment(const Graph& tree, const SeparatorAssignment& s) {
  const int n = tree.size();
  TreePaths paths(tree);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v) {
      bool witnessed = false;
      for (Vertex vp : s[static_cast<std::size_t>(v)]) {
        for (Vertex up : s[static_cast<std::size_t>(u)])
          if (paths.on_path(up, v, vp) && paths.on_path(vp, u, up)) {
            witnessed = true;
            break;
          }
        if (witnessed) break;
      }
      if (!witnessed) return false;
    }
  return true;
}

bool has_path_overlap(const Graph& tree, const SeparatorAssignment& s) {
  const int n = tree.size();
  TreePaths paths(tree);
  std::vector<std::vector<char>> span_of;
  for (Vertex v = 0; v < n; ++v) span_of.push_back(spanned(paths, n, v, s[static_cast<std::size_t>(v)]));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool met = false;
      for (Vertex z : paths.path(u, v))
        if (span_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(z)] &&
            span_of[static_cast<std::size_t>(v)][static_cast<std::size_t>(z)]) {
          met = true;
          break;
        }
      if (!met) return false;
    }
  return true;
}

DecisionTree reconstruct_decision_tree(const Graph& tree, const SeparatorAssignment& s) {
  const int n = tree.size();
  if (static_cast<int>(s.size()) != n) throw InputError("assignment size differs from the tree");
  TreePaths paths(tree);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), DecisionTree::kUnassigned);
  Vertex root = kNoVertex;
  std::vector<std::pair<std::vector<Vertex>, Vertex>> work{{all_vertices(n), kNoVertex}};
  while (!work.empty()) {
    auto [comp, above] = std::move(work.back());
    work.pop_back();
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    VertexMask inside(n, comp);
    for (Vertex v : comp) {
      std::vector<Vertex> kept;
      for (Vertex u : s[static_cast<std::size_t>(v)])
        if (inside[u]) kept.push_back(u);
      auto in = spanned(paths, n, v, kept);
      for (Vertex z : comp) hits[static_cast<std::size_t>(z)] += in[static_cast<std::size_t>(z)];
    }
    Vertex r = kNoVertex;
    for (Vertex z : comp)
      if (hits[static_cast<std::size_t>(z)] == static_cast<int>(comp.size())) {
        r = z;
        break;
      }
    if (r == kNoVertex)
      throw std::logic_error("empty intersection while reconstructing: not a pseudo-separator assignment");
    parent[static_cast<std::size_t>(r)] = above;
    if (above == kNoVertex) root = r;
    for (auto& part : components_without(tree, comp, std::span<const Vertex>(&r, 1))) work.emplace_back(std::move(part), r);
  }
  return DecisionTree(root, std::move(parent));
}

Cost assignment_cost(const SearchInstance& inst, std::span<const Vertex> s, Vertex target) {
  Cost total = 0;
  for (Vertex u : s) total = checked_add(total, inst.cost(u, target));
  return total;
}

namespace {

LpPipelineResult pipeline(const SearchInstance& inst, const SearchLp& lp) {
  LpPipelineResult out;
  out.solution = solve_lp(lp.program);
  out.lp_objective = out.solution.objective;
  for (Vertex v = 0; v < inst.size(); ++v) {
    auto col = x_column(lp, out.solution, v);
    out.assignment.push_back(pseudo_sep_assignment(inst.graph, v, col));
    double fractional = 0;
    for (Vertex u = 0; u < inst.size(); ++u)
      fractional += static_cast<double>(inst.cost(u, v)) * col[static_cast<std::size_t>(u)];
    const double rounded = static_cast<double>(assignment_cost(inst, out.assignment.back(), v));
    if (rounded > 2 * fractional + 1e-6 * std::max(1.0, 2 * fractional))
      throw std::logic_error("rounding bound violated at vertex " + std::to_string(v));
  }
#ifndef NDEBUG
  if (!is_pseudo_separator_assignment(inst.graph, out.assignment))
    throw std::logic_error("rounded assignment is not a pseudo-separator assignment");
#endif
  out.tree = reconstruct_decision_tree(inst.graph, out.assignment);
  return out;
}

}  // namespace

LpPipelineResult two_approx_avg(const SearchInstance& inst) { return pipeline(inst, build_avg_lp(inst)); }
LpPipelineResult two_approx_worst(const SearchInstance& inst) { return pipeline(inst, build_worst_lp(inst)); }

}  // namespace gsearch
