#include "gsearch/instance.hpp"

#include <algorithm>
#include <sstream>

#include "gsearch/errors.hpp"

namespace gsearch {

CostModel CostModel::vertex(std::vector<Cost> costs) {
  CostModel m;
  m.variant_ = CostVariant::Vertex;
  m.n_ = static_cast<int>(costs.size());
  m.values_ = std::move(costs);
  return m;
}

CostModel CostModel::pairwise(int n, std::vector<Cost> matrix, bool monotone) {
  if (matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw InputError("pairwise cost matrix must have n*n entries");
  CostModel m;
  m.variant_ = CostVariant::Pairwise;
  m.monotone_ = monotone;
  m.n_ = n;
  m.values_ = std::move(matrix);
  return m;
}

Cost CostModel::vertex_cost(Vertex v) const {
  if (!is_vertex()) throw PreconditionError("target-independent vertex costs required");
  return values_[static_cast<std::size_t>(v)];
}

Cost SearchInstance::total_weight() const {
  Cost total = 0;
  for (Cost w : weights) total = checked_add(total, w);
  return total;
}

Cost SearchInstance::weight_of(std::span<const Vertex> vertices) const {
  Cost total = 0;
  for (Vertex v : vertices) total = checked_add(total, weights[static_cast<std::size_t>(v)]);
  return total;
}

Cost SearchInstance::cost_of(std::span<const Vertex> vertices) const {
  Cost total = 0;
  for (Vertex v : vertices) total = checked_add(total, cost.vertex_cost(v));
  return total;
}

SearchInstance induced_instance(const SearchInstance& inst, std::span<const Vertex> vertices) {
  SearchInstance out;
  out.graph = induced_subgraph(inst.graph, vertices);
  for (Vertex v : vertices) out.weights.push_back(inst.weights[static_cast<std::size_t>(v)]);
  if (inst.cost.is_vertex()) {
    std::vector<Cost> c;
    for (Vertex v : vertices) c.push_back(inst.cost.vertex_cost(v));
    out.cost = CostModel::vertex(std::move(c));
  } else {
    std::vector<Cost> c;
    for (Vertex v : vertices)
      for (Vertex x : vertices) c.push_back(inst.cost(v, x));
    out.cost = CostModel::pairwise(static_cast<int>(vertices.size()), std::move(c), inst.cost.monotone());
  }
  return out;
}

namespace {

// With u the neighbour of v towards x, c(u,x) <= c(v,x) for all such steps is
// equivalent to the condition for every vertex on the path, by transitivity.
void check_monotone(const SearchInstance& inst, std::vector<std::string>& out) {
  const Graph& g = inst.graph;
  const int n = g.size();
  for (Vertex x = 0; x < n; ++x) {
    auto dist = bfs_distances(g, x);
    for (Vertex v = 0; v < n; ++v) {
      if (v == x) continue;
      for (Vertex u : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(u)] + 1 != dist[static_cast<std::size_t>(v)]) continue;
        if (inst.cost(u, x) > inst.cost(v, x)) {
          std::ostringstream msg;
          msg << "monotonicity violated at (u=" << u << ", v=" << v << ", x=" << x << "): c(" << u << "," << x
              << ")=" << inst.cost(u, x) << " > c(" << v << "," << x << ")=" << inst.cost(v, x);
          out.push_back(msg.str());
          return;
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_instance(const SearchInstance& inst) {
  std::vector<std::string> out;
  const Graph& g = inst.graph;
  const int n = g.size();
  if (n == 0) out.emplace_back("empty graph");
  if (g.has_self_loop()) out.emplace_back("self-loop");
  if (g.has_parallel_edge()) out.emplace_back("parallel edge");
  if (!g.is_connected()) out.emplace_back("disconnected");
  if (inst.weights.size() != static_cast<std::size_t>(n)) out.emplace_back("weights length differs from n");
  else if (std::any_of(inst.weights.begin(), inst.weights.end(), [](Cost w) { return w < 0; }))
    out.emplace_back("negative weight");
  if (inst.cost.size() != n) out.emplace_back("cost model size differs from n");
  else if (std::any_of(inst.cost.values().begin(), inst.cost.values().end(), [](Cost c) { return c < 0; }))
    out.emplace_back("negative cost");
  if (!out.empty()) return out;
  if (!inst.cost.is_vertex() && inst.cost.monotone()) {
    if (!g.is_tree()) out.emplace_back("monotone flag requires a tree");
    else check_monotone(inst, out);
  }
  return out;
}

void require_valid(const SearchInstance& inst) {
  auto problems = validate_instance(inst);
  if (!problems.empty()) throw PreconditionError("invalid instance: " + problems.front());
}

void require_vertex_costs(const SearchInstance& inst, const char* algorithm) {
  if (!inst.cost.is_vertex())
    throw PreconditionError(std::string(algorithm) + " requires target-independent vertex costs");
}

void require_tree(const SearchInstance& inst, const char* algorithm) {
  if (!inst.graph.is_tree()) throw PreconditionError(std::string(algorithm) + " requires a tree");
}

}  // namespace gsearch
