#include "gsearch/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gsearch/errors.hpp"

namespace gsearch {

namespace {

struct KindName {
  GeneratorKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {GeneratorKind::Path, "path"},
    {GeneratorKind::Star, "star"},
    {GeneratorKind::Spider, "spider"},
    {GeneratorKind::RandomTree, "random_tree"},
    {GeneratorKind::RandomConnectedGraph, "random_connected_graph"},
    {GeneratorKind::LinearOrderingStar, "linear_ordering_star"},
};

Cost uniform(std::mt19937_64& rng, Cost lo, Cost hi) { return std::uniform_int_distribution<Cost>(lo, hi)(rng); }

std::vector<Edge> relabel(const std::vector<Edge>& edges, int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(uniform(rng, 0, v - 1)), v);
  return edges;
}

std::vector<Edge> shape_edges(GeneratorKind kind, const GeneratorParams& p, std::mt19937_64& rng) {
  const int n = p.n;
  std::vector<Edge> edges;
  switch (kind) {
    case GeneratorKind::Path:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      return edges;
    case GeneratorKind::Star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      return edges;
    case GeneratorKind::Spider: {
      if (p.legs < 1) throw InputError("spider needs at least one leg");
      std::vector<Vertex> tip(static_cast<std::size_t>(p.legs), 0);
      for (Vertex v = 1; v < n; ++v) {
        auto& t = tip[static_cast<std::size_t>((v - 1) % p.legs)];
        edges.emplace_back(t, v);
        t = v;
      }
      return edges;
    }
    case GeneratorKind::RandomTree:
      return relabel(random_tree_edges(n, rng), n, rng);
    case GeneratorKind::RandomConnectedGraph: {
      if (p.edge_probability < 0 || p.edge_probability > 1) throw InputError("edge probability must lie in [0, 1]");
      edges = random_tree_edges(n, rng);
      Graph tree = Graph::from_edges(n, edges);
      std::bernoulli_distribution extra(p.edge_probability);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (!tree.adjacent(u, v) && extra(rng)) edges.emplace_back(u, v);
      return relabel(edges, n, rng);
    }
    case GeneratorKind::LinearOrderingStar:
      break;
  }
  throw InputError("unsupported generator kind");
}

}  // namespace

GeneratorKind parse_generator_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name) return k.kind;
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

std::string to_string(GeneratorKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "unknown";
}

SearchInstance linear_ordering_star(const std::vector<std::vector<Cost>>& a) {
  const int m = static_cast<int>(a.size());
  Cost total = 0;
  for (const auto& row : a) {
    if (row.size() != a.size()) throw InputError("linear ordering matrix must be square");
    for (Cost x : row) {
      if (x < 0) throw InputError("linear ordering matrix entries must be nonnegative");
      total = checked_add(total, x);
    }
  }
  const Cost large = checked_add(total, 1);
  const int n = m + 1;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  std::vector<Cost> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [&](Vertex v, Vertex x) -> Cost& { return c[static_cast<std::size_t>(v * n + x)]; };
  for (Vertex i = 1; i < n; ++i) {
    at(0, i) = large;
    for (Vertex j = 1; j < n; ++j)
      if (i != j) at(i, j) = a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  SearchInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.weights.assign(static_cast<std::size_t>(n), 1);
  inst.cost = CostModel::pairwise(n, std::move(c), false);
  return inst;
}

SearchInstance generate(GeneratorKind kind, const GeneratorParams& p, std::uint64_t seed) {
  if (kind == GeneratorKind::LinearOrderingStar) return linear_ordering_star(p.matrix);
  if (p.n < 1) throw InputError("n must be at least 1");
  if (p.weight_min < 0 || p.weight_min > p.weight_max) throw InputError("invalid weight range");
  if (p.cost_min < 0 || p.cost_min > p.cost_max) throw InputError("invalid cost range");
  const bool tree_kind = kind != GeneratorKind::RandomConnectedGraph;
  if (p.monotone && (p.variant != CostVariant::Pairwise || !tree_kind))
    throw InputError("monotone costs need the pairwise variant on a tree kind");

  std::mt19937_64 rng(seed);
  const int n = p.n;
  SearchInstance inst;
  inst.graph = Graph::from_edges(n, shape_edges(kind, p, rng));
  for (int i = 0; i < n; ++i) inst.weights.push_back(uniform(rng, p.weight_min, p.weight_max));

  if (p.variant == CostVariant::Vertex) {
    std::vector<Cost> c;
    for (int i = 0; i < n; ++i) c.push_back(uniform(rng, p.cost_min, p.cost_max));
    inst.cost = CostModel::vertex(std::move(c));
    return inst;
  }
  std::vector<Cost> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    if (p.monotone) {
      auto dist = bfs_distances(inst.graph, x);
      const int depth = *std::max_element(dist.begin(), dist.end());
      std::vector<Cost> f;
      for (int d = 0; d <= depth; ++d) f.push_back(uniform(rng, p.cost_min, p.cost_max));
      std::sort(f.begin(), f.end());
      for (Vertex v = 0; v < n; ++v)
        c[static_cast<std::size_t>(v * n + x)] = f[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])];
    } else {
      for (Vertex v = 0; v < n; ++v) c[static_cast<std::size_t>(v * n + x)] = uniform(rng, p.cost_min, p.cost_max);
    }
  }
  inst.cost = CostModel::pairwise(n, std::move(c), p.monotone);
  return inst;
}

}  // namespace gsearch
