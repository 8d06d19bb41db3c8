#include "gsearch/tree_search.hpp"

#include <algorithm>

#include "gsearch/errors.hpp"
#include "gsearch/separation.hpp"
#include "gsearch/separator.hpp"

namespace gsearch {

PartialDecisionTree partial_tree_from_set(const Graph& g, std::span<const Vertex> queries,
                                          std::span<const Vertex> candidate) {
  PartialDecisionTree out;
  VertexMask inside(g.size(), candidate);
  for (Vertex q : queries)
    if (!g.contains(q) || !inside[q]) throw InputError("query " + std::to_string(q) + " lies outside the candidate set");

  std::vector<int> rank(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < queries.size(); ++i)
    if (rank[static_cast<std::size_t>(queries[i])] < 0) rank[static_cast<std::size_t>(queries[i])] = static_cast<int>(i);

  std::vector<std::pair<std::vector<Vertex>, Vertex>> work{{std::vector<Vertex>(candidate.begin(), candidate.end()), kNoVertex}};
  std::sort(work.back().first.begin(), work.back().first.end());
  while (!work.empty()) {
    auto [comp, above] = std::move(work.back());
    work.pop_back();
    Vertex pick = kNoVertex;
    for (Vertex v : comp) {
      const int r = rank[static_cast<std::size_t>(v)];
      if (r >= 0 && (pick == kNoVertex || r < rank[static_cast<std::size_t>(pick)])) pick = v;
    }
    if (pick == kNoVertex) {
      out.open.push_back({std::move(comp), above});
      continue;
    }
    out.queries.emplace_back(pick, above);
    auto parts = components_without(g, comp, std::span<const Vertex>(&pick, 1));
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) work.emplace_back(std::move(*it), pick);
  }
  return out;
}

DecisionTree assemble_by_separators(const SearchInstance& inst, const SeparatorChooser& choose) {
  const int n = inst.size();
  if (n == 0) throw PreconditionError("empty graph");
  if (!inst.graph.is_connected()) throw PreconditionError("graph is disconnected");
  std::vector<Vertex> parent(static_cast<std::size_t>(n), DecisionTree::kUnassigned);
  Vertex root = kNoVertex;
  std::vector<std::pair<std::vector<Vertex>, Vertex>> work{{all_vertices(n), kNoVertex}};
  while (!work.empty()) {
    auto [comp, above] = std::move(work.back());
    work.pop_back();
    std::vector<Vertex> s = comp.size() == 1 ? comp : choose(comp);
    if (s.empty()) throw std::logic_error("separator chooser returned an empty set");
    auto partial = partial_tree_from_set(inst.graph, s, comp);
    for (auto [v, p] : partial.queries) {
      const Vertex link = p == kNoVertex ? above : p;
      parent[static_cast<std::size_t>(v)] = link;
      if (link == kNoVertex) root = v;
    }
    for (auto& leaf : partial.open) work.emplace_back(std::move(leaf.component), leaf.attach);
  }
  return DecisionTree(root, std::move(parent));
}

void order_cheapest_first(const SearchInstance& inst, std::vector<Vertex>& vertices) {
  std::sort(vertices.begin(), vertices.end(), [&](Vertex a, Vertex b) {
    const Cost ca = inst.cost.vertex_cost(a), cb = inst.cost.vertex_cost(b);
    return ca != cb ? ca < cb : a < b;
  });
}

DecisionTree tree_search_4eps(const SearchInstance& inst, const Rational& epsilon) {
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  require_vertex_costs(inst, "tree4eps");
  require_tree(inst, "tree4eps");
  const Rational delta = epsilon / (Rational(4) + epsilon);
  return assemble_by_separators(inst, [&](const std::vector<Vertex>& comp) {
    SearchInstance sub = induced_instance(inst, comp);
    std::vector<Vertex> s;
    if (sub.total_weight() > 0)
      for (Vertex local : separator_fptas(sub, Rational(2), delta).separator)
        s.push_back(comp[static_cast<std::size_t>(local)]);
    if (s.empty()) s.push_back(comp[static_cast<std::size_t>(centroid(sub, all_vertices(sub.size()), true))]);
    order_cheapest_first(inst, s);
    return s;
  });
}

}  // namespace gsearch
