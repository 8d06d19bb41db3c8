#include "gsearch/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gsearch/errors.hpp"

namespace gsearch {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v))
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n - 1));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    if (u != v) g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u <= v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

bool Graph::has_self_loop() const {
  for (Vertex u = 0; u < size(); ++u)
    if (adjacent(u, u)) return true;
  return false;
}

bool Graph::has_parallel_edge() const {
  for (const auto& list : adjacency_)
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) return true;
  return false;
}

bool Graph::is_connected() const {
  if (size() == 0) return true;
  auto d = bfs_distances(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

VertexMask::VertexMask(int n, std::span<const Vertex> members) : VertexMask(n) {
  for (Vertex v : members) set(v);
}

std::vector<std::vector<Vertex>> components(const Graph& g, std::span<const Vertex> vertices) {
  return components_without(g, vertices, {});
}

std::vector<std::vector<Vertex>> components_without(const Graph& g, std::span<const Vertex> vertices,
                                                    std::span<const Vertex> removed) {
  VertexMask inside(g.size(), vertices);
  for (Vertex r : removed) inside.set(r, false);
  VertexMask seen(g.size());
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s : sorted) {
    if (!inside[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen.set(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (inside[v] && !seen[v]) {
          seen.set(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex v : g.neighbors(vertices[i])) {
      int j = local[static_cast<std::size_t>(v)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u))
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

TreePaths::TreePaths(const Graph& tree) : tree_(tree), n_(tree.size()) {
  if (!tree.is_tree()) throw PreconditionError("path queries require a tree");
  dist_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (Vertex s = 0; s < n_; ++s) {
    auto d = bfs_distances(tree, s);
    std::copy(d.begin(), d.end(), dist_.begin() + static_cast<std::ptrdiff_t>(index(s, 0)));
  }
}

Vertex TreePaths::step_towards(Vertex a, Vertex b) const {
  if (a == b) return a;
  for (Vertex u : tree_.neighbors(a))
    if (distance(u, b) + 1 == distance(a, b)) return u;
  return kNoVertex;  // unreachable on a tree
}

std::vector<Vertex> TreePaths::path(Vertex a, Vertex b) const {
  std::vector<Vertex> out{a};
  while (a != b) {
    a = step_towards(a, b);
    out.push_back(a);
  }
  return out;
}

}  // namespace gsearch
