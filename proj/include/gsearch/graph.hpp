#pragma once

#include <span>
#include <utility>
#include <vector>

namespace gsearch {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

using Edge = std::pair<Vertex, Vertex>;

/// Undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction does not reject self-loops or parallel edges; those are
/// reported by validate_instance() so that a malformed input file can be
/// diagnosed instead of refused at parse time. Algorithms assume a simple
/// connected graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

  /// Throws InputError when an endpoint is out of range.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < size(); }

  /// Edges with u < v, lexicographically sorted; duplicates kept.
  std::vector<Edge> edges() const;
  int edge_count() const;

  bool has_self_loop() const;
  bool has_parallel_edge() const;
  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count() == size() - 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Membership flags over the vertices of a graph.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(int n, bool value = false) : bits_(static_cast<std::size_t>(n), value ? 1 : 0) {}
  VertexMask(int n, std::span<const Vertex> members);

  bool operator[](Vertex v) const { return bits_[static_cast<std::size_t>(v)] != 0; }
  void set(Vertex v, bool value = true) { bits_[static_cast<std::size_t>(v)] = value ? 1 : 0; }
  int size() const { return static_cast<int>(bits_.size()); }

 private:
  std::vector<char> bits_;
};

/// Connected components of the subgraph induced by `vertices`. Each
/// component is sorted, and components are ordered by their minimum vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, std::span<const Vertex> vertices);

/// Components of G[vertices] - removed.
std::vector<std::vector<Vertex>> components_without(const Graph& g, std::span<const Vertex> vertices,
                                                    std::span<const Vertex> removed);

/// All vertices 0..n-1.
std::vector<Vertex> all_vertices(int n);

/// Relabelled induced subgraph: vertex i of the result is `vertices[i]`.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// BFS hop distances from `source` (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Unique-path queries on a tree. Precomputes all-pairs distances, so it is
/// meant for the desk-scale tree algorithms (quadratic memory).
class TreePaths {
 public:
  explicit TreePaths(const Graph& tree);

  int distance(Vertex a, Vertex b) const { return dist_[index(a, b)]; }
  /// True iff u lies on the path between a and b (endpoints included).
  bool on_path(Vertex u, Vertex a, Vertex b) const {
    return distance(a, u) + distance(u, b) == distance(a, b);
  }
  /// Vertices of the path from a to b, in order.
  std::vector<Vertex> path(Vertex a, Vertex b) const;
  /// Next vertex after `a` on the path towards `b` (a itself when a == b).
  Vertex step_towards(Vertex a, Vertex b) const;

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  Graph tree_;
  int n_;
  std::vector<int> dist_;
};

}  // namespace gsearch
