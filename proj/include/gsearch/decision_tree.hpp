#pragma once

#include <span>
#include <string>
#include <vector>

#include "gsearch/arith.hpp"
#include "gsearch/graph.hpp"
#include "gsearch/instance.hpp"

namespace gsearch {

/// Search strategy stored as a rooted tree over the vertices: the node for v
/// is where v gets queried, and its subtree is the candidate set at that
/// moment. Children are kept ordered by the minimum vertex of their subtree,
/// which is also the component key used on disk.
class DecisionTree {
 public:
  static constexpr Vertex kUnassigned = -2;

  DecisionTree() = default;
  /// `parent[root]` must be kNoVertex; vertices left out carry kUnassigned.
  /// Throws InputError on out-of-range parents or cycles.
  DecisionTree(Vertex root, std::vector<Vertex> parent);

  Vertex root() const { return root_; }
  int size() const { return static_cast<int>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  bool contains(Vertex v) const { return v == root_ || parent(v) >= 0; }
  std::span<const Vertex> children(Vertex v) const { return children_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> parents() const { return parent_; }

  /// Vertices of the subtree rooted at v, sorted.
  std::vector<Vertex> subtree(Vertex v) const;
  /// Root-to-v node path, inclusive.
  std::vector<Vertex> query_path(Vertex v) const;
  /// Nodes in an order where every parent precedes its children.
  std::vector<Vertex> preorder() const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  Vertex root_ = kNoVertex;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
};

/// Violations of the strategy invariants; empty when D is valid for inst.
std::vector<std::string> validate_decision_tree(const SearchInstance& inst, const DecisionTree& d);

/// Throws std::logic_error with the first violation.
void require_valid_tree(const SearchInstance& inst, const DecisionTree& d);

Cost evaluate_target_cost(const SearchInstance& inst, const DecisionTree& d, Vertex x);
Cost average_cost(const SearchInstance& inst, const DecisionTree& d);
Cost worst_cost(const SearchInstance& inst, const DecisionTree& d);

/// w(candidate set of v) for every node v.
std::vector<Cost> candidate_weights(const SearchInstance& inst, const DecisionTree& d);

/// Sum over v of w(candidate set of v) * c(v); vertex costs only.
Cost contribution_sum(const SearchInstance& inst, const DecisionTree& d);

struct LevelDecomposition {
  Cost total_weight = 0;
  /// separators[k] for k = 0..total_weight, each sorted.
  std::vector<std::vector<Vertex>> separators;
  /// families[k]: roots of the maximal candidate sets of weight <= k.
  std::vector<std::vector<Vertex>> families;
};

/// Throws PreconditionError for pairwise cost models.
LevelDecomposition decompose_levels(const SearchInstance& inst, const DecisionTree& d);

/// Sum of c(S_k) for k = 0..W-1.
Cost level_sum(const SearchInstance& inst, const LevelDecomposition& levels);

/// Sum of c(S_floor(k/2)) for k = 0..W; at most twice the cost of the tree.
Cost halved_level_sum(const SearchInstance& inst, const LevelDecomposition& levels);

/// A decision tree under construction: the queried vertices with their
/// parents (kNoVertex for the root), and the open leaves. Each open leaf is a
/// candidate component that no query has split yet, to be hung below
/// `attach` (kNoVertex when nothing was queried).
struct PartialDecisionTree {
  struct OpenLeaf {
    std::vector<Vertex> component;
    Vertex attach = kNoVertex;
  };

  std::vector<std::pair<Vertex, Vertex>> queries;
  std::vector<OpenLeaf> open;
};

}  // namespace gsearch
