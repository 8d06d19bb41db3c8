#pragma once

#include <span>
#include <string>
#include <vector>

#include "gsearch/arith.hpp"
#include "gsearch/graph.hpp"

namespace gsearch {

enum class CostVariant { Vertex, Pairwise };

/// Query cost c(v, x): the price of querying v when the hidden target is x.
///
/// Vertex costs ignore the target. Pairwise costs are a row-major n x n
/// matrix indexed [v * n + x]; the monotone flag promises that along every
/// tree path towards x the cost never increases.
class CostModel {
 public:
  CostModel() = default;

  static CostModel vertex(std::vector<Cost> costs);
  static CostModel pairwise(int n, std::vector<Cost> matrix, bool monotone);

  CostVariant variant() const { return variant_; }
  bool is_vertex() const { return variant_ == CostVariant::Vertex; }
  bool monotone() const { return monotone_; }
  int size() const { return n_; }

  Cost operator()(Vertex v, Vertex x) const {
    return is_vertex() ? values_[static_cast<std::size_t>(v)]
                       : values_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x)];
  }
  /// c(v) of a vertex-cost model. Throws PreconditionError on pairwise models.
  Cost vertex_cost(Vertex v) const;
  std::span<const Cost> values() const { return values_; }

  friend bool operator==(const CostModel&, const CostModel&) = default;

 private:
  CostVariant variant_ = CostVariant::Vertex;
  bool monotone_ = false;
  int n_ = 0;
  std::vector<Cost> values_;
};

struct SearchInstance {
  Graph graph;
  std::vector<Cost> weights;
  CostModel cost;

  int size() const { return graph.size(); }
  Cost total_weight() const;
  Cost weight_of(std::span<const Vertex> vertices) const;
  /// Sum of c(v) over a set; vertex-cost models only.
  Cost cost_of(std::span<const Vertex> vertices) const;

  friend bool operator==(const SearchInstance&, const SearchInstance&) = default;
};

/// Sub-instance on `vertices` (relabelled: vertex i is vertices[i]).
SearchInstance induced_instance(const SearchInstance& inst, std::span<const Vertex> vertices);

/// Human-readable problems with an instance; empty when it is usable.
/// Monotonicity is only checked when the cost model carries the flag and
/// stops at the first failing triple.
std::vector<std::string> validate_instance(const SearchInstance& inst);

/// Throws PreconditionError carrying the first violation, if any.
void require_valid(const SearchInstance& inst);

/// Throws PreconditionError unless the instance uses vertex costs.
void require_vertex_costs(const SearchInstance& inst, const char* algorithm);

/// Throws PreconditionError unless the graph is a tree.
void require_tree(const SearchInstance& inst, const char* algorithm);

}  // namespace gsearch
