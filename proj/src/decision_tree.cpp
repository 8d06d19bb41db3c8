#include "gsearch/decision_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gsearch/errors.hpp"

namespace gsearch {

namespace {

std::string set_text(std::span<const Vertex> s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace

DecisionTree::DecisionTree(Vertex root, std::vector<Vertex> parent) : root_(root), parent_(std::move(parent)) {
  const int n = size();
  if (root_ < 0 || root_ >= n) throw InputError("decision tree root out of range");
  if (parent_[static_cast<std::size_t>(root_)] != kNoVertex) throw InputError("decision tree root has a parent");
  children_.assign(static_cast<std::size_t>(n), {});
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = parent_[static_cast<std::size_t>(v)];
    if (v == root_ || p == kUnassigned) continue;
    if (p < 0 || p >= n || p == v) throw InputError("vertex " + std::to_string(v) + " has an invalid parent");
    children_[static_cast<std::size_t>(p)].push_back(v);
  }
  // Every assigned vertex must reach the root; a cycle would make preorder miss it.
  auto order = preorder();
  auto assigned = std::count_if(parent_.begin(), parent_.end(), [](Vertex p) { return p != kUnassigned; });
  if (static_cast<std::ptrdiff_t>(order.size()) != assigned) throw InputError("decision tree parent links do not all lead to the root");

  std::vector<Vertex> min_below(static_cast<std::size_t>(n), kNoVertex);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    Vertex m = v;
    for (Vertex c : children(v)) m = std::min(m, min_below[static_cast<std::size_t>(c)]);
    min_below[static_cast<std::size_t>(v)] = m;
  }
  for (auto& list : children_)
    std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) {
      return min_below[static_cast<std::size_t>(a)] < min_below[static_cast<std::size_t>(b)];
    });
}

std::vector<Vertex> DecisionTree::preorder() const {
  std::vector<Vertex> out;
  if (root_ == kNoVertex) return out;
  std::vector<Vertex> stack{root_};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    if (out.size() > parent_.size()) break;
    auto kids = children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<Vertex> DecisionTree::subtree(Vertex v) const {
  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (Vertex c : children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> DecisionTree::query_path(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = v; u != kNoVertex; u = parent(u)) out.push_back(u);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> validate_decision_tree(const SearchInstance& inst, const DecisionTree& d) {
  std::vector<std::string> out;
  const int n = inst.size();
  if (d.size() != n) {
    out.push_back("decision tree covers " + std::to_string(d.size()) + " slots, graph has " + std::to_string(n));
    return out;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!d.contains(v)) {
      out.push_back("coverage: vertex " + std::to_string(v) + " is never queried");
      return out;
    }
  for (Vertex q : d.preorder()) {
    auto candidate = d.subtree(q);
    auto expected = components_without(inst.graph, candidate, std::span<const Vertex>(&q, 1));
    std::vector<std::vector<Vertex>> actual;
    for (Vertex c : d.children(q)) actual.push_back(d.subtree(c));
    if (actual != expected) {
      std::ostringstream msg;
      msg << "node " << q << " with candidate set " << set_text(candidate) << ": children";
      for (auto& s : actual) msg << ' ' << set_text(s);
      msg << " do not match the components";
      for (auto& s : expected) msg << ' ' << set_text(s);
      out.push_back(msg.str());
      return out;
    }
  }
  return out;
}

void require_valid_tree(const SearchInstance& inst, const DecisionTree& d) {
  auto problems = validate_decision_tree(inst, d);
  if (!problems.empty()) throw std::logic_error("invalid decision tree: " + problems.front());
}

Cost evaluate_target_cost(const SearchInstance& inst, const DecisionTree& d, Vertex x) {
  if (!inst.graph.contains(x)) throw InputError("target " + std::to_string(x) + " not in graph");
  Cost total = 0;
  for (Vertex q = x; q != kNoVertex; q = d.parent(q)) total = checked_add(total, inst.cost(q, x));
  return total;
}

Cost average_cost(const SearchInstance& inst, const DecisionTree& d) {
  Cost total = 0;
  for (Vertex x = 0; x < inst.size(); ++x)
    total = checked_add(total, checked_mul(inst.weights[static_cast<std::size_t>(x)], evaluate_target_cost(inst, d, x)));
  return total;
}

Cost worst_cost(const SearchInstance& inst, const DecisionTree& d) {
  Cost worst = 0;
  for (Vertex x = 0; x < inst.size(); ++x) worst = std::max(worst, evaluate_target_cost(inst, d, x));
  return worst;
}

std::vector<Cost> candidate_weights(const SearchInstance& inst, const DecisionTree& d) {
  std::vector<Cost> out(static_cast<std::size_t>(inst.size()), 0);
  auto order = d.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    Cost w = inst.weights[static_cast<std::size_t>(v)];
    for (Vertex c : d.children(v)) w = checked_add(w, out[static_cast<std::size_t>(c)]);
    out[static_cast<std::size_t>(v)] = w;
  }
  return out;
}

Cost contribution_sum(const SearchInstance& inst, const DecisionTree& d) {
  require_vertex_costs(inst, "contribution_sum");
  auto cw = candidate_weights(inst, d);
  Cost total = 0;
  for (Vertex v = 0; v < inst.size(); ++v)
    total = checked_add(total, checked_mul(cw[static_cast<std::size_t>(v)], inst.cost.vertex_cost(v)));
  return total;
}

LevelDecomposition decompose_levels(const SearchInstance& inst, const DecisionTree& d) {
  require_vertex_costs(inst, "decompose_levels");
  LevelDecomposition out;
  out.total_weight = inst.total_weight();
  if (out.total_weight > 1'000'000) throw LimitError("decompose_levels: total weight above 1e6");
  auto cw = candidate_weights(inst, d);
  const auto levels = static_cast<std::size_t>(out.total_weight) + 1;
  out.separators.assign(levels, {});
  out.families.assign(levels, {});
  for (Vertex v = 0; v < inst.size(); ++v) {
    const Cost own = cw[static_cast<std::size_t>(v)];
    // v is in S_k exactly for k < w(G_v).
    for (Cost k = 0; k < own; ++k) out.separators[static_cast<std::size_t>(k)].push_back(v);
    // G_v is maximal with weight <= k for own <= k < w(parent's candidate set).
    Cost upper = d.parent(v) == kNoVertex ? out.total_weight + 1 : cw[static_cast<std::size_t>(d.parent(v))];
    for (Cost k = own; k < upper; ++k) out.families[static_cast<std::size_t>(k)].push_back(v);
  }
  return out;
}

Cost level_sum(const SearchInstance& inst, const LevelDecomposition& levels) {
  Cost total = 0;
  for (Cost k = 0; k < levels.total_weight; ++k)
    total = checked_add(total, inst.cost_of(levels.separators[static_cast<std::size_t>(k)]));
  return total;
}

Cost halved_level_sum(const SearchInstance& inst, const LevelDecomposition& levels) {
  Cost total = 0;
  for (Cost k = 0; k <= levels.total_weight; ++k)
    total = checked_add(total, inst.cost_of(levels.separators[static_cast<std::size_t>(k / 2)]));
  return total;
}

}  // namespace gsearch
