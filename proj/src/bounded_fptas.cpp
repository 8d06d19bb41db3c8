#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_map>

#include "gsearch/bounded_fptas.hpp"
#include "gsearch/errors.hpp"
#include "gsearch/oracles.hpp"

namespace gsearch {

namespace {

Rational ratio(Cost scaled) { return Rational(scaled, kGridScale); }

// Index of the first grid moment >= value, or grid.size().
std::size_t align_up(const std::vector<Cost>& grid, Cost value) {
  return static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), value) - grid.begin());
}

FptasResult finish(const SearchInstance& inst, DecisionTree tree, Cost scaled_bound, const char* name) {
  if (auto errors = validate_decision_tree(inst, tree); !errors.empty())
    throw std::logic_error(std::string(name) + " built an invalid tree: " + errors.front());
  FptasResult out{std::move(tree), 0, ratio(scaled_bound)};
  out.cost = average_cost(inst, out.tree);
  return out;
}

}  // namespace

FptasResult star_fptas(const SearchInstance& inst, const Rational& epsilon) {
  require_valid(inst);
  require_vertex_costs(inst, "star_fptas");
  if (epsilon <= 0 || epsilon > 3) throw InputError("star_fptas needs 0 < epsilon <= 3");
  const int n = inst.size();
  Vertex center = 0;
  for (Vertex v = 1; v < n; ++v)
    if (inst.graph.degree(v) > inst.graph.degree(center)) center = v;
  if (!inst.graph.is_tree() || inst.graph.degree(center) != n - 1) throw PreconditionError("star_fptas requires a star");

  std::vector<Vertex> leaves;
  Cost total_cost = 0;
  for (Vertex v = 0; v < n; ++v) {
    total_cost = checked_add(total_cost, inst.cost.vertex_cost(v));
    if (v != center) leaves.push_back(v);
  }
  const Cost cr = inst.cost.vertex_cost(center);
  const Cost wr = inst.weights[static_cast<std::size_t>(center)];
  const auto grid = moment_grid(epsilon / Rational(3), checked_mul(total_cost, kGridScale));

  // Job i < m is leaf i; job m is the center, which cannot precede itself.
  std::vector<Job> jobs(leaves.size() + 1);
  Schedule best;
  Cost best_t = -1;
  for (Cost t : grid) {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const Vertex v = leaves[i];
      const Cost w = inst.weights[static_cast<std::size_t>(v)];
      const Cost c = inst.cost.vertex_cost(v);
      jobs[i] = {c, checked_mul(w, kGridScale),
                 checked_mul(w, checked_add(t, checked_mul(checked_add(cr, c), kGridScale)))};
    }
    jobs.back() = {kInfiniteProcessing, checked_mul(wr, kGridScale),
                   checked_mul(wr, checked_add(t, checked_mul(cr, kGridScale)))};
    auto s = schedule_with_rejection(jobs, t / kGridScale);
    if (best_t < 0 || s.cost < best.cost) {
      best = std::move(s);
      best_t = t;
    }
  }

  // Accepted leaves chained before the center, rejected leaves after it.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), DecisionTree::kUnassigned);
  Vertex previous = kNoVertex;
  for (int id : best.accepted) {
    const Vertex v = leaves[static_cast<std::size_t>(id)];
    parent[static_cast<std::size_t>(v)] = previous;
    previous = v;
  }
  parent[static_cast<std::size_t>(center)] = previous;
  for (Vertex v : leaves)
    if (parent[static_cast<std::size_t>(v)] == DecisionTree::kUnassigned) parent[static_cast<std::size_t>(v)] = center;
  const Vertex root = best.accepted.empty() ? center : leaves[static_cast<std::size_t>(best.accepted.front())];
  return finish(inst, DecisionTree(root, std::move(parent)), best.cost, "star_fptas");
}

std::vector<Vertex> inner_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) >= 2) out.push_back(v);
  return out;
}

Rational dyadic_delta(int n, const Rational& epsilon) {
  const double target = to_double(epsilon) * std::log(2.0) / std::max(n, 1);
  std::int64_t den = 1;
  while (1.0 / static_cast<double>(den) > target) {
    if (den >= kGridScale) throw LimitError("epsilon / n too small for the moment grid");
    den *= 2;
  }
  return Rational(1, den);
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Cost>& v) const {
    std::size_t h = 0;
    for (Cost x : v) h = h * 1000003u + std::hash<Cost>{}(x);
    return h;
  }
};

// Search over decision trees on the inner vertices (D_M) and aligned finish
// moments for them; leaves are placed by an exact DP over gap usage.
class KSearch {
 public:
  KSearch(const SearchInstance& inst, std::vector<Cost> grid)
      : inst_(inst), grid_(std::move(grid)), n_(inst.size()), inner_(inner_vertices(inst.graph)) {
    slot_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < inner_.size(); ++i) slot_[static_cast<std::size_t>(inner_[i])] = static_cast<int>(i);
    for (Vertex v = 0; v < n_; ++v)
      if (slot_[static_cast<std::size_t>(v)] < 0) {
        leaves_.push_back(v);
        jobs_.push_back({cost(v), weight(v), 0});
      }
    std::vector<Vertex> sorted;
    for (int id : smith_order(jobs_)) sorted.push_back(leaves_[static_cast<std::size_t>(id)]);
    leaves_ = std::move(sorted);
    for (Vertex l : leaves_) {
      owner_.push_back(slot_[static_cast<std::size_t>(inst.graph.neighbors(l).front())]);
      leaf_floor_ = checked_add(leaf_floor_, checked_mul(weight(l), checked_mul(cost(l), kGridScale)));
    }
  }

  void run() {
    const int k = static_cast<int>(inner_.size());
    dm_parent_.assign(static_cast<std::size_t>(k), -1);
    enumerate_trees({{inner_, -1}});
  }

  DecisionTree build() const;
  Cost best_cost() const { return best_cost_; }

 private:
  Cost cost(Vertex v) const { return inst_.cost.vertex_cost(v); }
  Cost weight(Vertex v) const { return inst_.weights[static_cast<std::size_t>(v)]; }

  // pending: components of inner vertices still to be rooted, with the slot
  // of the inner vertex that cut them off.
  void enumerate_trees(std::vector<std::pair<std::vector<Vertex>, int>> pending) {
    if (pending.empty()) {
      order_.clear();
      for (int s = 0; s < static_cast<int>(inner_.size()); ++s)
        if (dm_parent_[static_cast<std::size_t>(s)] < 0) collect_preorder(s);
      tau_.assign(inner_.size(), 0);
      assign_moments(0, 0);
      return;
    }
    auto [comp, above] = pending.back();
    pending.pop_back();
    for (Vertex v : comp) {
      auto next = pending;
      for (auto& part : components_without(inst_.graph, comp, std::span<const Vertex>(&v, 1)))
        next.emplace_back(std::move(part), slot_[static_cast<std::size_t>(v)]);
      dm_parent_[static_cast<std::size_t>(slot_[static_cast<std::size_t>(v)])] = above;
      enumerate_trees(std::move(next));
    }
  }

  void collect_preorder(int s) {
    order_.push_back(s);
    for (int c = 0; c < static_cast<int>(inner_.size()); ++c)
      if (dm_parent_[static_cast<std::size_t>(c)] == s) collect_preorder(c);
  }

  Cost start_of(int s) const {
    const int p = dm_parent_[static_cast<std::size_t>(s)];
    return p < 0 ? 0 : tau_[static_cast<std::size_t>(p)];
  }

  // Moments for order_[i..] given those before; `fixed` is sum of w * tau so far.
  void assign_moments(std::size_t i, Cost fixed) {
    if (i == order_.size()) {
      evaluate(fixed);
      return;
    }
    const int s = order_[i];
    const Vertex v = inner_[static_cast<std::size_t>(s)];
    const Cost earliest = checked_add(start_of(s), checked_mul(cost(v), kGridScale));
    for (std::size_t g = align_up(grid_, earliest); g < grid_.size(); ++g) {
      tau_[static_cast<std::size_t>(s)] = grid_[g];
      const Cost partial = checked_add(fixed, checked_mul(weight(v), grid_[g]));
      // every term grows with the moment, so later moments cannot do better
      if (have_best_ && checked_add(partial, leaf_floor_) >= best_cost_) break;
      if (i + 1 == order_.size() && have_best_ && lower_bound(partial) >= best_cost_) continue;
      assign_moments(i + 1, partial);
    }
  }

  // Cheapest placement of leaf j ignoring the other leaves; -1 when none fits.
  Cost leaf_alone(std::size_t j, const std::vector<Cost>& used) const {
    const Vertex l = leaves_[j];
    const int o = owner_[j];
    Cost best = checked_mul(weight(l), checked_add(tau_[static_cast<std::size_t>(o)], checked_mul(cost(l), kGridScale)));
    for (int g = o; g >= 0; g = dm_parent_[static_cast<std::size_t>(g)]) {
      const Cost fill = used[static_cast<std::size_t>(g)] + cost(l);
      if (fill > capacity_[static_cast<std::size_t>(g)]) continue;
      best = std::min(best, checked_mul(weight(l), checked_add(start_of(g), checked_mul(fill, kGridScale))));
    }
    return best;
  }

  Cost lower_bound(Cost fixed) {
    set_capacities();
    std::vector<Cost> empty(inner_.size(), 0);
    Cost total = fixed;
    for (std::size_t j = 0; j < leaves_.size(); ++j) total = checked_add(total, leaf_alone(j, empty));
    return total;
  }

  // Integer room for leaves in the gap ending at inner slot g.
  void set_capacities() {
    capacity_.resize(inner_.size());
    for (std::size_t g = 0; g < inner_.size(); ++g)
      capacity_[g] = (tau_[g] - start_of(static_cast<int>(g))) / kGridScale - cost(inner_[g]);
  }

  struct State {
    std::vector<Cost> used;
    Cost cost;
    int prev;
    int choice;  // gap slot, or -1 for after the owner
  };

  void evaluate(Cost fixed) {
    set_capacities();
    std::vector<Cost> suffix(leaves_.size() + 1, 0);
    {
      std::vector<Cost> empty(inner_.size(), 0);
      for (std::size_t j = leaves_.size(); j-- > 0;) suffix[j] = checked_add(suffix[j + 1], leaf_alone(j, empty));
    }
    std::vector<std::vector<State>> layers(1);
    layers[0].push_back({std::vector<Cost>(inner_.size(), 0), fixed, -1, -1});
    for (std::size_t j = 0; j < leaves_.size(); ++j) {
      const Vertex l = leaves_[j];
      const int o = owner_[j];
      std::vector<State> next;
      std::unordered_map<std::vector<Cost>, std::size_t, VectorHash> index;
      auto offer = [&](std::vector<Cost> used, Cost c, int prev, int choice) {
        if (have_best_ && checked_add(c, suffix[j + 1]) >= best_cost_) return;
        auto [it, fresh] = index.try_emplace(used, next.size());
        if (fresh) next.push_back({std::move(used), c, prev, choice});
        else if (c < next[it->second].cost) next[it->second] = {std::move(used), c, prev, choice};
      };
      const auto& layer = layers.back();
      for (std::size_t p = 0; p < layer.size(); ++p) {
        const State& st = layer[p];
        offer(st.used,
              checked_add(st.cost, checked_mul(weight(l), checked_add(tau_[static_cast<std::size_t>(o)],
                                                                      checked_mul(cost(l), kGridScale)))),
              static_cast<int>(p), -1);
        for (int g = o; g >= 0; g = dm_parent_[static_cast<std::size_t>(g)]) {
          const Cost fill = st.used[static_cast<std::size_t>(g)] + cost(l);
          if (fill > capacity_[static_cast<std::size_t>(g)]) continue;
          auto used = st.used;
          used[static_cast<std::size_t>(g)] = fill;
          offer(std::move(used),
                checked_add(st.cost, checked_mul(weight(l), checked_add(start_of(g), checked_mul(fill, kGridScale)))),
                static_cast<int>(p), g);
        }
      }
      if (next.empty()) return;
      layers.push_back(std::move(next));
    }
    const auto& last = layers.back();
    std::size_t pick = 0;
    for (std::size_t p = 1; p < last.size(); ++p)
      if (last[p].cost < last[pick].cost) pick = p;
    if (have_best_ && last[pick].cost >= best_cost_) return;
    have_best_ = true;
    best_cost_ = last[pick].cost;
    best_parent_ = dm_parent_;
    best_tau_ = tau_;
    best_choice_.assign(leaves_.size(), -1);
    int at = static_cast<int>(pick);
    for (std::size_t j = leaves_.size(); j-- > 0;) {
      const State& st = layers[j + 1][static_cast<std::size_t>(at)];
      best_choice_[j] = st.choice;
      at = st.prev;
    }
  }

  const SearchInstance& inst_;
  std::vector<Cost> grid_;
  int n_;
  std::vector<Vertex> inner_;
  std::vector<int> slot_;
  std::vector<Vertex> leaves_;  // Smith order
  std::vector<Job> jobs_;
  std::vector<int> owner_;      // inner slot of each leaf's neighbor
  Cost leaf_floor_ = 0;

  std::vector<int> dm_parent_;
  std::vector<int> order_;
  std::vector<Cost> tau_;
  std::vector<Cost> capacity_;

  bool have_best_ = false;
  Cost best_cost_ = 0;
  std::vector<int> best_parent_;
  std::vector<Cost> best_tau_;
  std::vector<int> best_choice_;
};

DecisionTree KSearch::build() const {
  if (!have_best_) throw std::logic_error("k_fptas found no feasible aligned schedule");
  const std::size_t k = inner_.size();
  std::vector<std::vector<Vertex>> gap(k), after(k);
  for (std::size_t j = 0; j < leaves_.size(); ++j) {
    if (best_choice_[j] >= 0) gap[static_cast<std::size_t>(best_choice_[j])].push_back(leaves_[j]);
    else after[static_cast<std::size_t>(owner_[j])].push_back(leaves_[j]);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n_), DecisionTree::kUnassigned);
  Vertex root = kNoVertex;
  // Each inner slot: its gap leaves in order, then itself, then its leaves.
  std::function<void(int, Vertex)> place = [&](int s, Vertex above) {
    for (Vertex l : gap[static_cast<std::size_t>(s)]) {
      parent[static_cast<std::size_t>(l)] = above;
      if (above == kNoVertex) root = l;
      above = l;
    }
    const Vertex v = inner_[static_cast<std::size_t>(s)];
    parent[static_cast<std::size_t>(v)] = above;
    if (above == kNoVertex) root = v;
    for (Vertex l : after[static_cast<std::size_t>(s)]) parent[static_cast<std::size_t>(l)] = v;
    for (std::size_t c = 0; c < k; ++c)
      if (best_parent_[c] == s) place(static_cast<int>(c), v);
  };
  for (std::size_t s = 0; s < k; ++s)
    if (best_parent_[s] < 0) place(static_cast<int>(s), kNoVertex);
  return DecisionTree(root, std::move(parent));
}

}  // namespace

FptasResult k_fptas(const SearchInstance& inst, const Rational& epsilon, int k_limit) {
  require_valid(inst);
  require_vertex_costs(inst, "k_fptas");
  if (epsilon <= 0 || epsilon > 1) throw InputError("k_fptas needs 0 < epsilon <= 1");
  const int n = inst.size();
  if (n <= 2) {
    auto exact = opt_average_subset_dp(inst);
    return finish(inst, std::move(exact.tree), checked_mul(exact.cost, kGridScale), "k_fptas");
  }
  const int k = static_cast<int>(inner_vertices(inst.graph).size());
  if (k > k_limit)
    throw LimitError("k_fptas: " + std::to_string(k) + " non-leaf vertices exceed the limit " + std::to_string(k_limit));

  const Rational delta = dyadic_delta(n, epsilon);
  if (std::pow(1.0 + to_double(delta), n) > 1.0 + to_double(epsilon))
    throw std::logic_error("grid base too coarse for epsilon");
  Cost total = 0;
  for (Vertex v = 0; v < n; ++v) total = checked_add(total, inst.cost.vertex_cost(v));
  const Cost cap = narrow_cost(static_cast<__int128>(total) * kGridScale * (epsilon.denominator() + epsilon.numerator()) /
                               epsilon.denominator());
  KSearch search(inst, moment_grid(delta, cap));
  search.run();
  return finish(inst, search.build(), search.best_cost(), "k_fptas");
}

}  // namespace gsearch
