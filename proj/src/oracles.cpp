#include "gsearch/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "gsearch/errors.hpp"

namespace gsearch {

namespace {

using Mask = std::uint32_t;

void check_limit(const SearchInstance& inst, int limit, const char* name) {
  if (inst.size() > limit)
    throw LimitError(std::string(name) + ": n = " + std::to_string(inst.size()) + " exceeds the limit of " +
                     std::to_string(limit));
  if (inst.size() == 0) throw PreconditionError(std::string(name) + ": empty graph");
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.size()), 0);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
  return adj;
}

std::vector<Mask> split(Mask set, const std::vector<Mask>& adj) {
  std::vector<Mask> out;
  while (set) {
    Mask comp = set & (~set + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= set & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    set &= ~comp;
  }
  return out;
}

Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

class AverageDp {
 public:
  explicit AverageDp(const SearchInstance& inst)
      : inst_(inst), adj_(adjacency_masks(inst.graph)), memo_(std::size_t{1} << inst.size(), -1),
        choice_(std::size_t{1} << inst.size(), kNoVertex) {}

  Cost solve(Mask set) {
    Cost& slot = memo_[set];
    if (slot >= 0) return slot;
    Cost best = std::numeric_limits<Cost>::max();
    Vertex best_v = kNoVertex;
    for (Mask s = set; s; s &= s - 1) {
      const Vertex v = lowest(s);
      Cost total = 0;
      for (Mask t = set; t; t &= t - 1) {
        const Vertex x = lowest(t);
        total = checked_add(total, checked_mul(inst_.weights[static_cast<std::size_t>(x)], inst_.cost(v, x)));
      }
      for (Mask comp : split(set & ~(Mask{1} << v), adj_)) total = checked_add(total, solve(comp));
      if (total < best) {
        best = total;
        best_v = v;
      }
    }
    choice_[set] = best_v;
    return memo_[set] = best;
  }

  void build(Mask set, Vertex above, std::vector<Vertex>& parent) const {
    const Vertex v = choice_[set];
    parent[static_cast<std::size_t>(v)] = above;
    for (Mask comp : split(set & ~(Mask{1} << v), adj_)) build(comp, v, parent);
  }

 private:
  const SearchInstance& inst_;
  std::vector<Mask> adj_;
  std::vector<Cost> memo_;
  std::vector<Vertex> choice_;
};

struct WorstPlan {
  Cost cost = std::numeric_limits<Cost>::max();
  std::vector<std::pair<Vertex, Vertex>> links;  // (vertex, parent)
};

class WorstSearch {
 public:
  explicit WorstSearch(const SearchInstance& inst) : inst_(inst), adj_(adjacency_masks(inst.graph)) {}

  // acc[x]: cost already paid by target x before reaching this candidate set.
  WorstPlan solve(Mask set, std::vector<Cost>& acc, Vertex above) {
    WorstPlan best;
    for (Mask s = set; s; s &= s - 1) {
      const Vertex v = lowest(s);
      WorstPlan plan;
      plan.cost = checked_add(acc[static_cast<std::size_t>(v)], inst_.cost(v, v));
      plan.links.emplace_back(v, above);
      if (plan.cost >= best.cost) continue;
      const Mask rest = set & ~(Mask{1} << v);
      for (Mask t = rest; t; t &= t - 1) acc[static_cast<std::size_t>(lowest(t))] += inst_.cost(v, lowest(t));
      for (Mask comp : split(rest, adj_)) {
        WorstPlan sub = solve(comp, acc, v);
        plan.cost = std::max(plan.cost, sub.cost);
        if (plan.cost >= best.cost) break;
        plan.links.insert(plan.links.end(), sub.links.begin(), sub.links.end());
      }
      for (Mask t = rest; t; t &= t - 1) acc[static_cast<std::size_t>(lowest(t))] -= inst_.cost(v, lowest(t));
      if (plan.cost < best.cost) best = std::move(plan);
    }
    return best;
  }

 private:
  const SearchInstance& inst_;
  std::vector<Mask> adj_;
};

DecisionTree from_links(int n, const std::vector<std::pair<Vertex, Vertex>>& links) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n), DecisionTree::kUnassigned);
  Vertex root = kNoVertex;
  for (auto [v, p] : links) {
    parent[static_cast<std::size_t>(v)] = p;
    if (p == kNoVertex) root = v;
  }
  return DecisionTree(root, std::move(parent));
}

// Vertex order along a path graph, starting from the smaller-id endpoint.
std::vector<Vertex> path_order(const Graph& g) {
  const int n = g.size();
  if (!g.is_tree()) throw PreconditionError("opt_path_arbitrary requires a path");
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) throw PreconditionError("opt_path_arbitrary requires a path");
  Vertex start = 0;
  while (n > 1 && g.degree(start) != 1) ++start;
  std::vector<Vertex> order{start};
  Vertex prev = kNoVertex;
  while (static_cast<int>(order.size()) < n) {
    const Vertex cur = order.back();
    for (Vertex next : g.neighbors(cur))
      if (next != prev) {
        prev = cur;
        order.push_back(next);
        break;
      }
  }
  return order;
}

}  // namespace

OracleResult opt_average_subset_dp(const SearchInstance& inst, int limit) {
  check_limit(inst, std::min(limit, 24), "opt_average_subset_dp");
  if (!inst.graph.is_connected()) throw PreconditionError("opt_average_subset_dp: graph is disconnected");
  AverageDp dp(inst);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << inst.size()) - 1);
  OracleResult out;
  out.cost = dp.solve(full);
  std::vector<Vertex> parent(static_cast<std::size_t>(inst.size()), DecisionTree::kUnassigned);
  dp.build(full, kNoVertex, parent);
  Vertex root = static_cast<Vertex>(std::find(parent.begin(), parent.end(), kNoVertex) - parent.begin());
  out.tree = DecisionTree(root, std::move(parent));
  return out;
}

OracleResult opt_worst_bruteforce(const SearchInstance& inst, int limit) {
  check_limit(inst, std::min(limit, 12), "opt_worst_bruteforce");
  if (!inst.graph.is_connected()) throw PreconditionError("opt_worst_bruteforce: graph is disconnected");
  WorstSearch search(inst);
  std::vector<Cost> acc(static_cast<std::size_t>(inst.size()), 0);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << inst.size()) - 1);
  WorstPlan plan = search.solve(full, acc, kNoVertex);
  return {plan.cost, from_links(inst.size(), plan.links)};
}

OracleResult opt_path_arbitrary(const SearchInstance& inst) {
  if (inst.size() == 0) throw PreconditionError("opt_path_arbitrary: empty graph");
  const auto order = path_order(inst.graph);
  const int n = static_cast<int>(order.size());
  const auto N = static_cast<std::size_t>(n);
  // prefix[i][j]: sum over positions < j of w * c(order[i], .)
  std::vector<std::vector<Cost>> prefix(N, std::vector<Cost>(N + 1, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      prefix[i][j + 1] = checked_add(prefix[i][j], checked_mul(inst.weights[static_cast<std::size_t>(order[j])],
                                                               inst.cost(order[i], order[j])));
  // opt[l][r] over positions l..r inclusive; empty intervals cost 0.
  std::vector<std::vector<Cost>> opt(N + 1, std::vector<Cost>(N + 1, 0));
  std::vector<std::vector<int>> pick(N + 1, std::vector<int>(N + 1, -1));
  auto value = [&](int l, int r) -> Cost { return l > r ? 0 : opt[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)]; };
  for (int len = 1; len <= n; ++len)
    for (int l = 0; l + len - 1 < n; ++l) {
      const int r = l + len - 1;
      Cost best = std::numeric_limits<Cost>::max();
      int best_i = -1;
      for (int i = l; i <= r; ++i) {
        const auto& row = prefix[static_cast<std::size_t>(i)];
        Cost total = checked_add(row[static_cast<std::size_t>(r + 1)] - row[static_cast<std::size_t>(l)],
                                 checked_add(value(l, i - 1), value(i + 1, r)));
        if (total < best || (total == best && order[static_cast<std::size_t>(i)] < order[static_cast<std::size_t>(best_i)])) {
          best = total;
          best_i = i;
        }
      }
      opt[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = best;
      pick[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = best_i;
    }
  std::vector<Vertex> parent(N, DecisionTree::kUnassigned);
  std::vector<std::tuple<int, int, Vertex>> work{{0, n - 1, kNoVertex}};
  while (!work.empty()) {
    auto [l, r, above] = work.back();
    work.pop_back();
    if (l > r) continue;
    const int i = pick[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
    const Vertex v = order[static_cast<std::size_t>(i)];
    parent[static_cast<std::size_t>(v)] = above;
    work.emplace_back(l, i - 1, v);
    work.emplace_back(i + 1, r, v);
  }
  OracleResult out;
  out.cost = value(0, n - 1);
  const Vertex root = order[static_cast<std::size_t>(pick[0][N - 1])];
  out.tree = DecisionTree(root, std::move(parent));
  return out;
}

LinearOrdering opt_star_linear_ordering(const std::vector<std::vector<Cost>>& a, int limit) {
  const int m = static_cast<int>(a.size());
  if (m > limit) throw LimitError("opt_star_linear_ordering: n = " + std::to_string(m) + " exceeds the limit of " +
                                  std::to_string(limit));
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != m) throw InputError("linear ordering matrix must be square");
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  LinearOrdering best{std::numeric_limits<Cost>::max(), perm};
  do {
    Cost total = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        total = checked_add(total, a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                                    [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
    if (total < best.cost) best = {total, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (m == 0) best.cost = 0;
  return best;
}

SeparatorResult exact_alpha_separator(const SearchInstance& inst, const Rational& alpha, int limit) {
  check_limit(inst, std::min(limit, 24), "exact_alpha_separator");
  require_vertex_costs(inst, "exact_alpha_separator");
  if (alpha <= 0) throw InputError("alpha must be positive");
  const int n = inst.size();
  const auto adj = adjacency_masks(inst.graph);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const __int128 bound = static_cast<__int128>(inst.total_weight()) * alpha.denominator();
  Cost best = std::numeric_limits<Cost>::max();
  Mask best_mask = full;
  for (std::uint64_t raw = 0; raw <= full; ++raw) {
    const Mask s = static_cast<Mask>(raw);
    Cost c = 0;
    for (Mask t = s; t; t &= t - 1) c += inst.cost.vertex_cost(lowest(t));
    if (c >= best) continue;
    bool ok = true;
    for (Mask comp : split(full & ~s, adj)) {
      Cost w = 0;
      for (Mask t = comp; t; t &= t - 1) w += inst.weights[static_cast<std::size_t>(lowest(t))];
      if (static_cast<__int128>(w) * alpha.numerator() > bound) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = c;
      best_mask = s;
    }
  }
  SeparatorResult out{best, {}};
  for (Mask t = best_mask; t; t &= t - 1) out.separator.push_back(lowest(t));
  return out;
}

VertexCut exact_min_ratio_cut(const SearchInstance& inst, int limit) {
  check_limit(inst, std::min(limit, 20), "exact_min_ratio_cut");
  require_vertex_costs(inst, "exact_min_ratio_cut");
  if (!inst.graph.is_connected()) throw PreconditionError("exact_min_ratio_cut: graph is disconnected");
  const int n = inst.size();
  const auto adj = adjacency_masks(inst.graph);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  auto mask_weight = [&](Mask m) {
    Cost w = 0;
    for (; m; m &= m - 1) w = checked_add(w, inst.weights[static_cast<std::size_t>(lowest(m))]);
    return w;
  };
  bool found = false;
  Cost best_num = 0, best_den = 1;
  Mask best_s = 0, best_a = 0;
  for (std::uint64_t raw = 1; raw <= full; ++raw) {
    const Mask s = static_cast<Mask>(raw);
    Cost cs = 0;
    for (Mask t = s; t; t &= t - 1) cs = checked_add(cs, inst.cost.vertex_cost(lowest(t)));
    const Cost ws = mask_weight(s);
    const auto comps = split(full & ~s, adj);
    std::vector<Cost> cw;
    Cost rest = 0;
    for (Mask c : comps) {
      cw.push_back(mask_weight(c));
      rest = checked_add(rest, cw.back());
    }
    Mask a_mask = 0;
    Cost a = 0;
    const auto lighter = balanced_split(cw);
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (lighter[i]) {
        a_mask |= comps[i];
        a += cw[i];
      }
    const Cost den = checked_mul(checked_add(ws, a), checked_add(ws, rest - a));
    if (den == 0) continue;
    if (!found || compare_fractions(cs, den, best_num, best_den) < 0) {
      found = true;
      best_num = cs;
      best_den = den;
      best_s = s;
      best_a = a_mask;
    }
  }
  if (!found) throw PreconditionError("exact_min_ratio_cut: every cut has zero weight product");
  VertexCut cut;
  for (Vertex v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    (best_s & bit ? cut.s : (best_a & bit ? cut.a : cut.b)).push_back(v);
  }
  cut.ratio_num = best_num;
  cut.ratio_den = best_den;
  return cut;
}

}  // namespace gsearch
