#include "gsearch/separator.hpp"

#include <algorithm>
#include <deque>

#include "gsearch/errors.hpp"

namespace gsearch {

namespace {

Cost plus(Cost a, Cost b) { return (a == kInfeasible || b == kInfeasible) ? kInfeasible : checked_add(a, b); }

// Marker for "child goes into S"; other markers are the weight taken from the child.
constexpr Cost kChildInS = -1;

struct Dp {
  SeparatorDpTables tables;
  std::vector<std::vector<Vertex>> children;
  // prefix[v][i][w] and its markers, for children 0..i of v.
  std::vector<std::vector<std::vector<Cost>>> prefix;
  std::vector<std::vector<std::vector<Cost>>> marks;
  // argmin behind best[v]: kChildInS or the component weight.
  std::vector<Cost> best_choice;
  std::vector<Vertex> order;
};

Dp run(const SearchInstance& tree, std::span<const Cost> weights, Cost k) {
  const int n = tree.size();
  const auto N = static_cast<std::size_t>(n);
  const auto width = static_cast<std::size_t>(k) + 1;
  Dp dp;
  auto& t = dp.tables;
  t.k = k;
  t.parent.assign(N, kNoVertex);
  dp.children.assign(N, {});
  std::vector<char> seen(N, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    dp.order.push_back(u);
    for (Vertex c : tree.graph.neighbors(u))
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        t.parent[static_cast<std::size_t>(c)] = u;
        dp.children[static_cast<std::size_t>(u)].push_back(c);
        queue.push_back(c);
      }
  }
  t.c_in.assign(N, 0);
  t.c_out.assign(N, std::vector<Cost>(width, kInfeasible));
  t.best.assign(N, 0);
  dp.best_choice.assign(N, kChildInS);
  dp.prefix.assign(N, {});
  dp.marks.assign(N, {});

  for (auto it = dp.order.rbegin(); it != dp.order.rend(); ++it) {
    const Vertex v = *it;
    const auto V = static_cast<std::size_t>(v);
    const Cost wv = weights[V];
    const auto& ch = dp.children[V];
    Cost in = tree.cost.vertex_cost(v);
    for (Vertex c : ch) in = checked_add(in, t.best[static_cast<std::size_t>(c)]);
    t.c_in[V] = in;

    if (ch.empty()) {
      if (wv <= k) t.c_out[V][static_cast<std::size_t>(wv)] = 0;
    } else {
      auto& pre = dp.prefix[V];
      auto& mk = dp.marks[V];
      pre.assign(ch.size(), std::vector<Cost>(width, kInfeasible));
      mk.assign(ch.size(), std::vector<Cost>(width, kChildInS));
      const auto c1 = static_cast<std::size_t>(ch[0]);
      for (Cost w = wv; w <= k; ++w) {
        const auto W = static_cast<std::size_t>(w);
        if (w == wv) {
          // Either the first child joins with an empty-weight component, or it is cut off.
          const Cost join = t.c_out[c1][0];
          if (join != kInfeasible && join <= t.c_in[c1]) {
            pre[0][W] = join;
            mk[0][W] = 0;
          } else {
            pre[0][W] = t.c_in[c1];
            mk[0][W] = kChildInS;
          }
        } else {
          pre[0][W] = t.c_out[c1][static_cast<std::size_t>(w - wv)];
          mk[0][W] = w - wv;
        }
      }
      for (std::size_t i = 1; i < ch.size(); ++i) {
        const auto ci = static_cast<std::size_t>(ch[i]);
        for (Cost w = 0; w <= k; ++w) {
          Cost value = kInfeasible;
          Cost mark = kChildInS;
          for (Cost j = 0; j <= w; ++j) {
            const Cost cand = plus(pre[i - 1][static_cast<std::size_t>(w - j)], t.c_out[ci][static_cast<std::size_t>(j)]);
            if (cand < value) {
              value = cand;
              mark = j;
            }
          }
          const Cost cut = plus(pre[i - 1][static_cast<std::size_t>(w)], t.c_in[ci]);
          if (cut < value) {
            value = cut;
            mark = kChildInS;
          }
          pre[i][static_cast<std::size_t>(w)] = value;
          mk[i][static_cast<std::size_t>(w)] = mark;
        }
      }
      t.c_out[V] = pre.back();
    }

    Cost best = kInfeasible;
    Cost choice = kChildInS;
    for (Cost w = 0; w <= k; ++w)
      if (t.c_out[V][static_cast<std::size_t>(w)] < best) {
        best = t.c_out[V][static_cast<std::size_t>(w)];
        choice = w;
      }
    if (t.c_in[V] < best) {
      best = t.c_in[V];
      choice = kChildInS;
    }
    t.best[V] = best;
    dp.best_choice[V] = choice;
  }
  return dp;
}

std::vector<Vertex> trace(const Dp& dp) {
  // Modes: kChildInS puts v in S; w >= 0 keeps v out with component weight w.
  std::vector<Vertex> s;
  std::vector<std::pair<Vertex, Cost>> stack{{0, dp.best_choice[0]}};
  while (!stack.empty()) {
    auto [v, mode] = stack.back();
    stack.pop_back();
    const auto V = static_cast<std::size_t>(v);
    const auto& ch = dp.children[V];
    if (mode == kChildInS) {
      s.push_back(v);
      for (Vertex c : ch) stack.emplace_back(c, dp.best_choice[static_cast<std::size_t>(c)]);
      continue;
    }
    Cost w = mode;
    for (std::size_t i = ch.size(); i-- > 0;) {
      const Cost mark = dp.marks[V][i][static_cast<std::size_t>(w)];
      stack.emplace_back(ch[i], mark);
      if (mark != kChildInS) w -= mark;
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

Cost floor_div(__int128 num, __int128 den) {
  __int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return narrow_cost(q);
}

}  // namespace

SeparatorDpTables separator_tables(const SearchInstance& tree, std::span<const Cost> weights, Cost k) {
  require_vertex_costs(tree, "separator_dp");
  require_tree(tree, "separator_dp");
  return run(tree, weights, k).tables;
}

SeparatorResult separator_dp_bound(const SearchInstance& tree, std::span<const Cost> weights, Cost k) {
  require_vertex_costs(tree, "separator_dp");
  require_tree(tree, "separator_dp");
  if (k < 0) throw InputError("component bound must be nonnegative");
  if (k > 50'000'000 / std::max(1, tree.size())) throw LimitError("separator_dp: component bound too large for the table");
  Dp dp = run(tree, weights, k);
  SeparatorResult out;
  out.cost = dp.tables.best[0];
  out.separator = trace(dp);
  return out;
}

SeparatorResult separator_dp(const SearchInstance& tree, const Rational& alpha) {
  if (alpha <= 0) throw InputError("alpha must be positive");
  const Cost total = tree.total_weight();
  const Cost k = floor_div(static_cast<__int128>(total) * alpha.denominator(), alpha.numerator());
  return separator_dp_bound(tree, tree.weights, std::min(k, total));
}

SeparatorResult separator_fptas(const SearchInstance& tree, const Rational& alpha, const Rational& delta) {
  if (alpha <= 0) throw InputError("alpha must be positive");
  if (delta <= 0) throw InputError("delta must be positive");
  require_vertex_costs(tree, "separator_fptas");
  require_tree(tree, "separator_fptas");
  const Cost total = tree.total_weight();
  if (total == 0) return {};
  const Cost n = tree.size();
  // K = delta w(T) / (n alpha); w'(v) = floor(w(v) / K).
  const __int128 k_num = static_cast<__int128>(delta.numerator()) * total * alpha.denominator();
  const __int128 k_den = static_cast<__int128>(delta.denominator()) * n * alpha.numerator();
  std::vector<Cost> scaled;
  Cost scaled_total = 0;
  for (Cost w : tree.weights) {
    scaled.push_back(floor_div(static_cast<__int128>(w) * k_den, k_num));
    scaled_total = checked_add(scaled_total, scaled.back());
  }
  // Every vertex weighs less than K, so w(T) < n K = delta w(T) / alpha and
  // the relaxed bound already exceeds w(T).
  if (scaled_total == 0) return {};
  // alpha' = alpha K w'(T) / w(T) = delta w'(T) / n, so k' = floor(w'(T) / alpha') = floor(n / delta).
  const Rational alpha_scaled = Rational(delta.numerator(), delta.denominator()) * Rational(scaled_total, n);
  const Cost k = floor_div(static_cast<__int128>(scaled_total) * alpha_scaled.denominator(), alpha_scaled.numerator());
  SeparatorResult out = separator_dp_bound(tree, scaled, std::min(k, scaled_total));
  out.cost = tree.cost_of(out.separator);
  return out;
}

}  // namespace gsearch
