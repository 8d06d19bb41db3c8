#include "gsearch/graph_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsearch/errors.hpp"
#include "gsearch/oracles.hpp"
#include "gsearch/tree_search.hpp"

namespace gsearch {

namespace {

// Candidate cut of `inst` with separator s; components are split as evenly as possible.
bool evaluate_cut(const SearchInstance& inst, const std::vector<Vertex>& s, VertexCut& out) {
  auto comps = components_without(inst.graph, all_vertices(inst.size()), s);
  std::vector<Cost> weights;
  for (const auto& c : comps) weights.push_back(inst.weight_of(c));
  const auto lighter = balanced_split(weights);
  VertexCut cut;
  cut.s = s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& side = lighter[i] ? cut.a : cut.b;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(cut.a.begin(), cut.a.end());
  std::sort(cut.b.begin(), cut.b.end());
  std::sort(cut.s.begin(), cut.s.end());
  compute_ratio(inst, cut);
  if (cut.ratio_den == 0) return false;
  out = std::move(cut);
  return true;
}

bool better(const VertexCut& lhs, const VertexCut& rhs) {
  return compare_fractions(lhs.ratio_num, lhs.ratio_den, rhs.ratio_num, rhs.ratio_den) < 0;
}

}  // namespace

VertexCut exact_cut_oracle(const SearchInstance& inst) { return exact_min_ratio_cut(inst); }

VertexCut greedy_min_ratio_cut(const SearchInstance& inst) {
  require_vertex_costs(inst, "greedy_min_ratio_cut");
  if (!inst.graph.is_connected()) throw PreconditionError("greedy_min_ratio_cut: graph is disconnected");
  const int n = inst.size();
  std::vector<Vertex> starts = all_vertices(n);
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
    return inst.weights[static_cast<std::size_t>(a)] * inst.graph.degree(a) >
           inst.weights[static_cast<std::size_t>(b)] * inst.graph.degree(b);
  });
  if (starts.size() > 16) starts.resize(16);

  bool found = false;
  VertexCut best;
  for (Vertex start : starts) {
    VertexCut current;
    std::vector<Vertex> s{start};
    if (!evaluate_cut(inst, s, current)) continue;
    VertexMask in_s(n);
    in_s.set(start);
    for (;;) {
      VertexCut step;
      Vertex step_vertex = kNoVertex;
      VertexMask tried(n);
      for (Vertex u : s)
        for (Vertex v : inst.graph.neighbors(u)) {
          if (in_s[v] || tried[v]) continue;
          tried.set(v);
          auto grown = s;
          grown.push_back(v);
          VertexCut candidate;
          if (evaluate_cut(inst, grown, candidate) && (step_vertex == kNoVertex || better(candidate, step))) {
            step = std::move(candidate);
            step_vertex = v;
          }
        }
      if (step_vertex == kNoVertex || !better(step, current)) break;
      s.push_back(step_vertex);
      in_s.set(step_vertex);
      current = std::move(step);
    }
    if (!found || better(current, best)) {
      best = std::move(current);
      found = true;
    }
  }
  if (!found) {
    // Every single-vertex start had a zero product; S = V always works when w(G) > 0.
    if (!evaluate_cut(inst, all_vertices(n), best))
      throw PreconditionError("greedy_min_ratio_cut: zero total weight");
  }
  return best;
}

DecisionTree graph_search_recursive(const SearchInstance& inst, const CutOracle& oracle) {
  require_vertex_costs(inst, "graphrec");
  return assemble_by_separators(inst, [&](const std::vector<Vertex>& comp) {
    SearchInstance sub = induced_instance(inst, comp);
    const bool weightless = sub.total_weight() == 0;
    std::vector<Vertex> s;
    if (!weightless) {
      VertexCut cut = oracle(sub);
      if (!is_vertex_cut(sub.graph, cut)) throw std::logic_error("cut oracle returned an invalid vertex cut");
      for (Vertex local : cut.s) s.push_back(comp[static_cast<std::size_t>(local)]);
    }
    if (s.empty()) s.push_back(comp[static_cast<std::size_t>(centroid(sub, all_vertices(sub.size()), weightless))]);
    order_cheapest_first(inst, s);
    return s;
  });
}

namespace {

using boost::multiprecision::cpp_int;

int sign(const cpp_int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// sign(p + q sqrt 5)
int sign_root5(const cpp_int& p, const cpp_int& q) {
  const int sp = sign(p), sq = sign(q);
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  // Opposite signs: the larger square wins.
  const int cmp = sign(cpp_int(p * p - 5 * q * q));
  return cmp == 0 ? 0 : (cmp > 0 ? sp : sq);
}

// sign((a + b sqrt 5) + (c + d sqrt 5) r) with r = sqrt(38 + 2 sqrt 5).
int sign_field(const cpp_int& a, const cpp_int& b, const cpp_int& c, const cpp_int& d) {
  const int sx = sign_root5(a, b), sy = sign_root5(c, d);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // X^2 - Y^2 r^2, with X^2 = a^2 + 5b^2 + 2ab sqrt 5 and
  // Y^2 r^2 = (c^2 + 5d^2 + 2cd sqrt 5)(38 + 2 sqrt 5).
  const cpp_int y0 = c * c + 5 * d * d;
  const cpp_int y1 = 2 * c * d;
  const cpp_int p = a * a + 5 * b * b - (38 * y0 + 10 * y1);
  const cpp_int q = 2 * a * b - (2 * y0 + 38 * y1);
  const int cmp = sign_root5(p, q);
  return cmp == 0 ? 0 : (cmp > 0 ? sx : sy);
}

// lambda * product >= total^2
bool product_ok(const cpp_int& product, const cpp_int& total, LambdaVariant variant) {
  if (variant == LambdaVariant::Basic) return sign_root5(6 * product - total * total, 2 * product) >= 0;
  // 8 lambda = 22 + 2 sqrt 5 + (1 + sqrt 5) r
  return sign_field(22 * product - 8 * total * total, 2 * product, product, product) >= 0;
}

// w(S) >= w(G) / sqrt(lambda) (case 1 threshold; sqrt(lambda) = x in the improved variant)
bool separator_heavy(const cpp_int& s, const cpp_int& total, LambdaVariant variant) {
  if (variant == LambdaVariant::Basic) return sign_root5(6 * s * s - total * total, 2 * s * s) >= 0;
  // 4 x s - 4 W
  return sign_field(s - 4 * total, s, s, 0) >= 0;
}

// w(S) <= w(G) / y
bool separator_light(const cpp_int& s, const cpp_int& total) {
  // 4 y s - 4 W with 4y = -1 + 3 sqrt 5 + r
  return sign_field(-s - 4 * total, 3 * s, s, 0) <= 0;
}

// w(B) >= (1/2 - 1/sqrt(lambda)) w(G)
bool side_filled(const cpp_int& b, const cpp_int& total, LambdaVariant variant) {
  // Basic: 1/sqrt(lambda) = (sqrt 5 - 1) / 4, so 4B - 3W + W sqrt 5 >= 0.
  if (variant == LambdaVariant::Basic) return sign_root5(4 * b - 3 * total, total) >= 0;
  // Improved: 4 (2xB - xW + 2W) = (2B + 7W) + (2B - W) sqrt 5 + (2B - W) r
  return sign_field(2 * b + 7 * total, 2 * b - total, 2 * b - total, 0) >= 0;
}

}  // namespace

double lambda_value(LambdaVariant variant) {
  const double r5 = std::sqrt(5.0);
  if (variant == LambdaVariant::Basic) return 6 + 2 * r5;
  const double x = (1 + r5 + std::sqrt(38 + 2 * r5)) / 4;
  return x * x;
}

bool meets_product_bound(Cost wa, Cost wb, Cost ws, LambdaVariant variant) {
  const cpp_int total = cpp_int(wa) + wb + ws;
  return product_ok(cpp_int(cpp_int(wa) + ws) * (cpp_int(wb) + ws), total, variant);
}

ComponentPartition balanced_partition(std::span<const Cost> component_weights, Cost separator_weight,
                                      LambdaVariant variant) {
  if (separator_weight < 0) throw InputError("separator weight must be nonnegative");
  Cost total = separator_weight;
  for (Cost w : component_weights) {
    if (w < 0) throw InputError("component weights must be nonnegative");
    total = checked_add(total, w);
  }
  for (Cost w : component_weights)
    if (static_cast<__int128>(w) * 2 > total) throw PreconditionError("a component weighs more than w(G) / 2");

  ComponentPartition out;
  const int m = static_cast<int>(component_weights.size());
  auto finish = [&](int case_used) {
    for (int i : out.a) out.weight_a += component_weights[static_cast<std::size_t>(i)];
    for (int i : out.b) out.weight_b += component_weights[static_cast<std::size_t>(i)];
    out.case_used = case_used;
    return out;
  };
  const cpp_int s = separator_weight, big_w = total;

  if (separator_heavy(s, big_w, variant)) {
    for (int i = 0; i < m; ++i) out.a.push_back(i);
    return finish(1);
  }
  if (variant == LambdaVariant::Improved && separator_light(s, big_w)) {
    const auto lighter = balanced_split(component_weights);
    for (int i = 0; i < m; ++i) (lighter[static_cast<std::size_t>(i)] ? out.b : out.a).push_back(i);
    return finish(3);
  }
  // Heaviest components go to B until it reaches its target share; the rest form A.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return component_weights[static_cast<std::size_t>(x)] > component_weights[static_cast<std::size_t>(y)];
  });
  Cost filled = 0;
  for (int i : order) {
    if (side_filled(filled, big_w, variant)) out.a.push_back(i);
    else {
      out.b.push_back(i);
      filled += component_weights[static_cast<std::size_t>(i)];
    }
  }
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return finish(2);
}

}  // namespace gsearch
