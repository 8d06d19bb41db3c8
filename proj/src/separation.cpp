#include "gsearch/separation.hpp"

#include <algorithm>

namespace gsearch {

void compute_ratio(const SearchInstance& inst, VertexCut& cut) {
  const Cost ws = inst.weight_of(cut.s);
  cut.ratio_num = inst.cost_of(cut.s);
  cut.ratio_den = checked_mul(checked_add(ws, inst.weight_of(cut.a)), checked_add(ws, inst.weight_of(cut.b)));
}

int compare_fractions(Cost p, Cost q, Cost r, Cost s) {
  const __int128 lhs = static_cast<__int128>(p) * s;
  const __int128 rhs = static_cast<__int128>(r) * q;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool is_vertex_cut(const Graph& g, const VertexCut& cut) {
  std::vector<int> side(static_cast<std::size_t>(g.size()), -1);
  auto mark = [&](const std::vector<Vertex>& set, int label) {
    for (Vertex v : set) {
      if (!g.contains(v) || side[static_cast<std::size_t>(v)] != -1) return false;
      side[static_cast<std::size_t>(v)] = label;
    }
    return true;
  };
  if (!mark(cut.a, 0) || !mark(cut.s, 1) || !mark(cut.b, 2)) return false;
  if (std::count(side.begin(), side.end(), -1) != 0) return false;
  for (Vertex u : cut.a)
    for (Vertex v : g.neighbors(u))
      if (side[static_cast<std::size_t>(v)] == 2) return false;
  return true;
}

std::vector<Cost> component_weights(const SearchInstance& inst, std::span<const Vertex> vertices,
                                    std::span<const Vertex> removed) {
  std::vector<Cost> out;
  for (const auto& comp : components_without(inst.graph, vertices, removed)) out.push_back(inst.weight_of(comp));
  return out;
}

bool is_alpha_separator(const SearchInstance& inst, std::span<const Vertex> s, const Rational& alpha) {
  const __int128 bound = static_cast<__int128>(inst.total_weight()) * alpha.denominator();
  for (Cost w : component_weights(inst, all_vertices(inst.size()), s))
    if (static_cast<__int128>(w) * alpha.numerator() > bound) return false;
  return true;
}

std::vector<char> balanced_split(std::span<const Cost> weights) {
  std::vector<char> lighter(weights.size(), 0);
  Cost total = 0;
  for (Cost w : weights) total = checked_add(total, w);
  if (total > 4'000'000) {
    std::vector<std::size_t> order(weights.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
    Cost left = 0, right = 0;
    for (std::size_t i : order) {
      if (left <= right) {
        lighter[i] = 1;
        left += weights[i];
      } else {
        right += weights[i];
      }
    }
    if (left > right)
      for (auto& f : lighter) f = static_cast<char>(!f);
    return lighter;
  }
  // from[x]: first item that made sum x reachable (-1 for the empty sum).
  std::vector<int> from(static_cast<std::size_t>(total) + 1, -2);
  from[0] = -1;
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (Cost x = total; x >= weights[i] && weights[i] > 0; --x)
      if (from[static_cast<std::size_t>(x)] == -2 && from[static_cast<std::size_t>(x - weights[i])] != -2)
        from[static_cast<std::size_t>(x)] = static_cast<int>(i);
  Cost x = total / 2;
  while (from[static_cast<std::size_t>(x)] == -2) --x;
  while (x > 0) {
    const int i = from[static_cast<std::size_t>(x)];
    lighter[static_cast<std::size_t>(i)] = 1;
    x -= weights[static_cast<std::size_t>(i)];
  }
  return lighter;
}

Vertex centroid(const SearchInstance& inst, std::span<const Vertex> vertices, bool by_count) {
  Vertex best = kNoVertex;
  Cost best_size = 0;
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    Cost largest = 0;
    for (const auto& comp : components_without(inst.graph, sorted, std::span<const Vertex>(&v, 1)))
      largest = std::max(largest, by_count ? static_cast<Cost>(comp.size()) : inst.weight_of(comp));
    if (best == kNoVertex || largest < best_size) {
      best = v;
      best_size = largest;
    }
  }
  return best;
}

}  // namespace gsearch
