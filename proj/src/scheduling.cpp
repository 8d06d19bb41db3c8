#include <algorithm>
#include <numeric>
#include <string>

#include "gsearch/bounded_fptas.hpp"
#include "gsearch/errors.hpp"

namespace gsearch {

std::vector<int> smith_order(std::span<const Job> jobs) {
  std::vector<int> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Job& x = jobs[static_cast<std::size_t>(a)];
    const Job& y = jobs[static_cast<std::size_t>(b)];
    if ((x.weight == 0) != (y.weight == 0)) return y.weight == 0;
    if (x.weight == 0) return false;
    const bool xi = x.processing == kInfiniteProcessing, yi = y.processing == kInfiniteProcessing;
    if (xi || yi) return !xi && yi;
    return static_cast<__int128>(x.processing) * y.weight < static_cast<__int128>(y.processing) * x.weight;
  });
  return order;
}

Schedule schedule_with_rejection(std::span<const Job> jobs, Cost deadline, Cost budget) {
  if (deadline < 0) throw InputError("negative deadline");
  Cost finite = 0;
  for (const Job& j : jobs) {
    if (j.processing < 0 || j.weight < 0 || j.rejection < 0) throw InputError("job fields must be nonnegative");
    if (j.processing != kInfiniteProcessing) finite = checked_add(finite, j.processing);
  }
  const Cost span = std::max<Cost>(0, std::min(deadline, finite));
  if (span > budget)
    throw LimitError("scheduling DP needs " + std::to_string(span) + " processing slots, budget is " +
                     std::to_string(budget));
  const auto width = static_cast<std::size_t>(span) + 1;
  constexpr Cost kNone = -1;
  const auto order = smith_order(jobs);

  // best[t]: minimum cost with the accepted jobs so far using exactly t units.
  std::vector<Cost> best(width, kNone), next(width);
  best[0] = 0;
  std::vector<std::vector<char>> took(order.size(), std::vector<char>(width, 0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Job& job = jobs[static_cast<std::size_t>(order[i])];
    std::fill(next.begin(), next.end(), kNone);
    for (std::size_t t = 0; t < width; ++t) {
      if (best[t] == kNone) continue;
      Cost reject = checked_add(best[t], job.rejection);
      if (next[t] == kNone || reject < next[t]) {
        next[t] = reject;
        took[i][t] = 0;
      }
      if (job.processing == kInfiniteProcessing || job.processing > span - static_cast<Cost>(t)) continue;
      const auto done = t + static_cast<std::size_t>(job.processing);
      Cost accept = checked_add(best[t], checked_mul(job.weight, static_cast<Cost>(done)));
      if (next[done] == kNone || accept < next[done]) {
        next[done] = accept;
        took[i][done] = 1;
      }
    }
    best.swap(next);
  }

  std::size_t t = 0;
  for (std::size_t u = 1; u < width; ++u)
    if (best[u] != kNone && best[u] < best[t]) t = u;
  Schedule out;
  out.cost = best[t];
  for (std::size_t i = order.size(); i-- > 0;) {
    const int id = order[i];
    if (took[i][t]) {
      out.accepted.push_back(id);
      out.completion.push_back(static_cast<Cost>(t));
      t -= static_cast<std::size_t>(jobs[static_cast<std::size_t>(id)].processing);
    } else {
      out.rejected.push_back(id);
    }
  }
  std::reverse(out.accepted.begin(), out.accepted.end());
  std::reverse(out.completion.begin(), out.completion.end());
  std::sort(out.rejected.begin(), out.rejected.end());
  return out;
}

std::vector<Cost> moment_grid(const Rational& delta, Cost scaled_cap) {
  if (delta <= 0) throw InputError("grid base must be positive");
  constexpr std::size_t kMaxMoments = 1'000'000;
  std::vector<Cost> grid{0};
  if (scaled_cap <= 0) return grid;
  Cost g = kGridScale;
  grid.push_back(g);
  while (g < scaled_cap) {
    __int128 step = static_cast<__int128>(g) * delta.numerator() / delta.denominator();
    g = narrow_cost(g + std::max<__int128>(step, 1));
    grid.push_back(g);
    if (grid.size() > kMaxMoments) throw LimitError("moment grid exceeds 1000000 points");
  }
  return grid;
}

}  // namespace gsearch
