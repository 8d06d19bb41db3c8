#include <doctest.h>

#include <chrono>
#include <cmath>
#include <vector>

#include "gsearch/errors.hpp"
#include "gsearch/generate.hpp"
#include "gsearch/monotone_lp.hpp"
#include "gsearch/oracles.hpp"
#include "helpers.hpp"

using namespace gsearch;

namespace {

SearchInstance monotone_tree(int n, std::uint64_t seed) {
  GeneratorParams p;
  p.n = n;
  p.variant = CostVariant::Pairwise;
  p.monotone = true;
  return generate(GeneratorKind::RandomTree, p, seed);
}

SearchInstance on(const Graph& g) {
  SearchInstance inst;
  inst.graph = g;
  inst.weights.assign(static_cast<std::size_t>(g.size()), 1);
  inst.cost = CostModel::vertex(std::vector<Cost>(static_cast<std::size_t>(g.size()), 1));
  return inst;
}

}  // namespace

TEST_CASE("lp on tiny trees") {
  auto single = testing::pairwise_instance(1, {}, {3}, {4}, true);
  auto lp1 = build_avg_lp(single);
  CHECK(solve_lp(lp1.program).objective == doctest::Approx(12).epsilon(1e-9));

  auto two = testing::pairwise_instance(2, {{0, 1}}, {1, 1}, {1, 1, 1, 1}, true);
  auto lp2 = build_avg_lp(two);
  CHECK(std::abs(solve_lp(lp2.program).objective - 3.0) <= 1e-6);
  auto res = two_approx_avg(two);
  CHECK(validate_decision_tree(two, res.tree).empty());
  CHECK(average_cost(two, res.tree) <= 2 * 3);

  auto lpw = build_worst_lp(two);
  CHECK(std::abs(solve_lp(lpw.program).objective - 1.5) <= 1e-6);
}

TEST_CASE("lp refuses non-monotone input") {
  auto two = testing::pairwise_instance(2, {{0, 1}}, {1, 1}, {1, 1, 1, 1}, false);
  CHECK_THROWS_AS(build_avg_lp(two), PreconditionError);
  // flagged monotone but c(1,1)=5 > c(0,1)=1 with 1 on the path 0..1
  auto lying = testing::pairwise_instance(2, {{0, 1}}, {1, 1}, {1, 1, 1, 5}, true);
  CHECK_THROWS(build_avg_lp(lying));
  auto cycle = testing::pairwise_instance(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 1}, std::vector<Cost>(9, 1), true);
  CHECK_THROWS(build_avg_lp(cycle));
}

TEST_CASE("pseudo_sep_assignment rounding") {
  // path u=0 - v=1, column of target v: x(v,v)=1, x(u,v)=0.5
  Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  std::vector<double> col{0.5, 1.0};
  CHECK(pseudo_sep_assignment(g, 1, col) == std::vector<Vertex>{0, 1});
  std::vector<double> split{0.3, 0.3};
  CHECK(pseudo_sep_assignment(g, 1, split) == std::vector<Vertex>{1});
}

TEST_CASE("reconstruct_decision_tree") {
  Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  SeparatorAssignment s{{0}, {0, 1}};
  CHECK(is_pseudo_separator_assignment(g, s));
  CHECK(has_path_overlap(g, s));
  auto d = reconstruct_decision_tree(g, s);
  CHECK(d.root() == 0);
  CHECK(validate_decision_tree(on(g), d).empty());

  Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  SeparatorAssignment centered{{0}, {0}, {0}, {0}};
  auto ds = reconstruct_decision_tree(star, centered);
  CHECK(ds.root() == 0);
  CHECK(validate_decision_tree(on(star), ds).empty());

  SeparatorAssignment bad{{1}, {2}, {2}, {3}};
  CHECK_FALSE(is_pseudo_separator_assignment(star, bad));
  CHECK_THROWS_AS(reconstruct_decision_tree(star, bad), std::logic_error);
}

TEST_CASE("lp pipeline against the oracles") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto inst = monotone_tree(2 + static_cast<int>(seed % 6), seed);
    auto avg = two_approx_avg(inst);
    auto opt = opt_average_subset_dp(inst);
    CHECK(avg.lp_objective <= static_cast<double>(opt.cost) * (1 + 1e-6) + 1e-6);
    CHECK(validate_decision_tree(inst, avg.tree).empty());
    CHECK(is_pseudo_separator_assignment(inst.graph, avg.assignment));
    CHECK(has_path_overlap(inst.graph, avg.assignment));
    for (Vertex v = 0; v < inst.size(); ++v)
      CHECK(evaluate_target_cost(inst, avg.tree, v) <= assignment_cost(inst, avg.assignment[static_cast<std::size_t>(v)], v));
    CHECK(static_cast<double>(average_cost(inst, avg.tree)) <= 2 * avg.lp_objective * (1 + 1e-9) + 1e-6);

    auto worst = two_approx_worst(inst);
    auto wopt = opt_worst_bruteforce(inst);
    CHECK(worst.lp_objective <= static_cast<double>(wopt.cost) * (1 + 1e-6) + 1e-6);
    CHECK(static_cast<double>(worst_cost(inst, worst.tree)) <= 2 * worst.lp_objective * (1 + 1e-9) + 1e-6);
  }
}

TEST_CASE("lp pipeline at n = 10") {
  auto inst = monotone_tree(10, 99);
  auto start = std::chrono::steady_clock::now();
  auto avg = two_approx_avg(inst);
  auto worst = two_approx_worst(inst);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("two LP pipelines at n=10 took " << ms << " ms");
  CHECK(validate_decision_tree(inst, avg.tree).empty());
  CHECK(validate_decision_tree(inst, worst.tree).empty());
}
