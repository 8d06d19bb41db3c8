#include <doctest.h>

#include <random>

#include "gsearch/errors.hpp"
#include "gsearch/generate.hpp"
#include "gsearch/io.hpp"
#include "helpers.hpp"

using namespace gsearch;
using testing::tree_from_parents;
using testing::unit_path;

TEST_CASE("graph components are sorted and keyed by minimum vertex") {
  auto g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Vertex removed = 2;
  auto comps = components_without(g, all_vertices(5), std::span<const Vertex>(&removed, 1));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{3, 4});
  TreePaths paths(g);
  CHECK(paths.path(4, 1) == std::vector<Vertex>{4, 3, 2, 1});
  CHECK(paths.on_path(2, 0, 4));
  CHECK_FALSE(paths.on_path(4, 0, 3));
}

TEST_CASE("validate_instance") {
  SUBCASE("decreasing cost toward the target is a monotonicity violation") {
    // a=0, b=1, c=2; c(a,c)=1, c(b,c)=2
    std::vector<Cost> m(9, 0);
    m[0 * 3 + 2] = 1;
    m[1 * 3 + 2] = 2;
    auto inst = testing::pairwise_instance(3, {{0, 1}, {1, 2}}, {1, 1, 1}, m, true);
    auto problems = validate_instance(inst);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("u=1, v=0, x=2") != std::string::npos);
  }
  SUBCASE("vertex costs skip the monotonicity check") { CHECK(validate_instance(unit_path(3)).empty()); }
  SUBCASE("disconnected graph") {
    auto inst = testing::vertex_instance(3, {{0, 1}}, {1, 1, 1}, {1, 1, 1});
    auto problems = validate_instance(inst);
    REQUIRE_FALSE(problems.empty());
    CHECK(problems[0] == "disconnected");
  }
}

TEST_CASE("cost evaluation on small examples") {
  auto inst = unit_path(3);
  auto d = tree_from_parents({1, kNoVertex, 1});
  CHECK(evaluate_target_cost(inst, d, 0) == 2);
  CHECK(evaluate_target_cost(inst, d, 1) == 1);
  CHECK(evaluate_target_cost(inst, d, 2) == 2);
  CHECK(average_cost(inst, d) == 5);
  CHECK(worst_cost(inst, d) == 2);
  CHECK_THROWS_AS(evaluate_target_cost(inst, d, 3), InputError);

  auto single = testing::vertex_instance(1, {}, {3}, {2});
  auto root_only = tree_from_parents({kNoVertex});
  CHECK(evaluate_target_cost(single, root_only, 0) == 2);
  CHECK(average_cost(single, root_only) == 6);
  CHECK(worst_cost(single, root_only) == 2);

  // u=0, v=1: c(u,u)=1, c(u,v)=5, c(v,u)=1, c(v,v)=1; root v then u.
  auto pair = testing::pairwise_instance(2, {{0, 1}}, {1, 1}, {1, 5, 1, 1}, false);
  auto d2 = tree_from_parents({1, kNoVertex});
  CHECK(evaluate_target_cost(pair, d2, 0) == 2);
  CHECK(evaluate_target_cost(pair, d2, 1) == 1);
  CHECK(average_cost(pair, d2) == 3);
  CHECK(worst_cost(pair, d2) == 2);
}

TEST_CASE("validate_decision_tree") {
  auto inst = unit_path(3);
  CHECK(validate_decision_tree(inst, tree_from_parents({kNoVertex, 0, 1})).empty());
  auto bad = validate_decision_tree(inst, tree_from_parents({1, kNoVertex, 0}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].find("node 1") != std::string::npos);
  auto missing = validate_decision_tree(inst, DecisionTree(0, {kNoVertex, 0, DecisionTree::kUnassigned}));
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].find("coverage") != std::string::npos);
}

TEST_CASE("level decomposition on the three-vertex path") {
  auto inst = unit_path(3);
  auto d = tree_from_parents({1, kNoVertex, 1});
  auto levels = decompose_levels(inst, d);
  REQUIRE(levels.separators.size() == 4);
  CHECK(levels.separators[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(levels.separators[1] == std::vector<Vertex>{1});
  CHECK(levels.separators[2] == std::vector<Vertex>{1});
  CHECK(levels.separators[3].empty());
  CHECK(levels.families[1] == std::vector<Vertex>{0, 2});
  CHECK(levels.families[3] == std::vector<Vertex>{1});
  CHECK(level_sum(inst, levels) == 5);
  CHECK(contribution_sum(inst, d) == 5);
  CHECK(2 * average_cost(inst, d) >= halved_level_sum(inst, levels));

  auto pair = testing::pairwise_instance(2, {{0, 1}}, {1, 1}, {1, 5, 1, 1}, false);
  CHECK_THROWS_AS(decompose_levels(pair, tree_from_parents({1, kNoVertex})), PreconditionError);
}

namespace {

// Random valid strategy: query a random vertex of each candidate set.
DecisionTree random_strategy(const SearchInstance& inst, std::mt19937_64& rng) {
  std::vector<Vertex> parent(static_cast<std::size_t>(inst.size()), DecisionTree::kUnassigned);
  Vertex root = kNoVertex;
  std::vector<std::pair<std::vector<Vertex>, Vertex>> work{{all_vertices(inst.size()), kNoVertex}};
  while (!work.empty()) {
    auto [cand, above] = work.back();
    work.pop_back();
    Vertex q = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
    parent[static_cast<std::size_t>(q)] = above;
    if (above == kNoVertex) root = q;
    for (auto& comp : components_without(inst.graph, cand, std::span<const Vertex>(&q, 1))) work.emplace_back(comp, q);
  }
  return DecisionTree(root, parent);
}

}  // namespace

TEST_CASE("level identities hold for random strategies on a unit star") {
  GeneratorParams p;
  p.n = 4;
  p.weight_min = p.weight_max = 1;
  auto inst = generate(GeneratorKind::Star, p, 3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = random_strategy(inst, rng);
    REQUIRE(validate_decision_tree(inst, d).empty());
    auto levels = decompose_levels(inst, d);
    CHECK(level_sum(inst, levels) == average_cost(inst, d));
    CHECK(contribution_sum(inst, d) == average_cost(inst, d));
    CHECK(2 * average_cost(inst, d) >= halved_level_sum(inst, levels));
  }
}

TEST_CASE("generators") {
  GeneratorParams p;
  p.n = 1;
  auto single = generate(GeneratorKind::Path, p, 1);
  CHECK(single.size() == 1);
  CHECK(single.graph.edge_count() == 0);

  p.matrix = {{0, 0}, {0, 0}};
  auto star = generate(GeneratorKind::LinearOrderingStar, p, 0);
  CHECK(star.size() == 3);
  CHECK(star.cost(1, 2) == 0);
  CHECK(star.cost(0, 1) == 1);
  CHECK(star.cost(1, 0) == 0);

  p.n = 10;
  CHECK(generate(GeneratorKind::RandomTree, p, 7) == generate(GeneratorKind::RandomTree, p, 7));
  CHECK(generate(GeneratorKind::RandomTree, p, 7).graph.is_tree());

  p.variant = CostVariant::Pairwise;
  p.monotone = true;
  for (auto kind : {GeneratorKind::Path, GeneratorKind::Star, GeneratorKind::Spider, GeneratorKind::RandomTree})
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(validate_instance(generate(kind, p, seed)).empty());
  CHECK_THROWS_AS(generate(GeneratorKind::RandomConnectedGraph, p, 1), InputError);
  p.monotone = false;
  p.variant = CostVariant::Vertex;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(validate_instance(generate(GeneratorKind::RandomConnectedGraph, p, seed)).empty());
  CHECK_THROWS_AS(parse_generator_kind("grid"), InputError);
}

TEST_CASE("serialization") {
  GeneratorParams p;
  p.n = 8;
  for (auto kind : {GeneratorKind::Path, GeneratorKind::Star, GeneratorKind::Spider, GeneratorKind::RandomTree,
                    GeneratorKind::RandomConnectedGraph}) {
    auto inst = generate(kind, p, 5);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
  p.variant = CostVariant::Pairwise;
  p.monotone = true;
  auto mono = generate(GeneratorKind::RandomTree, p, 5);
  CHECK(parse_instance(serialize_instance(mono)) == mono);

  auto d = tree_from_parents({1, kNoVertex, 1});
  const std::string canonical =
      R"({"children":[{"component_key":0,"node":0,"subtree":[]},{"component_key":2,"node":2,"subtree":[]}],"root":1,"version":1})"
      "\n";
  CHECK(serialize_decision_tree(d) == canonical);
  CHECK(parse_decision_tree(canonical, 3) == d);

  const std::string wrong_key =
      R"({"children":[{"component_key":1,"node":0,"subtree":[]},{"component_key":2,"node":2,"subtree":[]}],"root":1,"version":1})";
  CHECK_THROWS_AS(parse_decision_tree(wrong_key, 3), ParseError);
  const std::string duplicate =
      R"({"children":[{"component_key":0,"node":0,"subtree":[]},{"component_key":0,"node":0,"subtree":[]}],"root":1,"version":1})";
  CHECK_THROWS_AS(parse_decision_tree(duplicate, 3), ParseError);
  CHECK_THROWS_AS(parse_instance("{\"version\":1,\"n\":2}"), ParseError);
}
