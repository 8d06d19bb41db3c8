#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsearch/errors.hpp"
#include "gsearch/generate.hpp"
#include "gsearch/io.hpp"
#include "gsearch/oracles.hpp"
#include "gsearch/separation.hpp"
#include "gsearch/separator.hpp"
#include "runner.hpp"

using namespace gsearch;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<std::vector<Cost>> read_matrix(const std::string& path) {
  json doc = json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) throw ParseError(path + ": expected a JSON array of rows");
  try {
    return doc.get<std::vector<std::vector<Cost>>>();
  } catch (const json::exception&) {
    throw ParseError(path + ": rows must be arrays of integers");
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_file(out_path, text);
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

// ---- gen

struct GenArgs {
  std::string kind;
  GeneratorParams params;
  std::uint64_t seed = 0;
  std::string variant = "vertex";
  std::string matrix;
  std::string out;
};

int cmd_gen(GenArgs& a) {
  a.params.variant = a.variant == "pairwise" ? CostVariant::Pairwise : CostVariant::Vertex;
  if (!a.matrix.empty()) a.params.matrix = read_matrix(a.matrix);
  emit(a.out, serialize_instance(generate(parse_generator_kind(a.kind), a.params, a.seed)));
  return 0;
}

// ---- solve

struct SolveArgs {
  std::string instance;
  std::string algo;
  std::string epsilon = "1";
  cli::AlgoParams params;
  std::string out;
};

json params_json(const std::string& algo, const cli::AlgoParams& p) {
  json j = json::object();
  if (algo == "tree4eps" || algo == "starfptas" || algo == "kfptas") j["epsilon"] = to_string(p.epsilon);
  if (algo == "graphrec") j["cut"] = p.cut;
  if (algo == "kfptas") j["k_limit"] = p.k_limit;
  return j;
}

int cmd_solve(SolveArgs& a) {
  a.params.epsilon = parse_rational(a.epsilon);
  const auto inst = parse_instance(read_file(a.instance));
  const auto run = cli::run_algorithm(a.algo, inst, a.params);
  const auto guarantee = cli::guarantee_of(a.algo, a.params);
  const auto verdict = cli::judge(inst, run, guarantee);
  if (!a.out.empty()) write_file(a.out, serialize_decision_tree(run.tree));
  json rec;
  rec["algo"] = a.algo;
  rec["params"] = params_json(a.algo, a.params);
  rec["n"] = inst.size();
  rec["average_cost"] = run.average;
  rec["worst_cost"] = run.worst;
  rec["runtime_ms"] = run.runtime_ms;
  rec["objective"] = guarantee.objective == cli::Objective::Average ? "average" : "worst";
  rec["oracle_cost"] = optional_json(verdict.oracle);
  rec["ratio"] = optional_json(verdict.ratio);
  rec["bound"] = optional_json(verdict.bound);
  rec["lp_objective"] = optional_json(run.lp_objective);
  rec["pass"] = verdict.pass;
  std::cout << rec.dump() << '\n';
  return verdict.pass ? 0 : kExitViolation;
}

// ---- oracle

struct OracleArgs {
  std::string instance;
  std::string kind = "avg";
  std::string matrix;
  std::string out;
};

int cmd_oracle(const OracleArgs& a) {
  json rec;
  rec["kind"] = a.kind;
  if (a.kind == "linear-ordering") {
    if (a.matrix.empty()) throw InputError("--matrix is required for linear-ordering");
    auto lo = opt_star_linear_ordering(read_matrix(a.matrix));
    rec["cost"] = lo.cost;
    rec["order"] = lo.order;
    std::cout << rec.dump() << '\n';
    return 0;
  }
  if (a.instance.empty()) throw InputError("an instance file is required");
  const auto inst = parse_instance(read_file(a.instance));
  OracleResult res;
  if (a.kind == "avg") res = opt_average_subset_dp(inst);
  else if (a.kind == "worst") res = opt_worst_bruteforce(inst);
  else if (a.kind == "path") res = opt_path_arbitrary(inst);
  else throw InputError("--kind must be avg, worst, path or linear-ordering");
  if (!a.out.empty()) write_file(a.out, serialize_decision_tree(res.tree));
  rec["cost"] = res.cost;
  rec["average_cost"] = average_cost(inst, res.tree);
  rec["worst_cost"] = worst_cost(inst, res.tree);
  std::cout << rec.dump() << '\n';
  return 0;
}

// ---- separator

struct SeparatorArgs {
  std::string instance;
  std::string alpha = "2";
  std::string delta;
  bool exact = false;
};

int cmd_separator(const SeparatorArgs& a) {
  const auto inst = parse_instance(read_file(a.instance));
  const Rational alpha = parse_rational(a.alpha);
  SeparatorResult res;
  std::string method = "dp";
  if (a.exact) {
    res = exact_alpha_separator(inst, alpha);
    method = "exact";
  } else if (!a.delta.empty()) {
    res = separator_fptas(inst, alpha, parse_rational(a.delta));
    method = "fptas";
  } else {
    res = separator_dp(inst, alpha);
  }
  json rec;
  rec["method"] = method;
  rec["alpha"] = to_string(alpha);
  if (!a.delta.empty() && !a.exact) rec["delta"] = a.delta;
  rec["cost"] = res.cost;
  rec["separator"] = res.separator;
  rec["component_weights"] = component_weights(inst, all_vertices(inst.size()), res.separator);
  rec["total_weight"] = inst.total_weight();
  rec["is_alpha_separator"] = is_alpha_separator(inst, res.separator, alpha);
  std::cout << rec.dump() << '\n';
  return 0;
}

// ---- bench

struct BenchArgs {
  std::string suite;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
};

struct BenchRow {
  int id = 0;
  std::string instance_id;
  GeneratorKind kind{};
  GeneratorParams params;
  std::uint64_t seed = 0;
  std::string algo;
  cli::AlgoParams algo_params;
  // filled by the worker
  std::string status;
  std::string message;
  Cost average = 0, worst = 0, cost = 0;
  double runtime_ms = 0;
  cli::Verdict verdict;
};

GeneratorParams generator_params(const json& g) {
  GeneratorParams p;
  p.n = g.value("n", 1);
  p.weight_min = g.value("weight_min", p.weight_min);
  p.weight_max = g.value("weight_max", p.weight_max);
  p.cost_min = g.value("cost_min", p.cost_min);
  p.cost_max = g.value("cost_max", p.cost_max);
  p.variant = g.value("variant", std::string("vertex")) == "pairwise" ? CostVariant::Pairwise : CostVariant::Vertex;
  p.monotone = g.value("monotone", false);
  p.legs = g.value("legs", p.legs);
  p.edge_probability = g.value("edge_probability", p.edge_probability);
  if (g.contains("matrix")) p.matrix = g["matrix"].get<std::vector<std::vector<Cost>>>();
  return p;
}

std::vector<BenchRow> expand_suite(const json& suite) {
  std::vector<BenchRow> rows;
  if (!suite.is_object()) throw ParseError("suite: expected an object");
  const json groups = suite.value("groups", json::array());
  for (const auto& group : groups) {
    const auto seeds = group.value("seeds", std::vector<std::uint64_t>{});
    for (const auto& g : group.value("generators", json::array())) {
      const auto kind = parse_generator_kind(g.at("kind").get<std::string>());
      const auto params = generator_params(g);
      for (std::uint64_t seed : seeds)
        for (const auto& al : group.value("algorithms", json::array())) {
          BenchRow row;
          row.id = static_cast<int>(rows.size());
          row.kind = kind;
          row.params = params;
          row.seed = seed;
          row.instance_id = to_string(kind) + "-n" + std::to_string(params.n) + "-s" + std::to_string(seed);
          row.algo = al.at("algo").get<std::string>();
          row.algo_params.epsilon = parse_rational(al.value("epsilon", std::string("1")));
          row.algo_params.cut = al.value("cut", std::string("exact"));
          row.algo_params.k_limit = al.value("k_limit", 3);
          cli::guarantee_of(row.algo, row.algo_params);  // rejects unknown names early
          rows.push_back(std::move(row));
        }
    }
  }
  return rows;
}

void run_row(BenchRow& row) {
  try {
    const auto inst = generate(row.kind, row.params, row.seed);
    const auto run = cli::run_algorithm(row.algo, inst, row.algo_params);
    const auto g = cli::guarantee_of(row.algo, row.algo_params);
    row.average = run.average;
    row.worst = run.worst;
    row.cost = g.objective == cli::Objective::Average ? run.average : run.worst;
    row.runtime_ms = run.runtime_ms;
    row.verdict = cli::judge(inst, run, g);
    row.status = row.verdict.pass ? "pass" : "fail";
  } catch (const std::exception& e) {
    row.status = "error";
    row.message = e.what();
    row.verdict.pass = false;
  }
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string fmt(const auto& v) {
  if (!v) return "";
  std::ostringstream s;
  s << *v;
  return s.str();
}

// "epsilon=1/2;cut=exact" style, for one CSV cell.
std::string param_text(const std::string& algo, const cli::AlgoParams& p) {
  const json params = params_json(algo, p);
  std::string out;
  for (const auto& [key, value] : params.items())
    out += (out.empty() ? "" : ";") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  return out;
}

int cmd_bench(const BenchArgs& a) {
  if (a.format != "csv" && a.format != "json") throw InputError("--format must be csv or json");
  json suite = json::parse(read_file(a.suite), nullptr, false);
  if (suite.is_discarded()) throw ParseError(a.suite + ": malformed JSON");
  std::vector<BenchRow> rows;
  try {
    rows = expand_suite(suite);
  } catch (const json::exception& e) {
    throw ParseError(a.suite + ": " + e.what());
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(a.threads ? a.threads : std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1))));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) run_row(rows[i]);
    });
  for (auto& th : pool) th.join();

  bool ok = true;
  std::ostringstream report;
  if (a.format == "csv") {
    report << "id,instance,algo,params,average_cost,worst_cost,cost,oracle_cost,ratio,bound,runtime_ms,status,message\n";
    for (const auto& r : rows) {
      report << r.id << ',' << r.instance_id << ',' << r.algo << ',' << param_text(r.algo, r.algo_params) << ','
             << r.average << ',' << r.worst << ',' << r.cost << ',' << fmt(r.verdict.oracle) << ','
             << fmt(r.verdict.ratio) << ',' << fmt(r.verdict.bound) << ',' << r.runtime_ms << ',' << r.status << ','
             << csv_field(r.message) << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json j;
      j["id"] = r.id;
      j["instance"] = r.instance_id;
      j["algo"] = r.algo;
      j["params"] = params_json(r.algo, r.algo_params);
      j["average_cost"] = r.average;
      j["worst_cost"] = r.worst;
      j["cost"] = r.cost;
      j["oracle_cost"] = optional_json(r.verdict.oracle);
      j["ratio"] = optional_json(r.verdict.ratio);
      j["bound"] = optional_json(r.verdict.bound);
      j["runtime_ms"] = r.runtime_ms;
      j["status"] = r.status;
      if (!r.message.empty()) j["message"] = r.message;
      arr.push_back(j);
    }
    report << arr.dump(1) << '\n';
  }
  for (const auto& r : rows) ok = ok && r.status == "pass";
  emit(a.out, report.str());
  int failed = static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return r.status != "pass"; }));
  std::cerr << rows.size() << " rows, " << failed << " not passing\n";
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search strategies on graphs: generators, solvers, exact oracles, benchmarks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated instance");
  g->add_option("--kind", gen.kind, "path|star|spider|random_tree|random_connected_graph|linear_ordering_star")
      ->required();
  g->add_option("--n", gen.params.n, "vertex count");
  g->add_option("--seed", gen.seed);
  g->add_option("--weight-min", gen.params.weight_min);
  g->add_option("--weight-max", gen.params.weight_max);
  g->add_option("--cost-min", gen.params.cost_min);
  g->add_option("--cost-max", gen.params.cost_max);
  g->add_option("--variant", gen.variant)->check(CLI::IsMember({"vertex", "pairwise"}));
  g->add_flag("--monotone", gen.params.monotone, "monotone pairwise costs (trees only)");
  g->add_option("--legs", gen.params.legs, "spider legs");
  g->add_option("--edge-probability", gen.params.edge_probability);
  g->add_option("--matrix", gen.matrix, "JSON matrix file for linear_ordering_star");
  g->add_option("-o,--out", gen.out, "output file (stdout when omitted)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "run one algorithm and print a JSON record");
  s->add_option("instance", solve.instance)->required();
  s->add_option("--algo", solve.algo)->required()->check(CLI::IsMember(cli::algorithm_names()));
  s->add_option("--epsilon", solve.epsilon, "rational, e.g. 1/2");
  s->add_option("--cut", solve.params.cut)->check(CLI::IsMember({"exact", "greedy"}));
  s->add_option("--k-limit", solve.params.k_limit);
  s->add_option("--dump-lp", solve.params.dump_lp, "write the LP in CPLEX LP format");
  s->add_option("-o,--out", solve.out, "decision tree output file");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "exact optimum of a small instance");
  o->add_option("instance", oracle.instance);
  o->add_option("--kind", oracle.kind)->check(CLI::IsMember({"avg", "worst", "path", "linear-ordering"}));
  o->add_option("--matrix", oracle.matrix);
  o->add_option("-o,--out", oracle.out);

  SeparatorArgs sep;
  auto* p = app.add_subcommand("separator", "minimum-cost alpha-separator of a tree");
  p->add_option("instance", sep.instance)->required();
  p->add_option("--alpha", sep.alpha);
  p->add_option("--delta", sep.delta, "bicriteria approximation instead of the exact DP");
  p->add_flag("--exact", sep.exact, "exhaustive search");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "run a suite of generators x algorithms x seeds");
  b->add_option("suite", bench.suite)->required();
  b->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));
  b->add_option("-o,--out", bench.out);
  b->add_option("--threads", bench.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_solve(solve);
    if (*o) return cmd_oracle(oracle);
    if (*p) return cmd_separator(sep);
    if (*b) return cmd_bench(bench);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
