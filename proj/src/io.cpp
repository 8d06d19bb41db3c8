#include "gsearch/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsearch/errors.hpp"

namespace gsearch {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

void check_version(const json& doc) {
  if (integer(field(doc, "version", "document"), "version") != 1) throw ParseError("version: only version 1 is supported");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string serialize_instance(const SearchInstance& inst) {
  json doc;
  doc["version"] = 1;
  doc["n"] = inst.size();
  json edges = json::array();
  for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  doc["weights"] = inst.weights;
  json cost;
  cost["monotone"] = inst.cost.monotone();
  if (inst.cost.is_vertex()) {
    cost["variant"] = "vertex";
    cost["values"] = std::vector<Cost>(inst.cost.values().begin(), inst.cost.values().end());
  } else {
    cost["variant"] = "pairwise";
    json rows = json::array();
    const int n = inst.cost.size();
    for (Vertex v = 0; v < n; ++v) {
      json row = json::array();
      for (Vertex x = 0; x < n; ++x) row.push_back(inst.cost(v, x));
      rows.push_back(row);
    }
    cost["values"] = rows;
  }
  doc["cost"] = cost;
  return doc.dump() + "\n";
}

SearchInstance parse_instance(std::string_view text) {
  json doc = parse_json(text);
  check_version(doc);
  const auto n64 = integer(field(doc, "n", "document"), "n");
  if (n64 < 0 || n64 > 1'000'000) throw ParseError("n: out of range");
  const int n = static_cast<int>(n64);

  const json& edges_json = field(doc, "edges", "document");
  if (!edges_json.is_array()) throw ParseError("edges: expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges_json[i];
    if (!e.is_array() || e.size() != 2) throw ParseError(where + ": expected [u, v]");
    auto u = integer(e[0], where), v = integer(e[1], where);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(where + ": endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  SearchInstance inst;
  inst.graph = Graph::from_edges(n, edges);

  const json& weights = field(doc, "weights", "document");
  if (!weights.is_array() || weights.size() != static_cast<std::size_t>(n))
    throw ParseError("weights: expected an array of length n");
  for (std::size_t i = 0; i < weights.size(); ++i)
    inst.weights.push_back(integer(weights[i], "weights[" + std::to_string(i) + "]"));

  const json& cost = field(doc, "cost", "document");
  const json& variant = field(cost, "variant", "cost");
  const json& values = field(cost, "values", "cost");
  const json& monotone = field(cost, "monotone", "cost");
  if (!monotone.is_boolean()) throw ParseError("cost.monotone: expected a boolean");
  if (!values.is_array() || values.size() != static_cast<std::size_t>(n))
    throw ParseError("cost.values: expected an array of length n");
  if (variant == "vertex") {
    std::vector<Cost> c;
    for (std::size_t i = 0; i < values.size(); ++i) c.push_back(integer(values[i], "cost.values[" + std::to_string(i) + "]"));
    inst.cost = CostModel::vertex(std::move(c));
  } else if (variant == "pairwise") {
    std::vector<Cost> c;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string where = "cost.values[" + std::to_string(i) + "]";
      if (!values[i].is_array() || values[i].size() != static_cast<std::size_t>(n))
        throw ParseError(where + ": expected a row of length n");
      for (std::size_t j = 0; j < values[i].size(); ++j)
        c.push_back(integer(values[i][j], where + "[" + std::to_string(j) + "]"));
    }
    inst.cost = CostModel::pairwise(n, std::move(c), monotone.get<bool>());
  } else {
    throw ParseError("cost.variant: expected \"vertex\" or \"pairwise\"");
  }
  return inst;
}

namespace {

json children_json(const DecisionTree& d, Vertex v) {
  json out = json::array();
  for (Vertex c : d.children(v)) {
    json child;
    child["node"] = c;
    child["component_key"] = d.subtree(c).front();
    child["subtree"] = children_json(d, c);
    out.push_back(child);
  }
  return out;
}

// Returns the minimum vertex of the subtree hung at `node`.
Vertex read_children(const json& list, Vertex node, int n, std::vector<Vertex>& parent, const std::string& where) {
  if (!list.is_array()) throw ParseError(where + ": expected an array");
  Vertex smallest = node;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& child = list[i];
    auto v = integer(field(child, "node", at), at + ".node");
    if (v < 0 || v >= n) throw ParseError(at + ".node: vertex out of range");
    const Vertex c = static_cast<Vertex>(v);
    if (parent[static_cast<std::size_t>(c)] != DecisionTree::kUnassigned)
      throw ParseError(at + ".node: vertex " + std::to_string(c) + " appears twice");
    parent[static_cast<std::size_t>(c)] = node;
    const auto key = integer(field(child, "component_key", at), at + ".component_key");
    const Vertex low = read_children(field(child, "subtree", at), c, n, parent, at + ".subtree");
    if (key != low)
      throw ParseError(at + ".component_key: " + std::to_string(key) + " is not the minimum vertex " +
                       std::to_string(low) + " of its component");
    smallest = std::min(smallest, low);
  }
  return smallest;
}

}  // namespace

std::string serialize_decision_tree(const DecisionTree& d) {
  json doc;
  doc["version"] = 1;
  doc["root"] = d.root();
  doc["children"] = children_json(d, d.root());
  return doc.dump() + "\n";
}

DecisionTree parse_decision_tree(std::string_view text, int n) {
  json doc = parse_json(text);
  check_version(doc);
  auto root = integer(field(doc, "root", "document"), "root");
  if (root < 0 || root >= n) throw ParseError("root: vertex out of range");
  std::vector<Vertex> parent(static_cast<std::size_t>(n), DecisionTree::kUnassigned);
  parent[static_cast<std::size_t>(root)] = kNoVertex;
  read_children(field(doc, "children", "document"), static_cast<Vertex>(root), n, parent, "children");
  return DecisionTree(static_cast<Vertex>(root), std::move(parent));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

}  // namespace gsearch
