#include "resolvekit/families.hpp"

#include <algorithm>
#include <string>

#include "resolvekit/errors.hpp"

namespace resolvekit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(leaves + 1, edges);
}

Graph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs r, t >= 1");
  return cartesian_product(path_graph(rows), path_graph(cols)).graph;
}

Graph generate(const FamilySpec& spec) {
  const auto arity = [&](std::size_t count) {
    require(spec.params.size() == count,
            describe(FamilySpec{spec.kind, {}}) + ": expected " + std::to_string(count) +
                " parameter(s), got " + std::to_string(spec.params.size()));
  };
  switch (spec.kind) {
    case FamilyKind::kComplete:
      arity(1);
      return complete_graph(spec.params[0]);
    case FamilyKind::kPath:
      arity(1);
      return path_graph(spec.params[0]);
    case FamilyKind::kCycle:
      arity(1);
      return cycle_graph(spec.params[0]);
    case FamilyKind::kStar:
      arity(1);
      return star_graph(spec.params[0]);
    case FamilyKind::kGrid:
      arity(2);
      return grid_graph(spec.params[0], spec.params[1]);
    case FamilyKind::kPaperUnicyclic:
      arity(0);
      return paper_unicyclic_example().graph;
  }
  throw GraphError("unknown family");
}

UnicyclicExample paper_unicyclic_example() {
  // Published 1-based labels.
  std::vector<std::pair<Vertex, Vertex>> edges = {{1, 2}, {1, 3}, {2, 3}};
  for (Vertex leaf = 4; leaf <= 7; ++leaf) edges.emplace_back(1, leaf);
  for (Vertex leaf = 8; leaf <= 11; ++leaf) edges.emplace_back(2, leaf);
  for (Vertex leaf = 12; leaf <= 15; ++leaf) edges.emplace_back(3, leaf);
  std::vector<std::vector<Vertex>> partition = {
      {4, 1, 2, 3}, {8}, {12}, {5, 9, 13}, {6, 10, 14}, {7, 11, 15}};
  std::vector<Vertex> set = {4, 5, 6, 8, 9, 10, 12, 13, 14};

  for (auto& [u, v] : edges) --u, --v;
  for (auto& cls : partition) {
    for (auto& v : cls) --v;
  }
  for (auto& v : set) --v;
  return {Graph::from_edge_list(15, edges), OrderedPartition(std::move(partition), 15),
          VertexSequence(std::move(set))};
}

std::optional<FamilySpec> recognize_family(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  const auto m = static_cast<long long>(g.size());
  int max_degree = 0;
  int leaves = 0;
  bool all_two = true;
  for (Vertex v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    if (g.degree(v) == 1) ++leaves;
    if (g.degree(v) != 2) all_two = false;
  }
  if (m == n - 1 && max_degree <= 2) return FamilySpec{FamilyKind::kPath, {n}};
  if (m == static_cast<long long>(n) * (n - 1) / 2) return FamilySpec{FamilyKind::kComplete, {n}};
  if (n >= 3 && all_two) return FamilySpec{FamilyKind::kCycle, {n}};
  if (n >= 4 && m == n - 1 && max_degree == n - 1 && leaves == n - 1) {
    return FamilySpec{FamilyKind::kStar, {n - 1}};
  }
  return std::nullopt;
}

int known_metric_dimension(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kComplete:
      return spec.params.at(0) - 1;
    case FamilyKind::kPath:
      return spec.params.at(0) >= 2 ? 1 : 0;
    case FamilyKind::kCycle:
      return 2;
    case FamilyKind::kStar:
      return spec.params.at(0) - 1;
    default:
      throw GraphError("no closed form for " + describe(spec));
  }
}

std::string describe(const FamilySpec& spec) {
  const auto param = [&](std::size_t i) {
    return i < spec.params.size() ? std::to_string(spec.params[i]) : std::string("n");
  };
  switch (spec.kind) {
    case FamilyKind::kComplete:
      return "K_" + param(0);
    case FamilyKind::kPath:
      return "P_" + param(0);
    case FamilyKind::kCycle:
      return "C_" + param(0);
    case FamilyKind::kStar:
      return "K_{1," + param(0) + "}";
    case FamilyKind::kGrid:
      return "P_" + param(0) + "xP_" + param(1);
    case FamilyKind::kPaperUnicyclic:
      return "unicyclic-15";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  if (name == "complete") return FamilyKind::kComplete;
  if (name == "path") return FamilyKind::kPath;
  if (name == "cycle") return FamilyKind::kCycle;
  if (name == "star") return FamilyKind::kStar;
  if (name == "grid") return FamilyKind::kGrid;
  if (name == "paper-example") return FamilyKind::kPaperUnicyclic;
  return std::nullopt;
}

}  // namespace resolvekit
