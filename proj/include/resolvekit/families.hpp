#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resolvekit/graph.hpp"
#include "resolvekit/resolvability.hpp"

namespace resolvekit {

enum class FamilyKind { kComplete, kPath, kCycle, kStar, kGrid, kPaperUnicyclic };

// params: complete/path/cycle take {n}, star takes {leaves}, grid takes
// {r, t}, the unicyclic example takes none.
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Canonical labelings: paths and cycles in walk order, star center 0, grid
// as cartesian_product(path(r), path(t)). Throws GraphError on bad params.
Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

// The 15-vertex unicyclic graph: a triangle on 1, 2, 3 with leaves 4-7 on 1,
// 8-11 on 2 and 12-15 on 3, together with its published resolving partition
// and resolving set. Every published label i is vertex i - 1 here.
struct UnicyclicExample {
  Graph graph;
  OrderedPartition partition;
  VertexSequence set;
};
UnicyclicExample paper_unicyclic_example();

// Exact structural check, tried in the order path, complete, cycle, star, so
// K_2 and K_{1,2} come back as paths and K_3 as complete. Stars need at
// least three leaves. Returns nullopt for K_1 and everything else.
std::optional<FamilySpec> recognize_family(const Graph& g);

// dim of a recognized complete/path/cycle/star family.
int known_metric_dimension(const FamilySpec& spec);

// "K_4", "P_5", "C_6", "K_{1,3}", "P_3xP_4", "unicyclic-15".
std::string describe(const FamilySpec& spec);

// "complete" | "path" | "cycle" | "star" | "grid" | "paper-example".
std::optional<FamilyKind> parse_family_kind(std::string_view name);

}  // namespace resolvekit
