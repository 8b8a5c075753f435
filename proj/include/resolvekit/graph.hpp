#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace resolvekit {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Collapses duplicate pairs and stores every edge as (min, max).
  // Throws GraphError on self-loops or endpoints outside 0..n-1.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A single BFS from vertex 0 reaches every vertex. K_1 is connected; the
// empty graph is not.
bool is_connected(const Graph& g);

// Hop distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// All-pairs hop distances of a connected graph, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const int> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  // Largest entry.
  int diameter() const noexcept;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads);

  int n_ = 0;
  std::vector<int> d_;
};

// Per-source BFS. Throws ContractViolation if g is disconnected. The
// result does not depend on the thread count.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 1);

// min over members of d(v, x). Throws ContractViolation on an empty set.
int distance_to_set(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> set);

// Vertex labeling of G1 x G2: (a, b) <-> a * n2 + b.
class ProductVertexCodec {
 public:
  ProductVertexCodec() = default;
  ProductVertexCodec(int n1, int n2) : n1_(n1), n2_(n2) {}

  int first_order() const noexcept { return n1_; }
  int second_order() const noexcept { return n2_; }
  int order() const noexcept { return n1_ * n2_; }

  Vertex encode(Vertex a, Vertex b) const noexcept { return a * n2_ + b; }
  std::pair<Vertex, Vertex> decode(Vertex v) const noexcept { return {v / n2_, v % n2_}; }

 private:
  int n1_ = 0;
  int n2_ = 1;
};

struct ProductGraph {
  Graph graph;
  ProductVertexCodec codec;
};

// (a,b) ~ (c,d) iff (a == c and bd in E2) or (b == d and ac in E1).
ProductGraph cartesian_product(const Graph& g1, const Graph& g2);

// d1(a, S1) + d2(b, S2), the distance from (a, b) to S1 x S2 in the product.
int product_set_distance(const DistanceMatrix& d1, const DistanceMatrix& d2, Vertex a, Vertex b,
                         std::span<const Vertex> s1, std::span<const Vertex> s2);

}  // namespace resolvekit
