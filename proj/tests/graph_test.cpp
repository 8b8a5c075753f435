#include "resolvekit/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "resolvekit/errors.hpp"
#include "resolvekit/families.hpp"
#include "testing/naive_oracles.hpp"
#include "testing/random_graphs.hpp"

namespace resolvekit {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST(GraphTest, SmallestNontrivialGraph) {
  const Pairs pairs = {{0, 1}};
  const Graph g = Graph::from_edge_list(2, pairs);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(GraphTest, TriangleAndNormalization) {
  const Pairs pairs = {{0, 1}, {1, 2}, {0, 2}, {2, 0}, {1, 0}};
  const Graph g = Graph::from_edge_list(3, pairs);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(GraphTest, UnicyclicExampleEdgeSet) {
  // 1-based published labels, shifted down by one.
  Pairs pairs = {{0, 1}, {0, 2}, {1, 2}};
  for (Vertex leaf = 3; leaf <= 6; ++leaf) pairs.emplace_back(0, leaf);
  for (Vertex leaf = 7; leaf <= 10; ++leaf) pairs.emplace_back(1, leaf);
  for (Vertex leaf = 11; leaf <= 14; ++leaf) pairs.emplace_back(2, leaf);
  const Graph g = Graph::from_edge_list(15, pairs);
  EXPECT_EQ(g.order(), 15);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g, paper_unicyclic_example().graph);
}

TEST(GraphTest, RejectsSelfLoop) {
  const Pairs pairs = {{0, 1}, {1, 1}};
  EXPECT_THROW(Graph::from_edge_list(2, pairs), GraphError);
}

TEST(GraphTest, RejectsEndpointOutOfRange) {
  const Pairs pairs = {{0, 2}};
  EXPECT_THROW(Graph::from_edge_list(2, pairs), GraphError);
  const Pairs negative = {{-1, 0}};
  EXPECT_THROW(Graph::from_edge_list(2, negative), GraphError);
}

TEST(GraphTest, Connectivity) {
  EXPECT_TRUE(is_connected(path_graph(2)));
  EXPECT_FALSE(is_connected(Graph::from_edge_list(2, Pairs{})));
  EXPECT_TRUE(is_connected(Graph::from_edge_list(1, Pairs{})));
  EXPECT_FALSE(is_connected(Graph{}));
}

TEST(DistanceTest, PathAndCycle) {
  const auto p3 = all_pairs_distances(path_graph(3));
  EXPECT_EQ(p3(0, 2), 2);
  const auto c5 = all_pairs_distances(cycle_graph(5));
  EXPECT_EQ(c5(0, 2), 2);
  EXPECT_EQ(c5(0, 3), 2);
  EXPECT_EQ(c5.diameter(), 2);
}

TEST(DistanceTest, LeafToLeafAcrossTriangle) {
  const auto dm = all_pairs_distances(paper_unicyclic_example().graph);
  // Published leaf 4 hangs on 1, leaf 8 on 2.
  EXPECT_EQ(dm(3, 7), 3);
  EXPECT_EQ(dm(3, 4), 2);
}

TEST(DistanceTest, DisconnectedRejected) {
  const Pairs pairs = {{0, 1}};
  EXPECT_THROW(all_pairs_distances(Graph::from_edge_list(3, pairs)), ContractViolation);
}

TEST(DistanceTest, InvariantsAgainstFloydWarshall) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 1, 70);
    const auto dm = all_pairs_distances(g, 1 + trial % 4);
    const auto oracle = testing::floyd_warshall(g);
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      ASSERT_EQ(dm(u, u), 0);
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(dm(u, v), oracle[u][v]);
        ASSERT_EQ(dm(u, v), dm(v, u));
        ASSERT_EQ(dm(u, v) == 1, g.adjacent(u, v));
        for (Vertex w = 0; w < n; w += 3) ASSERT_LE(dm(u, w), dm(u, v) + dm(v, w));
      }
    }
  }
}

TEST(DistanceTest, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(7);
  const Graph g = testing::random_connected_graph(rng, 150, 0.02);
  const auto one = all_pairs_distances(g, 1);
  const auto four = all_pairs_distances(g, 4);
  for (Vertex u = 0; u < g.order(); ++u) {
    ASSERT_TRUE(std::equal(one.row(u).begin(), one.row(u).end(), four.row(u).begin()));
  }
}

TEST(DistanceTest, DistanceToSet) {
  const auto dm = all_pairs_distances(path_graph(3));
  const std::vector<Vertex> far = {2};
  const std::vector<Vertex> both = {0, 2};
  EXPECT_EQ(distance_to_set(dm, 0, far), 2);
  EXPECT_EQ(distance_to_set(dm, 2, both), 0);
  EXPECT_THROW(distance_to_set(dm, 0, std::vector<Vertex>{}), ContractViolation);
}

TEST(ProductTest, CodecIsBijection) {
  const ProductVertexCodec codec(4, 7);
  std::set<Vertex> seen;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 7; ++b) {
      const Vertex v = codec.encode(a, b);
      ASSERT_GE(v, 0);
      ASSERT_LT(v, codec.order());
      ASSERT_EQ(codec.decode(v), std::make_pair(a, b));
      seen.insert(v);
    }
  }
  EXPECT_EQ(static_cast<int>(seen.size()), codec.order());
}

TEST(ProductTest, K2TimesK2IsFourCycle) {
  const auto product = cartesian_product(complete_graph(2), complete_graph(2));
  const Graph& g = product.graph;
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(is_connected(g));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(ProductTest, GridEdgeCount) {
  const auto product = cartesian_product(path_graph(2), path_graph(3));
  EXPECT_EQ(product.graph.order(), 6);
  EXPECT_EQ(product.graph.size(), 7u);
  for (int r = 1; r <= 5; ++r) {
    for (int t = 1; t <= 5; ++t) {
      const auto grid = cartesian_product(path_graph(r), path_graph(t));
      EXPECT_EQ(grid.graph.size(), static_cast<std::size_t>(r * (t - 1) + t * (r - 1)));
    }
  }
}

TEST(ProductTest, AdjacencyMatchesDefinition) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g1 = testing::random_connected_graph(rng, 1, 6);
    const Graph g2 = testing::random_connected_graph(rng, 1, 6);
    const auto product = cartesian_product(g1, g2);
    const auto oracle = testing::naive_product_adjacency(g1, g2);
    for (Vertex u = 0; u < product.graph.order(); ++u) {
      for (Vertex v = 0; v < product.graph.order(); ++v) {
        ASSERT_EQ(product.graph.adjacent(u, v), oracle[u][v]);
      }
    }
  }
}

TEST(ProductTest, CommutativeUpToCoordinateSwap) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g1 = testing::random_connected_graph(rng, 1, 7);
    const Graph g2 = testing::random_connected_graph(rng, 1, 7);
    const auto forward = cartesian_product(g1, g2);
    const auto backward = cartesian_product(g2, g1);
    std::vector<Edge> swapped;
    for (const auto& e : backward.graph.edges()) {
      const auto [b1, a1] = backward.codec.decode(e.u);
      const auto [b2, a2] = backward.codec.decode(e.v);
      swapped.push_back({forward.codec.encode(a1, b1), forward.codec.encode(a2, b2)});
    }
    EXPECT_EQ(Graph::from_edge_list(forward.graph.order(), swapped), forward.graph);
  }
}

TEST(ProductTest, SetDistanceExamples) {
  const auto d3 = all_pairs_distances(path_graph(3));
  const std::vector<Vertex> corner = {2};
  EXPECT_EQ(product_set_distance(d3, d3, 0, 0, corner, corner), 4);
  const std::vector<Vertex> s1 = {0, 1};
  const std::vector<Vertex> s2 = {2};
  EXPECT_EQ(product_set_distance(d3, d3, 1, 2, s1, s2), 0);
  EXPECT_THROW(product_set_distance(d3, d3, 0, 0, std::vector<Vertex>{}, corner),
               ContractViolation);
}

TEST(ProductTest, SetDistanceIsAdditive) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g1 = testing::random_connected_graph(rng, 6, 0.3);
    const Graph g2 = testing::random_connected_graph(rng, 6, 0.3);
    const auto oracle = testing::floyd_warshall(testing::naive_product_adjacency(g1, g2));
    const auto d1 = all_pairs_distances(g1);
    const auto d2 = all_pairs_distances(g2);
    std::uniform_int_distribution<int> size(1, 6);
    const auto s1 = testing::random_subset(rng, 6, size(rng));
    const auto s2 = testing::random_subset(rng, 6, size(rng));
    for (Vertex a = 0; a < 6; ++a) {
      for (Vertex b = 0; b < 6; ++b) {
        int direct = testing::kUnreachable;
        for (Vertex x : s1) {
          for (Vertex y : s2) direct = std::min(direct, oracle[a * 6 + b][x * 6 + y]);
        }
        ASSERT_EQ(product_set_distance(d1, d2, a, b, s1, s2), direct);
      }
    }
  }
}

}  // namespace
}  // namespace resolvekit
