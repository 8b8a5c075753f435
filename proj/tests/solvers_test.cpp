#include "resolvekit/solvers.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "resolvekit/errors.hpp"
#include "resolvekit/families.hpp"
#include "testing/naive_oracles.hpp"
#include "testing/random_graphs.hpp"

namespace resolvekit {
namespace {

// First resolving k-subset in lexicographic order, by plain recursion.
std::optional<std::vector<Vertex>> naive_first_set(const testing::Matrix& d, int k) {
  const int n = static_cast<int>(d.size());
  std::vector<Vertex> chosen;
  std::optional<std::vector<Vertex>> found;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    if (found) return;
    if (static_cast<int>(chosen.size()) == k) {
      if (testing::naive_resolves_set(d, chosen)) found = chosen;
      return;
    }
    for (Vertex x = start; x < n && !found; ++x) {
      chosen.push_back(x);
      rec(x + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return found;
}

// First resolving restricted-growth string with exactly t blocks.
std::optional<std::vector<int>> naive_first_rgs(const testing::Matrix& d, int t) {
  const int n = static_cast<int>(d.size());
  std::vector<int> labels;
  std::optional<std::vector<int>> found;
  std::function<void(int)> rec = [&](int max_label) {
    if (found) return;
    if (static_cast<int>(labels.size()) == n) {
      if (max_label + 1 == t && testing::naive_resolves_labels(d, labels, t)) found = labels;
      return;
    }
    for (int c = 0; c <= std::min(max_label + 1, t - 1) && !found; ++c) {
      labels.push_back(c);
      rec(std::max(max_label, c));
      labels.pop_back();
    }
  };
  rec(-1);
  return found;
}

TEST(MetricDimensionTest, KnownFamilies) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(metric_dimension(complete_graph(n)).value, n - 1) << n;
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(metric_dimension(path_graph(n)).value, 1) << n;
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(metric_dimension(cycle_graph(n)).value, 2) << n;
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(metric_dimension(star_graph(n)).value, n - 1) << n;
}

TEST(MetricDimensionTest, PathWitnessIsEndpoint) {
  const auto r = metric_dimension(path_graph(6));
  EXPECT_EQ(r.witness, VertexSequence({0}));
  EXPECT_EQ(r.examined, 1u);
}

TEST(MetricDimensionTest, TrivialGraph) {
  const auto r = metric_dimension(complete_graph(1));
  EXPECT_TRUE(r.found());
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.witness.empty());
}

TEST(MetricDimensionTest, UnicyclicExampleNeedsNine) {
  const auto example = paper_unicyclic_example();
  const auto r = metric_dimension(example.graph);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.value, 9);
  // Three twin clusters of four leaves: each needs three landmarks.
  EXPECT_EQ(r.lower_bound, 9);
  EXPECT_EQ(static_cast<int>(example.set.size()), r.value);
  EXPECT_TRUE(is_resolving_set(all_pairs_distances(example.graph), r.witness).resolving());
}

TEST(MetricDimensionTest, LimitExceededIsAnOutcome) {
  const auto r = metric_dimension(complete_graph(5), {.limit = 2});
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.status, SearchStatus::kLimitExceeded);
  EXPECT_TRUE(r.witness.empty());
  const auto c = metric_dimension(cycle_graph(7), {.limit = 1});
  EXPECT_FALSE(c.found());
  EXPECT_GT(c.examined, 0u);
}

TEST(MetricDimensionTest, SizeCapAndConnectivity) {
  EXPECT_THROW(metric_dimension(path_graph(21)), SizeLimitExceeded);
  EXPECT_EQ(metric_dimension(path_graph(21), {.max_order = 25}).value, 1);
  const std::vector<Edge> edges = {{0, 1}};
  EXPECT_THROW(metric_dimension(Graph::from_edge_list(3, edges)), ContractViolation);
}

TEST(PartitionDimensionTest, PathsNeedTwoClasses) {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = path_graph(n);
    ASSERT_EQ(testing::naive_partition_dimension(g), 2) << n;
    const auto r = partition_dimension(g);
    EXPECT_EQ(r.value, 2) << n;
  }
}

TEST(PartitionDimensionTest, CompleteGraphsNeedSingletons) {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = complete_graph(n);
    ASSERT_EQ(testing::naive_partition_dimension(g), n) << n;
    EXPECT_EQ(partition_dimension(g).value, n) << n;
  }
}

TEST(PartitionDimensionTest, SmallGrid) {
  const auto r = partition_dimension(grid_graph(3, 3));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.value, 3);
  EXPECT_TRUE(is_resolving_partition(all_pairs_distances(grid_graph(3, 3)), r.witness).resolving());
}

TEST(PartitionDimensionTest, TrivialGraph) {
  const auto r = partition_dimension(complete_graph(1));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.witness.class_count(), 1);
}

TEST(PartitionDimensionTest, LimitAndCap) {
  EXPECT_FALSE(partition_dimension(complete_graph(5), {.limit = 4}).found());
  EXPECT_THROW(partition_dimension(path_graph(17)), SizeLimitExceeded);
  EXPECT_EQ(partition_dimension(path_graph(17), {.max_order = 17}).value, 2);
}

TEST(PartitionDimensionTest, UnicyclicExampleIsFour) {
  const auto example = paper_unicyclic_example();
  const auto r = partition_dimension(example.graph);
  ASSERT_TRUE(r.found());
  // Twin leaves force four classes; a four-class witness closes the gap.
  EXPECT_EQ(r.lower_bound, 4);
  EXPECT_EQ(r.value, 4);
  EXPECT_TRUE(
      is_resolving_partition(all_pairs_distances(example.graph), r.witness).resolving());
}

TEST(MinimalityTest, Examples) {
  DimResult k3;
  k3.status = SearchStatus::kFound;
  k3.value = 2;
  k3.witness = VertexSequence({0, 1});
  EXPECT_TRUE(verify_minimality(complete_graph(3), k3));

  DimResult p4;
  p4.status = SearchStatus::kFound;
  p4.value = 2;
  p4.witness = VertexSequence({0, 1});
  EXPECT_FALSE(verify_minimality(path_graph(4), p4));

  DimResult bad_witness = k3;
  bad_witness.witness = VertexSequence({0, 1, 2});
  EXPECT_FALSE(verify_minimality(complete_graph(3), bad_witness));
}

TEST(MinimalityTest, PublishedPartitionIsNotMinimum) {
  const auto example = paper_unicyclic_example();
  PdResult claimed;
  claimed.status = SearchStatus::kFound;
  claimed.value = 6;
  claimed.witness = example.partition;
  EXPECT_FALSE(verify_minimality(example.graph, claimed));

  const auto exact = partition_dimension(example.graph);
  EXPECT_TRUE(verify_minimality(example.graph, exact));
}

class SolverProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{8675309};
};

TEST_F(SolverProperties, AgreeWithNaiveEnumerators) {
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 1, 7);
    const auto dim = metric_dimension(g);
    const auto pd = partition_dimension(g);
    ASSERT_EQ(dim.value, testing::naive_metric_dimension(g)) << trial;
    ASSERT_EQ(pd.value, testing::naive_partition_dimension(g)) << trial;
  }
}

TEST_F(SolverProperties, WitnessesAreCanonicalFirst) {
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 2, 7);
    const auto fw = testing::floyd_warshall(g);
    const auto dim = metric_dimension(g);
    const auto expected_set = naive_first_set(fw, dim.value);
    ASSERT_TRUE(expected_set);
    EXPECT_EQ(dim.witness, VertexSequence(*expected_set));

    const auto pd = partition_dimension(g);
    const auto expected_rgs = naive_first_rgs(fw, pd.value);
    ASSERT_TRUE(expected_rgs);
    EXPECT_EQ(pd.witness, OrderedPartition::from_labels(*expected_rgs));
  }
}

TEST_F(SolverProperties, LayerMonotonicity) {
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 2, 9);
    const auto dm = all_pairs_distances(g);
    const auto dim = metric_dimension(g);
    ASSERT_TRUE(find_resolving_set(dm, dim.value, 1));
    ASSERT_FALSE(find_resolving_set(dm, dim.value - 1, 1));
    for (int k = dim.value; k <= g.order(); ++k) EXPECT_TRUE(find_resolving_set(dm, k, 1));

    const auto pd = partition_dimension(g);
    ASSERT_TRUE(find_resolving_partition(dm, pd.value, 1));
    if (pd.value > 1) ASSERT_FALSE(find_resolving_partition(dm, pd.value - 1, 1));
    for (int t = pd.value; t <= g.order(); ++t) EXPECT_TRUE(find_resolving_partition(dm, t, 1));
  }
}

TEST_F(SolverProperties, BasicInequalities) {
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 1, 12);
    const auto dim = metric_dimension(g);
    const auto pd = partition_dimension(g);
    ASSERT_TRUE(dim.found() && pd.found());
    EXPECT_LE(pd.value, dim.value + 1);
    EXPECT_LE(pd.value, g.order());
    if (g.order() >= 2) EXPECT_GE(pd.value, 2);
    EXPECT_GE(pd.value, pd.lower_bound);
    EXPECT_GE(dim.value, dim.lower_bound);
    EXPECT_TRUE(verify_minimality(g, dim));
    EXPECT_TRUE(verify_minimality(g, pd));
  }
}

TEST_F(SolverProperties, ThreadCountDoesNotChangeAnything) {
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 6, 13);
    const auto dim1 = metric_dimension(g, {.threads = 1});
    const auto pd1 = partition_dimension(g, {.threads = 1});
    for (unsigned threads : {2u, 3u, 8u}) {
      const auto dim = metric_dimension(g, {.threads = threads});
      const auto pd = partition_dimension(g, {.threads = threads});
      EXPECT_EQ(dim.value, dim1.value);
      EXPECT_EQ(dim.witness, dim1.witness);
      EXPECT_EQ(dim.examined, dim1.examined);
      EXPECT_EQ(pd.value, pd1.value);
      EXPECT_EQ(pd.witness, pd1.witness);
      EXPECT_EQ(pd.examined, pd1.examined);
    }
  }
}

}  // namespace
}  // namespace resolvekit
