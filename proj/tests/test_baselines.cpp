#include <gtest/gtest.h>

#include <cmath>

#include "edgepart/baselines.hpp"
#include "edgepart/generators.hpp"
#include "edgepart/metrics.hpp"
#include "oracles.hpp"

using namespace edgepart;
using namespace edgepart::baselines;

TEST(RandomPartition, SinglePartition) {
  auto p = random_partition(gen::grid(5, 5), 1, 3);
  for (auto x : p.assignment()) EXPECT_EQ(x, 0u);
}

TEST(RandomPartition, SizesFollowBinomial) {
  // 100 x 51 grid: 100*50 + 99*51 = 10049 edges.
  auto g = gen::grid(100, 51);
  auto p = random_partition(g, 4, 11);
  const double mean = g.num_edges() / 4.0;
  const double sigma = std::sqrt(g.num_edges() * 0.25 * 0.75);
  for (auto s : p.sizes()) EXPECT_LE(std::abs(static_cast<double>(s) - mean), 3 * sigma);
}

TEST(RandomPartition, Deterministic) {
  auto g = gen::random_connected(500, 900, 1);
  EXPECT_EQ(random_partition(g, 7, 5), random_partition(g, 7, 5));
  EXPECT_NE(random_partition(g, 7, 5), random_partition(g, 7, 6));
}

TEST(HashPartition, KnownValues) {
  // Reference values from an independent FNV-1a implementation.
  EXPECT_EQ(edge_hash(0, 1), 0x692558b056101a44ull);
  EXPECT_EQ(edge_hash(1, 0), 0x692558b056101a44ull);
  EXPECT_EQ(edge_hash(5, 3), 0x7a2de06653469e43ull);
  EXPECT_EQ(edge_hash(123456, 7), 0xdad852c991d3eb05ull);
}

TEST(HashPartition, PureFunctionOfEdge) {
  auto g = gen::random_connected(300, 300, 2);
  auto p = hash_partition(g, 7);
  EXPECT_EQ(p, hash_partition(g, 7));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(p.partition_of(e), edge_hash(g.endpoints(e).u, g.endpoints(e).v) % 7);
  }
  const auto single = hash_partition(g, 1);
  for (auto x : single.assignment()) EXPECT_EQ(x, 0u);
}

TEST(HashPartition, FewCollisionsAtKEqualM) {
  auto g = gen::grid(30, 30);
  const PartitionId k = g.num_edges();
  auto sizes = hash_partition(g, k).sizes();
  // Balls into bins: with m = K the fullest bin stays small.
  EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()), 8u);
}

TEST(NaiveGrowth, SinglePartition) {
  auto g = gen::grid(7, 7);
  auto r = naive_growth(g, 1, 4);
  EXPECT_EQ(r.partitioning.sizes(), (std::vector<std::uint64_t>{g.num_edges()}));
  EXPECT_LE(r.rounds, 13u);
}

TEST(NaiveGrowth, PathFromBothEnds) {
  auto r = naive_growth_from(gen::path(9), {0, 7});
  EXPECT_EQ(r.partitioning.sizes(), (std::vector<std::uint64_t>{4, 4}));
}

TEST(NaiveGrowth, ConflictsGoToLowestId) {
  // Partition 1 starts on (0,1), partition 0 on (2,3); both claim (1,2).
  auto g = gen::path(5);
  auto r = naive_growth_from(g, {2, 0});
  EXPECT_EQ(r.partitioning.partition_of(1), 0u);
}

TEST(NaiveGrowth, CornerSeedsAreUnbalanced) {
  auto g = gen::grid(30, 30);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = naive_growth(g, 4, seed);
    total += metrics::balance(r.partitioning).nstdev;
    for (PartitionId i = 0; i < 4; ++i) {
      std::vector<std::uint32_t> edges;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (r.partitioning.partition_of(e) == i) edges.push_back(e);
      }
      EXPECT_TRUE(oracle::edges_connected(g, edges));
    }
  }
  EXPECT_GT(total / 100, 0.3);

  // Two seeds side by side in a corner: the partition whose seed sits
  // further in swallows nearly everything.
  auto corner = naive_growth_from(g, {*g.find_edge(0, 1), *g.find_edge(1, 2)});
  EXPECT_GT(metrics::balance(corner.partitioning).nstdev, 0.3);
}

TEST(NaiveGrowth, TooManyPartitions) {
  EXPECT_THROW(naive_growth(gen::path(4), 4, 0), DataError);
  EXPECT_NO_THROW(naive_growth(gen::path(4), 3, 0));
}
