#include <gtest/gtest.h>

#include "edgepart/generators.hpp"
#include "edgepart/graph_stats.hpp"
#include "oracles.hpp"

using namespace edgepart;

TEST(Stats, PathOfFour) {
  auto s = compute_stats(gen::path(4));
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(s.m, 3u);
  EXPECT_EQ(s.diameter, 3u);
  EXPECT_TRUE(s.diameter_exact);
  EXPECT_EQ(s.cc_avg, 0.0);
  EXPECT_EQ(s.cc_global, 0.0);
}

TEST(Stats, Triangle) {
  auto s = compute_stats(gen::complete(3));
  EXPECT_EQ(s.diameter, 1u);
  EXPECT_DOUBLE_EQ(s.cc_avg, 1.0);
  EXPECT_DOUBLE_EQ(s.cc_global, 1.0);
  EXPECT_EQ(s.triangles, 1u);
}

TEST(Stats, Star) {
  auto s = compute_stats(gen::star(4));
  EXPECT_EQ(s.diameter, 2u);
  EXPECT_EQ(s.cc_avg, 0.0);
}

TEST(Stats, TriangleWithTail) {
  // 0-1-2 triangle plus 2-3: local CCs 1, 1, 1/3, 0.
  auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto s = compute_stats(g);
  EXPECT_NEAR(s.cc_avg, (1.0 + 1.0 + 1.0 / 3.0) / 4.0, 1e-12);
  // Triples: 1 + 1 + 3 = 5 centred paths, 3 closed.
  EXPECT_NEAR(s.cc_global, 3.0 / 5.0, 1e-12);
}

TEST(Stats, DisconnectedIsAnError) {
  EXPECT_THROW(compute_stats(disjoint_union(gen::path(3), gen::path(3))), DataError);
}

TEST(Stats, ExactDiameterMatchesAllPairs) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = gen::random_connected(60 + 10 * seed, seed * 5, seed);
    EXPECT_EQ(exact_diameter(g), oracle::diameter(g)) << "seed " << seed;
    EXPECT_EQ(exact_diameter(g, 3), oracle::diameter(g));
    EXPECT_LE(double_sweep_diameter(g), exact_diameter(g));
  }
}

TEST(Stats, ThresholdSelectsDoubleSweep) {
  auto g = gen::grid(20, 20);
  StatsOptions opts;
  opts.exact_diameter_threshold = 100;
  auto s = compute_stats(g, opts);
  EXPECT_FALSE(s.diameter_exact);
  EXPECT_LE(s.diameter, 38u);
  opts.force_exact_diameter = true;
  s = compute_stats(g, opts);
  EXPECT_TRUE(s.diameter_exact);
  EXPECT_EQ(s.diameter, 38u);
}

TEST(Stats, TrianglesMatchBruteForce) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen::watts_strogatz(120, 6, 0.2, seed);
    EXPECT_EQ(count_triangles(g), oracle::triangles(g));
    std::uint64_t corners = 0;
    for (auto t : triangles_per_vertex(g)) corners += t;
    EXPECT_EQ(corners, 3 * oracle::triangles(g));
  }
  EXPECT_EQ(count_triangles(gen::complete(6)), 20u);
}
