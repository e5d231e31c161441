#include <gtest/gtest.h>

#include "edgepart/generators.hpp"
#include "edgepart/graph_stats.hpp"
#include "edgepart/rewire.hpp"

using namespace edgepart;

TEST(Rewire, ZeroBudgetIsIdentity) {
  auto g = gen::grid(10, 10);
  auto r = rewire(g, 0, 0.1, 1);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.applied_swaps, 0u);
}

TEST(Rewire, PathStaysAPath) {
  // A connected graph with the degree sequence of a path is a path, so
  // swaps only permute it and the diameter cannot drop.
  auto g = gen::path(1000);
  auto r = rewire(g, 200, 1.0, 5);
  EXPECT_GT(r.applied_swaps, 0u);
  EXPECT_NE(r.graph, g);
  EXPECT_EQ(exact_diameter(r.graph), 999u);
}

TEST(Rewire, ShrinksGridDiameter) {
  auto g = gen::grid(40, 40);
  auto r = rewire(g, 200, 1.0, 5);
  EXPECT_EQ(r.applied_swaps, 200u);
  EXPECT_LT(exact_diameter(r.graph), 78u / 2);
}

TEST(Rewire, PreservesDegreesAndConnectivity) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = gen::watts_strogatz(400, 6, 0.05, seed);
    auto r = rewire(g, 300, 0.2, seed + 100);
    EXPECT_EQ(r.graph.degree_sequence(), g.degree_sequence());
    EXPECT_EQ(r.graph.num_edges(), g.num_edges());
    EXPECT_TRUE(is_connected(r.graph));
    const double t0 = static_cast<double>(r.original_triangles);
    EXPECT_EQ(r.final_triangles, count_triangles(r.graph));
    EXPECT_GE(static_cast<double>(r.final_triangles), t0 * 0.8 - 1e-9);
    EXPECT_LE(static_cast<double>(r.final_triangles), t0 * 1.2 + 1e-9);
  }
}

TEST(Rewire, Deterministic) {
  auto g = gen::grid(15, 15);
  EXPECT_EQ(rewire(g, 50, 1.0, 9).graph, rewire(g, 50, 1.0, 9).graph);
}

TEST(Rewire, RejectsBadTolerance) {
  EXPECT_THROW(rewire(gen::cycle(10), 5, -0.1, 0), DataError);
  EXPECT_THROW(rewire(gen::cycle(10), 5, 1.5, 0), DataError);
}

TEST(Rewire, GivesUpAfterRetries) {
  // A star admits no valid swap, so the run ends early.
  auto r = rewire(gen::star(10), 20, 1.0, 0);
  EXPECT_EQ(r.applied_swaps, 0u);
  EXPECT_EQ(r.graph, gen::star(10));
}
