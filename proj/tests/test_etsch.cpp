#include <gtest/gtest.h>

#include "edgepart/algorithms.hpp"
#include "edgepart/baselines.hpp"
#include "edgepart/dfep.hpp"
#include "edgepart/etsch.hpp"
#include "edgepart/generators.hpp"
#include "oracles.hpp"

using namespace edgepart;
using namespace edgepart::etsch;

namespace {

EdgePartitioning whole(const Graph& g) { return EdgePartitioning(1, std::vector<PartitionId>(g.num_edges(), 0)); }

struct Idle {
  using State = int;
  State initial_state(VertexId) const { return 0; }
  bool local_computation(const PartitionView&, std::span<State>) { return false; }
  State aggregate(std::span<const State> r) const { return r[0]; }
};

// Wraps ShortestPaths and records whether any replica ever got worse.
struct Watched {
  using State = std::uint32_t;
  ShortestPaths inner;
  bool regressed = false;

  State initial_state(VertexId v) const { return inner.initial_state(v); }
  bool local_computation(const PartitionView& view, std::span<State> s) {
    std::vector<State> before(s.begin(), s.end());
    const bool changed = inner.local_computation(view, s);
    for (std::size_t i = 0; i < s.size(); ++i) regressed = regressed || s[i] > before[i];
    return changed;
  }
  State aggregate(std::span<const State> r) const { return inner.aggregate(r); }
};

// Never settles: every vertex counts up forever.
struct Counter {
  using State = std::uint64_t;
  State initial_state(VertexId) const { return 0; }
  bool local_computation(const PartitionView&, std::span<State> s) {
    for (auto& x : s) ++x;
    return true;
  }
  State aggregate(std::span<const State> r) const { return *std::max_element(r.begin(), r.end()); }
};

}  // namespace

TEST(Views, SinglePartition) {
  auto g = gen::grid(4, 4);
  ViewSet vs(g, whole(g));
  ASSERT_EQ(vs.views().size(), 1u);
  EXPECT_EQ(vs.view(0).num_vertices(), 16u);
  EXPECT_EQ(vs.view(0).num_edges(), g.num_edges());
  EXPECT_TRUE(vs.frontier_vertices().empty());
  for (LocalId v = 0; v < 16; ++v) EXPECT_FALSE(vs.view(0).is_frontier(v));
}

TEST(Views, TriangleInThreeParts) {
  auto g = gen::complete(3);
  ViewSet vs(g, EdgePartitioning(3, {0, 1, 2}));
  EXPECT_EQ(vs.frontier_vertices().size(), 3u);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(vs.replicas(v).size(), 2u);
  for (const auto& view : vs.views()) {
    EXPECT_EQ(view.num_vertices(), 2u);
    EXPECT_EQ(view.neighbours(0).size(), 1u);
  }
}

TEST(Views, SplitPathSharesOneVertex) {
  auto g = gen::path(5);
  ViewSet vs(g, EdgePartitioning(2, {0, 0, 1, 1}));
  ASSERT_EQ(vs.frontier_vertices().size(), 1u);
  EXPECT_EQ(vs.frontier_vertices()[0], 2u);
  const auto& right = vs.view(1);
  EXPECT_EQ(std::vector<VertexId>(right.vertices().begin(), right.vertices().end()),
            (std::vector<VertexId>{2, 3, 4}));
  EXPECT_EQ(right.local_id(3), 1u);
  EXPECT_EQ(right.local_id(0), right.num_vertices());
  EXPECT_TRUE(right.is_frontier(0));
  EXPECT_FALSE(right.is_frontier(1));
}

TEST(Views, RejectsMismatchedPartitioning) {
  auto g = gen::path(5);
  EXPECT_THROW(ViewSet(g, EdgePartitioning(2, {0, 1})), DataError);
}

TEST(Run, IdleProgramStopsAfterOneRound) {
  auto g = gen::cycle(8);
  Idle idle;
  auto r = run(ViewSet(g, baselines::hash_partition(g, 3)), idle);
  EXPECT_EQ(r.report.rounds, 1u);
  EXPECT_EQ(r.report.active_rounds(), 0u);
  EXPECT_TRUE(r.report.converged);
}

TEST(Run, MaxRoundsRaises) {
  auto g = gen::path(4);
  Counter counter;
  RunOptions opts;
  opts.max_rounds = 5;
  try {
    run(ViewSet(g, whole(g)), counter, opts);
    FAIL() << "expected NotConvergedError";
  } catch (const NotConvergedError<std::uint64_t>& e) {
    EXPECT_EQ(e.partial().report.rounds, 5u);
    EXPECT_FALSE(e.partial().report.converged);
    EXPECT_EQ(e.partial().states[0], 5u);
  }
}

TEST(Sssp, SinglePartitionOneActiveRound) {
  auto g = gen::grid(10, 10);
  auto r = sssp(ViewSet(g, whole(g)), 0);
  EXPECT_EQ(r.report.active_rounds(), 1u);
  EXPECT_EQ(r.report.rounds, 2u);
  EXPECT_EQ(r.dist, oracle::bfs(oracle::adjacency(g), 0));
}

TEST(Sssp, SplitPathTwoActiveRounds) {
  auto g = gen::path(5);
  auto r = sssp(ViewSet(g, EdgePartitioning(2, {0, 0, 1, 1})), 0);
  EXPECT_EQ(r.dist, (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.report.active_rounds(), 2u);
}

TEST(Sssp, MatchesBfsAcrossPartitioners) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = gen::random_connected(150 + 20 * seed, 40 * seed, seed);
    const auto adj = oracle::adjacency(g);
    const VertexId source = static_cast<VertexId>(seed * 7 % g.num_vertices());
    const auto expected = oracle::bfs(adj, source);
    const PartitionId k = 1 + seed % 6;
    for (const auto& p : {baselines::random_partition(g, k, seed), baselines::hash_partition(g, k),
                          baselines::naive_growth(g, k, seed).partitioning}) {
      ViewSet vs(g, p);
      Watched w{ShortestPaths(source)};
      auto r = run(vs, w);
      EXPECT_EQ(r.states, expected);
      EXPECT_FALSE(w.regressed);
      EXPECT_LE(r.report.active_rounds(), oracle::eccentricity(adj, source) + 1);
    }
  }
}

TEST(Components, MatchUnionFind) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = disjoint_union(gen::random_connected(80, 20, seed),
                            disjoint_union(gen::path(30), gen::watts_strogatz(60, 4, 0.2, seed)));
    const auto expected = oracle::components(g);
    std::vector<ComponentId> first;
    for (PartitionId k : {1u, 3u, 9u}) {
      auto r = connected_components(ViewSet(g, baselines::random_partition(g, k, seed)), seed);
      std::vector<std::pair<std::uint64_t, VertexId>> labels;
      for (const auto& c : r.id) labels.emplace_back(c.key, c.vertex);
      EXPECT_TRUE(oracle::same_partition(labels, expected));
      // Partition-independent: the same labels whatever the split.
      if (first.empty()) first = r.id;
      EXPECT_EQ(r.id, first);
    }
  }
}

TEST(Baseline, SuperstepsEqualEccentricity) {
  EXPECT_EQ(baseline_sssp_supersteps(gen::star(10), 0), 1u);
  EXPECT_EQ(baseline_sssp_supersteps(gen::star(10), 3), 2u);
  EXPECT_EQ(baseline_sssp_supersteps(gen::path(1000), 0), 999u);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = gen::random_connected(50 + seed, seed % 20, seed);
    const VertexId s = static_cast<VertexId>(seed % g.num_vertices());
    EXPECT_EQ(baseline_sssp_supersteps(g, s), oracle::eccentricity(oracle::adjacency(g), s));
  }
}

TEST(Sssp, DfepPartitionsMatchBfs) {
  auto g = gen::watts_strogatz(1000, 6, 0.05, 4);
  dfep::Config cfg;
  cfg.num_partitions = 8;
  auto p = dfep::run(g, cfg).partitioning;
  auto r = sssp(ViewSet(g, p), 5);
  EXPECT_EQ(r.dist, oracle::bfs(oracle::adjacency(g), 5));
}
