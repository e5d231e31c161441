#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgepart/dfep.hpp"
#include "edgepart/graph.hpp"
#include "edgepart/metrics.hpp"
#include "edgepart/partitioning.hpp"

namespace edgepart {

enum class Algorithm { kDfep, kDfepc, kRandom, kHash, kNaive };

const char* to_string(Algorithm a);
/// Throws DataError on an unknown name.
Algorithm parse_algorithm(const std::string& name);

struct PartitionerOptions {
  Algorithm algorithm = Algorithm::kDfep;
  PartitionId k = 2;
  std::uint64_t seed = 0;
  double poverty_divisor = 2.0;
  std::uint32_t round_cap = 1000;
};

struct PartitionOutcome {
  EdgePartitioning partitioning;
  /// Partitioner rounds (0 for random and hash).
  std::uint32_t rounds = 0;
};

/// Dispatches to the selected partitioner.
PartitionOutcome partition_graph(const Graph& g, const PartitionerOptions& opts);

struct SweepConfig {
  std::string dataset = "graph";
  Algorithm algorithm = Algorithm::kDfep;
  std::vector<PartitionId> ks;
  unsigned samples = 100;
  /// Sample i runs with seed seed_base + i.
  std::uint64_t seed_base = 0;
  unsigned gain_sources = 10;
  double poverty_divisor = 2.0;
  std::uint32_t round_cap = 1000;
  unsigned jobs = 1;
};

struct SweepRow {
  std::string dataset;
  Algorithm algorithm = Algorithm::kDfep;
  PartitionId k = 0;
  std::uint64_t seed = 0;
  metrics::Report report;
};

/// One row per (K, sample), in that order regardless of `jobs`.
std::vector<SweepRow> sweep_k(const Graph& g, const SweepConfig& cfg);

struct FamilyMember {
  std::uint64_t swap_budget = 0;
  std::uint64_t applied_swaps = 0;
  std::uint32_t diameter = 0;
  std::vector<SweepRow> rows;
};

/// Rewires g once per budget (same rewiring seed), measures the exact
/// diameter and runs the K sweep on every member.
std::vector<FamilyMember> sweep_diameter(const Graph& g, const std::vector<std::uint64_t>& budgets,
                                         double triangle_tolerance, std::uint64_t rewire_seed, const SweepConfig& cfg);

std::vector<std::string> sweep_columns();
std::vector<std::string> sweep_row_fields(const SweepRow& row);

}  // namespace edgepart
