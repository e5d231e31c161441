#pragma once

#include <cstdint>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partitioning.hpp"

namespace edgepart::metrics {

struct Balance {
  double max_normalized_size = 0.0;
  double nstdev = 0.0;
};

/// |E_i| / (m / K) for every partition.
std::vector<double> normalized_sizes(std::span<const std::uint64_t> sizes);

/// Largest normalized size and sqrt(sum_i (|E_i| / (m/K) - 1)^2 / K).
Balance balance(std::span<const std::uint64_t> sizes);
Balance balance(const EdgePartitioning& part);

/// sum_i |F_i|.
std::uint64_t communication_cost(const EdgePartitioning& part, const Graph& g);

/// Fraction of the K partitions whose edge set does not induce a connected
/// subgraph. Empty partitions count as disconnected.
double disconnected_fraction(const EdgePartitioning& part, const Graph& g);

struct Gain {
  /// Macro-rounds of the edge-partitioned SSSP that changed state.
  std::uint32_t etsch_rounds = 0;
  /// Supersteps of the one-hop vertex-centric SSSP (= eccentricity).
  std::uint32_t baseline_rounds = 0;
  /// 1 - etsch_rounds / baseline_rounds.
  double gain = 0.0;
};

Gain gain(const EdgePartitioning& part, const Graph& g, VertexId source);

struct MeanGain {
  double etsch_rounds = 0.0;
  double baseline_rounds = 0.0;
  double gain = 0.0;
};

/// Averages gain over `num_sources` sources drawn uniformly with
/// replacement from `seed`.
MeanGain mean_gain(const EdgePartitioning& part, const Graph& g, unsigned num_sources, std::uint64_t seed);

struct Report {
  PartitionId k = 0;
  std::vector<double> normalized_sizes;
  double max_normalized_size = 0.0;
  double nstdev = 0.0;
  std::uint64_t messages = 0;
  double disconnected_fraction = 0.0;
  std::uint32_t rounds = 0;
  double gain = 0.0;
  double etsch_rounds = 0.0;
  double baseline_rounds = 0.0;
};

/// Full report; gain is averaged over `gain_sources` sources (0 skips it).
Report evaluate(const EdgePartitioning& part, const Graph& g, std::uint32_t partitioner_rounds,
                unsigned gain_sources, std::uint64_t seed);

}  // namespace edgepart::metrics
