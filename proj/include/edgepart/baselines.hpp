#pragma once

#include <cstdint>

#include "edgepart/graph.hpp"
#include "edgepart/partitioning.hpp"

namespace edgepart::baselines {

/// Every edge independently and uniformly assigned.
EdgePartitioning random_partition(const Graph& g, PartitionId k, std::uint64_t seed);

/// 64-bit FNV-1a over the 16 bytes of (min(u,v), max(u,v)), each written as
/// a little-endian uint64.
std::uint64_t edge_hash(VertexId u, VertexId v);

/// partition = edge_hash(u, v) mod K.
EdgePartitioning hash_partition(const Graph& g, PartitionId k);

struct NaiveGrowthResult {
  EdgePartitioning partitioning;
  std::uint32_t rounds = 0;
};

/// Grows K regions from the given distinct seed edges: every round each
/// partition claims all free edges that share a vertex with its edge set,
/// simultaneous claims going to the lowest partition id. Throws DataError if
/// a free edge is unreachable or seeds are invalid.
NaiveGrowthResult naive_growth_from(const Graph& g, const std::vector<EdgeId>& seed_edges);

/// naive_growth_from with K distinct uniformly sampled seed edges.
/// Throws DataError if K > m.
NaiveGrowthResult naive_growth(const Graph& g, PartitionId k, std::uint64_t seed);

}  // namespace edgepart::baselines
