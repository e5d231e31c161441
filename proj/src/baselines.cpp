#include "edgepart/baselines.hpp"

#include <algorithm>

#include "edgepart/random.hpp"

namespace edgepart::baselines {

EdgePartitioning random_partition(const Graph& g, PartitionId k, std::uint64_t seed) {
  if (k < 1) throw DataError("K must be >= 1");
  Rng rng(seed);
  std::vector<PartitionId> assignment(g.num_edges());
  for (auto& p : assignment) p = static_cast<PartitionId>(uniform_below(rng, k));
  return EdgePartitioning(k, std::move(assignment));
}

std::uint64_t edge_hash(VertexId u, VertexId v) {
  constexpr std::uint64_t kOffset = 14695981039346656037ULL;
  constexpr std::uint64_t kPrime = 1099511628211ULL;
  std::uint64_t h = kOffset;
  for (std::uint64_t word : {static_cast<std::uint64_t>(std::min(u, v)), static_cast<std::uint64_t>(std::max(u, v))}) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= kPrime;
    }
  }
  return h;
}

EdgePartitioning hash_partition(const Graph& g, PartitionId k) {
  if (k < 1) throw DataError("K must be >= 1");
  std::vector<PartitionId> assignment(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.endpoints(e);
    assignment[e] = static_cast<PartitionId>(edge_hash(ed.u, ed.v) % k);
  }
  return EdgePartitioning(k, std::move(assignment));
}

NaiveGrowthResult naive_growth_from(const Graph& g, const std::vector<EdgeId>& seed_edges) {
  const auto k = static_cast<PartitionId>(seed_edges.size());
  if (k < 1) throw DataError("K must be >= 1");
  std::vector<PartitionId> owner(g.num_edges(), kUnowned);
  std::vector<std::vector<char>> touched(k, std::vector<char>(g.num_vertices(), 0));
  // Vertices that joined V_i in the previous round; only they can border
  // free edges.
  std::vector<std::vector<VertexId>> fresh(k);
  EdgeId free_edges = g.num_edges();

  auto claim = [&](PartitionId i, EdgeId e, std::vector<VertexId>& joined) {
    owner[e] = i;
    --free_edges;
    for (VertexId x : {g.endpoints(e).u, g.endpoints(e).v}) {
      if (!touched[i][x]) {
        touched[i][x] = 1;
        joined.push_back(x);
      }
    }
  };

  for (PartitionId i = 0; i < k; ++i) {
    const EdgeId e = seed_edges[i];
    if (e >= g.num_edges() || owner[e] != kUnowned) throw DataError("seed edges must be distinct and valid");
    claim(i, e, fresh[i]);
  }

  std::uint32_t rounds = 0;
  while (free_edges > 0) {
    std::vector<std::vector<VertexId>> next(k);
    bool progress = false;
    for (PartitionId i = 0; i < k; ++i) {
      for (VertexId v : fresh[i]) {
        for (EdgeId e : g.incident_edges(v)) {
          if (owner[e] != kUnowned) continue;
          claim(i, e, next[i]);
          progress = true;
        }
      }
    }
    if (!progress) {
      throw DataError(std::to_string(free_edges) + " edges unreachable from the seed edges");
    }
    fresh = std::move(next);
    ++rounds;
  }
  return {EdgePartitioning(k, std::move(owner)), rounds};
}

NaiveGrowthResult naive_growth(const Graph& g, PartitionId k, std::uint64_t seed) {
  if (k < 1) throw DataError("K must be >= 1");
  if (k > g.num_edges()) {
    throw DataError("K = " + std::to_string(k) + " exceeds the edge count " + std::to_string(g.num_edges()));
  }
  Rng rng(seed);
  const auto picks = sample_without_replacement(rng, g.num_edges(), k);
  return naive_growth_from(g, std::vector<EdgeId>(picks.begin(), picks.end()));
}

}  // namespace edgepart::baselines
