#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "edgepart/etsch.hpp"
#include "edgepart/graph.hpp"

namespace edgepart::etsch {

inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

/// Hop distance from a source: Dijkstra with unit weights inside each view,
/// minimum across replicas.
class ShortestPaths {
 public:
  using State = std::uint32_t;

  explicit ShortestPaths(VertexId source) : source_(source) {}

  State initial_state(VertexId v) const { return v == source_ ? 0 : kInfinity; }
  bool local_computation(const PartitionView& view, std::span<State> dist);
  State aggregate(std::span<const State> replicas) const;

 private:
  VertexId source_;
};

/// Component identifier: a random key with the vertex id as tie-break, so
/// initial identifiers are distinct.
struct ComponentId {
  std::uint64_t key = 0;
  VertexId vertex = 0;

  friend bool operator==(const ComponentId&, const ComponentId&) = default;
  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

/// Spreads the smallest identifier through each view; minimum across
/// replicas.
class ConnectedComponents {
 public:
  using State = ComponentId;

  /// Draws one random key per vertex from `seed`.
  ConnectedComponents(VertexId num_vertices, std::uint64_t seed);

  State initial_state(VertexId v) const { return {keys_[v], v}; }
  bool local_computation(const PartitionView& view, std::span<State> ids);
  State aggregate(std::span<const State> replicas) const;

 private:
  std::vector<std::uint64_t> keys_;
};

struct DistanceResult {
  std::vector<std::uint32_t> dist;
  RunReport report;
};

DistanceResult sssp(const ViewSet& views, VertexId source, const RunOptions& opts = {});

struct ComponentResult {
  std::vector<ComponentId> id;
  RunReport report;
};

ComponentResult connected_components(const ViewSet& views, std::uint64_t seed, const RunOptions& opts = {});

/// Supersteps of synchronous one-hop distance relaxation from `source`
/// (vertex-centric baseline) until no distance changes; the final quiet
/// superstep is not counted, so the result equals the eccentricity.
std::uint32_t baseline_sssp_supersteps(const Graph& g, VertexId source);

}  // namespace edgepart::etsch
