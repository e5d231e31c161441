#pragma once

#include <cstdint>

#include "edgepart/graph.hpp"

namespace edgepart {

struct GraphStats {
  VertexId n = 0;
  EdgeId m = 0;
  std::uint32_t diameter = 0;
  /// False when `diameter` is only the double-sweep lower bound.
  bool diameter_exact = false;
  /// Mean of the local clustering coefficients (degree < 2 counts as 0).
  double cc_avg = 0.0;
  /// Global transitivity: 3 * triangles / connected triples.
  double cc_global = 0.0;
  std::uint64_t triangles = 0;
};

struct StatsOptions {
  bool force_exact_diameter = false;
  /// Above this vertex count only the double-sweep bound is computed unless
  /// exact is forced.
  VertexId exact_diameter_threshold = 50'000;
  unsigned jobs = 1;
};

/// Throws DataError for a disconnected graph.
GraphStats compute_stats(const Graph& g, const StatsOptions& opts = {});

/// max over vertices of the BFS eccentricity.
std::uint32_t exact_diameter(const Graph& g, unsigned jobs = 1);

/// BFS from vertex 0, then from the farthest vertex found; the second
/// eccentricity is a lower bound on the diameter.
std::uint32_t double_sweep_diameter(const Graph& g);

std::uint32_t eccentricity(const Graph& g, VertexId v);

/// Per-vertex triangle counts (each triangle counted at all three corners).
std::vector<std::uint64_t> triangles_per_vertex(const Graph& g);
std::uint64_t count_triangles(const Graph& g);

}  // namespace edgepart
