#pragma once

#include <cstdint>

#include "edgepart/graph.hpp"
#include "edgepart/random.hpp"

namespace edgepart {

struct RewireResult {
  Graph graph;
  std::uint64_t applied_swaps = 0;
  std::uint64_t original_triangles = 0;
  std::uint64_t final_triangles = 0;
};

/// Degree-preserving double-edge swaps: (a,b),(c,d) -> (a,d),(c,b).
/// A swap is rejected (and another pair drawn) if it creates a self-loop or
/// a duplicate edge, disconnects the graph, or moves the triangle count
/// outside original * (1 +- triangle_tolerance). After `max_retries`
/// consecutive rejections the procedure stops early; `applied_swaps`
/// reports how many swaps were actually made.
RewireResult rewire(const Graph& g, std::uint64_t swap_budget, double triangle_tolerance, std::uint64_t seed,
                    unsigned max_retries = 100);

}  // namespace edgepart
