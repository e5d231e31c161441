#include "edgepart/algorithms.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "edgepart/random.hpp"

namespace edgepart::etsch {
namespace {

// Min-priority propagation inside one view: pop the smallest state and
// offer `next(state)` to every neighbour that currently holds more.
template <class State, class Next>
bool propagate_minimum(const PartitionView& view, std::span<State> state, const State& unset, Next next) {
  using Item = std::pair<State, LocalId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (LocalId v = 0; v < view.num_vertices(); ++v) {
    if (!(state[v] == unset)) queue.emplace(state[v], v);
  }
  bool changed = false;
  while (!queue.empty()) {
    auto [value, u] = queue.top();
    queue.pop();
    if (!(value == state[u])) continue;
    const State offer = next(value);
    for (LocalId w : view.neighbours(u)) {
      if (offer < state[w]) {
        state[w] = offer;
        queue.emplace(offer, w);
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

bool ShortestPaths::local_computation(const PartitionView& view, std::span<State> dist) {
  return propagate_minimum(view, dist, kInfinity, [](State d) { return d + 1; });
}

ShortestPaths::State ShortestPaths::aggregate(std::span<const State> replicas) const {
  return *std::min_element(replicas.begin(), replicas.end());
}

ConnectedComponents::ConnectedComponents(VertexId num_vertices, std::uint64_t seed) : keys_(num_vertices) {
  Rng rng(seed);
  for (auto& k : keys_) k = rng();
}

bool ConnectedComponents::local_computation(const PartitionView& view, std::span<State> ids) {
  // No identifier is "unset"; an impossible sentinel keeps every vertex queued.
  const State never{~0ULL, kUnowned};
  return propagate_minimum(view, ids, never, [](const State& id) { return id; });
}

ConnectedComponents::State ConnectedComponents::aggregate(std::span<const State> replicas) const {
  return *std::min_element(replicas.begin(), replicas.end());
}

DistanceResult sssp(const ViewSet& views, VertexId source, const RunOptions& opts) {
  if (source >= views.num_vertices()) throw DataError("source vertex out of range");
  ShortestPaths program(source);
  auto result = run(views, program, opts);
  return {std::move(result.states), std::move(result.report)};
}

ComponentResult connected_components(const ViewSet& views, std::uint64_t seed, const RunOptions& opts) {
  ConnectedComponents program(views.num_vertices(), seed);
  auto result = run(views, program, opts);
  return {std::move(result.states), std::move(result.report)};
}

std::uint32_t baseline_sssp_supersteps(const Graph& g, VertexId source) {
  if (source >= g.num_vertices()) throw DataError("source vertex out of range");
  std::vector<std::uint32_t> dist(g.num_vertices(), kInfinity);
  dist[source] = 0;
  std::vector<VertexId> active{source};
  std::vector<VertexId> next;
  std::uint32_t supersteps = 0;
  while (true) {
    // Every vertex updated last superstep messages dist + 1 to its neighbours.
    next.clear();
    for (VertexId u : active) {
      for (EdgeId e : g.incident_edges(u)) {
        const VertexId w = g.other_endpoint(e, u);
        if (dist[u] + 1 < dist[w]) {
          dist[w] = dist[u] + 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    ++supersteps;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    active.swap(next);
  }
  return supersteps;
}

}  // namespace edgepart::etsch
