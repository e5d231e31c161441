#include "edgepart/generators.hpp"

#include <unordered_set>

#include "edgepart/random.hpp"

namespace edgepart::gen {

Graph path(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, std::move(edges));
}

Graph star(VertexId leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph complete(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph grid(VertexId rows, VertexId cols) {
  std::vector<Edge> edges;
  for (VertexId r = 0; r < rows; ++r) {
    for (VertexId c = 0; c < cols; ++c) {
      const VertexId v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph::from_edges(rows * cols, std::move(edges));
}

Graph watts_strogatz(VertexId n, unsigned mean_degree, double beta, std::uint64_t seed) {
  Rng rng(seed);
  const unsigned half = mean_degree / 2;
  std::unordered_set<std::uint64_t> present;
  auto key = [](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    for (unsigned j = 1; j <= half; ++j) {
      const VertexId w = (v + j) % n;
      if (present.insert(key(v, w)).second) edges.push_back({v, w});
    }
  }
  for (Edge& e : edges) {
    if (uniform_unit(rng) >= beta) continue;
    const auto w = static_cast<VertexId>(uniform_below(rng, n));
    if (w == e.u || present.count(key(e.u, w)) != 0) continue;
    present.erase(key(e.u, e.v));
    present.insert(key(e.u, w));
    e.v = w;
  }
  return largest_component(Graph::from_edges(n, std::move(edges)));
}

Graph random_connected(VertexId n, std::uint64_t extra_edges, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(uniform_below(rng, v)), v});
  for (std::uint64_t i = 0; i < extra_edges && n > 1; ++i) {
    edges.push_back({static_cast<VertexId>(uniform_below(rng, n)), static_cast<VertexId>(uniform_below(rng, n))});
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace edgepart::gen
