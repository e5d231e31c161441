#include "edgepart/graph_stats.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace edgepart {

std::uint32_t eccentricity(const Graph& g, VertexId v) {
  std::uint32_t ecc = 0;
  for (auto d : bfs_distances(g, v)) {
    if (d == kUnreachable) throw DataError("eccentricity of a disconnected graph");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

std::uint32_t exact_diameter(const Graph& g, unsigned jobs) {
  const VertexId n = g.num_vertices();
  jobs = std::max(1u, std::min<unsigned>(jobs, n));
  std::vector<std::uint32_t> per_worker(jobs, 0);
  std::atomic<VertexId> next{0};
  auto work = [&](unsigned w) {
    for (VertexId v = next++; v < n; v = next++) per_worker[w] = std::max(per_worker[w], eccentricity(g, v));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  return *std::max_element(per_worker.begin(), per_worker.end());
}

std::uint32_t double_sweep_diameter(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  const auto first = bfs_distances(g, 0);
  VertexId far = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (first[v] == kUnreachable) throw DataError("diameter of a disconnected graph");
    if (first[v] > first[far]) far = v;
  }
  return eccentricity(g, far);
}

std::vector<std::uint64_t> triangles_per_vertex(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : g.incident_edges(v)) nbrs[v].push_back(g.other_endpoint(e, v));
    std::sort(nbrs[v].begin(), nbrs[v].end());
  }
  std::vector<std::uint64_t> tri(n, 0);
  // Each triangle u < v < w is found once, from its edge (u, v).
  for (const Edge& e : g.edges()) {
    const auto& a = nbrs[e.u];
    const auto& b = nbrs[e.v];
    auto ia = std::upper_bound(a.begin(), a.end(), e.v);
    auto ib = std::upper_bound(b.begin(), b.end(), e.v);
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++tri[e.u];
        ++tri[e.v];
        ++tri[*ia];
        ++ia;
        ++ib;
      }
    }
  }
  return tri;
}

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for (auto t : triangles_per_vertex(g)) total += t;
  return total / 3;
}

GraphStats compute_stats(const Graph& g, const StatsOptions& opts) {
  if (!is_connected(g)) throw DataError("stats require a connected graph");
  GraphStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();

  const bool exact = opts.force_exact_diameter || s.n <= opts.exact_diameter_threshold;
  s.diameter = exact ? exact_diameter(g, opts.jobs) : double_sweep_diameter(g);
  s.diameter_exact = exact;

  const auto tri = triangles_per_vertex(g);
  std::uint64_t corner_sum = 0;
  std::uint64_t triples = 0;
  double local_sum = 0.0;
  for (VertexId v = 0; v < s.n; ++v) {
    const std::uint64_t d = g.degree(v);
    corner_sum += tri[v];
    if (d < 2) continue;
    const std::uint64_t pairs = d * (d - 1) / 2;
    triples += pairs;
    local_sum += static_cast<double>(tri[v]) / static_cast<double>(pairs);
  }
  s.triangles = corner_sum / 3;
  s.cc_avg = s.n == 0 ? 0.0 : local_sum / s.n;
  s.cc_global = triples == 0 ? 0.0 : static_cast<double>(corner_sum) / static_cast<double>(triples);
  return s;
}

}  // namespace edgepart
