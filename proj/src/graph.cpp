#include "edgepart/graph.hpp"

#include <algorithm>

namespace edgepart {

Graph Graph::from_edges(VertexId num_vertices, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw DataError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.edges_ = std::move(edges);
  g.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.incident_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are visited in ascending id, so each incidence list comes out sorted.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    g.incident_[cursor[g.edges_[id].u]++] = id;
    g.incident_[cursor[g.edges_[id].v]++] = id;
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a == b || a >= num_vertices() || b >= num_vertices()) return std::nullopt;
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d(num_vertices());
  for (VertexId v = 0; v < num_vertices(); ++v) d[v] = degree(v);
  return d;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (EdgeId e : g.incident_edges(u)) {
      const VertexId w = g.other_endpoint(e, u);
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> component_labels(const Graph& g, std::uint32_t* num_components) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.num_vertices(), kNone);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kNone) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident_edges(u)) {
        const VertexId w = g.other_endpoint(e, u);
        if (label[w] == kNone) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (num_components != nullptr) *num_components = next;
  return label;
}

bool is_connected(const Graph& g) {
  std::uint32_t c = 0;
  component_labels(g, &c);
  return c <= 1;
}

Graph largest_component(const Graph& g, std::vector<VertexId>* kept) {
  std::uint32_t count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::size_t> size(count, 0);
  for (auto l : label) ++size[l];
  // Labels are numbered by smallest member, so the first maximum wins ties.
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < count; ++c) {
    if (size[c] > size[best]) best = c;
  }
  std::vector<VertexId> remap(g.num_vertices(), std::numeric_limits<VertexId>::max());
  std::vector<VertexId> old_ids;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (label[v] == best) {
      remap[v] = static_cast<VertexId>(old_ids.size());
      old_ids.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (label[e.u] == best) edges.push_back({remap[e.u], remap[e.v]});
  }
  const auto n = static_cast<VertexId>(old_ids.size());
  if (kept != nullptr) *kept = std::move(old_ids);
  return Graph::from_edges(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const VertexId shift = a.num_vertices();
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace edgepart
