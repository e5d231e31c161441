#include "edgepart/etsch.hpp"

#include <algorithm>

namespace edgepart::etsch {

LocalId PartitionView::local_id(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return num_vertices();
  return static_cast<LocalId>(it - vertices_.begin());
}

ViewSet::ViewSet(const Graph& g, const EdgePartitioning& part) {
  if (part.num_edges() != g.num_edges()) {
    throw DataError("partitioning covers " + std::to_string(part.num_edges()) + " edges, graph has " +
                    std::to_string(g.num_edges()));
  }
  const PartitionId k = part.num_partitions();
  views_.resize(k);
  for (PartitionId i = 0; i < k; ++i) views_[i].id_ = i;
  for (EdgeId e = 0; e < g.num_edges(); ++e) views_[part.partition_of(e)].edges_.push_back(e);

  for (PartitionView& view : views_) {
    for (EdgeId e : view.edges_) {
      view.vertices_.push_back(g.endpoints(e).u);
      view.vertices_.push_back(g.endpoints(e).v);
    }
    std::sort(view.vertices_.begin(), view.vertices_.end());
    view.vertices_.erase(std::unique(view.vertices_.begin(), view.vertices_.end()), view.vertices_.end());

    const LocalId n = view.num_vertices();
    view.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<LocalId, LocalId>> local_edges;
    local_edges.reserve(view.edges_.size());
    for (EdgeId e : view.edges_) {
      const LocalId a = view.local_id(g.endpoints(e).u);
      const LocalId b = view.local_id(g.endpoints(e).v);
      local_edges.emplace_back(a, b);
      ++view.offsets_[a + 1];
      ++view.offsets_[b + 1];
    }
    for (std::size_t i = 1; i < view.offsets_.size(); ++i) view.offsets_[i] += view.offsets_[i - 1];
    view.adjacency_.resize(view.offsets_.back());
    std::vector<std::size_t> cursor(view.offsets_.begin(), view.offsets_.end() - 1);
    for (auto [a, b] : local_edges) {
      view.adjacency_[cursor[a]++] = b;
      view.adjacency_[cursor[b]++] = a;
    }
  }

  const VertexId n = g.num_vertices();
  replica_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const PartitionView& view : views_) {
    for (VertexId v : view.vertices_) ++replica_offsets_[v + 1];
  }
  for (std::size_t i = 1; i < replica_offsets_.size(); ++i) replica_offsets_[i] += replica_offsets_[i - 1];
  replicas_.resize(replica_offsets_.back());
  std::vector<std::size_t> cursor(replica_offsets_.begin(), replica_offsets_.end() - 1);
  for (const PartitionView& view : views_) {
    for (LocalId l = 0; l < view.num_vertices(); ++l) replicas_[cursor[view.vertices_[l]]++] = {view.id_, l};
  }

  for (VertexId v = 0; v < n; ++v) {
    if (replica_offsets_[v + 1] - replica_offsets_[v] >= 2) frontier_.push_back(v);
  }
  for (PartitionView& view : views_) {
    view.frontier_.resize(view.num_vertices());
    for (LocalId l = 0; l < view.num_vertices(); ++l) {
      const VertexId v = view.vertices_[l];
      view.frontier_[l] = replica_offsets_[v + 1] - replica_offsets_[v] >= 2;
    }
  }
}

}  // namespace edgepart::etsch
