#include "edgepart/partitioning.hpp"

#include <algorithm>

namespace edgepart {

EdgePartitioning::EdgePartitioning(PartitionId num_partitions, std::vector<PartitionId> assignment)
    : k_(num_partitions), assignment_(std::move(assignment)) {
  if (k_ == 0) throw DataError("partitioning needs K >= 1");
  for (EdgeId e = 0; e < assignment_.size(); ++e) {
    if (assignment_[e] >= k_) {
      throw DataError("edge " + std::to_string(e) + " assigned to invalid partition " + std::to_string(assignment_[e]));
    }
  }
}

std::vector<std::uint64_t> EdgePartitioning::sizes() const {
  std::vector<std::uint64_t> s(k_, 0);
  for (PartitionId p : assignment_) ++s[p];
  return s;
}

void EdgePartitioning::check_graph(const Graph& g) const {
  if (g.num_edges() != assignment_.size()) {
    throw DataError("partitioning covers " + std::to_string(assignment_.size()) + " edges, graph has " +
                    std::to_string(g.num_edges()));
  }
}

std::vector<std::vector<PartitionId>> EdgePartitioning::partitions_of_vertices(const Graph& g) const {
  check_graph(g);
  std::vector<std::vector<PartitionId>> parts(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto& list = parts[v];
    for (EdgeId e : g.incident_edges(v)) list.push_back(assignment_[e]);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return parts;
}

std::vector<std::vector<VertexId>> EdgePartitioning::vertex_sets(const Graph& g) const {
  std::vector<std::vector<VertexId>> sets(k_);
  const auto parts = partitions_of_vertices(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (PartitionId p : parts[v]) sets[p].push_back(v);
  }
  return sets;
}

std::vector<std::vector<VertexId>> EdgePartitioning::frontier_sets(const Graph& g) const {
  std::vector<std::vector<VertexId>> sets(k_);
  const auto parts = partitions_of_vertices(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (parts[v].size() < 2) continue;
    for (PartitionId p : parts[v]) sets[p].push_back(v);
  }
  return sets;
}

}  // namespace edgepart
