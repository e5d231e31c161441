#pragma once

#include <cstdint>
#include <vector>

#include "edgepart/graph.hpp"

namespace edgepart {

/// Assignment of every edge to exactly one of K partitions (0..K-1).
/// Vertex sets V_i and frontier sets F_i are derived on demand from the
/// graph the assignment was made for.
class EdgePartitioning {
 public:
  EdgePartitioning() = default;
  /// Throws DataError if an entry is >= num_partitions (kUnowned included).
  EdgePartitioning(PartitionId num_partitions, std::vector<PartitionId> assignment);

  PartitionId num_partitions() const { return k_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(assignment_.size()); }
  PartitionId partition_of(EdgeId e) const { return assignment_[e]; }
  const std::vector<PartitionId>& assignment() const { return assignment_; }

  /// |E_i| per partition.
  std::vector<std::uint64_t> sizes() const;

  /// Sorted V_i per partition.
  std::vector<std::vector<VertexId>> vertex_sets(const Graph& g) const;

  /// Sorted F_i per partition: members of V_i that also belong to some V_j.
  std::vector<std::vector<VertexId>> frontier_sets(const Graph& g) const;

  /// Sorted ids of the partitions containing each vertex.
  std::vector<std::vector<PartitionId>> partitions_of_vertices(const Graph& g) const;

  friend bool operator==(const EdgePartitioning&, const EdgePartitioning&) = default;

 private:
  void check_graph(const Graph& g) const;

  PartitionId k_ = 0;
  std::vector<PartitionId> assignment_;
};

}  // namespace edgepart
