#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgepart {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using PartitionId = std::uint32_t;

inline constexpr PartitionId kUnowned = std::numeric_limits<PartitionId>::max();

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed input and for inputs that violate a precondition
/// (disconnected graph where a connected one is required, bad K, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph.
///
/// Vertices are 0..n-1. Edges are stored once, as (u, v) with u < v, sorted
/// lexicographically; the position in that order is the edge id. Each vertex
/// keeps its incident edge ids in ascending order.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Self-loops are dropped,
  /// orientation is ignored and duplicates are merged.
  static Graph from_edges(VertexId num_vertices, std::vector<Edge> edges);

  VertexId num_vertices() const { return static_cast<VertexId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& endpoints(EdgeId e) const { return edges_[e]; }

  /// E(v), ascending edge ids.
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  VertexId other_endpoint(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_.size() == b.offsets_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incident_;
};

/// Hop distances from `source`; unreachable vertices get kUnreachable.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

/// Component label per vertex (labels are 0..c-1 in order of smallest member).
std::vector<std::uint32_t> component_labels(const Graph& g, std::uint32_t* num_components = nullptr);

bool is_connected(const Graph& g);

/// Subgraph induced by the largest connected component, with vertices
/// renumbered in ascending order. Ties go to the component holding the
/// smallest vertex id. `kept` receives the old id of every new vertex.
Graph largest_component(const Graph& g, std::vector<VertexId>* kept = nullptr);

/// Disjoint union; the vertices of `b` are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace edgepart
