#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partitioning.hpp"

namespace edgepart::etsch {

using LocalId = std::uint32_t;

/// The subgraph G_i = (V_i, E_i) of one partition, with local vertex ids
/// 0..|V_i|-1 assigned in ascending global id order.
class PartitionView {
 public:
  PartitionId id() const { return id_; }
  LocalId num_vertices() const { return static_cast<LocalId>(vertices_.size()); }
  std::size_t num_edges() const { return edges_.size(); }

  VertexId global_id(LocalId v) const { return vertices_[v]; }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const EdgeId> edges() const { return edges_; }
  bool is_frontier(LocalId v) const { return frontier_[v] != 0; }

  std::span<const LocalId> neighbours(LocalId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Local id of a global vertex, or num_vertices() if v is not in V_i.
  LocalId local_id(VertexId v) const;

 private:
  friend class ViewSet;

  PartitionId id_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<char> frontier_;
  std::vector<std::size_t> offsets_;
  std::vector<LocalId> adjacency_;
};

struct Replica {
  PartitionId view;
  LocalId local;
};

/// All K views of an edge-partitioned graph plus, for every vertex, where
/// its replicas live.
class ViewSet {
 public:
  /// Throws DataError if `part` does not match g edge for edge.
  ViewSet(const Graph& g, const EdgePartitioning& part);

  VertexId num_vertices() const { return static_cast<VertexId>(replica_offsets_.size() - 1); }
  std::span<const PartitionView> views() const { return views_; }
  const PartitionView& view(PartitionId i) const { return views_[i]; }

  std::span<const Replica> replicas(VertexId v) const {
    return {replicas_.data() + replica_offsets_[v], replicas_.data() + replica_offsets_[v + 1]};
  }

  /// Vertices with at least two replicas, ascending.
  std::span<const VertexId> frontier_vertices() const { return frontier_; }

 private:
  std::vector<PartitionView> views_;
  std::vector<std::size_t> replica_offsets_;
  std::vector<Replica> replicas_;
  std::vector<VertexId> frontier_;
};

inline ViewSet build_views(const Graph& g, const EdgePartitioning& part) { return ViewSet(g, part); }

/// Hooks of a vertex program.
///
/// initial_state(v) must depend on v only, so every replica of v starts
/// equal. local_computation updates one view in place and reports whether
/// it changed anything. aggregate merges the states of all replicas
/// of a frontier vertex and must be commutative, associative and
/// idempotent.
template <class A>
concept VertexProgram = requires(A& a, const A& ca, VertexId v, const PartitionView& view,
                                 std::span<typename A::State> states, std::span<const typename A::State> replicas) {
  typename A::State;
  requires std::equality_comparable<typename A::State>;
  { ca.initial_state(v) } -> std::convertible_to<typename A::State>;
  { a.local_computation(view, states) } -> std::convertible_to<bool>;
  { ca.aggregate(replicas) } -> std::convertible_to<typename A::State>;
};

struct RunOptions {
  std::uint32_t max_rounds = 1'000'000;
};

struct RunReport {
  /// Macro-rounds executed, including the final one that changed nothing.
  std::uint32_t rounds = 0;
  bool converged = false;
  /// Replica states that differ at the end of each round from its start.
  std::vector<std::uint64_t> changed_per_round;

  /// Rounds that changed at least one replica.
  std::uint32_t active_rounds() const {
    std::uint32_t n = 0;
    for (auto c : changed_per_round) n += c != 0;
    return n;
  }
};

template <class State>
struct RunResult {
  /// One state per global vertex; vertices outside every view keep their
  /// initial state.
  std::vector<State> states;
  RunReport report;
};

template <class State>
class NotConvergedError : public std::runtime_error {
 public:
  explicit NotConvergedError(RunResult<State> partial)
      : std::runtime_error("no fixpoint after " + std::to_string(partial.report.rounds) + " macro-rounds"),
        partial_(std::move(partial)) {}
  const RunResult<State>& partial() const { return partial_; }

 private:
  RunResult<State> partial_;
};

/// Initialization once, then macro-rounds of (local computation on every
/// view; aggregation on every frontier vertex) until a round changes no
/// replica. Throws NotConvergedError<State> past opts.max_rounds.
template <VertexProgram A>
RunResult<typename A::State> run(const ViewSet& views, A& program, const RunOptions& opts = {}) {
  using State = typename A::State;
  const auto k = views.views().size();
  std::vector<std::vector<State>> local(k);
  for (std::size_t i = 0; i < k; ++i) {
    const PartitionView& view = views.view(static_cast<PartitionId>(i));
    local[i].reserve(view.num_vertices());
    for (LocalId v = 0; v < view.num_vertices(); ++v) local[i].push_back(program.initial_state(view.global_id(v)));
  }

  RunResult<State> result;
  std::vector<std::vector<State>> start;
  std::vector<State> gathered;
  while (true) {
    if (result.report.rounds >= opts.max_rounds) break;
    ++result.report.rounds;
    start = local;

    for (std::size_t i = 0; i < k; ++i) {
      program.local_computation(views.view(static_cast<PartitionId>(i)), std::span<State>(local[i]));
    }

    for (VertexId v : views.frontier_vertices()) {
      gathered.clear();
      for (const Replica& r : views.replicas(v)) gathered.push_back(local[r.view][r.local]);
      const State merged = program.aggregate(std::span<const State>(gathered));
      for (const Replica& r : views.replicas(v)) local[r.view][r.local] = merged;
    }

    std::uint64_t changed = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t v = 0; v < local[i].size(); ++v) changed += !(local[i][v] == start[i][v]);
    }
    result.report.changed_per_round.push_back(changed);
    if (changed == 0) {
      result.report.converged = true;
      break;
    }
  }

  result.states.reserve(views.num_vertices());
  for (VertexId v = 0; v < views.num_vertices(); ++v) {
    const auto reps = views.replicas(v);
    result.states.push_back(reps.empty() ? State(program.initial_state(v)) : local[reps[0].view][reps[0].local]);
  }
  if (!result.report.converged) throw NotConvergedError<State>(std::move(result));
  return result;
}

}  // namespace edgepart::etsch
