#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partitioning.hpp"

namespace edgepart::dfep {

enum class Variant { kPlain, kPoorRich };

const char* to_string(Variant v);

struct Config {
  PartitionId num_partitions = 2;
  std::uint64_t seed = 0;
  Variant variant = Variant::kPlain;
  /// Poverty divisor p: a partition is poor when |E_i| < mean / p.
  double poverty_divisor = 2.0;
  std::uint32_t round_cap = 1000;
  /// Upper bound on the per-vertex grant handed out in one round.
  double injection_cap = 10.0;
  /// Purchases succeed when the committed money is >= 1 - epsilon.
  double epsilon = 1e-9;
  /// Fail early after this many rounds without any ownership change.
  std::uint32_t stall_rounds = 50;
  /// Explicit seed vertex per partition; when empty, K distinct vertices
  /// are sampled from `seed`.
  std::vector<VertexId> seed_vertices;

  /// Throws DataError on K < 1, p <= 1, round_cap < 1.
  void validate() const;
};

enum class PartitionClass : std::uint8_t { kPoor, kRich };

/// Money partition i has parked on a vertex.
struct VertexFund {
  PartitionId partition;
  double amount;
};

/// Money partition i has committed to an edge this round, split by funder.
/// Only the two endpoints can fund an edge, so the funder set S is encoded
/// as the contribution of the lower and of the higher endpoint.
struct EdgeFund {
  PartitionId partition;
  double from_low = 0.0;
  double from_high = 0.0;

  double total() const { return from_low + from_high; }
};

struct AuctionOutcome {
  EdgeId purchased = 0;
  /// Rich-to-poor recaptures (poor-rich variant only).
  EdgeId transferred = 0;
};

/// Per-partition money on vertices and edges, edge ownership, and the
/// bookkeeping needed to audit money conservation.
class FundingState {
 public:
  FundingState(VertexId num_vertices, EdgeId num_edges, PartitionId num_partitions);

  VertexId num_vertices() const { return static_cast<VertexId>(vertex_funds_.size()); }
  EdgeId num_edges() const { return static_cast<EdgeId>(owner_.size()); }
  PartitionId num_partitions() const { return static_cast<PartitionId>(sizes_.size()); }

  /// M_i[v] and M_i[e].
  double vertex_funds(PartitionId i, VertexId v) const;
  double edge_funds(PartitionId i, EdgeId e) const;
  /// Nonzero entries, ascending partition id.
  std::span<const VertexFund> vertex_entries(VertexId v) const { return vertex_funds_[v]; }
  std::span<const EdgeFund> edge_entries(EdgeId e) const { return edge_funds_[e]; }

  PartitionId owner(EdgeId e) const { return owner_[e]; }
  const std::vector<PartitionId>& owners() const { return owner_; }
  std::span<const std::uint64_t> sizes() const { return sizes_; }
  EdgeId unowned_edges() const { return unowned_; }

  std::span<const VertexId> seeds() const { return seeds_; }
  std::span<const PartitionClass> classes() const { return classes_; }

  /// Money handed to partition i so far (initial funding plus injections).
  long double injected(PartitionId i) const { return injected_[i]; }
  /// Money partition i paid for edges so far.
  long double spent(PartitionId i) const { return spent_[i]; }
  std::uint64_t purchases(PartitionId i) const { return purchases_[i]; }

  /// Largest |vertex funds + edge funds + spent - injected| over partitions.
  double conservation_error() const;

  /// Sum of all money currently held on vertices and edges.
  double money_in_flight() const;

  /// Places fresh money of partition i on v; recorded as injected.
  void grant(PartitionId i, VertexId v, double amount);
  /// Places fresh money of partition i on e as if `funder` had committed it;
  /// recorded as injected. Used to stage auction scenarios.
  void grant_on_edge(const Graph& g, PartitionId i, EdgeId e, VertexId funder, double amount);
  /// Sets ownership without payment (staging), keeping sizes consistent.
  void assign(EdgeId e, PartitionId i);
  void set_seeds(std::vector<VertexId> seeds) { seeds_ = std::move(seeds); }
  void set_classes(std::vector<PartitionClass> classes) { classes_ = std::move(classes); }

 private:
  friend void propagate(FundingState&, const Graph&, const Config&);
  friend AuctionOutcome auction(FundingState&, const Graph&, const Config&);
  friend void inject(FundingState&, const Config&);

  std::vector<std::vector<VertexFund>> vertex_funds_;
  std::vector<std::vector<EdgeFund>> edge_funds_;
  std::vector<PartitionId> owner_;
  std::vector<std::uint64_t> sizes_;
  EdgeId unowned_;
  std::vector<VertexId> seeds_;
  std::vector<PartitionClass> classes_;
  std::vector<long double> injected_;
  std::vector<long double> spent_;
  std::vector<std::uint64_t> purchases_;
};

/// Picks K distinct seed vertices and gives each m / K units.
/// Throws DataError if K > n or the explicit seeds are invalid.
FundingState init(const Graph& g, const Config& cfg);

/// Step 1: every vertex spreads each partition's money evenly over the
/// incident edges that partition may bid on.
void propagate(FundingState& state, const Graph& g, const Config& cfg);

/// Step 2: each edge goes to its highest bidder (ties to the lowest id) if
/// the bid covers the unit price; the owner's leftover is halved between
/// the endpoints and losing bids go back to their funders.
AuctionOutcome auction(FundingState& state, const Graph& g, const Config& cfg);

/// Per-vertex grant for every partition: min(cap, mean size / |E_i|), with
/// |E_i| = 0 saturating at the cap.
std::vector<double> injection_amounts(std::span<const std::uint64_t> sizes, double cap);

/// Step 3: adds the partition's grant to every vertex where it holds money.
/// A partition with no edges and no money gets its seed refunded.
void inject(FundingState& state, const Config& cfg);

/// Poor iff |E_i| < mean(|E|) / p.
std::vector<PartitionClass> classify_poor_rich(std::span<const std::uint64_t> sizes, double poverty_divisor);

struct RoundTrace {
  std::uint32_t round = 0;
  std::vector<std::uint64_t> sizes;
  EdgeId newly_owned = 0;
  EdgeId transferred = 0;
  double money_in_flight = 0.0;
};

enum class Step { kInit, kPropagate, kAuction, kInject };

/// Called with the state after every step; used to audit invariants.
using StepObserver = std::function<void(const FundingState&, Step, std::uint32_t round)>;

struct Result {
  EdgePartitioning partitioning;
  std::vector<RoundTrace> trace;
  std::uint32_t rounds() const { return static_cast<std::uint32_t>(trace.size()); }
};

class NotConvergedError : public std::runtime_error {
 public:
  NotConvergedError(const std::string& what, std::vector<PartitionId> owners, EdgeId unowned,
                    std::vector<RoundTrace> trace)
      : std::runtime_error(what), owners_(std::move(owners)), unowned_(unowned), trace_(std::move(trace)) {}

  /// Partial ownership map; free edges hold kUnowned.
  const std::vector<PartitionId>& owners() const { return owners_; }
  EdgeId unowned() const { return unowned_; }
  const std::vector<RoundTrace>& trace() const { return trace_; }

 private:
  std::vector<PartitionId> owners_;
  EdgeId unowned_;
  std::vector<RoundTrace> trace_;
};

/// Runs rounds until every edge is owned. Deterministic in (g, cfg).
/// Throws NotConvergedError when the round cap or the stall limit is hit.
Result run(const Graph& g, const Config& cfg, const StepObserver& observer = {});

}  // namespace edgepart::dfep
