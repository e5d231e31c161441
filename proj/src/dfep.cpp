#include "edgepart/dfep.hpp"

#include <algorithm>
#include <cmath>

#include "edgepart/random.hpp"

namespace edgepart::dfep {
namespace {

template <class Entry>
Entry& entry_for(std::vector<Entry>& list, PartitionId i) {
  auto it = std::lower_bound(list.begin(), list.end(), i,
                             [](const Entry& x, PartitionId p) { return x.partition < p; });
  if (it == list.end() || it->partition != i) {
    Entry fresh{};
    fresh.partition = i;
    it = list.insert(it, fresh);
  }
  return *it;
}

void credit(std::vector<VertexFund>& list, PartitionId i, double amount) {
  if (amount <= 0.0) return;
  entry_for(list, i).amount += amount;
}

bool is_rich(const FundingState& s, PartitionId i) {
  return s.classes().empty() || s.classes()[i] == PartitionClass::kRich;
}

// Whether partition i may commit money to edge e this round.
bool may_bid(const FundingState& s, const Config& cfg, PartitionId i, EdgeId e) {
  const PartitionId owner = s.owner(e);
  if (owner == kUnowned || owner == i) return true;
  return cfg.variant == Variant::kPoorRich && !is_rich(s, i) && is_rich(s, owner);
}

}  // namespace

const char* to_string(Variant v) { return v == Variant::kPlain ? "plain" : "poor-rich"; }

void Config::validate() const {
  if (num_partitions < 1) throw DataError("K must be >= 1");
  if (!(poverty_divisor > 1.0)) throw DataError("poverty divisor p must be > 1");
  if (round_cap < 1) throw DataError("round cap must be >= 1");
  if (!(injection_cap > 0.0)) throw DataError("injection cap must be > 0");
  if (epsilon < 0.0 || epsilon >= 1.0) throw DataError("epsilon must lie in [0, 1)");
}

FundingState::FundingState(VertexId num_vertices, EdgeId num_edges, PartitionId num_partitions)
    : vertex_funds_(num_vertices),
      edge_funds_(num_edges),
      owner_(num_edges, kUnowned),
      sizes_(num_partitions, 0),
      unowned_(num_edges),
      injected_(num_partitions, 0.0L),
      spent_(num_partitions, 0.0L),
      purchases_(num_partitions, 0) {}

double FundingState::vertex_funds(PartitionId i, VertexId v) const {
  for (const auto& f : vertex_funds_[v]) {
    if (f.partition == i) return f.amount;
  }
  return 0.0;
}

double FundingState::edge_funds(PartitionId i, EdgeId e) const {
  for (const auto& f : edge_funds_[e]) {
    if (f.partition == i) return f.total();
  }
  return 0.0;
}

double FundingState::conservation_error() const {
  const PartitionId k = num_partitions();
  // Neumaier-compensated sums, so the audit itself adds no visible error.
  std::vector<long double> sum(k, 0.0L), comp(k, 0.0L);
  auto add = [&](PartitionId i, long double x) {
    const long double t = sum[i] + x;
    if (std::fabs(sum[i]) >= std::fabs(x)) {
      comp[i] += (sum[i] - t) + x;
    } else {
      comp[i] += (x - t) + sum[i];
    }
    sum[i] = t;
  };
  for (const auto& list : vertex_funds_) {
    for (const auto& f : list) add(f.partition, f.amount);
  }
  for (const auto& list : edge_funds_) {
    for (const auto& f : list) {
      add(f.partition, f.from_low);
      add(f.partition, f.from_high);
    }
  }
  long double worst = 0.0L;
  for (PartitionId i = 0; i < k; ++i) {
    const long double held = sum[i] + comp[i];
    worst = std::max(worst, std::fabs(held + spent_[i] - injected_[i]));
  }
  return static_cast<double>(worst);
}

double FundingState::money_in_flight() const {
  long double total = 0.0L;
  for (const auto& list : vertex_funds_) {
    for (const auto& f : list) total += f.amount;
  }
  for (const auto& list : edge_funds_) {
    for (const auto& f : list) total += f.total();
  }
  return static_cast<double>(total);
}

void FundingState::grant(PartitionId i, VertexId v, double amount) {
  credit(vertex_funds_[v], i, amount);
  injected_[i] += amount;
}

void FundingState::grant_on_edge(const Graph& g, PartitionId i, EdgeId e, VertexId funder, double amount) {
  const Edge& ed = g.endpoints(e);
  if (funder != ed.u && funder != ed.v) throw DataError("funder is not an endpoint of the edge");
  EdgeFund& f = entry_for(edge_funds_[e], i);
  (funder == ed.u ? f.from_low : f.from_high) += amount;
  injected_[i] += amount;
}

void FundingState::assign(EdgeId e, PartitionId i) {
  if (owner_[e] == kUnowned) {
    --unowned_;
  } else {
    --sizes_[owner_[e]];
  }
  owner_[e] = i;
  if (i == kUnowned) {
    ++unowned_;
  } else {
    ++sizes_[i];
  }
}

FundingState init(const Graph& g, const Config& cfg) {
  cfg.validate();
  const PartitionId k = cfg.num_partitions;
  if (k > g.num_vertices()) {
    throw DataError("K = " + std::to_string(k) + " exceeds the vertex count " + std::to_string(g.num_vertices()));
  }
  FundingState state(g.num_vertices(), g.num_edges(), k);
  std::vector<VertexId> seeds = cfg.seed_vertices;
  if (seeds.empty()) {
    Rng rng(cfg.seed);
    const auto picks = sample_without_replacement(rng, g.num_vertices(), k);
    seeds.assign(picks.begin(), picks.end());
  } else {
    auto sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    if (seeds.size() != k || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.back() >= g.num_vertices()) {
      throw DataError("explicit seeds must be K distinct vertices");
    }
  }
  const double initial = static_cast<double>(g.num_edges()) / k;
  for (PartitionId i = 0; i < k; ++i) state.grant(i, seeds[i], initial);
  state.set_seeds(std::move(seeds));
  state.set_classes(std::vector<PartitionClass>(k, PartitionClass::kRich));
  return state;
}

void propagate(FundingState& state, const Graph& g, const Config& cfg) {
  std::vector<EdgeId> eligible;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto& funds = state.vertex_funds_[v];
    for (VertexFund& f : funds) {
      if (f.amount <= 0.0) continue;
      eligible.clear();
      for (EdgeId e : g.incident_edges(v)) {
        if (may_bid(state, cfg, f.partition, e)) eligible.push_back(e);
      }
      // Nowhere to go: the money stays parked on the vertex.
      if (eligible.empty()) continue;
      const double share = f.amount / static_cast<double>(eligible.size());
      for (EdgeId e : eligible) {
        EdgeFund& ef = entry_for(state.edge_funds_[e], f.partition);
        (g.endpoints(e).u == v ? ef.from_low : ef.from_high) += share;
      }
      f.amount = 0.0;
    }
    std::erase_if(funds, [](const VertexFund& f) { return f.amount <= 0.0; });
  }
}

AuctionOutcome auction(FundingState& state, const Graph& g, const Config& cfg) {
  AuctionOutcome out;
  const double price_floor = 1.0 - cfg.epsilon;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto& bids = state.edge_funds_[e];
    if (bids.empty()) continue;

    // Entries are sorted by partition, so '>' keeps the lowest id on ties.
    const EdgeFund* best = &bids.front();
    for (const EdgeFund& b : bids) {
      if (b.total() > best->total()) best = &b;
    }
    const PartitionId winner = best->partition;
    const double bid = best->total();
    const PartitionId owner = state.owner_[e];
    double paid = 0.0;
    if (bid >= price_floor) {
      if (owner == kUnowned) {
        state.assign(e, winner);
        ++out.purchased;
        paid = std::min(1.0, bid);
      } else if (cfg.variant == Variant::kPoorRich && owner != winner && is_rich(state, owner) &&
                 !is_rich(state, winner)) {
        state.assign(e, winner);
        ++out.transferred;
        paid = std::min(1.0, bid);
      }
      if (paid > 0.0) {
        state.spent_[winner] += paid;
        ++state.purchases_[winner];
      }
    }

    const Edge& ed = g.endpoints(e);
    const PartitionId final_owner = state.owner_[e];
    for (const EdgeFund& b : bids) {
      if (b.partition == final_owner) {
        const double rest = b.total() - (b.partition == winner ? paid : 0.0);
        credit(state.vertex_funds_[ed.u], b.partition, rest / 2);
        credit(state.vertex_funds_[ed.v], b.partition, rest / 2);
      } else {
        // Refunds go back in proportion to what each funder committed.
        credit(state.vertex_funds_[ed.u], b.partition, b.from_low);
        credit(state.vertex_funds_[ed.v], b.partition, b.from_high);
      }
    }
    bids.clear();
  }
  return out;
}

std::vector<double> injection_amounts(std::span<const std::uint64_t> sizes, double cap) {
  std::uint64_t total = 0;
  for (auto s : sizes) total += s;
  const double avg = static_cast<double>(total) / static_cast<double>(sizes.size());
  std::vector<double> amounts(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    amounts[i] = sizes[i] == 0 ? cap : std::min(cap, avg / static_cast<double>(sizes[i]));
  }
  return amounts;
}

void inject(FundingState& state, const Config& cfg) {
  const PartitionId k = state.num_partitions();
  const auto amounts = injection_amounts(state.sizes_, cfg.injection_cap);
  std::vector<char> funded(k, 0);
  for (auto& funds : state.vertex_funds_) {
    for (VertexFund& f : funds) {
      if (f.amount <= 0.0) continue;
      f.amount += amounts[f.partition];
      state.injected_[f.partition] += amounts[f.partition];
      funded[f.partition] = 1;
    }
  }
  for (PartitionId i = 0; i < k; ++i) {
    if (!funded[i] && state.sizes_[i] == 0 && i < state.seeds_.size()) {
      state.grant(i, state.seeds_[i], amounts[i]);
    }
  }
}

std::vector<PartitionClass> classify_poor_rich(std::span<const std::uint64_t> sizes, double poverty_divisor) {
  std::uint64_t total = 0;
  for (auto s : sizes) total += s;
  const double threshold = static_cast<double>(total) / static_cast<double>(sizes.size()) / poverty_divisor;
  std::vector<PartitionClass> classes(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    classes[i] = static_cast<double>(sizes[i]) < threshold ? PartitionClass::kPoor : PartitionClass::kRich;
  }
  return classes;
}

Result run(const Graph& g, const Config& cfg, const StepObserver& observer) {
  if (!is_connected(g)) throw DataError("partitioning requires a connected graph");
  FundingState state = init(g, cfg);
  if (observer) observer(state, Step::kInit, 0);

  std::vector<RoundTrace> trace;
  std::uint32_t quiet_rounds = 0;
  while (state.unowned_edges() > 0) {
    const auto round = static_cast<std::uint32_t>(trace.size()) + 1;
    if (round > cfg.round_cap) {
      throw NotConvergedError("round cap " + std::to_string(cfg.round_cap) + " reached with " +
                                  std::to_string(state.unowned_edges()) + " unowned edges",
                              state.owners(), state.unowned_edges(), std::move(trace));
    }
    if (cfg.variant == Variant::kPoorRich) {
      state.set_classes(classify_poor_rich(state.sizes(), cfg.poverty_divisor));
    }
    propagate(state, g, cfg);
    if (observer) observer(state, Step::kPropagate, round);
    const AuctionOutcome outcome = auction(state, g, cfg);
    if (observer) observer(state, Step::kAuction, round);
    inject(state, cfg);
    if (observer) observer(state, Step::kInject, round);

    RoundTrace t;
    t.round = round;
    t.sizes.assign(state.sizes().begin(), state.sizes().end());
    t.newly_owned = outcome.purchased;
    t.transferred = outcome.transferred;
    t.money_in_flight = state.money_in_flight();
    trace.push_back(std::move(t));

    quiet_rounds = (outcome.purchased + outcome.transferred == 0) ? quiet_rounds + 1 : 0;
    if (quiet_rounds >= cfg.stall_rounds && state.unowned_edges() > 0) {
      throw NotConvergedError("no ownership change for " + std::to_string(quiet_rounds) + " rounds with " +
                                  std::to_string(state.unowned_edges()) + " unowned edges",
                              state.owners(), state.unowned_edges(), std::move(trace));
    }
  }
  return {EdgePartitioning(cfg.num_partitions, state.owners()), std::move(trace)};
}

}  // namespace edgepart::dfep
