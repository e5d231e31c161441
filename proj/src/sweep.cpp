#include "edgepart/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "edgepart/baselines.hpp"
#include "edgepart/formats.hpp"
#include "edgepart/graph_stats.hpp"
#include "edgepart/rewire.hpp"

namespace edgepart {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kDfep: return "dfep";
    case Algorithm::kDfepc: return "dfepc";
    case Algorithm::kRandom: return "random";
    case Algorithm::kHash: return "hash";
    case Algorithm::kNaive: return "naive";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kDfep, Algorithm::kDfepc, Algorithm::kRandom, Algorithm::kHash, Algorithm::kNaive}) {
    if (name == to_string(a)) return a;
  }
  throw DataError("unknown algorithm '" + name + "'");
}

PartitionOutcome partition_graph(const Graph& g, const PartitionerOptions& opts) {
  switch (opts.algorithm) {
    case Algorithm::kDfep:
    case Algorithm::kDfepc: {
      dfep::Config cfg;
      cfg.num_partitions = opts.k;
      cfg.seed = opts.seed;
      cfg.variant = opts.algorithm == Algorithm::kDfepc ? dfep::Variant::kPoorRich : dfep::Variant::kPlain;
      cfg.poverty_divisor = opts.poverty_divisor;
      cfg.round_cap = opts.round_cap;
      auto r = dfep::run(g, cfg);
      const auto rounds = r.rounds();
      return {std::move(r.partitioning), rounds};
    }
    case Algorithm::kRandom: return {baselines::random_partition(g, opts.k, opts.seed), 0};
    case Algorithm::kHash: return {baselines::hash_partition(g, opts.k), 0};
    case Algorithm::kNaive: {
      auto r = baselines::naive_growth(g, opts.k, opts.seed);
      return {std::move(r.partitioning), r.rounds};
    }
  }
  throw DataError("unknown algorithm");
}

std::vector<SweepRow> sweep_k(const Graph& g, const SweepConfig& cfg) {
  if (cfg.samples < 1) throw DataError("samples must be >= 1");
  for (PartitionId k : cfg.ks) {
    if (k < 1) throw DataError("K values must be >= 1");
  }
  std::vector<SweepRow> rows(cfg.ks.size() * cfg.samples);
  auto work = [&](std::size_t index) {
    SweepRow& row = rows[index];
    row.dataset = cfg.dataset;
    row.algorithm = cfg.algorithm;
    row.k = cfg.ks[index / cfg.samples];
    row.seed = cfg.seed_base + index % cfg.samples;
    PartitionerOptions opts;
    opts.algorithm = cfg.algorithm;
    opts.k = row.k;
    opts.seed = row.seed;
    opts.poverty_divisor = cfg.poverty_divisor;
    opts.round_cap = cfg.round_cap;
    const auto outcome = partition_graph(g, opts);
    row.report = metrics::evaluate(outcome.partitioning, g, outcome.rounds, cfg.gain_sources, row.seed);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(rows.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = rows.size();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<FamilyMember> sweep_diameter(const Graph& g, const std::vector<std::uint64_t>& budgets,
                                         double triangle_tolerance, std::uint64_t rewire_seed, const SweepConfig& cfg) {
  std::vector<FamilyMember> family;
  for (std::uint64_t budget : budgets) {
    FamilyMember member;
    member.swap_budget = budget;
    auto rewired = rewire(g, budget, triangle_tolerance, rewire_seed);
    member.applied_swaps = rewired.applied_swaps;
    member.diameter = exact_diameter(rewired.graph, cfg.jobs);
    member.rows = sweep_k(rewired.graph, cfg);
    family.push_back(std::move(member));
  }
  return family;
}

std::vector<std::string> sweep_columns() {
  std::vector<std::string> cols{"dataset", "algorithm", "K", "seed"};
  for (const auto& c : formats::metrics_columns()) {
    if (c != "K") cols.push_back(c);
  }
  return cols;
}

std::vector<std::string> sweep_row_fields(const SweepRow& row) {
  std::vector<std::string> fields{row.dataset, to_string(row.algorithm), std::to_string(row.k), std::to_string(row.seed)};
  auto metrics = formats::metrics_row(row.report);
  fields.insert(fields.end(), metrics.begin() + 1, metrics.end());
  return fields;
}

}  // namespace edgepart
