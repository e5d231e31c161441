#include "edgepart/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "edgepart/algorithms.hpp"
#include "edgepart/etsch.hpp"
#include "edgepart/random.hpp"

namespace edgepart::metrics {

std::vector<double> normalized_sizes(std::span<const std::uint64_t> sizes) {
  std::uint64_t total = 0;
  for (auto s : sizes) total += s;
  const double ideal = static_cast<double>(total) / static_cast<double>(sizes.size());
  std::vector<double> out(sizes.size(), 0.0);
  if (total == 0) return out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out[i] = static_cast<double>(sizes[i]) / ideal;
  return out;
}

Balance balance(std::span<const std::uint64_t> sizes) {
  if (sizes.empty()) throw DataError("balance needs K >= 1");
  const auto norm = normalized_sizes(sizes);
  Balance b;
  double sq = 0.0;
  for (double x : norm) {
    b.max_normalized_size = std::max(b.max_normalized_size, x);
    sq += (x - 1.0) * (x - 1.0);
  }
  b.nstdev = std::sqrt(sq / static_cast<double>(norm.size()));
  return b;
}

Balance balance(const EdgePartitioning& part) {
  const auto sizes = part.sizes();
  return balance(sizes);
}

std::uint64_t communication_cost(const EdgePartitioning& part, const Graph& g) {
  std::uint64_t total = 0;
  for (const auto& frontier : part.frontier_sets(g)) total += frontier.size();
  return total;
}

double disconnected_fraction(const EdgePartitioning& part, const Graph& g) {
  const PartitionId k = part.num_partitions();
  const auto views = etsch::build_views(g, part);
  PartitionId disconnected = 0;
  std::vector<etsch::LocalId> stack;
  for (const auto& view : views.views()) {
    const etsch::LocalId n = view.num_vertices();
    if (n == 0) {
      ++disconnected;
      continue;
    }
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    stack.assign(1, 0);
    etsch::LocalId reached = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto w : view.neighbours(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) ++disconnected;
  }
  return static_cast<double>(disconnected) / static_cast<double>(k);
}

namespace {

Gain gain_on(const etsch::ViewSet& views, const Graph& g, VertexId source) {
  Gain out;
  out.etsch_rounds = etsch::sssp(views, source).report.active_rounds();
  out.baseline_rounds = etsch::baseline_sssp_supersteps(g, source);
  out.gain = out.baseline_rounds == 0
                 ? 0.0
                 : 1.0 - static_cast<double>(out.etsch_rounds) / static_cast<double>(out.baseline_rounds);
  return out;
}

}  // namespace

Gain gain(const EdgePartitioning& part, const Graph& g, VertexId source) {
  if (source >= g.num_vertices()) throw DataError("source vertex out of range");
  return gain_on(etsch::build_views(g, part), g, source);
}

MeanGain mean_gain(const EdgePartitioning& part, const Graph& g, unsigned num_sources, std::uint64_t seed) {
  MeanGain out;
  if (num_sources == 0 || g.num_vertices() == 0) return out;
  const auto views = etsch::build_views(g, part);
  Rng rng(seed);
  for (unsigned s = 0; s < num_sources; ++s) {
    const auto source = static_cast<VertexId>(uniform_below(rng, g.num_vertices()));
    const Gain one = gain_on(views, g, source);
    out.etsch_rounds += one.etsch_rounds;
    out.baseline_rounds += one.baseline_rounds;
    out.gain += one.gain;
  }
  out.etsch_rounds /= num_sources;
  out.baseline_rounds /= num_sources;
  out.gain /= num_sources;
  return out;
}

Report evaluate(const EdgePartitioning& part, const Graph& g, std::uint32_t partitioner_rounds,
                unsigned gain_sources, std::uint64_t seed) {
  Report r;
  r.k = part.num_partitions();
  const auto sizes = part.sizes();
  r.normalized_sizes = normalized_sizes(sizes);
  const Balance b = balance(sizes);
  r.max_normalized_size = b.max_normalized_size;
  r.nstdev = b.nstdev;
  r.messages = communication_cost(part, g);
  r.disconnected_fraction = disconnected_fraction(part, g);
  r.rounds = partitioner_rounds;
  const MeanGain mg = mean_gain(part, g, gain_sources, seed);
  r.gain = mg.gain;
  r.etsch_rounds = mg.etsch_rounds;
  r.baseline_rounds = mg.baseline_rounds;
  return r;
}

}  // namespace edgepart::metrics
