#include "edgepart/formats.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace edgepart::formats {

void write_partitioning(std::ostream& out, const LoadedGraph& loaded, const EdgePartitioning& part) {
  const Graph& g = loaded.graph;
  if (part.num_edges() != g.num_edges()) throw DataError("partitioning does not match graph");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.endpoints(e);
    out << loaded.original_ids[ed.u] << ' ' << loaded.original_ids[ed.v] << ' ' << part.partition_of(e) << '\n';
  }
}

EdgePartitioning read_partitioning(std::istream& in, const LoadedGraph& loaded, std::optional<PartitionId> k) {
  const Graph& g = loaded.graph;
  std::vector<PartitionId> assignment(g.num_edges(), kUnowned);
  std::string line;
  std::size_t line_no = 0;
  PartitionId max_part = 0;
  EdgeId seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::int64_t a = 0, b = 0;
    std::int64_t p = 0;
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    {
      std::istringstream head(first);
      if (!(head >> a) || !head.eof()) throw ParseError(line_no, "expected 'u v partition'");
    }
    std::string rest;
    if (!(fields >> b >> p) || (fields >> rest)) throw ParseError(line_no, "expected 'u v partition'");
    if (p < 0 || p >= static_cast<std::int64_t>(kUnowned)) throw ParseError(line_no, "invalid partition id");
    const auto du = loaded.dense_id(a);
    const auto dv = loaded.dense_id(b);
    const auto e = (du && dv) ? g.find_edge(*du, *dv) : std::nullopt;
    if (!e) throw ParseError(line_no, "edge " + std::to_string(a) + " " + std::to_string(b) + " is not in the graph");
    if (assignment[*e] != kUnowned) throw ParseError(line_no, "edge listed twice");
    assignment[*e] = static_cast<PartitionId>(p);
    max_part = std::max(max_part, static_cast<PartitionId>(p));
    ++seen;
  }
  if (seen != g.num_edges()) {
    throw DataError("partitioning lists " + std::to_string(seen) + " of " + std::to_string(g.num_edges()) + " edges");
  }
  return EdgePartitioning(k.value_or(max_part + 1), std::move(assignment));
}

nlohmann::ordered_json to_json(const PartitionSidecar& s) {
  nlohmann::ordered_json j;
  j["algorithm"] = s.algorithm;
  j["K"] = s.k;
  j["seed"] = s.seed;
  j["variant"] = s.variant;
  j["rounds"] = s.rounds;
  j["sizes"] = s.sizes;
  j["max_normalized_size"] = s.max_normalized_size;
  j["nstdev"] = s.nstdev;
  return j;
}

PartitionSidecar sidecar_from_json(const nlohmann::json& j) {
  PartitionSidecar s;
  s.algorithm = j.value("algorithm", "");
  s.k = j.at("K").get<PartitionId>();
  s.seed = j.value("seed", std::uint64_t{0});
  s.variant = j.value("variant", "");
  s.rounds = j.value("rounds", std::uint32_t{0});
  s.sizes = j.value("sizes", std::vector<std::uint64_t>{});
  s.max_normalized_size = j.value("max_normalized_size", 0.0);
  s.nstdev = j.value("nstdev", 0.0);
  return s;
}

nlohmann::ordered_json to_json(const GraphStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["diameter"] = s.diameter;
  j["diameter_exact"] = s.diameter_exact;
  j["cc_avg"] = s.cc_avg;
  j["cc_global"] = s.cc_global;
  j["triangles"] = s.triangles;
  return j;
}

std::vector<std::string> metrics_columns() {
  return {"K",      "normalized_sizes",      "max_normalized_size", "nstdev",         "messages",
          "rounds", "disconnected_fraction", "gain",                "etsch_rounds", "baseline_rounds"};
}

std::vector<std::string> metrics_row(const metrics::Report& r) {
  std::string sizes;
  for (std::size_t i = 0; i < r.normalized_sizes.size(); ++i) {
    if (i) sizes += ';';
    sizes += format_double(r.normalized_sizes[i]);
  }
  return {std::to_string(r.k),       sizes,
          format_double(r.max_normalized_size), format_double(r.nstdev),
          std::to_string(r.messages), std::to_string(r.rounds),
          format_double(r.disconnected_fraction), format_double(r.gain),
          format_double(r.etsch_rounds), format_double(r.baseline_rounds)};
}

nlohmann::ordered_json to_json(const metrics::Report& r) {
  nlohmann::ordered_json j;
  j["K"] = r.k;
  j["normalized_sizes"] = r.normalized_sizes;
  j["max_normalized_size"] = r.max_normalized_size;
  j["nstdev"] = r.nstdev;
  j["messages"] = r.messages;
  j["rounds"] = r.rounds;
  j["disconnected_fraction"] = r.disconnected_fraction;
  j["gain"] = r.gain;
  j["etsch_rounds"] = r.etsch_rounds;
  j["baseline_rounds"] = r.baseline_rounds;
  return j;
}

nlohmann::ordered_json to_json(const etsch::RunReport& r) {
  nlohmann::ordered_json j;
  j["rounds"] = r.rounds;
  j["converged"] = r.converged;
  j["changed_per_round"] = r.changed_per_round;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

}  // namespace edgepart::formats
