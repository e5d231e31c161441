#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgepart/edge_list_io.hpp"
#include "edgepart/etsch.hpp"
#include "edgepart/graph_stats.hpp"
#include "edgepart/metrics.hpp"
#include "edgepart/partitioning.hpp"

namespace edgepart::formats {

/// "u v partition" per edge in canonical edge order, with original vertex
/// labels.
void write_partitioning(std::ostream& out, const LoadedGraph& loaded, const EdgePartitioning& part);

/// Reads a partitioning file against the graph it was made for. Every edge
/// must appear exactly once. K defaults to max partition id + 1.
/// Throws ParseError / DataError.
EdgePartitioning read_partitioning(std::istream& in, const LoadedGraph& loaded,
                                   std::optional<PartitionId> k = std::nullopt);

/// JSON sidecar written next to a partitioning file.
struct PartitionSidecar {
  std::string algorithm;
  PartitionId k = 0;
  std::uint64_t seed = 0;
  std::string variant;
  std::uint32_t rounds = 0;
  std::vector<std::uint64_t> sizes;
  double max_normalized_size = 0.0;
  double nstdev = 0.0;
};

nlohmann::ordered_json to_json(const PartitionSidecar& s);
PartitionSidecar sidecar_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const GraphStats& s);
nlohmann::ordered_json to_json(const metrics::Report& r);
nlohmann::ordered_json to_json(const etsch::RunReport& r);

/// CSV schema tag, written as the first (comment) line of every table.
inline constexpr const char* kCsvSchema = "# edgepart-csv v1";

/// Column names of a metrics row, in order.
std::vector<std::string> metrics_columns();
/// The row matching metrics_columns(); normalized sizes are ';'-joined.
std::vector<std::string> metrics_row(const metrics::Report& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace edgepart::formats
