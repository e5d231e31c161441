// edgepart: edge partitioning, partition metrics and edge-partitioned
// graph algorithms from the command line.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 non-convergence.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgepart/algorithms.hpp"
#include "edgepart/dfep.hpp"
#include "edgepart/edge_list_io.hpp"
#include "edgepart/etsch.hpp"
#include "edgepart/formats.hpp"
#include "edgepart/graph_stats.hpp"
#include "edgepart/metrics.hpp"
#include "edgepart/rewire.hpp"
#include "edgepart/sweep.hpp"

namespace {

using namespace edgepart;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNotConverged = 3;

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "csv";
  std::string algorithm = "dfep";
  std::string variant = "plain";
  std::string partitioning;
  std::string dataset;
  std::vector<PartitionId> ks;
  std::vector<std::uint64_t> budgets;
  std::uint64_t seed = 0;
  unsigned samples = 100;
  double p = 2.0;
  std::uint32_t round_cap = 1000;
  unsigned sources = 10;
  unsigned jobs = 1;
  bool exact_diameter = false;
  std::int64_t source = -1;
  std::uint64_t swaps = 0;
  double tolerance = 0.1;
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot write " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string dataset_name(const Options& o) {
  if (!o.dataset.empty()) return o.dataset;
  return std::filesystem::path(o.input).stem().string();
}

Algorithm partition_algorithm(const Options& o) {
  Algorithm a = parse_algorithm(o.algorithm);
  if (o.variant == "poor-rich") {
    if (a != Algorithm::kDfep && a != Algorithm::kDfepc) throw DataError("--variant applies to dfep only");
    a = Algorithm::kDfepc;
  } else if (o.variant != "plain") {
    throw DataError("unknown variant '" + o.variant + "'");
  }
  return a;
}

SweepConfig sweep_config(const Options& o) {
  SweepConfig cfg;
  cfg.dataset = dataset_name(o);
  cfg.algorithm = partition_algorithm(o);
  cfg.ks = o.ks;
  cfg.samples = o.samples;
  cfg.seed_base = o.seed;
  cfg.gain_sources = o.sources;
  cfg.poverty_divisor = o.p;
  cfg.round_cap = o.round_cap;
  cfg.jobs = o.jobs;
  return cfg;
}

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw DataError("--format must be csv or json");
}

int cmd_stats(const Options& o) {
  const auto loaded = load_edge_list_file(o.input);
  StatsOptions so;
  so.force_exact_diameter = o.exact_diameter;
  so.jobs = o.jobs;
  const GraphStats s = compute_stats(loaded.graph, so);
  Sink sink(o.output);
  sink.out() << formats::to_json(s).dump(2) << '\n';
  return 0;
}

int cmd_rewire(const Options& o) {
  const auto loaded = load_edge_list_file(o.input);
  const auto r = rewire(loaded.graph, o.swaps, o.tolerance, o.seed);
  Sink sink(o.output);
  write_edge_list(sink.out(), r.graph, &loaded.original_ids);
  nlohmann::ordered_json j;
  j["swap_budget"] = o.swaps;
  j["applied_swaps"] = r.applied_swaps;
  j["triangles_before"] = r.original_triangles;
  j["triangles_after"] = r.final_triangles;
  if (o.output.empty()) {
    std::cerr << j.dump() << '\n';
  } else {
    write_json_file(o.output + ".json", j);
  }
  return 0;
}

int cmd_partition(const Options& o) {
  const auto loaded = load_edge_list_file(o.input);
  PartitionerOptions po;
  po.algorithm = partition_algorithm(o);
  if (o.ks.size() != 1) throw DataError("partition takes exactly one --k");
  po.k = o.ks.front();
  po.seed = o.seed;
  po.poverty_divisor = o.p;
  po.round_cap = o.round_cap;
  PartitionOutcome outcome;
  try {
    outcome = partition_graph(loaded.graph, po);
  } catch (const dfep::NotConvergedError& e) {
    throw NonConvergence(e.what());
  }

  {
    Sink sink(o.output);
    formats::write_partitioning(sink.out(), loaded, outcome.partitioning);
  }
  formats::PartitionSidecar side;
  side.algorithm = to_string(po.algorithm);
  side.k = po.k;
  side.seed = po.seed;
  side.variant = po.algorithm == Algorithm::kDfepc ? "poor-rich" : "plain";
  side.rounds = outcome.rounds;
  side.sizes = outcome.partitioning.sizes();
  const auto b = metrics::balance(outcome.partitioning);
  side.max_normalized_size = b.max_normalized_size;
  side.nstdev = b.nstdev;
  write_json_file(o.output + ".json", formats::to_json(side));
  return 0;
}

struct LoadedPartitioning {
  EdgePartitioning partitioning;
  std::uint32_t rounds = 0;
};

LoadedPartitioning load_partitioning(const Options& o, const LoadedGraph& loaded) {
  std::optional<PartitionId> k;
  LoadedPartitioning out;
  const std::string sidecar = o.partitioning + ".json";
  if (std::filesystem::exists(sidecar)) {
    std::ifstream in(sidecar);
    try {
      const auto side = formats::sidecar_from_json(nlohmann::json::parse(in));
      k = side.k;
      out.rounds = side.rounds;
    } catch (const nlohmann::json::exception& e) {
      throw DataError(sidecar + ": " + e.what());
    }
  }
  std::ifstream in(o.partitioning);
  if (!in) throw DataError("cannot open " + o.partitioning);
  out.partitioning = formats::read_partitioning(in, loaded, k);
  return out;
}

int cmd_metrics(const Options& o) {
  check_format(o);
  const auto loaded = load_edge_list_file(o.input);
  const auto part = load_partitioning(o, loaded);
  const auto report = metrics::evaluate(part.partitioning, loaded.graph, part.rounds, o.sources, o.seed);
  Sink sink(o.output);
  if (o.format == "json") {
    sink.out() << formats::to_json(report).dump(2) << '\n';
  } else {
    sink.out() << formats::kCsvSchema << '\n';
    formats::write_csv_line(sink.out(), formats::metrics_columns());
    formats::write_csv_line(sink.out(), formats::metrics_row(report));
  }
  return 0;
}

int cmd_run(const Options& o) {
  const auto loaded = load_edge_list_file(o.input);
  const auto part = load_partitioning(o, loaded);
  const auto views = etsch::build_views(loaded.graph, part.partitioning);
  etsch::RunOptions ro;
  ro.max_rounds = o.round_cap;

  std::vector<std::string> values(loaded.graph.num_vertices());
  etsch::RunReport report;
  try {
    if (o.algorithm == "sssp") {
      if (o.source < 0) throw DataError("sssp needs --source");
      const auto source = loaded.dense_id(o.source);
      if (!source) throw DataError("source " + std::to_string(o.source) + " is not in the graph");
      auto r = etsch::sssp(views, *source, ro);
      for (VertexId v = 0; v < values.size(); ++v) {
        values[v] = r.dist[v] == etsch::kInfinity ? "inf" : std::to_string(r.dist[v]);
      }
      report = std::move(r.report);
    } else if (o.algorithm == "cc") {
      auto r = etsch::connected_components(views, o.seed, ro);
      // The component is named after the vertex holding its minimum identifier.
      for (VertexId v = 0; v < values.size(); ++v) values[v] = std::to_string(loaded.original_ids[r.id[v].vertex]);
      report = std::move(r.report);
    } else {
      throw DataError("run --algorithm must be sssp or cc");
    }
  } catch (const etsch::NotConvergedError<std::uint32_t>& e) {
    throw NonConvergence(e.what());
  } catch (const etsch::NotConvergedError<etsch::ComponentId>& e) {
    throw NonConvergence(e.what());
  }

  Sink sink(o.output);
  for (VertexId v = 0; v < values.size(); ++v) sink.out() << loaded.original_ids[v] << ' ' << values[v] << '\n';
  const auto j = formats::to_json(report);
  if (o.output.empty()) {
    std::cerr << j.dump() << '\n';
  } else {
    write_json_file(o.output + ".json", j);
  }
  return 0;
}

void write_table(const Options& o, const std::vector<std::string>& columns,
                 const std::vector<std::vector<std::string>>& rows) {
  Sink sink(o.output);
  if (o.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
      arr.push_back(std::move(obj));
    }
    sink.out() << arr.dump(2) << '\n';
    return;
  }
  sink.out() << formats::kCsvSchema << '\n';
  formats::write_csv_line(sink.out(), columns);
  for (const auto& row : rows) formats::write_csv_line(sink.out(), row);
}

int cmd_sweep_k(const Options& o) {
  check_format(o);
  const auto loaded = load_edge_list_file(o.input);
  std::vector<SweepRow> rows;
  try {
    rows = sweep_k(loaded.graph, sweep_config(o));
  } catch (const dfep::NotConvergedError& e) {
    throw NonConvergence(e.what());
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) table.push_back(sweep_row_fields(r));
  write_table(o, sweep_columns(), table);
  return 0;
}

int cmd_sweep_diameter(const Options& o) {
  check_format(o);
  const auto loaded = load_edge_list_file(o.input);
  std::vector<FamilyMember> family;
  try {
    family = sweep_diameter(loaded.graph, o.budgets, o.tolerance, o.seed, sweep_config(o));
  } catch (const dfep::NotConvergedError& e) {
    throw NonConvergence(e.what());
  }
  std::vector<std::string> columns{"swap_budget", "applied_swaps", "diameter"};
  for (const auto& c : sweep_columns()) columns.push_back(c);
  std::vector<std::vector<std::string>> table;
  for (const auto& member : family) {
    for (const auto& r : member.rows) {
      std::vector<std::string> row{std::to_string(member.swap_budget), std::to_string(member.applied_swaps),
                                   std::to_string(member.diameter)};
      for (auto& f : sweep_row_fields(r)) row.push_back(std::move(f));
      table.push_back(std::move(row));
    }
  }
  write_table(o, columns, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge partitioning (funding auction), partition metrics and edge-partitioned graph algorithms"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("--input", o.input, "SNAP edge list")->required(); };
  auto add_output = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--output", o.output, "Output file");
    if (required) opt->required();
  };
  auto add_partitioner = [&](CLI::App* cmd) {
    cmd->add_option("--algorithm", o.algorithm, "dfep, dfepc, random, hash or naive");
    cmd->add_option("--variant", o.variant, "plain or poor-rich (dfep only)");
    cmd->add_option("--p", o.p, "Poverty divisor for poor-rich");
    cmd->add_option("--round-cap", o.round_cap, "Maximum partitioner rounds");
    cmd->add_option("--seed", o.seed, "Random seed");
  };
  auto add_sweep = [&](CLI::App* cmd) {
    add_partitioner(cmd);
    cmd->add_option("--samples", o.samples, "Samples per K")->check(CLI::PositiveNumber);
    cmd->add_option("--sources", o.sources, "Random sources averaged for gain");
    cmd->add_option("--jobs", o.jobs, "Worker threads");
    cmd->add_option("--format", o.format, "csv or json");
    cmd->add_option("--dataset", o.dataset, "Dataset label (defaults to the input file stem)");
  };

  auto* stats = app.add_subcommand("stats", "Graph statistics as JSON");
  add_input(stats);
  add_output(stats, false);
  stats->add_flag("--exact-diameter", o.exact_diameter, "Force all-pairs BFS diameter");
  stats->add_option("--jobs", o.jobs, "Worker threads");

  auto* rew = app.add_subcommand("rewire", "Degree-preserving rewiring");
  add_input(rew);
  add_output(rew, false);
  rew->add_option("--swaps", o.swaps, "Swap budget")->required();
  rew->add_option("--tolerance", o.tolerance, "Allowed relative triangle drift")->check(CLI::Range(0.0, 1.0));
  rew->add_option("--seed", o.seed, "Random seed");

  auto* part = app.add_subcommand("partition", "Partition the edges");
  add_input(part);
  add_output(part, true);
  add_partitioner(part);
  part->add_option("--k", o.ks, "Number of partitions")->required()->delimiter(',');

  auto* met = app.add_subcommand("metrics", "Quality metrics of a partitioning");
  add_input(met);
  add_output(met, false);
  met->add_option("--partitioning", o.partitioning, "Partitioning file")->required();
  met->add_option("--sources", o.sources, "Random sources averaged for gain");
  met->add_option("--seed", o.seed, "Seed for source selection");
  met->add_option("--format", o.format, "csv or json");

  auto* run = app.add_subcommand("run", "Run sssp or cc over a partitioning");
  add_input(run);
  add_output(run, false);
  run->add_option("--partitioning", o.partitioning, "Partitioning file")->required();
  run->add_option("--algorithm", o.algorithm, "sssp or cc")->required();
  run->add_option("--source", o.source, "Source vertex (original label) for sssp");
  run->add_option("--seed", o.seed, "Seed for component identifiers");
  run->add_option("--round-cap", o.round_cap, "Maximum macro-rounds");

  auto* swk = app.add_subcommand("sweep-k", "Metrics over a list of K values");
  add_input(swk);
  add_output(swk, false);
  add_sweep(swk);
  swk->add_option("--k", o.ks, "Comma-separated K values")->required()->delimiter(',');

  auto* swd = app.add_subcommand("sweep-diameter", "Metrics over a rewired family of graphs");
  add_input(swd);
  add_output(swd, false);
  add_sweep(swd);
  swd->add_option("--k", o.ks, "Comma-separated K values (default 20)")->delimiter(',');
  swd->add_option("--budgets", o.budgets, "Comma-separated swap budgets")->required()->delimiter(',');
  swd->add_option("--tolerance", o.tolerance, "Allowed relative triangle drift")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*stats) return cmd_stats(o);
    if (*rew) return cmd_rewire(o);
    if (*part) return cmd_partition(o);
    if (*met) return cmd_metrics(o);
    if (*run) return cmd_run(o);
    if (*swk) return cmd_sweep_k(o);
    if (*swd) {
      if (o.ks.empty()) o.ks = {20};
      return cmd_sweep_diameter(o);
    }
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
