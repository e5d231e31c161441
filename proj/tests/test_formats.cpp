#include <gtest/gtest.h>

#include <sstream>

#include "edgepart/baselines.hpp"
#include "edgepart/edge_list_io.hpp"
#include "edgepart/formats.hpp"

using namespace edgepart;

namespace {

LoadedGraph sample_graph() {
  std::istringstream in("10 20\n20 30\n30 10\n30 40\n");
  return load_edge_list(in);
}

EdgePartitioning read(const std::string& text, const LoadedGraph& lg) {
  std::istringstream in(text);
  return formats::read_partitioning(in, lg);
}

}  // namespace

TEST(Formats, PartitioningRoundTrip) {
  auto lg = sample_graph();
  auto part = baselines::random_partition(lg.graph, 3, 1);
  std::ostringstream out;
  formats::write_partitioning(out, lg, part);
  std::istringstream in(out.str());
  EXPECT_EQ(formats::read_partitioning(in, lg, part.num_partitions()), part);
}

TEST(Formats, UsesOriginalLabels) {
  auto lg = sample_graph();
  std::ostringstream out;
  formats::write_partitioning(out, lg, EdgePartitioning(1, {0, 0, 0, 0}));
  EXPECT_EQ(out.str(), "10 20 0\n10 30 0\n20 30 0\n30 40 0\n");
}

TEST(Formats, AcceptsEitherOrientation) {
  auto lg = sample_graph();
  auto p = read("20 10 1\n30 10 0\n# note\n30 20 1\n40 30 0\n", lg);
  EXPECT_EQ(p.num_partitions(), 2u);
  EXPECT_EQ(p.assignment(), (std::vector<PartitionId>{1, 0, 1, 0}));
}

TEST(Formats, Errors) {
  auto lg = sample_graph();
  EXPECT_THROW(read("10 20 0\n10 30 0\n20 30 0\n", lg), DataError);
  try {
    read("10 20 0\n10 40 0\n", lg);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read("10 20 0\n20 10 1\n10 30 0\n20 30 0\n30 40 0\n", lg), ParseError);
  EXPECT_THROW(read("10 20\n", lg), ParseError);
  EXPECT_THROW(read("10 20 -1\n", lg), ParseError);
  std::istringstream in("10 20 0\n10 30 0\n20 30 0\n30 40 5\n");
  EXPECT_THROW(formats::read_partitioning(in, lg, 3), DataError);
}

TEST(Formats, SidecarRoundTrip) {
  formats::PartitionSidecar s;
  s.algorithm = "dfepc";
  s.k = 4;
  s.seed = 99;
  s.variant = "poor-rich";
  s.rounds = 17;
  s.sizes = {3, 4, 5, 6};
  s.nstdev = 0.25;
  s.max_normalized_size = 1.33;
  auto back = formats::sidecar_from_json(nlohmann::json::parse(formats::to_json(s).dump()));
  EXPECT_EQ(back.algorithm, s.algorithm);
  EXPECT_EQ(back.k, s.k);
  EXPECT_EQ(back.seed, s.seed);
  EXPECT_EQ(back.rounds, s.rounds);
  EXPECT_EQ(back.sizes, s.sizes);
  EXPECT_EQ(back.nstdev, s.nstdev);
}

TEST(Formats, DoublesRoundTrip) {
  for (double x : {0.0, 0.1, 1.0 / 3.0, 123456.789, 1e-300}) {
    EXPECT_EQ(std::stod(formats::format_double(x)), x);
  }
  EXPECT_EQ(formats::format_double(0.5), "0.5");
}

TEST(Formats, CsvRowMatchesColumns) {
  metrics::Report r;
  r.k = 2;
  r.normalized_sizes = {1.5, 0.5};
  EXPECT_EQ(formats::metrics_row(r).size(), formats::metrics_columns().size());
  EXPECT_EQ(formats::metrics_row(r)[1], "1.5;0.5");
}
