#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgepart/graph.hpp"

namespace edgepart {

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A cleaned graph together with the original id of every dense vertex id.
/// Dense ids follow ascending original id, so the map is monotone.
struct LoadedGraph {
  Graph graph;
  std::vector<std::int64_t> original_ids;

  /// Dense id of an original id, if it survived cleaning.
  std::optional<VertexId> dense_id(std::int64_t original) const;
};

/// Reads a SNAP-style whitespace edge list ('#' comments, LF or CRLF),
/// symmetrizes it, drops self-loops and duplicates, and keeps only the
/// largest connected component (ties: the one with the smallest original id).
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

/// Writes "u v" per edge in canonical order. With `original_ids` the
/// original labels are written instead of dense ids.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::int64_t>* original_ids = nullptr);

}  // namespace edgepart
