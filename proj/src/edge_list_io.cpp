#include "edgepart/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace edgepart {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_space(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_space(rest[e])) ++e;
  std::string_view tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

std::int64_t parse_id(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer vertex id, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

std::optional<VertexId> LoadedGraph::dense_id(std::int64_t original) const {
  auto it = std::lower_bound(original_ids.begin(), original_ids.end(), original);
  if (it == original_ids.end() || *it != original) return std::nullopt;
  return static_cast<VertexId>(it - original_ids.begin());
}

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    std::string_view second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two vertex ids");
    if (!next_token(rest).empty()) throw ParseError(line_no, "trailing fields after edge");
    raw.emplace_back(parse_id(first, line_no), parse_id(second, line_no));
  }

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [a, b] : raw) {
    if (a == b) continue;
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw DataError("graph is empty after cleaning");

  auto index_of = [&ids](std::int64_t x) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a != b) edges.push_back({index_of(a), index_of(b)});
  }
  Graph full = Graph::from_edges(static_cast<VertexId>(ids.size()), std::move(edges));

  // Dense ids ascend with original ids, so "smallest dense id" is also
  // "smallest original id" for the tie rule.
  std::vector<VertexId> kept;
  LoadedGraph out;
  out.graph = largest_component(full, &kept);
  out.original_ids.reserve(kept.size());
  for (VertexId v : kept) out.original_ids.push_back(ids[v]);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::int64_t>* original_ids) {
  for (const Edge& e : g.edges()) {
    if (original_ids != nullptr) {
      out << (*original_ids)[e.u] << ' ' << (*original_ids)[e.v] << '\n';
    } else {
      out << e.u << ' ' << e.v << '\n';
    }
  }
}

}  // namespace edgepart
