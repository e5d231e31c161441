#include "edgepart/rewire.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "edgepart/graph_stats.hpp"

namespace edgepart {
namespace {

class MutableGraph {
 public:
  explicit MutableGraph(const Graph& g) : nbrs_(g.num_vertices()), edges_(g.edges().begin(), g.edges().end()) {
    for (const Edge& e : edges_) {
      nbrs_[e.u].push_back(e.v);
      nbrs_[e.v].push_back(e.u);
      present_.insert(key(e.u, e.v));
    }
    for (auto& list : nbrs_) std::sort(list.begin(), list.end());
  }

  std::vector<Edge>& edges() { return edges_; }
  bool has(VertexId a, VertexId b) const { return present_.count(key(a, b)) != 0; }

  std::uint64_t common_neighbours(VertexId a, VertexId b) const {
    const auto& x = nbrs_[a];
    const auto& y = nbrs_[b];
    std::uint64_t count = 0;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++count;
        ++i;
        ++j;
      }
    }
    return count;
  }

  void add(VertexId a, VertexId b) {
    nbrs_[a].insert(std::lower_bound(nbrs_[a].begin(), nbrs_[a].end(), b), b);
    nbrs_[b].insert(std::lower_bound(nbrs_[b].begin(), nbrs_[b].end(), a), a);
    present_.insert(key(a, b));
  }

  void remove(VertexId a, VertexId b) {
    nbrs_[a].erase(std::lower_bound(nbrs_[a].begin(), nbrs_[a].end(), b));
    nbrs_[b].erase(std::lower_bound(nbrs_[b].begin(), nbrs_[b].end(), a));
    present_.erase(key(a, b));
  }

  bool connected() const {
    const std::size_t n = nbrs_.size();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : nbrs_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++visited;
          stack.push_back(w);
        }
      }
    }
    return visited == n;
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::vector<std::vector<VertexId>> nbrs_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> present_;
};

}  // namespace

RewireResult rewire(const Graph& g, std::uint64_t swap_budget, double triangle_tolerance, std::uint64_t seed,
                    unsigned max_retries) {
  if (triangle_tolerance < 0.0 || triangle_tolerance > 1.0) throw DataError("triangle tolerance must lie in [0, 1]");
  RewireResult result;
  result.original_triangles = count_triangles(g);
  result.final_triangles = result.original_triangles;
  if (swap_budget == 0 || g.num_edges() < 2) {
    result.graph = g;
    return result;
  }

  Rng rng(seed);
  MutableGraph mg(g);
  auto& edges = mg.edges();
  const auto base = static_cast<double>(result.original_triangles);
  const double slack = triangle_tolerance * base;
  std::int64_t triangles = static_cast<std::int64_t>(result.original_triangles);

  unsigned failures = 0;
  while (result.applied_swaps < swap_budget && failures < max_retries) {
    const std::uint64_t i = uniform_below(rng, edges.size());
    std::uint64_t j = uniform_below(rng, edges.size() - 1);
    if (j >= i) ++j;
    const VertexId a = edges[i].u, b = edges[i].v;
    VertexId c = edges[j].u, d = edges[j].v;
    if (rng() & 1) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b || mg.has(a, d) || mg.has(c, b)) {
      ++failures;
      continue;
    }

    std::int64_t t = triangles;
    mg.remove(a, b);
    t -= static_cast<std::int64_t>(mg.common_neighbours(a, b));
    mg.remove(c, d);
    t -= static_cast<std::int64_t>(mg.common_neighbours(c, d));
    t += static_cast<std::int64_t>(mg.common_neighbours(a, d));
    mg.add(a, d);
    t += static_cast<std::int64_t>(mg.common_neighbours(c, b));
    mg.add(c, b);

    const bool within_budget = std::abs(static_cast<double>(t) - base) <= slack;
    if (!within_budget || !mg.connected()) {
      mg.remove(c, b);
      mg.remove(a, d);
      mg.add(c, d);
      mg.add(a, b);
      ++failures;
      continue;
    }
    edges[i] = {std::min(a, d), std::max(a, d)};
    edges[j] = {std::min(c, b), std::max(c, b)};
    triangles = t;
    ++result.applied_swaps;
    failures = 0;
  }

  result.final_triangles = static_cast<std::uint64_t>(triangles);
  result.graph = Graph::from_edges(g.num_vertices(), edges);
  return result;
}

}  // namespace edgepart
