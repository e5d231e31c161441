#pragma once

// Reference implementations used only by tests. They work from the raw edge
// list with plain containers and share no code with the library paths they
// check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partitioning.hpp"

namespace oracle {

using AdjList = std::vector<std::vector<std::uint32_t>>;

inline AdjList adjacency(const edgepart::Graph& g) {
  AdjList adj(g.num_vertices());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

inline constexpr std::uint32_t kInf = 0xffffffffu;

inline std::vector<std::uint32_t> bfs(const AdjList& adj, std::uint32_t source) {
  std::vector<std::uint32_t> dist(adj.size(), kInf);
  std::queue<std::uint32_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : adj[u]) {
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

inline std::uint32_t eccentricity(const AdjList& adj, std::uint32_t source) {
  std::uint32_t ecc = 0;
  for (auto d : bfs(adj, source)) ecc = std::max(ecc, d);
  return ecc;
}

/// All-pairs BFS: max finite distance.
inline std::uint32_t diameter(const edgepart::Graph& g) {
  const auto adj = adjacency(g);
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < adj.size(); ++s) best = std::max(best, eccentricity(adj, s));
  return best;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

/// Component representative per vertex (the smallest vertex id in it).
inline std::vector<std::uint32_t> components(const edgepart::Graph& g) {
  UnionFind uf(g.num_vertices());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<std::uint32_t> smallest(g.num_vertices(), kInf);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    auto r = uf.find(v);
    smallest[r] = std::min(smallest[r], v);
  }
  std::vector<std::uint32_t> out(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) out[v] = smallest[uf.find(v)];
  return out;
}

/// True iff two labelings induce the same partition of the vertex set.
template <class A, class B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
  if (a.size() != b.size()) return false;
  std::map<A, B> forward;
  std::map<B, A> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, fi] = forward.emplace(a[i], b[i]);
    auto [r, ri] = backward.emplace(b[i], a[i]);
    if (f->second != b[i] || r->second != a[i]) return false;
  }
  return true;
}

/// Does the edge subset `edges` form one connected piece?
inline bool edges_connected(const edgepart::Graph& g, const std::vector<std::uint32_t>& edges) {
  if (edges.empty()) return true;
  UnionFind uf(g.num_vertices());
  std::set<std::uint32_t> verts;
  for (auto e : edges) {
    uf.unite(g.endpoints(e).u, g.endpoints(e).v);
    verts.insert(g.endpoints(e).u);
    verts.insert(g.endpoints(e).v);
  }
  const auto root = uf.find(*verts.begin());
  return std::all_of(verts.begin(), verts.end(), [&](auto v) { return uf.find(v) == root; });
}

/// Messages by double counting: sum over vertices of their partition
/// multiplicity, for vertices in at least two partitions.
inline std::uint64_t messages_by_vertex(const edgepart::Graph& g, const edgepart::EdgePartitioning& part) {
  std::vector<std::set<std::uint32_t>> parts(g.num_vertices());
  for (std::uint32_t e = 0; e < g.num_edges(); ++e) {
    parts[g.endpoints(e).u].insert(part.partition_of(e));
    parts[g.endpoints(e).v].insert(part.partition_of(e));
  }
  std::uint64_t total = 0;
  for (const auto& p : parts) {
    if (p.size() >= 2) total += p.size();
  }
  return total;
}

/// Triangles by brute force over vertex triples.
inline std::uint64_t triangles(const edgepart::Graph& g) {
  const auto n = g.num_vertices();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  std::uint64_t t = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (m[a][b])
        for (std::uint32_t c = b + 1; c < n; ++c) t += m[a][c] && m[b][c];
  return t;
}

}  // namespace oracle
