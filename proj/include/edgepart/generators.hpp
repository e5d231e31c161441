#pragma once

#include <cstdint>

#include "edgepart/graph.hpp"

namespace edgepart::gen {

Graph path(VertexId n);
Graph cycle(VertexId n);
/// Center 0 with `leaves` leaves.
Graph star(VertexId leaves);
Graph complete(VertexId n);
/// rows x cols 4-neighbour lattice; vertex (r, c) has id r * cols + c.
Graph grid(VertexId rows, VertexId cols);

/// Watts-Strogatz small world: ring lattice with `mean_degree` (even)
/// neighbours, each lattice edge rewired with probability `beta`. The
/// largest connected component is returned.
Graph watts_strogatz(VertexId n, unsigned mean_degree, double beta, std::uint64_t seed);

/// Random spanning tree (each vertex attaches to a uniform earlier vertex)
/// plus `extra_edges` uniform random extra edges. Always connected.
Graph random_connected(VertexId n, std::uint64_t extra_edges, std::uint64_t seed);

}  // namespace edgepart::gen
