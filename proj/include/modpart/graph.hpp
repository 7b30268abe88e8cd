#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modpart/bitvec.hpp"

namespace modpart {

// A set of vertices of a graph on n vertices (0-indexed internally; all file
// formats and printed output are 1-indexed).
using VertexSet = BitVec;

// Simple undirected graph with bit-packed adjacency rows. Immutable by
// convention once built; safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<BitVec> adj; // adj[v] bit u set iff uv is an edge

    Graph() = default;
    explicit Graph(int n);

    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)].get(v); }

    // Maintains symmetry; rejects loops.
    void add_edge(int u, int v);

    int edge_count() const;

    bool operator==(const Graph& o) const = default;

    static Graph complete(int n);
};

// G(n,p) with exact rational p, deterministic in (n, p, seed): pair (u,v),
// u < v, taken in row-major order consumes draw mix64(seed, index); the edge
// is present iff draw/2^64 < p (exact for p = 0, 1 and any den | 2^64).
Graph sample_gnp(int n, const mpq_class& p, std::uint64_t seed);

// Degree sequence: entry v is the popcount of adjacency row v.
std::vector<int> degrees(const Graph& g);

// Number of neighbours of v inside `part`. Requires v in part.
int induced_degree(const Graph& g, const VertexSet& part, int v);

// Edge-list text format: header "n m", then one "u v" per line, 1-indexed.
// Canonical form has u < v and lines sorted; the parser accepts any order
// but rejects loops, duplicates and out-of-range vertices, reporting the
// offending line number.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

} // namespace modpart
