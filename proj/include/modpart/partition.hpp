#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modpart/gf2.hpp"
#include "modpart/graph.hpp"

namespace modpart {

// Residue multiplicities (a_0, ..., a_{q-1}) with sum q: a_x parts whose
// induced degrees must all be congruent to x mod q.
struct PartitionSpec {
    int q = 0;
    std::vector<int> a;

    static PartitionSpec make(int q, std::vector<int> a);

    // Parts with an even residue condition (a_0 + a_2 + ...).
    int even_condition_parts() const;

    bool is_q2() const { return q == 2; }
    Q2Cond q2_cond() const; // valid for q = 2 only
};

// Unordered good partition in canonical form: per residue the set of its
// non-empty parts, each set sorted by minimum vertex. Duplicate empty parts
// collapse; the number of empty slots is implied by the spec.
struct CanonicalPartition {
    std::vector<std::vector<VertexSet>> parts_by_residue; // size q

    // Byte key identifying the partition; equal partitions share keys.
    std::string key() const;

    std::string to_string() const; // residue-tagged 1-indexed vertex sets
};

// True iff every vertex's induced degree inside its own part is congruent to
// that part's residue mod q. Empty residue classes are vacuously good.
// Requires P well-formed for spec (disjoint parts covering all vertices, at
// most a_x parts per residue).
bool is_good(const Graph& g, const CanonicalPartition& p, const PartitionSpec& spec);

// All distinct canonical good partitions by exhaustive assignment of vertices
// to the q labeled slots. Guard: q^n <= 2^24.
std::vector<CanonicalPartition> enumerate_good(const Graph& g, const PartitionSpec& spec);
std::vector<CanonicalPartition> enumerate_good_serial(const Graph& g, const PartitionSpec& spec);

// |enumerate_good| without materialising the partitions.
std::uint64_t count_good(const Graph& g, const PartitionSpec& spec);
std::uint64_t count_good_serial(const Graph& g, const PartitionSpec& spec);

} // namespace modpart
