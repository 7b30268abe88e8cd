#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace modpart {

// Point of [q]^k, entries in 0..q-1.
struct Coord {
    std::vector<std::uint8_t> e;

    auto operator<=>(const Coord&) const = default;
};

// Finite subset of [q]^k (members sorted, unique).
struct BoxSet {
    int q = 0;
    int k = 0;
    std::vector<Coord> members;

    bool contains(const Coord& c) const;

    static BoxSet full(int q, int k);
    // Members given by set bits of `mask` in base-q index order (q^k <= 63).
    static BoxSet from_mask(int q, int k, std::uint64_t mask);
};

std::uint64_t coord_index(const Coord& c, int q);
Coord coord_from_index(std::uint64_t idx, int q, int k);

// 0/1 matrix with a column per member c' of B; entry (j, c') is 1 iff the
// base coordinate agrees with c' in position j. Viewed over Z/qZ.
struct IncidenceMatrix {
    int q = 0;
    int k = 0;
    std::vector<std::vector<std::uint8_t>> cols; // cols[c][j]
};

IncidenceMatrix incidence_matrix(const Coord& c, const BoxSet& b);

// Size of the subgroup of (Z/qZ)^k generated by the given vectors, by
// breadth-first closure under addition.
std::uint64_t subgroup_size(const std::vector<std::vector<std::uint8_t>>& columns, int q, int k);

// N = q^k / |subgroup generated by the columns of the incidence matrix|.
// Requires c to be a member of B.
std::uint64_t n_value(const Coord& c, const BoxSet& b);

// Brute-force count of a in (Z/qZ)^k with a*M == b (mod q).
std::uint64_t count_congruence_solutions(const IncidenceMatrix& m, const std::vector<std::uint8_t>& b);

// True iff L can be written coordinate-wise as permuted copies of shared free
// variables. Detected via pairwise coordinate projections: a pair (j, j') is
// bound when its projection is the graph of a permutation, and L must equal
// the full solution set of all bound-pair constraints with every
// single-coordinate projection covering [q].
bool is_combinatorial_subspace(const BoxSet& l);

struct SumInequality {
    std::uint64_t sum = 0;
    std::uint64_t bound = 0;
    bool equality = false;
};

// Sum of n_value over the members of L against the bound q^k. Requires q >= 3.
SumInequality verify_sum_inequality(const BoxSet& l);

struct LemmaAuditViolation {
    std::vector<Coord> box_set;
    std::string reason;
};

struct LemmaAuditReport {
    int q = 0;
    int k = 0;
    std::string mode;
    std::uint64_t sets_audited = 0;
    std::uint64_t equality_count = 0;
    std::vector<LemmaAuditViolation> violations;

    bool ok() const { return violations.empty(); }
};

// For every non-empty L in [q]^k checks sum <= q^k and
// (sum == q^k) <=> is_combinatorial_subspace(L). Requires q >= 3 and
// q^k <= 12 so the 2^(q^k)-1 subsets are enumerable.
LemmaAuditReport exhaustive_lemma_audit(int q, int k);
LemmaAuditReport exhaustive_lemma_audit_serial(int q, int k);

// Same checks on `count` random non-empty subsets (independent inclusion with
// probability 1/2, empties rejected), seed-deterministic.
LemmaAuditReport sampled_lemma_audit(int q, int k, std::uint64_t count, std::uint64_t seed);
LemmaAuditReport sampled_lemma_audit_serial(int q, int k, std::uint64_t count, std::uint64_t seed);

nlohmann::ordered_json audit_report_json(const LemmaAuditReport& r);

} // namespace modpart
