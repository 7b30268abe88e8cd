#pragma once

#include <vector>

#include <gmpxx.h>

#include "modpart/partition.hpp"

namespace modpart {

// Exact Pr[every degree of G(m,1/2) is congruent to x mod q], evaluated with
// roots of unity grouped by assignment type: q^{-m} sum over counts
// (n_0,...,n_{q-1}) of multinomial(m;n) * z^{-x*sum(j*n_j)}
// * prod_{j<l} ((1+z^{j+l})/2)^{n_j n_l} * prod_j ((1+z^{2j})/2)^{C(n_j,2)},
// reduced to a rational through the q-th cyclotomic polynomial. m=0 gives 1.
mpq_class prob_all_degrees_congruent(int m, int q, int x);

// Exact E[X_n] for G(n,1/2) and the given residue multiplicities: sum over
// per-residue non-empty part counts k_x <= a_x and labeled compositions of n,
// of multinomial(n; sizes) * prod p(size, q, residue) * prod 1/k_x!.
mpq_class expected_count(int n, const PartitionSpec& spec);

// Number of ordered partitions of [n] into q labeled, possibly empty parts
// with the first q-c parts of even size: 2^{-(q-c)} sum_i C(q-c,i)(q-2i)^n.
mpz_class ordered_partition_count_P(int n, int q, int c);

struct ConflictBoundRow {
    int q;
    double half_one_plus_zeta; // |(1 + e^{2 pi i/q})/2|
    double cos_value;          // cos(pi/q)
    double bound;              // e^{-1/q^2}
    bool holds;
};

struct ConflictBoundReport {
    int q_max = 0;
    bool all_hold = false;
    double min_slack = 0; // min over q of bound - cos
    double max_slack = 0;
    std::vector<ConflictBoundRow> rows;
};

// Checks |(1+zeta_q)/2| = cos(pi/q) <= e^{-1/q^2} numerically for q = 3..q_max.
ConflictBoundReport conflict_bound_check(int q_max);

} // namespace modpart
