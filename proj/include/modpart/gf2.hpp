#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "modpart/bitvec.hpp"
#include "modpart/graph.hpp"

namespace modpart {

// Dense matrix over the two-element field, one bit-packed row per BitVec.
struct BitMatrix {
    int rows = 0, cols = 0;
    std::vector<BitVec> row;

    BitMatrix() = default;
    BitMatrix(int r, int c) : rows(r), cols(c), row(static_cast<std::size_t>(r), BitVec(c)) {}

    bool get(int i, int j) const { return row[static_cast<std::size_t>(i)].get(j); }
    void set(int i, int j, bool v = true) { row[static_cast<std::size_t>(i)].set(j, v); }
    void flip(int i, int j) { row[static_cast<std::size_t>(i)].flip(j); }

    BitVec mul(const BitVec& v) const; // M*v, v of length cols

    bool is_symmetric() const;
    bool is_zero() const;

    // All column sums even / odd.
    bool is_even() const;
    bool is_odd() const;

    bool operator==(const BitMatrix& o) const = default;

    static BitMatrix identity(int n);
    static BitMatrix all_ones(int r, int c);
};

// Affine solution set of M*x = b: empty, or particular + span(kernel_basis)
// with exactly 2^nullity elements.
struct SolutionSpace {
    bool consistent = false;
    BitVec particular;
    std::vector<BitVec> kernel_basis;
    int nullity = 0;
    int rank = 0;

    mpz_class solution_count() const;
};

// Row rank by Gaussian elimination on a copy.
int rank(const BitMatrix& m);

SolutionSpace solve_affine(const BitMatrix& m, const BitVec& b);

// The three degree-parity conditions on an unordered bipartition.
enum class Q2Cond { even_even, even_odd, odd_odd };

// Linear system over GF(2) whose solutions are the good ordered bipartitions:
// even/even: (A+D)v = D1, even/odd: (A+D+I)v = D1, odd/odd: (A+D)v = D1+1,
// where A is the adjacency matrix and D = diag(deg(v) mod 2).
std::pair<BitMatrix, BitVec> parity_system(const Graph& g, Q2Cond cond);

// Number of unordered bipartitions {V0, V1} (parts may be empty) whose parts
// satisfy cond. even/even and odd/odd pair solutions v <-> v+1, giving
// 2^(nullity-1) when consistent; even/odd has a unique ordering per
// partition, giving 2^nullity.
mpz_class count_partitions_q2(const Graph& g, Q2Cond cond);

enum class MatrixParity { any, even, odd };

// Uniform random symmetric n x n matrix over GF(2), deterministic per seed.
// parity=even: all column sums 0, sampled through the free (n-1)x(n-1) minor
// whose last row/column are then forced. parity=odd: even sample plus I.
BitMatrix sample_symmetric(int n, std::uint64_t seed, MatrixParity parity = MatrixParity::any);

} // namespace modpart
