#include "modpart/gf2.hpp"

#include <stdexcept>

#include "modpart/rng.hpp"

namespace modpart {

BitVec BitMatrix::mul(const BitVec& v) const {
    if (v.size() != cols) throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
    BitVec out(rows);
    for (int i = 0; i < rows; ++i)
        if (row[static_cast<std::size_t>(i)].dot(v)) out.set(i);
    return out;
}

bool BitMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : row)
        if (r.any()) return false;
    return true;
}

bool BitMatrix::is_even() const {
    BitVec sum(cols);
    for (const auto& r : row) sum.xor_with(r);
    return sum.none();
}

bool BitMatrix::is_odd() const {
    BitVec sum(cols);
    for (const auto& r : row) sum.xor_with(r);
    return sum == BitVec::ones(cols);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::all_ones(int r, int c) {
    BitMatrix m(r, c);
    for (int i = 0; i < r; ++i) m.row[static_cast<std::size_t>(i)] = BitVec::ones(c);
    return m;
}

mpz_class SolutionSpace::solution_count() const {
    if (!consistent) return 0;
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), 2, static_cast<unsigned long>(nullity));
    return c;
}

namespace {

// Reduced row echelon form of [M | rhs], shared by rank and solve.
struct Elimination {
    BitMatrix m;
    BitVec rhs;
    std::vector<int> pivot_cols; // pivot column of row i, for i < rank
    int rank = 0;
};

Elimination eliminate(BitMatrix m, BitVec rhs) {
    Elimination e{std::move(m), std::move(rhs), {}, 0};
    const int rows = e.m.rows, cols = e.m.cols;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (e.m.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::swap(e.m.row[static_cast<std::size_t>(pivot)], e.m.row[static_cast<std::size_t>(r)]);
            bool t = e.rhs.get(pivot);
            e.rhs.set(pivot, e.rhs.get(r));
            e.rhs.set(r, t);
        }
        for (int i = 0; i < rows; ++i) {
            if (i != r && e.m.get(i, col)) {
                e.m.row[static_cast<std::size_t>(i)].xor_with(e.m.row[static_cast<std::size_t>(r)]);
                if (e.rhs.get(r)) e.rhs.flip(i);
            }
        }
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

int rank(const BitMatrix& m) { return eliminate(m, BitVec(m.rows)).rank; }

SolutionSpace solve_affine(const BitMatrix& m, const BitVec& b) {
    if (b.size() != m.rows) throw std::invalid_argument("solve_affine: |b| must equal the row count");
    Elimination e = eliminate(m, b);

    SolutionSpace s;
    s.rank = e.rank;
    s.nullity = m.cols - e.rank;
    for (int i = e.rank; i < m.rows; ++i)
        if (e.rhs.get(i)) return s; // zero row with nonzero rhs

    s.consistent = true;
    s.particular = BitVec(m.cols);
    for (int i = 0; i < e.rank; ++i)
        if (e.rhs.get(i)) s.particular.set(e.pivot_cols[static_cast<std::size_t>(i)]);

    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        BitVec k(m.cols);
        k.set(f);
        for (int i = 0; i < e.rank; ++i)
            if (e.m.get(i, f)) k.set(e.pivot_cols[static_cast<std::size_t>(i)]);
        s.kernel_basis.push_back(std::move(k));
    }
    return s;
}

std::pair<BitMatrix, BitVec> parity_system(const Graph& g, Q2Cond cond) {
    const int n = g.n;
    BitMatrix m(n, n);
    BitVec b(n);
    for (int v = 0; v < n; ++v) {
        m.row[static_cast<std::size_t>(v)] = g.adj[static_cast<std::size_t>(v)];
        bool deg_odd = g.adj[static_cast<std::size_t>(v)].popcount() & 1;
        if (deg_odd) {
            m.flip(v, v); // + D
            b.set(v);     // D1
        }
    }
    switch (cond) {
    case Q2Cond::even_even:
        break;
    case Q2Cond::even_odd:
        for (int v = 0; v < n; ++v) m.flip(v, v); // + I
        break;
    case Q2Cond::odd_odd:
        for (int v = 0; v < n; ++v) b.flip(v); // D1 + 1
        break;
    }
    return {std::move(m), std::move(b)};
}

mpz_class count_partitions_q2(const Graph& g, Q2Cond cond) {
    auto [m, b] = parity_system(g, cond);
    SolutionSpace s = solve_affine(m, b);
    if (!s.consistent) return 0;
    mpz_class c;
    int exponent = s.nullity;
    if (cond != Q2Cond::even_odd) {
        // (A+D)1 = 0, so 1 is in the kernel and solutions pair v <-> v+1.
        if (exponent < 1) throw std::logic_error("count_partitions_q2: kernel must contain the all-ones vector");
        exponent -= 1;
    }
    mpz_ui_pow_ui(c.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    return c;
}

BitMatrix sample_symmetric(int n, std::uint64_t seed, MatrixParity parity) {
    if (n < 1) throw std::invalid_argument("sample_symmetric: n must be >= 1");
    BitMatrix m(n, n);
    BitStream bits(seed);
    const int top = (parity == MatrixParity::any) ? n : n - 1;
    // Entries (i,j), i <= j < top, row-major, one bit each.
    for (int i = 0; i < top; ++i) {
        for (int j = i; j < top; ++j) {
            if (bits.next_bit()) {
                m.set(i, j);
                m.set(j, i);
            }
        }
    }
    if (parity != MatrixParity::any) {
        // Force the last row to make every minor column even, then the last
        // column (including the corner) to make every row even.
        for (int j = 0; j + 1 < n; ++j) {
            bool sum = false;
            for (int i = 0; i + 1 < n; ++i) sum ^= m.get(i, j);
            m.set(n - 1, j, sum);
        }
        for (int i = 0; i < n; ++i) {
            bool sum = false;
            for (int j = 0; j + 1 < n; ++j) sum ^= m.get(i, j);
            m.set(i, n - 1, sum);
        }
    }
    if (parity == MatrixParity::odd)
        for (int i = 0; i < n; ++i) m.flip(i, i);
    return m;
}

} // namespace modpart
