#include "modpart/moments.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "modpart/cyclo.hpp"

namespace modpart {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Visits every (n_0,...,n_{q-1}) with non-negative entries summing to m.
template <typename F>
void for_each_type(int m, int q, std::vector<int>& counts, int pos, int left, F&& fn) {
    if (pos == q - 1) {
        counts[static_cast<std::size_t>(pos)] = left;
        fn(counts);
        return;
    }
    for (int v = 0; v <= left; ++v) {
        counts[static_cast<std::size_t>(pos)] = v;
        for_each_type(m, q, counts, pos + 1, left - v, fn);
    }
}

} // namespace

mpq_class prob_all_degrees_congruent(int m, int q, int x) {
    if (q < 2) throw std::invalid_argument("prob_all_degrees_congruent: q must be >= 2");
    if (x < 0 || x >= q) throw std::invalid_argument("prob_all_degrees_congruent: residue out of range");
    if (m < 0) throw std::invalid_argument("prob_all_degrees_congruent: m must be >= 0");
    if (m == 0) return 1;

    const mpq_class half(1, 2);
    CycloValue sum(q);
    std::vector<int> counts(static_cast<std::size_t>(q));
    for_each_type(m, q, counts, 0, m, [&](const std::vector<int>& n) {
        // multinomial(m; n) as a product of binomials
        mpz_class mult = 1;
        int rem = m;
        long twist = 0;
        for (int j = 0; j < q; ++j) {
            mult *= binom(static_cast<unsigned long>(rem), static_cast<unsigned long>(n[static_cast<std::size_t>(j)]));
            rem -= n[static_cast<std::size_t>(j)];
            twist += static_cast<long>(j) * n[static_cast<std::size_t>(j)];
        }
        CycloValue term = CycloValue::rational(q, mpq_class(mult));
        term *= CycloValue::root_power(q, -static_cast<long>(x) * twist);
        for (int j = 0; j < q; ++j) {
            const int nj = n[static_cast<std::size_t>(j)];
            if (nj == 0) continue;
            for (int l = j; l < q; ++l) {
                const int nl = n[static_cast<std::size_t>(l)];
                if (nl == 0) continue;
                unsigned long pairs = (j == l) ? static_cast<unsigned long>(nj) * (nj - 1) / 2
                                               : static_cast<unsigned long>(nj) * nl;
                if (pairs == 0) continue;
                CycloValue base = CycloValue::rational(q, 1) + CycloValue::root_power(q, j + l);
                base *= half;
                term *= base.pow(pairs);
            }
        }
        sum += term;
    });
    mpq_class scale(mpz_class(1), pow_mpz(static_cast<unsigned long>(q), static_cast<unsigned long>(m)));
    scale.canonicalize();
    sum *= scale;
    return sum.to_rational();
}

namespace {

// Sum over labeled compositions of `remaining` into the slots from slot_idx
// on, of prod_i C(remaining_i, s_i) * p[residue_i][s_i].
void composition_sum(const std::vector<int>& slot_residue, const std::vector<std::vector<mpq_class>>& prob,
                     std::size_t slot_idx, int remaining, const mpq_class& acc, mpq_class& total) {
    const int slots_left = static_cast<int>(slot_residue.size() - slot_idx);
    if (slots_left == 0) {
        if (remaining == 0) total += acc;
        return;
    }
    for (int s = 1; s <= remaining - (slots_left - 1); ++s) {
        mpq_class factor =
            mpq_class(binom(static_cast<unsigned long>(remaining), static_cast<unsigned long>(s))) *
            prob[static_cast<std::size_t>(slot_residue[slot_idx])][static_cast<std::size_t>(s)];
        composition_sum(slot_residue, prob, slot_idx + 1, remaining - s, acc * factor, total);
    }
}

} // namespace

mpq_class expected_count(int n, const PartitionSpec& spec) {
    if (n < 1) throw std::invalid_argument("expected_count: n must be >= 1");
    const int q = spec.q;

    // Cost guard: composition leaves (sum over part-count vectors of
    // C(n-1, K-1)) plus the root-assignment types behind the probability
    // tables (C(m+q-1, q-1) per needed (residue, m)).
    mpz_class budget = 0;
    {
        std::vector<int> k(static_cast<std::size_t>(q), 0);
        bool done = false;
        while (!done) {
            int total_k = 0;
            for (int v : k) total_k += v;
            if (total_k > 0) budget += binom(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(total_k - 1));
            int j = 0;
            for (; j < q; ++j) {
                if (++k[static_cast<std::size_t>(j)] <= spec.a[static_cast<std::size_t>(j)]) break;
                k[static_cast<std::size_t>(j)] = 0;
            }
            done = j == q;
        }
        int used_residues = 0;
        for (int x = 0; x < q; ++x)
            if (spec.a[static_cast<std::size_t>(x)] > 0) ++used_residues;
        mpz_class table_terms = 0;
        for (int m = 1; m <= n; ++m)
            table_terms += binom(static_cast<unsigned long>(m + q - 1), static_cast<unsigned long>(q - 1));
        budget += used_residues * table_terms;
        if (budget > 5'000'000)
            throw std::invalid_argument("expected_count: work budget " + budget.get_str() +
                                        " exceeds 5e6 terms; reduce n or the multiplicities");
    }

    // p[x][m] for residues that occur; unused residues stay empty.
    std::vector<std::vector<mpq_class>> prob(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x) {
        if (spec.a[static_cast<std::size_t>(x)] == 0) continue;
        auto& row = prob[static_cast<std::size_t>(x)];
        row.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int m = 1; m <= n; ++m) row[static_cast<std::size_t>(m)] = prob_all_degrees_congruent(m, q, x);
    }

    mpq_class expectation = 0;
    std::vector<int> k(static_cast<std::size_t>(q), 0);
    while (true) {
        int total_k = 0;
        for (int v : k) total_k += v;
        if (total_k > 0 && total_k <= n) {
            std::vector<int> slot_residue;
            mpz_class sym = 1;
            for (int x = 0; x < q; ++x) {
                for (int i = 0; i < k[static_cast<std::size_t>(x)]; ++i) slot_residue.push_back(x);
                mpz_class f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k[static_cast<std::size_t>(x)]));
                sym *= f;
            }
            mpq_class partial = 0;
            composition_sum(slot_residue, prob, 0, n, 1, partial);
            mpq_class weight(mpz_class(1), sym);
            weight.canonicalize();
            expectation += partial * weight;
        }
        int j = 0;
        for (; j < q; ++j) {
            if (++k[static_cast<std::size_t>(j)] <= spec.a[static_cast<std::size_t>(j)]) break;
            k[static_cast<std::size_t>(j)] = 0;
        }
        if (j == q) break;
    }
    return expectation;
}

mpz_class ordered_partition_count_P(int n, int q, int c) {
    if (n < 0 || q < 1 || c < 0 || c > q) throw std::invalid_argument("ordered_partition_count_P: bad arguments");
    const int odd_parts = q - c;
    mpz_class sum = 0;
    for (int i = 0; i <= odd_parts; ++i) {
        mpz_class base = q - 2 * i;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
        sum += binom(static_cast<unsigned long>(odd_parts), static_cast<unsigned long>(i)) * power;
    }
    if (mpz_divisible_2exp_p(sum.get_mpz_t(), static_cast<mp_bitcnt_t>(odd_parts)) == 0)
        throw std::logic_error("ordered_partition_count_P: sum not divisible by 2^(q-c)");
    mpz_class result;
    mpz_tdiv_q_2exp(result.get_mpz_t(), sum.get_mpz_t(), static_cast<mp_bitcnt_t>(odd_parts));
    return result;
}

ConflictBoundReport conflict_bound_check(int q_max) {
    if (q_max < 3) throw std::invalid_argument("conflict_bound_check: q_max must be >= 3");
    ConflictBoundReport report;
    report.q_max = q_max;
    report.all_hold = true;
    const double pi = std::acos(-1.0);
    bool first = true;
    for (int q = 3; q <= q_max; ++q) {
        std::complex<double> zeta = std::polar(1.0, 2 * pi / q);
        ConflictBoundRow row;
        row.q = q;
        row.half_one_plus_zeta = std::abs((1.0 + zeta) / 2.0);
        row.cos_value = std::cos(pi / q);
        row.bound = std::exp(-1.0 / (static_cast<double>(q) * q));
        row.holds = row.cos_value <= row.bound && std::abs(row.half_one_plus_zeta - row.cos_value) < 1e-12;
        report.all_hold = report.all_hold && row.holds;
        double slack = row.bound - row.cos_value;
        if (first || slack < report.min_slack) report.min_slack = slack;
        if (first || slack > report.max_slack) report.max_slack = slack;
        first = false;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace modpart
