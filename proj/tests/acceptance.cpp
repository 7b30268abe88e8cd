// Acceptance suite: every exit criterion computed from scratch at its stated
// tolerance, one PASS/FAIL line per criterion plus a short detail trail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "modpart/dist_q2.hpp"
#include "modpart/experiment.hpp"
#include "modpart/gf2.hpp"
#include "modpart/modq.hpp"
#include "modpart/moments.hpp"
#include "modpart/partition.hpp"
#include "modpart/rng.hpp"
#include "oracles.hpp"

using namespace modpart;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::ostream&)> check;
};

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// 1: n=4 exhaustive histograms equal the three exact distributions.
bool criterion1(std::ostream& log) {
    bool ok = true;
    ok &= same_distribution(oracle::count_histogram_bruteforce(4, PartitionSpec::make(2, {2, 0})), dist_even_even(4));
    ok &= same_distribution(oracle::count_histogram_bruteforce(4, PartitionSpec::make(2, {1, 1})), dist_even_odd(4));
    ok &= same_distribution(oracle::count_histogram_bruteforce(4, PartitionSpec::make(2, {0, 2})), dist_odd_odd(4));
    log << "64-graph histograms vs theorem formulas, exact rational equality: " << (ok ? "equal" : "MISMATCH");
    return ok;
}

// 2: n=5 exhaustive histograms for the even/even and even/odd conditions.
bool criterion2(std::ostream& log) {
    bool ok = true;
    ok &= same_distribution(oracle::count_histogram_bruteforce(5, PartitionSpec::make(2, {2, 0})), dist_even_even(5));
    ok &= same_distribution(oracle::count_histogram_bruteforce(5, PartitionSpec::make(2, {1, 1})), dist_even_odd(5));
    log << "1024-graph histograms vs theorem formulas: " << (ok ? "equal" : "MISMATCH");
    return ok;
}

// 3: GF(2) vs brute force on all graphs n <= 4 and 200 random graphs n in 5..8.
bool criterion3(std::ostream& log) {
    const std::vector<PartitionSpec> specs = {PartitionSpec::make(2, {2, 0}), PartitionSpec::make(2, {1, 1}),
                                              PartitionSpec::make(2, {0, 2})};
    std::uint64_t graphs = 0, mismatches = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : oracle::all_graphs(n)) {
            ++graphs;
            for (const auto& spec : specs)
                if (mpz_class(static_cast<unsigned long>(count_good_serial(g, spec))) !=
                    count_partitions_q2(g, spec.q2_cond()))
                    ++mismatches;
        }
    }
    for (std::uint64_t i = 0; i < 200; ++i) {
        int n = 5 + static_cast<int>(i % 4);
        Graph g = sample_gnp(n, mpq_class(1, 2), 424200 + i);
        ++graphs;
        for (const auto& spec : specs)
            if (mpz_class(static_cast<unsigned long>(count_good_serial(g, spec))) !=
                count_partitions_q2(g, spec.q2_cond()))
                ++mismatches;
    }
    log << graphs << " graphs x 3 conditions, " << mismatches << " engine disagreements";
    return mismatches == 0;
}

// 4: MacWilliams rank counts against full enumeration for n <= 4.
bool criterion4(std::ostream& log) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        const int bits = n * (n - 1) / 2 + n;
        std::vector<mpz_class> hist(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask)
            ++hist[static_cast<std::size_t>(rank(oracle::symmetric_from_mask(n, mask)))];
        for (int r = 0; r <= n; ++r) ok &= hist[static_cast<std::size_t>(r)] == symmetric_rank_count(n, r);
    }
    log << "all 2^(C(n,2)+n) symmetric matrices for n<=4 (n=2 gives 1,3,4): " << (ok ? "counts match" : "MISMATCH");
    return ok;
}

// 5: solution counting dichotomy for q in {2,3,4,6}, k <= 3.
bool criterion5(std::ostream& log) {
    std::uint64_t checked = 0, failures = 0;
    for (int q : {2, 3, 4, 6}) {
        for (int k = 1; k <= 3; ++k) {
            std::uint64_t points = 1;
            for (int i = 0; i < k; ++i) points *= static_cast<std::uint64_t>(q);
            for (int rep = 0; rep < 50; ++rep) {
                std::uint64_t seed = mix64(5000 + static_cast<std::uint64_t>(q) * 100 + static_cast<std::uint64_t>(k),
                                           static_cast<std::uint64_t>(rep));
                BitStream bits(seed);
                BoxSet b{q, k, {}};
                for (std::uint64_t i = 0; i < points; ++i)
                    if (bits.next_bit()) b.members.push_back(coord_from_index(i, q, k));
                if (b.members.empty()) b.members.push_back(coord_from_index(mix64(seed, 7) % points, q, k));
                const Coord& c = b.members[mix64(seed, 1) % b.members.size()];
                IncidenceMatrix m = incidence_matrix(c, b);
                std::uint64_t n = n_value(c, b);

                std::vector<std::uint8_t> rhs(m.cols.size());
                // half random rhs, half rhs = a0*M to exercise the nonzero branch
                if (rep % 2 == 0) {
                    for (std::size_t i = 0; i < rhs.size(); ++i)
                        rhs[i] = static_cast<std::uint8_t>(mix64(seed, 100 + i) % static_cast<std::uint64_t>(q));
                } else {
                    Coord a0 = coord_from_index(mix64(seed, 2) % points, q, k);
                    for (std::size_t col = 0; col < m.cols.size(); ++col) {
                        int dot = 0;
                        for (int j = 0; j < k; ++j)
                            dot += a0.e[static_cast<std::size_t>(j)] * m.cols[col][static_cast<std::size_t>(j)];
                        rhs[col] = static_cast<std::uint8_t>(dot % q);
                    }
                }
                std::uint64_t solutions = count_congruence_solutions(m, rhs);
                ++checked;
                if (solutions != 0 && solutions != n) ++failures;
                if (rep % 2 == 1 && solutions != n) ++failures;
            }
        }
    }
    log << checked << " (M,b) pairs, counts always in {0, q^k/|subgroup|}, " << failures << " failures";
    return failures == 0;
}

// 6: exhaustive audit of the sum inequality over [3]^2.
bool criterion6(std::ostream& log) {
    LemmaAuditReport report = exhaustive_lemma_audit(3, 2);
    auto expected_masks = oracle::combinatorial_subspace_masks(3, 2);
    bool detector_ok = true;
    for (std::uint64_t mask = 1; mask < (1ull << 9); ++mask) {
        BoxSet l = BoxSet::from_mask(3, 2, mask);
        if (is_combinatorial_subspace(l) != (expected_masks.count(mask) > 0)) detector_ok = false;
    }
    log << report.sets_audited << " sets audited, " << report.violations.size() << " violations, equality on "
        << report.equality_count << " sets vs " << expected_masks.size()
        << " representation-enumerated subspaces, detector " << (detector_ok ? "agrees" : "DISAGREES");
    return report.sets_audited == 511 && report.violations.empty() &&
           report.equality_count == expected_masks.size() && detector_ok;
}

// 7: Fourier probabilities equal brute-force enumeration, m <= 5, q <= 5.
bool criterion7(std::ostream& log) {
    std::uint64_t checked = 0, failures = 0;
    for (int q = 2; q <= 5; ++q)
        for (int m = 1; m <= 5; ++m)
            for (int x = 0; x < q; ++x) {
                ++checked;
                // to_rational throws on a non-constant cyclotomic remainder
                if (prob_all_degrees_congruent(m, q, x) != oracle::prob_all_degrees_bruteforce(m, q, x)) ++failures;
            }
    log << checked << " (m,q,x) triples vs graph enumeration, every cyclotomic reduction constant, " << failures
        << " failures";
    return failures == 0;
}

// 8: first-moment convergence for q=3, spec (3,0,0) at n = 10,20,30,40.
bool criterion8(std::ostream& log) {
    PartitionSpec spec = PartitionSpec::make(3, {3, 0, 0});
    std::vector<double> dev;
    for (int n : {10, 20, 30, 40}) {
        mpq_class e = expected_count(n, spec);
        dev.push_back(std::abs(mpq_class(6 * e - 1).get_d()));
    }
    bool monotone = dev[0] > dev[1] && dev[1] > dev[2] && dev[2] > dev[3];
    bool close = dev[3] < 1e-3;
    std::ostringstream devs;
    for (double d : dev) devs << d << " ";
    log << "|6 E[X_n] - 1| at n=10,20,30,40: " << devs.str() << (monotone ? "(monotone decrease)" : "(NOT monotone)");
    if (!close)
        log << "; the stated 1e-3 tolerance at n=40 is unattainable: the exact deviation decays like n*2^(-n/3) "
               "and first drops below 1e-3 between n=50 and n=55";
    return monotone && close;
}

// 9: Monte Carlo for n=24, odd/odd, 1e5 trials within TV 0.02 of the theorem.
bool criterion9(std::ostream& log) {
    ExperimentConfig cfg;
    cfg.n = 24;
    cfg.spec = PartitionSpec::make(2, {0, 2});
    cfg.trials = 100000;
    cfg.seed = 20240;
    EmpiricalPMF pmf = run_trials(cfg);
    double tv = tv_distance(pmf, dist_odd_odd(24)).get_d();
    log << "TV(empirical, exact) = " << tv << " (threshold 0.02)";
    return tv < 0.02;
}

// 10: generating function audit, limit-law normalization, finite-n vs limit TV.
bool criterion10(std::ostream& log) {
    GenFunctionAudit audit = generating_function_audit(60);
    RationalPMF z = limit_dist(LimitKind::Z, 40);
    mpq_class z_gap = abs(1 - z.total());
    mpq_class z_tol(mpz_class(1), pow2(60));
    double tv = tv_distance(dist_even_even(40), limit_dist(LimitKind::X, 40)).get_d();
    log << "|f(1)-1| = " << audit.dev_f1 << ", |f(1/2)-2/3| = " << audit.dev_fhalf << ", coefficients "
        << (audit.coeff_identity_ok ? "exact" : "WRONG") << ", |Z mass - 1| < 2^-60: " << (z_gap < z_tol)
        << ", TV(finite-40, limit X) = " << tv;
    return audit.coeff_identity_ok && audit.dev_f1 < 1e-12 && audit.dev_fhalf < 1e-12 && z_gap < z_tol && tv < 0.01;
}

// 11: ordered partition count P against direct function enumeration.
bool criterion11(std::ostream& log) {
    std::uint64_t checked = 0, failures = 0;
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 8; ++n)
            for (int c = 0; c <= q; ++c) {
                ++checked;
                if (ordered_partition_count_P(n, q, c) !=
                    mpz_class(static_cast<unsigned long>(oracle::even_preimage_functions(n, q, q - c))))
                    ++failures;
            }
    bool odd_zero = true;
    for (int q = 2; q <= 4; ++q)
        for (int n : {1, 3, 5, 7}) odd_zero &= ordered_partition_count_P(n, q, 0) == 0;
    log << checked << " (n,q,c) triples vs enumeration, " << failures << " failures, P(odd n, c=0) "
        << (odd_zero ? "always 0" : "NONZERO");
    return failures == 0 && odd_zero;
}

// 12: conflict bound cos(pi/q) <= e^{-1/q^2} for q = 3..64.
bool criterion12(std::ostream& log) {
    ConflictBoundReport report = conflict_bound_check(64);
    log << "q = 3..64, all hold: " << (report.all_hold ? "yes" : "NO") << ", min slack " << report.min_slack;
    return report.all_hold;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "exhaustive q=2 oracle equality at n=4", criterion1},
        {2, "exhaustive q=2 oracle equality at n=5", criterion2},
        {3, "GF(2) vs brute-force engine agreement", criterion3},
        {4, "symmetric rank counts vs full enumeration", criterion4},
        {5, "congruence solution-count dichotomy", criterion5},
        {6, "sum inequality audit over [3]^2", criterion6},
        {7, "root-of-unity probabilities vs graph enumeration", criterion7},
        {8, "first-moment convergence to 1/6 for q=3", criterion8},
        {9, "Monte Carlo vs exact odd/odd distribution at n=24", criterion9},
        {10, "limit-law identities and finite-n convergence", criterion10},
        {11, "even-size ordered partition count vs enumeration", criterion11},
        {12, "conflict bound for q = 3..64", criterion12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.check(log);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s]\n";
        std::cout.unsetf(std::ios::fixed);
        std::cout.precision(6);
        std::cout << "     " << (error.empty() ? log.str() : "exception: " + error) << "\n";
        if (!ok) ++failures;
    }
    std::cout << "note: full distributional Poisson convergence for q >= 3 is not reproducible at desk scale\n"
                 "      (counting good partitions is Theta(q^n) per graph); criteria 7-8 substitute exact-oracle\n"
                 "      and first-moment checks for it.\n";
    if (failures == 0)
        std::cout << "all 12 acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures;
}
