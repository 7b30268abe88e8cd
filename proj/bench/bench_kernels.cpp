// Wall-time comparison of the OpenMP kernels against their serial reference
// implementations. Results must agree exactly; the table reports speedups.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <omp.h>
#include <string>

#include "modpart/experiment.hpp"
#include "modpart/modq.hpp"
#include "modpart/partition.hpp"

using namespace modpart;

namespace {

template <typename F> double time_ms(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& kernel, double serial_ms, double parallel_ms, bool equal) {
    std::cout << std::left << std::setw(34) << kernel << std::right << std::setw(12) << serial_ms << std::setw(12)
              << parallel_ms << std::setw(10) << std::setprecision(2) << std::fixed << serial_ms / parallel_ms
              << std::defaultfloat << std::setprecision(6) << "   " << (equal ? "identical" : "MISMATCH") << '\n';
}

} // namespace

int main() {
    std::cout << "threads: " << omp_get_max_threads() << "\n\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial ms" << std::setw(12)
              << "openmp ms" << std::setw(10) << "speedup"
              << "   results\n";

    {
        ExperimentConfig cfg;
        cfg.n = 220;
        cfg.spec = PartitionSpec::make(2, {2, 0});
        cfg.trials = 400;
        cfg.seed = 1;
        EmpiricalPMF serial, parallel;
        double s = time_ms([&] { serial = run_trials_serial(cfg); });
        double p = time_ms([&] { parallel = run_trials(cfg); });
        report("run_trials gf2 n=220 t=400", s, p, serial.histogram == parallel.histogram);
    }
    {
        Graph g = sample_gnp(13, mpq_class(1, 2), 99);
        PartitionSpec spec = PartitionSpec::make(3, {3, 0, 0});
        std::uint64_t serial = 0, parallel = 0;
        double s = time_ms([&] { serial = count_good_serial(g, spec); });
        double p = time_ms([&] { parallel = count_good(g, spec); });
        report("count_good q=3 n=13", s, p, serial == parallel);
    }
    {
        PartitionSpec spec = PartitionSpec::make(2, {1, 1});
        RationalPMF serial, parallel;
        double s = time_ms([&] { serial = exhaustive_graph_audit_serial(6, spec, true); });
        double p = time_ms([&] { parallel = exhaustive_graph_audit(6, spec, true); });
        report("exhaustive_graph_audit n=6", s, p, same_distribution(serial, parallel));
    }
    {
        LemmaAuditReport serial, parallel;
        double s = time_ms([&] { serial = sampled_lemma_audit_serial(3, 3, 4000, 5); });
        double p = time_ms([&] { parallel = sampled_lemma_audit(3, 3, 4000, 5); });
        report("sampled_lemma_audit q=3 k=3", s, p,
               serial.equality_count == parallel.equality_count && serial.sets_audited == parallel.sets_audited);
    }

    // single-solve cost of the GF(2) core at Monte Carlo scale
    for (int n : {500, 1000, 2000}) {
        Graph g = sample_gnp(n, mpq_class(1, 2), 42);
        mpz_class count;
        double ms = time_ms([&] { count = count_partitions_q2(g, Q2Cond::even_even); });
        std::cout << "\ncount_partitions_q2 even/even n=" << n << ": " << ms << " ms (count 2^"
                  << mpz_sizeinbase(count.get_mpz_t(), 2) - 1 << ")";
    }
    std::cout << '\n';
    return 0;
}
