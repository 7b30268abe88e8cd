#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "modpart/graph.hpp"
#include "modpart/partition.hpp"
#include "modpart/pmf.hpp"

namespace modpart {

enum class Engine { automatic, gf2, bruteforce };

enum class ComparisonKind { exact_q2, limit, poisson };

struct ComparisonSpec {
    ComparisonKind kind = ComparisonKind::exact_q2;
    mpq_class lambda = 0; // poisson rate; 0 means the theorem default
};

struct ExperimentConfig {
    int n = 0;
    mpq_class p = mpq_class(1, 2);
    PartitionSpec spec;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Engine engine = Engine::automatic;
    std::vector<ComparisonSpec> comparisons;
};

// Count of good partitions of one graph through the requested engine
// (gf2 requires q = 2; bruteforce is bound by the q^n guard).
mpz_class count_good_partitions(const Graph& g, const PartitionSpec& spec, Engine engine);

// Histogram of counts over `trials` independent G(n,p) samples. Trial t uses
// the graph seed mix64(seed, t), so the result is a pure function of the
// config regardless of thread count.
EmpiricalPMF run_trials(const ExperimentConfig& cfg);
EmpiricalPMF run_trials_serial(const ExperimentConfig& cfg);

// Sample means of x(x-1)...(x-k+1) for k = 1..k_max.
std::vector<mpq_class> empirical_factorial_moments(const EmpiricalPMF& samples, int k_max);

// Truncated Poisson(lambda) masses e^{-lambda} lambda^k / k!, with e^{-lambda}
// evaluated by a rational Taylor sum to error below 2^{-120}; the residual
// mass is recorded in tail_bound.
RationalPMF poisson_pmf(const mpq_class& lambda, int k_max);

// Limit rate of the count: 1/prod(a_x!) for odd q; 2^c/prod(a_x!) for even q
// with c > 0 even-condition parts, and 2/prod(a_x!) for even q with c = 0.
mpq_class default_poisson_lambda(const PartitionSpec& spec);

// Exact distribution of the count over ALL graphs on n vertices, each with
// weight 2^{-C(n,2)}. Guard: n <= 5, or n = 6 behind allow_large.
RationalPMF exhaustive_graph_audit(int n, const PartitionSpec& spec, bool allow_large = false);
RationalPMF exhaustive_graph_audit_serial(int n, const PartitionSpec& spec, bool allow_large = false);

struct CellStat {
    mpz_class value;
    double expected = 0;
    double observed = 0;
    double z = 0;
};

struct ComparisonResult {
    std::string name;
    mpq_class tv_exact;
    double tv = 0;
    std::vector<CellStat> cells;
    std::string note;
};

struct ExperimentReport {
    ExperimentConfig config;
    EmpiricalPMF histogram;
    std::vector<mpq_class> factorial_moments; // k = 1..3
    std::vector<ComparisonResult> comparisons;
    double wall_time_ms = 0;
};

// run_trials plus the configured comparisons, timed.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

nlohmann::ordered_json experiment_report_json(const ExperimentReport& r);
std::string experiment_histogram_csv(const ExperimentReport& r);

} // namespace modpart
