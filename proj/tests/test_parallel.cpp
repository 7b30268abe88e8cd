// The OpenMP kernels must reproduce their serial reference implementations
// exactly, independent of thread count.

#include <doctest.h>
#include <omp.h>

#include "modpart/experiment.hpp"
#include "modpart/modq.hpp"
#include "modpart/partition.hpp"

using namespace modpart;

TEST_SUITE_BEGIN("parallel");

TEST_CASE("enumerate_good: parallel == serial") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = sample_gnp(9, mpq_class(1, 2), 300 + seed);
        for (auto spec : {PartitionSpec::make(2, {2, 0}), PartitionSpec::make(3, {3, 0, 0})}) {
            auto serial = enumerate_good_serial(g, spec);
            auto parallel = enumerate_good(g, spec);
            REQUIRE(serial.size() == parallel.size());
            for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].key() == parallel[i].key());
        }
    }
}

TEST_CASE("run_trials: parallel == serial") {
    ExperimentConfig cfg;
    cfg.n = 12;
    cfg.spec = PartitionSpec::make(2, {1, 1});
    cfg.trials = 4000;
    cfg.seed = 123;
    EmpiricalPMF parallel = run_trials(cfg);
    EmpiricalPMF serial = run_trials_serial(cfg);
    CHECK(parallel.histogram == serial.histogram);
}

TEST_CASE("exhaustive_graph_audit: parallel == serial") {
    PartitionSpec spec = PartitionSpec::make(2, {0, 2});
    RationalPMF parallel = exhaustive_graph_audit(4, spec);
    RationalPMF serial = exhaustive_graph_audit_serial(4, spec);
    CHECK(same_distribution(parallel, serial));
}

TEST_CASE("lemma audits: parallel == serial") {
    LemmaAuditReport pe = exhaustive_lemma_audit(3, 2);
    LemmaAuditReport se = exhaustive_lemma_audit_serial(3, 2);
    CHECK(pe.sets_audited == se.sets_audited);
    CHECK(pe.equality_count == se.equality_count);
    CHECK(pe.violations.size() == se.violations.size());

    LemmaAuditReport ps = sampled_lemma_audit(3, 3, 500, 9);
    LemmaAuditReport ss = sampled_lemma_audit_serial(3, 3, 500, 9);
    CHECK(ps.sets_audited == ss.sets_audited);
    CHECK(ps.equality_count == ss.equality_count);
}

TEST_CASE("results do not depend on the thread cap") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.spec = PartitionSpec::make(2, {2, 0});
    cfg.trials = 2000;
    cfg.seed = 7;
    EmpiricalPMF wide = run_trials(cfg);
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    EmpiricalPMF narrow = run_trials(cfg);
    omp_set_num_threads(saved);
    CHECK(wide.histogram == narrow.histogram);
}

TEST_SUITE_END();
