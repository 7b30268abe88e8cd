#include "modpart/experiment.hpp"

#include <chrono>
#include <cmath>
#include <omp.h>
#include <set>
#include <sstream>
#include <stdexcept>

#include "modpart/dist_q2.hpp"
#include "modpart/rng.hpp"

namespace modpart {

namespace {

Engine resolve_engine(const PartitionSpec& spec, Engine engine) {
    if (engine == Engine::automatic) return spec.is_q2() ? Engine::gf2 : Engine::bruteforce;
    if (engine == Engine::gf2 && !spec.is_q2())
        throw std::invalid_argument("engine=gf2 requires q = 2");
    return engine;
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

void merge_histograms(std::map<mpz_class, std::uint64_t>& into, const std::map<mpz_class, std::uint64_t>& from) {
    for (const auto& [value, count] : from) into[value] += count;
}

} // namespace

mpz_class count_good_partitions(const Graph& g, const PartitionSpec& spec, Engine engine) {
    switch (resolve_engine(spec, engine)) {
    case Engine::gf2:
        return count_partitions_q2(g, spec.q2_cond());
    case Engine::bruteforce:
        return mpz_class(static_cast<unsigned long>(count_good(g, spec)));
    default:
        throw std::logic_error("unreachable");
    }
}

namespace {

EmpiricalPMF run_trials_impl(const ExperimentConfig& cfg, bool parallel) {
    if (cfg.trials == 0) throw std::invalid_argument("run_trials: trials must be positive");
    const Engine engine = resolve_engine(cfg.spec, cfg.engine);

    const int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<std::map<mpz_class, std::uint64_t>> local(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t) {
        auto& hist = local[static_cast<std::size_t>(omp_get_thread_num())];
        Graph g = sample_gnp(cfg.n, cfg.p, mix64(cfg.seed, static_cast<std::uint64_t>(t)));
        mpz_class count = engine == Engine::gf2 ? count_partitions_q2(g, cfg.spec.q2_cond())
                                                : mpz_class(static_cast<unsigned long>(count_good(g, cfg.spec)));
        ++hist[count];
    }

    EmpiricalPMF pmf;
    pmf.trials = cfg.trials;
    for (const auto& h : local) merge_histograms(pmf.histogram, h);
    return pmf;
}

} // namespace

EmpiricalPMF run_trials(const ExperimentConfig& cfg) { return run_trials_impl(cfg, true); }
EmpiricalPMF run_trials_serial(const ExperimentConfig& cfg) { return run_trials_impl(cfg, false); }

std::vector<mpq_class> empirical_factorial_moments(const EmpiricalPMF& samples, int k_max) {
    if (k_max < 1) throw std::invalid_argument("empirical_factorial_moments: k_max must be >= 1");
    if (samples.trials == 0) throw std::invalid_argument("empirical_factorial_moments: no samples");
    std::vector<mpq_class> moments(static_cast<std::size_t>(k_max), 0);
    for (const auto& [value, count] : samples.histogram) {
        mpz_class falling = 1;
        for (int k = 1; k <= k_max; ++k) {
            falling *= value - (k - 1);
            moments[static_cast<std::size_t>(k - 1)] += mpq_class(falling * count);
        }
    }
    for (auto& m : moments) {
        m /= mpq_class(static_cast<unsigned long>(samples.trials));
    }
    return moments;
}

RationalPMF poisson_pmf(const mpq_class& lambda, int k_max) {
    if (lambda < 0) throw std::invalid_argument("poisson_pmf: lambda must be >= 0");
    if (k_max < 0) throw std::invalid_argument("poisson_pmf: k_max must be >= 0");

    // e^{-lambda} by Taylor, stopping once terms decrease and drop below 2^-120.
    mpq_class exp_neg = 0, term = 1;
    const mpq_class eps(mpz_class(1), pow2(120));
    for (unsigned long j = 1;; ++j) {
        exp_neg += term;
        mpq_class next = term * -lambda / static_cast<long>(j);
        if (lambda < static_cast<long>(j) && abs(next) < eps) break;
        term = next;
        if (j > 10000) throw std::logic_error("poisson_pmf: series failed to converge");
    }
    if (exp_neg < 0) exp_neg = 0;

    RationalPMF p;
    p.complete = false;
    mpq_class mass = exp_neg; // lambda^k/k! accumulated iteratively
    mpq_class covered = 0;
    for (int k = 0; k <= k_max; ++k) {
        p.support.push_back(k);
        p.mass.push_back(mass);
        covered += mass;
        mass = mass * lambda / (k + 1);
    }
    p.tail_bound = 1 - covered;
    return p;
}

mpq_class default_poisson_lambda(const PartitionSpec& spec) {
    mpz_class f = 1, fx;
    for (int x = 0; x < spec.q; ++x) {
        mpz_fac_ui(fx.get_mpz_t(), static_cast<unsigned long>(spec.a[static_cast<std::size_t>(x)]));
        f *= fx;
    }
    mpz_class numer = 1;
    if (spec.q % 2 == 0) {
        int c = spec.even_condition_parts();
        numer = c > 0 ? pow2(static_cast<unsigned long>(c)) : 2;
    }
    mpq_class lambda(numer, f);
    lambda.canonicalize();
    return lambda;
}

namespace {

RationalPMF exhaustive_graph_audit_impl(int n, const PartitionSpec& spec, bool allow_large, bool parallel) {
    if (n < 1) throw std::invalid_argument("exhaustive_graph_audit: n must be >= 1");
    if (n > 6 || (n == 6 && !allow_large))
        throw std::invalid_argument("exhaustive_graph_audit: guard 2^C(n,2) graphs allows n <= 5 (n = 6 behind the "
                                    "long-run flag)");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t graphs = 1ull << pairs;
    const Engine engine = resolve_engine(spec, Engine::automatic);

    const int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<std::map<mpz_class, std::uint64_t>> local(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(graphs); ++mask) {
        auto& hist = local[static_cast<std::size_t>(omp_get_thread_num())];
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        mpz_class count = engine == Engine::gf2 ? count_partitions_q2(g, spec.q2_cond())
                                                : mpz_class(static_cast<unsigned long>(count_good(g, spec)));
        ++hist[count];
    }

    std::map<mpz_class, std::uint64_t> merged;
    for (const auto& h : local) merge_histograms(merged, h);

    RationalPMF p;
    for (const auto& [value, cnt] : merged) {
        p.support.push_back(value);
        mpq_class mass(mpz_class(static_cast<unsigned long>(cnt)), pow2(static_cast<unsigned long>(pairs)));
        mass.canonicalize();
        p.mass.push_back(mass);
    }
    return p;
}

} // namespace

RationalPMF exhaustive_graph_audit(int n, const PartitionSpec& spec, bool allow_large) {
    return exhaustive_graph_audit_impl(n, spec, allow_large, true);
}

RationalPMF exhaustive_graph_audit_serial(int n, const PartitionSpec& spec, bool allow_large) {
    return exhaustive_graph_audit_impl(n, spec, allow_large, false);
}

namespace {

ComparisonResult compare(const EmpiricalPMF& hist, const RationalPMF& target, const std::string& name) {
    ComparisonResult r;
    r.name = name;
    r.tv_exact = tv_distance(hist, target);
    r.tv = r.tv_exact.get_d();
    std::set<mpz_class> keys(target.support.begin(), target.support.end());
    for (const auto& [v, c] : hist.histogram) keys.insert(v);
    const double trials = static_cast<double>(hist.trials);
    for (const auto& v : keys) {
        CellStat cell;
        cell.value = v;
        cell.expected = target.mass_at(v).get_d();
        cell.observed = hist.frequency(v).get_d();
        double var = cell.expected * (1 - cell.expected) / trials;
        cell.z = var > 0 ? (cell.observed - cell.expected) / std::sqrt(var) : 0;
        r.cells.push_back(std::move(cell));
    }
    return r;
}

RationalPMF exact_q2_target(const ExperimentConfig& cfg) {
    switch (cfg.spec.q2_cond()) {
    case Q2Cond::even_even:
        return dist_even_even(cfg.n);
    case Q2Cond::even_odd:
        return dist_even_odd(cfg.n);
    case Q2Cond::odd_odd:
        return dist_odd_odd(cfg.n);
    }
    throw std::logic_error("unreachable");
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.config = cfg;
    report.histogram = run_trials(cfg);
    report.factorial_moments = empirical_factorial_moments(report.histogram, 3);
    for (const auto& cmp : cfg.comparisons) {
        switch (cmp.kind) {
        case ComparisonKind::exact_q2:
            report.comparisons.push_back(compare(report.histogram, exact_q2_target(cfg), "exact"));
            break;
        case ComparisonKind::limit: {
            LimitKind kind = cfg.spec.q2_cond() == Q2Cond::odd_odd ? LimitKind::Z : LimitKind::X;
            report.comparisons.push_back(
                compare(report.histogram, limit_dist(kind, 40), kind == LimitKind::Z ? "limit_Z" : "limit_X"));
            break;
        }
        case ComparisonKind::poisson: {
            mpq_class lambda = cmp.lambda != 0 ? cmp.lambda : default_poisson_lambda(cfg.spec);
            ComparisonResult r = compare(report.histogram, poisson_pmf(lambda, 64), "poisson");
            if (cfg.spec.q >= 3)
                r.note = "the Poisson law is the n->inf limit; at fixed n only the first moments are checkable "
                         "exactly (counting is Theta(q^n) per graph), so treat this TV as indicative";
            report.comparisons.push_back(std::move(r));
            break;
        }
        }
    }
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

namespace {

std::string sig15(double v) {
    std::ostringstream out;
    out.precision(15);
    out << v;
    return out.str();
}

} // namespace

nlohmann::ordered_json experiment_report_json(const ExperimentReport& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    cfg["n"] = r.config.n;
    cfg["p"] = r.config.p.get_num().get_str() + "/" + r.config.p.get_den().get_str();
    cfg["q"] = r.config.spec.q;
    cfg["a"] = r.config.spec.a;
    cfg["trials"] = r.config.trials;
    cfg["seed"] = r.config.seed;
    cfg["engine"] = r.config.engine == Engine::gf2          ? "gf2"
                    : r.config.engine == Engine::bruteforce ? "bruteforce"
                                                            : "auto";
    j["config"] = cfg;
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const auto& [value, count] : r.histogram.histogram)
        hist.push_back({{"count", value.get_str()}, {"trials", count}});
    j["histogram"] = hist;
    nlohmann::ordered_json moments = nlohmann::ordered_json::array();
    for (const auto& m : r.factorial_moments) moments.push_back(sig15(m.get_d()));
    j["factorial_moments"] = moments;
    nlohmann::ordered_json cmps = nlohmann::ordered_json::array();
    for (const auto& c : r.comparisons) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["tv"] = sig15(c.tv);
        jc["tv_exact"] = c.tv_exact.get_num().get_str() + "/" + c.tv_exact.get_den().get_str();
        if (!c.note.empty()) jc["note"] = c.note;
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& cell : c.cells)
            cells.push_back({{"value", cell.value.get_str()},
                             {"expected", sig15(cell.expected)},
                             {"observed", sig15(cell.observed)},
                             {"z", sig15(cell.z)}});
        jc["cells"] = cells;
        cmps.push_back(jc);
    }
    j["comparisons"] = cmps;
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

std::string experiment_histogram_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out << "count,trials,frequency\n";
    for (const auto& [value, count] : r.histogram.histogram) {
        out << value.get_str() << ',' << count << ','
            << sig15(static_cast<double>(count) / static_cast<double>(r.histogram.trials)) << '\n';
    }
    return out.str();
}

} // namespace modpart
