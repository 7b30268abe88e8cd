#include "modpart/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <omp.h>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modpart/dist_q2.hpp"
#include "modpart/experiment.hpp"
#include "modpart/graph.hpp"
#include "modpart/modq.hpp"
#include "modpart/moments.hpp"
#include "modpart/partition.hpp"

namespace modpart::cli {

namespace {

using nlohmann::ordered_json;

mpq_class parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(mpz_class(text), 1);
            v.canonicalize();
            return v;
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational \"num/den\", got \"" + text + "\"");
    }
}

std::string rational_str(const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

std::string decimal15(double v) {
    std::ostringstream out;
    out.precision(15);
    out << v;
    return out.str();
}

struct SpecOptions {
    int q = 0;
    std::string a_list;
    std::string q2;

    PartitionSpec resolve() const {
        if (!q2.empty()) {
            if (q2 == "even-even") return PartitionSpec::make(2, {2, 0});
            if (q2 == "even-odd") return PartitionSpec::make(2, {1, 1});
            if (q2 == "odd-odd") return PartitionSpec::make(2, {0, 2});
            throw CLI::ValidationError("--q2 must be one of even-even|even-odd|odd-odd");
        }
        if (q == 0) throw CLI::ValidationError("a partition spec is required: --q Q --a a0,a1,... or --q2 COND");
        std::vector<int> a;
        std::stringstream ss(a_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) a.push_back(std::stoi(tok));
        return PartitionSpec::make(q, std::move(a));
    }
};

void add_spec_options(CLI::App* cmd, SpecOptions& spec) {
    cmd->add_option("--q", spec.q, "Modulus q of the degree conditions");
    cmd->add_option("--a", spec.a_list, "Residue multiplicities a0,a1,...,a{q-1} (must sum to q)");
    cmd->add_option("--q2", spec.q2, "Shorthand for q=2 conditions: even-even|even-odd|odd-odd");
}

struct OutputOptions {
    std::string format = "table";
    std::string path;

    std::ostream& stream(std::ostream& out, std::ofstream& file) const {
        if (path.empty()) return out;
        file.open(path);
        if (!file) throw CLI::ValidationError("cannot open output file " + path);
        return file;
    }
};

void add_output_options(CLI::App& app, OutputOptions& o) {
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--output", o.path, "Write data to this file instead of stdout");
}

Graph load_graph(const std::string& source) {
    std::string text;
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(source);
        if (!in) throw std::runtime_error("cannot open edge list " + source);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_edge_list(text);
}

Engine parse_engine(const std::string& name) {
    if (name == "auto") return Engine::automatic;
    if (name == "gf2") return Engine::gf2;
    if (name == "bruteforce") return Engine::bruteforce;
    throw CLI::ValidationError("--engine must be auto|gf2|bruteforce");
}

ordered_json pmf_json(const RationalPMF& p) {
    ordered_json j;
    j["support"] = ordered_json::array();
    j["mass_num"] = ordered_json::array();
    j["mass_den"] = ordered_json::array();
    for (std::size_t i = 0; i < p.support.size(); ++i) {
        j["support"].push_back(p.support[i].get_str());
        j["mass_num"].push_back(p.mass[i].get_num().get_str());
        j["mass_den"].push_back(p.mass[i].get_den().get_str());
    }
    j["complete"] = p.complete;
    if (!p.complete) j["tail_bound"] = rational_str(p.tail_bound);
    return j;
}

// Aligned decimal table; the exact mass column is included only while the
// rationals stay readable (full exactness is always available as json/csv).
void pmf_table(const RationalPMF& p, std::ostream& out) {
    const mpq_class total = p.total();
    std::size_t w = 7, mw = 6;
    bool with_mass = rational_str(total).size() <= 24;
    for (std::size_t i = 0; i < p.support.size(); ++i) {
        w = std::max(w, p.support[i].get_str().size());
        std::size_t len = rational_str(p.mass[i]).size();
        with_mass = with_mass && len <= 24;
        mw = std::max(mw, len);
    }
    auto row = [&](const std::string& count, const mpq_class& mass) {
        out << std::left << std::setw(static_cast<int>(w) + 2) << count;
        if (with_mass) out << std::setw(static_cast<int>(mw) + 2) << rational_str(mass);
        out << decimal15(mass.get_d()) << '\n';
    };
    out << std::left << std::setw(static_cast<int>(w) + 2) << "count";
    if (with_mass) out << std::setw(static_cast<int>(mw) + 2) << "mass";
    out << "decimal\n";
    for (std::size_t i = 0; i < p.support.size(); ++i) row(p.support[i].get_str(), p.mass[i]);
    row("total", total);
    if (!p.complete) out << "tail bound " << rational_str(p.tail_bound) << " (truncated distribution)\n";
}

void pmf_csv(const RationalPMF& p, std::ostream& out) {
    out << "count,mass_num,mass_den,decimal\n";
    for (std::size_t i = 0; i < p.support.size(); ++i)
        out << p.support[i].get_str() << ',' << p.mass[i].get_num().get_str() << ',' << p.mass[i].get_den().get_str()
            << ',' << decimal15(p.mass[i].get_d()) << '\n';
}

int cmd_count(const SpecOptions& spec_opts, const std::string& edges, bool enumerate, const std::string& engine_name,
              const OutputOptions& output, std::ostream& out_stream) {
    PartitionSpec spec = spec_opts.resolve();
    Graph g = load_graph(edges);
    Engine engine = parse_engine(engine_name);
    std::ofstream file;
    std::ostream& out = output.stream(out_stream, file);

    std::vector<CanonicalPartition> parts;
    mpz_class count;
    if (enumerate) {
        parts = enumerate_good(g, spec);
        count = static_cast<unsigned long>(parts.size());
    } else {
        count = count_good_partitions(g, spec, engine);
    }

    if (output.format == "json") {
        ordered_json j;
        j["n"] = g.n;
        j["q"] = spec.q;
        j["a"] = spec.a;
        j["count"] = count.get_str();
        if (enumerate) {
            j["partitions"] = ordered_json::array();
            for (const auto& p : parts) j["partitions"].push_back(p.to_string());
        }
        out << j.dump(2) << '\n';
    } else {
        out << count.get_str() << '\n';
        if (enumerate)
            for (const auto& p : parts) out << p.to_string() << '\n';
    }
    return 0;
}

int cmd_dist(const std::string& q2, int n, bool limit, const std::string& kind, int kmax,
             const OutputOptions& output, std::ostream& out_stream) {
    RationalPMF pmf;
    if (limit) {
        LimitKind lk;
        if (!kind.empty()) {
            if (kind != "X" && kind != "Z") throw CLI::ValidationError("--kind must be X or Z");
            lk = kind == "Z" ? LimitKind::Z : LimitKind::X;
        } else if (!q2.empty()) {
            lk = q2 == "odd-odd" ? LimitKind::Z : LimitKind::X;
        } else {
            throw CLI::ValidationError("--limit needs --kind X|Z (or --q2 to infer it)");
        }
        pmf = limit_dist(lk, kmax);
    } else {
        if (n <= 0) throw CLI::ValidationError("--n is required for finite-n distributions");
        if (q2 == "even-even")
            pmf = dist_even_even(n);
        else if (q2 == "even-odd")
            pmf = dist_even_odd(n);
        else if (q2 == "odd-odd")
            pmf = dist_odd_odd(n);
        else
            throw CLI::ValidationError("--q2 must be one of even-even|even-odd|odd-odd");
    }

    std::ofstream file;
    std::ostream& out = output.stream(out_stream, file);
    if (output.format == "json")
        out << pmf_json(pmf).dump(2) << '\n';
    else if (output.format == "csv")
        pmf_csv(pmf, out);
    else
        pmf_table(pmf, out);
    return 0;
}

int cmd_simulate(const SpecOptions& spec_opts, int n, const std::string& p_text, std::uint64_t trials,
                 std::uint64_t seed, const std::string& engine_name, const std::vector<std::string>& compare,
                 const OutputOptions& output, std::ostream& out_stream) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = parse_rational(p_text);
    if (cfg.p < 0 || cfg.p > 1) throw CLI::ValidationError("--p must lie in [0,1]");
    cfg.spec = spec_opts.resolve();
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.engine = parse_engine(engine_name);
    for (const auto& c : compare) {
        if (c == "exact")
            cfg.comparisons.push_back({ComparisonKind::exact_q2, 0});
        else if (c == "limit")
            cfg.comparisons.push_back({ComparisonKind::limit, 0});
        else if (c == "poisson")
            cfg.comparisons.push_back({ComparisonKind::poisson, 0});
        else if (c.rfind("poisson=", 0) == 0)
            cfg.comparisons.push_back({ComparisonKind::poisson, parse_rational(c.substr(8))});
        else
            throw CLI::ValidationError("--compare must be exact|limit|poisson[=num/den]");
    }

    ExperimentReport report = run_experiment(cfg);
    std::ofstream file;
    std::ostream& out = output.stream(out_stream, file);
    if (output.format == "csv")
        out << experiment_histogram_csv(report);
    else
        out << experiment_report_json(report).dump(2) << '\n';
    return 0;
}

int cmd_moment(const SpecOptions& spec_opts, int n, const OutputOptions& output, std::ostream& out_stream) {
    PartitionSpec spec = spec_opts.resolve();
    mpq_class e = expected_count(n, spec);
    mpq_class lambda = default_poisson_lambda(spec);
    mpq_class diff = abs(e - lambda);

    std::ofstream file;
    std::ostream& out = output.stream(out_stream, file);
    if (output.format == "json") {
        ordered_json j;
        j["n"] = n;
        j["q"] = spec.q;
        j["a"] = spec.a;
        j["expectation_num"] = e.get_num().get_str();
        j["expectation_den"] = e.get_den().get_str();
        j["expectation"] = decimal15(e.get_d());
        j["poisson_limit_mean_num"] = lambda.get_num().get_str();
        j["poisson_limit_mean_den"] = lambda.get_den().get_str();
        j["poisson_limit_mean"] = decimal15(lambda.get_d());
        j["abs_difference"] = decimal15(diff.get_d());
        out << j.dump(2) << '\n';
    } else {
        out << "E[X_n]             = " << rational_str(e) << " = " << decimal15(e.get_d()) << '\n';
        out << "Poisson limit mean = " << rational_str(lambda) << " = " << decimal15(lambda.get_d()) << '\n';
        out << "|difference|       = " << decimal15(diff.get_d()) << '\n';
    }
    return 0;
}

int cmd_verify(int q, int k, bool exhaustive, std::uint64_t sampled, std::uint64_t seed, bool gf_audit, int terms,
               bool conflict_bound, int qmax, const OutputOptions& output, std::ostream& out_stream) {
    std::ofstream file;
    std::ostream& out = output.stream(out_stream, file);

    if (gf_audit) {
        GenFunctionAudit audit = generating_function_audit(terms);
        ordered_json j;
        j["terms"] = audit.terms;
        j["coeffs_checked"] = audit.coeffs_checked;
        j["coeff_identity_ok"] = audit.coeff_identity_ok;
        j["f_at_1"] = rational_str(audit.f_at_1);
        j["dev_f1"] = decimal15(audit.dev_f1);
        j["f_at_half"] = rational_str(audit.f_at_half);
        j["dev_fhalf"] = decimal15(audit.dev_fhalf);
        j["c_product"] = decimal15(audit.c_product);
        j["c_sum_form"] = decimal15(audit.c_sum_form);
        j["note"] = audit.note;
        j["ok"] = audit.ok();
        out << j.dump(2) << '\n';
        return audit.ok() ? 0 : 1;
    }
    if (conflict_bound) {
        ConflictBoundReport report = conflict_bound_check(qmax);
        ordered_json j;
        j["q_max"] = report.q_max;
        j["all_hold"] = report.all_hold;
        j["min_slack"] = decimal15(report.min_slack);
        j["max_slack"] = decimal15(report.max_slack);
        j["rows"] = ordered_json::array();
        for (const auto& r : report.rows)
            j["rows"].push_back({{"q", r.q},
                                 {"half_one_plus_zeta", decimal15(r.half_one_plus_zeta)},
                                 {"cos_pi_over_q", decimal15(r.cos_value)},
                                 {"bound", decimal15(r.bound)},
                                 {"holds", r.holds}});
        out << j.dump(2) << '\n';
        return report.all_hold ? 0 : 1;
    }
    if (q == 0 || k == 0) throw CLI::ValidationError("lemma audit needs --q and --k (or use --gf-audit / --conflict-bound)");
    LemmaAuditReport report =
        exhaustive ? exhaustive_lemma_audit(q, k) : sampled_lemma_audit(q, k, sampled, seed);
    out << audit_report_json(report).dump(2) << '\n';
    return report.ok() ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting and Monte Carlo analysis of degree-residue vertex partitions of graphs"};
    app.require_subcommand(1);

    OutputOptions output;
    add_output_options(app, output);
    int threads = 0;
    app.add_option("--threads", threads, "Cap the number of worker threads (env MODPART_THREADS)");

    // Global flags may appear before or after the subcommand.
    app.fallthrough();

    // count
    auto* count = app.add_subcommand("count", "Count (and optionally list) good partitions of one graph");
    SpecOptions count_spec;
    add_spec_options(count, count_spec);
    std::string count_edges;
    bool count_enumerate = false;
    std::string count_engine = "auto";
    count->add_option("--edges", count_edges, "Edge list file (\"-\" for stdin)")->required();
    count->add_flag("--enumerate", count_enumerate, "List one canonical partition per line");
    count->add_option("--engine", count_engine, "auto|gf2|bruteforce");

    // dist
    auto* dist = app.add_subcommand("dist", "Exact q=2 partition-count distributions");
    std::string dist_q2;
    int dist_n = 0;
    bool dist_limit = false;
    std::string dist_kind;
    int dist_kmax = 40;
    dist->add_option("--q2", dist_q2, "even-even|even-odd|odd-odd");
    dist->add_option("--n", dist_n, "Number of vertices");
    dist->add_flag("--limit", dist_limit, "Limiting distribution instead of finite n");
    dist->add_option("--kind", dist_kind, "Limit law: X (even/even, even/odd) or Z (odd/odd)");
    dist->add_option("--kmax", dist_kmax, "Truncation: include counts up to 2^kmax");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo over G(n,p) with exact comparisons");
    SpecOptions sim_spec;
    add_spec_options(simulate, sim_spec);
    int sim_n = 0;
    std::string sim_p = "1/2";
    std::uint64_t sim_trials = 10000, sim_seed = 0;
    std::string sim_engine = "auto";
    std::vector<std::string> sim_compare;
    simulate->add_option("--n", sim_n, "Number of vertices")->required();
    simulate->add_option("--p", sim_p, "Edge probability as num/den");
    simulate->add_option("--trials", sim_trials, "Number of graph samples");
    simulate->add_option("--seed", sim_seed, "Master seed");
    simulate->add_option("--engine", sim_engine, "auto|gf2|bruteforce");
    simulate->add_option("--compare", sim_compare, "exact|limit|poisson[=num/den] (repeatable)");

    // moment
    auto* moment = app.add_subcommand("moment", "Exact E[X_n] for G(n,1/2)");
    SpecOptions mom_spec;
    add_spec_options(moment, mom_spec);
    int mom_n = 0;
    moment->add_option("--n", mom_n, "Number of vertices")->required();

    // verify-algebra
    auto* verify = app.add_subcommand("verify-algebra", "Audit the algebraic identities");
    int ver_q = 0, ver_k = 0;
    bool ver_exhaustive = false;
    std::uint64_t ver_sampled = 0, ver_seed = 1;
    bool ver_gf = false;
    int ver_terms = 60;
    bool ver_conflict = false;
    int ver_qmax = 64;
    verify->add_option("--q", ver_q, "Modulus for the lemma audit (>= 3)");
    verify->add_option("--k", ver_k, "Dimension for the lemma audit");
    verify->add_flag("--exhaustive", ver_exhaustive, "Audit every non-empty subset (q^k <= 12)");
    verify->add_option("--sampled", ver_sampled, "Audit this many random subsets");
    verify->add_option("--seed", ver_seed, "Seed for the sampled audit");
    verify->add_flag("--gf-audit", ver_gf, "Audit the generating-function identities");
    verify->add_option("--terms", ver_terms, "Series truncation for --gf-audit");
    verify->add_flag("--conflict-bound", ver_conflict, "Check cos(pi/q) <= exp(-1/q^2)");
    verify->add_option("--qmax", ver_qmax, "Largest q for --conflict-bound");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }

    if (threads == 0) {
        if (const char* env = std::getenv("MODPART_THREADS")) threads = std::atoi(env);
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (count->parsed())
            return cmd_count(count_spec, count_edges, count_enumerate, count_engine, output, out);
        if (dist->parsed()) return cmd_dist(dist_q2, dist_n, dist_limit, dist_kind, dist_kmax, output, out);
        if (simulate->parsed())
            return cmd_simulate(sim_spec, sim_n, sim_p, sim_trials, sim_seed, sim_engine, sim_compare, output, out);
        if (moment->parsed()) return cmd_moment(mom_spec, mom_n, output, out);
        if (verify->parsed())
            return cmd_verify(ver_q, ver_k, ver_exhaustive || ver_sampled == 0, ver_sampled, ver_seed, ver_gf,
                              ver_terms, ver_conflict, ver_qmax, output, out);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace modpart::cli
