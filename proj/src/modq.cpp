#include "modpart/modq.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>

#include "modpart/rng.hpp"

namespace modpart {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > ~0ull / base) throw std::overflow_error("pow_u64 overflow");
        r *= base;
    }
    return r;
}

void check_ambient(const Coord& c, const BoxSet& b) {
    if (static_cast<int>(c.e.size()) != b.k) throw std::invalid_argument("coordinate length does not match k");
    for (auto v : c.e)
        if (v >= b.q) throw std::invalid_argument("coordinate entry out of range");
}

} // namespace

bool BoxSet::contains(const Coord& c) const {
    return std::binary_search(members.begin(), members.end(), c);
}

BoxSet BoxSet::full(int q, int k) {
    BoxSet b{q, k, {}};
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), k);
    b.members.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) b.members.push_back(coord_from_index(i, q, k));
    return b;
}

BoxSet BoxSet::from_mask(int q, int k, std::uint64_t mask) {
    BoxSet b{q, k, {}};
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), k);
    if (total > 63) throw std::invalid_argument("BoxSet::from_mask: q^k exceeds the 64-bit mask");
    for (std::uint64_t i = 0; i < total; ++i)
        if (mask >> i & 1u) b.members.push_back(coord_from_index(i, q, k));
    return b;
}

std::uint64_t coord_index(const Coord& c, int q) {
    std::uint64_t idx = 0;
    for (auto v : c.e) idx = idx * static_cast<std::uint64_t>(q) + v;
    return idx;
}

Coord coord_from_index(std::uint64_t idx, int q, int k) {
    Coord c;
    c.e.assign(static_cast<std::size_t>(k), 0);
    for (int j = k - 1; j >= 0; --j) {
        c.e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(idx % static_cast<std::uint64_t>(q));
        idx /= static_cast<std::uint64_t>(q);
    }
    return c;
}

IncidenceMatrix incidence_matrix(const Coord& c, const BoxSet& b) {
    check_ambient(c, b);
    IncidenceMatrix m{b.q, b.k, {}};
    m.cols.reserve(b.members.size());
    for (const Coord& other : b.members) {
        std::vector<std::uint8_t> col(static_cast<std::size_t>(b.k));
        for (int j = 0; j < b.k; ++j)
            col[static_cast<std::size_t>(j)] = c.e[static_cast<std::size_t>(j)] == other.e[static_cast<std::size_t>(j)];
        m.cols.push_back(std::move(col));
    }
    return m;
}

std::uint64_t subgroup_size(const std::vector<std::vector<std::uint8_t>>& columns, int q, int k) {
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), k);
    if (total > (1ull << 24)) throw std::invalid_argument("subgroup_size: q^k too large for closure enumeration");
    std::vector<std::uint8_t> seen(total, 0);
    std::vector<std::uint64_t> queue;
    seen[0] = 1;
    queue.push_back(0);
    std::uint64_t count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Coord base = coord_from_index(queue[head], q, k);
        for (const auto& gen : columns) {
            Coord next = base;
            for (int j = 0; j < k; ++j) {
                int s = next.e[static_cast<std::size_t>(j)] + gen[static_cast<std::size_t>(j)];
                next.e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(s >= q ? s - q : s);
            }
            std::uint64_t idx = coord_index(next, q);
            if (!seen[idx]) {
                seen[idx] = 1;
                ++count;
                queue.push_back(idx);
            }
        }
    }
    return count;
}

std::uint64_t n_value(const Coord& c, const BoxSet& b) {
    check_ambient(c, b);
    if (!b.contains(c)) throw std::invalid_argument("n_value: coordinate is not a member of the box set");
    IncidenceMatrix m = incidence_matrix(c, b);
    return pow_u64(static_cast<std::uint64_t>(b.q), b.k) / subgroup_size(m.cols, b.q, b.k);
}

std::uint64_t count_congruence_solutions(const IncidenceMatrix& m, const std::vector<std::uint8_t>& b) {
    if (b.size() != m.cols.size()) throw std::invalid_argument("count_congruence_solutions: dimension mismatch");
    const int q = m.q, k = m.k;
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), k);
    std::uint64_t count = 0;
    std::vector<std::uint8_t> a(static_cast<std::size_t>(k), 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        bool match = true;
        for (std::size_t c = 0; c < m.cols.size() && match; ++c) {
            int dot = 0;
            for (int j = 0; j < k; ++j) dot += a[static_cast<std::size_t>(j)] * m.cols[c][static_cast<std::size_t>(j)];
            match = dot % q == b[c];
        }
        if (match) ++count;
        for (int j = k - 1; j >= 0; --j) {
            if (++a[static_cast<std::size_t>(j)] < q) break;
            a[static_cast<std::size_t>(j)] = 0;
        }
    }
    return count;
}

bool is_combinatorial_subspace(const BoxSet& l) {
    if (l.members.empty()) return false;
    if (l.q < 2) throw std::invalid_argument("is_combinatorial_subspace: q must be >= 2");
    const int q = l.q, k = l.k;

    // Every single-coordinate projection must cover [q].
    for (int j = 0; j < k; ++j) {
        std::vector<std::uint8_t> hit(static_cast<std::size_t>(q), 0);
        for (const Coord& c : l.members) hit[c.e[static_cast<std::size_t>(j)]] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
    }

    // A coordinate pair is bound when its projection has exactly q points;
    // with both single projections full this makes it a permutation graph.
    struct Bound {
        int j1, j2;
        std::vector<std::uint8_t> image; // image[v] = w for projected pairs (v, w)
    };
    std::vector<Bound> bound;
    for (int j1 = 0; j1 < k; ++j1) {
        for (int j2 = j1 + 1; j2 < k; ++j2) {
            std::vector<std::uint8_t> pair_seen(static_cast<std::size_t>(q) * q, 0);
            std::size_t distinct = 0;
            for (const Coord& c : l.members) {
                std::size_t key = static_cast<std::size_t>(c.e[static_cast<std::size_t>(j1)]) * q +
                                  c.e[static_cast<std::size_t>(j2)];
                if (!pair_seen[key]) {
                    pair_seen[key] = 1;
                    ++distinct;
                }
            }
            if (distinct == static_cast<std::size_t>(q)) {
                Bound bd{j1, j2, std::vector<std::uint8_t>(static_cast<std::size_t>(q), 0)};
                for (int v = 0; v < q; ++v)
                    for (int w = 0; w < q; ++w)
                        if (pair_seen[static_cast<std::size_t>(v) * q + w]) bd.image[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(w);
                bound.push_back(std::move(bd));
            }
        }
    }

    // L must be exactly the solution set of the bound-pair constraints.
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), k);
    if (total > (1ull << 24)) throw std::invalid_argument("is_combinatorial_subspace: q^k too large");
    std::uint64_t solutions = 0;
    Coord c;
    c.e.assign(static_cast<std::size_t>(k), 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        bool ok = true;
        for (const Bound& bd : bound) {
            if (bd.image[c.e[static_cast<std::size_t>(bd.j1)]] != c.e[static_cast<std::size_t>(bd.j2)]) {
                ok = false;
                break;
            }
        }
        if (ok) ++solutions;
        for (int j = k - 1; j >= 0; --j) {
            if (++c.e[static_cast<std::size_t>(j)] < q) break;
            c.e[static_cast<std::size_t>(j)] = 0;
        }
    }
    return solutions == l.members.size();
}

SumInequality verify_sum_inequality(const BoxSet& l) {
    if (l.q < 3) throw std::invalid_argument("verify_sum_inequality: the lemma requires q >= 3");
    if (l.members.empty()) throw std::invalid_argument("verify_sum_inequality: box set must be non-empty");
    SumInequality r;
    r.bound = pow_u64(static_cast<std::uint64_t>(l.q), l.k);
    for (const Coord& c : l.members) r.sum += n_value(c, l);
    r.equality = r.sum == r.bound;
    return r;
}

namespace {

struct AuditAccumulator {
    std::uint64_t sets = 0;
    std::uint64_t equal = 0;
    std::vector<LemmaAuditViolation> violations;
};

void audit_one(const BoxSet& l, AuditAccumulator& acc) {
    SumInequality s = verify_sum_inequality(l);
    bool subspace = is_combinatorial_subspace(l);
    ++acc.sets;
    if (s.equality) ++acc.equal;
    if (s.sum > s.bound)
        acc.violations.push_back({l.members, "sum " + std::to_string(s.sum) + " exceeds bound " + std::to_string(s.bound)});
    else if (s.equality != subspace)
        acc.violations.push_back({l.members, s.equality ? "equality holds but the set is not a combinatorial subspace"
                                                        : "combinatorial subspace without equality"});
}

LemmaAuditReport run_exhaustive(int q, int k, bool parallel) {
    if (q < 3) throw std::invalid_argument("lemma audit: q must be >= 3");
    std::uint64_t points = pow_u64(static_cast<std::uint64_t>(q), k);
    if (points > 12)
        throw std::invalid_argument("lemma audit: exhaustive mode requires q^k <= 12 (2^(q^k) subsets), got q^k = " +
                                    std::to_string(points));
    const std::uint64_t sets = (1ull << points) - 1;

    LemmaAuditReport report;
    report.q = q;
    report.k = k;
    report.mode = "exhaustive";

    int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<AuditAccumulator> acc(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
    for (std::int64_t mask = 1; mask <= static_cast<std::int64_t>(sets); ++mask) {
        AuditAccumulator& a = acc[static_cast<std::size_t>(omp_get_thread_num())];
        audit_one(BoxSet::from_mask(q, k, static_cast<std::uint64_t>(mask)), a);
    }
    for (const auto& a : acc) {
        report.sets_audited += a.sets;
        report.equality_count += a.equal;
        report.violations.insert(report.violations.end(), a.violations.begin(), a.violations.end());
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const LemmaAuditViolation& x, const LemmaAuditViolation& y) { return x.box_set < y.box_set; });
    return report;
}

BoxSet random_nonempty_subset(int q, int k, std::uint64_t sample_seed) {
    std::uint64_t points = pow_u64(static_cast<std::uint64_t>(q), k);
    BitStream bits(sample_seed);
    while (true) {
        BoxSet b{q, k, {}};
        for (std::uint64_t i = 0; i < points; ++i)
            if (bits.next_bit()) b.members.push_back(coord_from_index(i, q, k));
        if (!b.members.empty()) return b;
    }
}

LemmaAuditReport run_sampled(int q, int k, std::uint64_t count, std::uint64_t seed, bool parallel) {
    if (q < 3) throw std::invalid_argument("lemma audit: q must be >= 3");
    std::uint64_t points = pow_u64(static_cast<std::uint64_t>(q), k);
    if (points > (1ull << 20))
        throw std::invalid_argument("lemma audit: q^k too large for n_value computation");

    LemmaAuditReport report;
    report.q = q;
    report.k = k;
    report.mode = "sampled(" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";

    int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<AuditAccumulator> acc(static_cast<std::size_t>(threads));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        AuditAccumulator& a = acc[static_cast<std::size_t>(omp_get_thread_num())];
        audit_one(random_nonempty_subset(q, k, mix64(seed, static_cast<std::uint64_t>(i))), a);
    }
    for (const auto& a : acc) {
        report.sets_audited += a.sets;
        report.equality_count += a.equal;
        report.violations.insert(report.violations.end(), a.violations.begin(), a.violations.end());
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const LemmaAuditViolation& x, const LemmaAuditViolation& y) { return x.box_set < y.box_set; });
    return report;
}

} // namespace

LemmaAuditReport exhaustive_lemma_audit(int q, int k) { return run_exhaustive(q, k, true); }
LemmaAuditReport exhaustive_lemma_audit_serial(int q, int k) { return run_exhaustive(q, k, false); }

LemmaAuditReport sampled_lemma_audit(int q, int k, std::uint64_t count, std::uint64_t seed) {
    return run_sampled(q, k, count, seed, true);
}
LemmaAuditReport sampled_lemma_audit_serial(int q, int k, std::uint64_t count, std::uint64_t seed) {
    return run_sampled(q, k, count, seed, false);
}

nlohmann::ordered_json audit_report_json(const LemmaAuditReport& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["k"] = r.k;
    j["mode"] = r.mode;
    j["sets_audited"] = r.sets_audited;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) {
        nlohmann::ordered_json set = nlohmann::ordered_json::array();
        for (const Coord& c : v.box_set) set.push_back(std::vector<int>(c.e.begin(), c.e.end()));
        j["violations"].push_back({{"set", set}, {"reason", v.reason}});
    }
    j["equality_count"] = r.equality_count;
    return j;
}

} // namespace modpart
