#include "modpart/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <omp.h>
#include <sstream>
#include <stdexcept>

namespace modpart {

PartitionSpec PartitionSpec::make(int q, std::vector<int> a) {
    if (q < 2) throw std::invalid_argument("partition spec: q must be >= 2");
    if (static_cast<int>(a.size()) != q) throw std::invalid_argument("partition spec: need exactly q multiplicities");
    int sum = 0;
    for (int v : a) {
        if (v < 0) throw std::invalid_argument("partition spec: multiplicities must be non-negative");
        sum += v;
    }
    if (sum != q) throw std::invalid_argument("partition spec: multiplicities must sum to q");
    return PartitionSpec{q, std::move(a)};
}

int PartitionSpec::even_condition_parts() const {
    int c = 0;
    for (int x = 0; x < q; x += 2) c += a[static_cast<std::size_t>(x)];
    return c;
}

Q2Cond PartitionSpec::q2_cond() const {
    if (q != 2) throw std::invalid_argument("q2_cond: spec modulus is not 2");
    if (a[0] == 2) return Q2Cond::even_even;
    if (a[0] == 1) return Q2Cond::even_odd;
    return Q2Cond::odd_odd;
}

std::string CanonicalPartition::key() const {
    std::string out;
    for (const auto& parts : parts_by_residue) {
        out.push_back(static_cast<char>(parts.size()));
        for (const VertexSet& p : parts) p.append_key(out);
        out.push_back('|');
    }
    return out;
}

std::string CanonicalPartition::to_string() const {
    std::ostringstream out;
    bool first_part = true;
    for (std::size_t x = 0; x < parts_by_residue.size(); ++x) {
        for (const VertexSet& p : parts_by_residue[x]) {
            if (!first_part) out << ' ';
            first_part = false;
            out << x << ":{";
            bool first_v = true;
            for (int v = p.find_first(); v >= 0; v = p.find_first(v + 1)) {
                if (!first_v) out << ',';
                first_v = false;
                out << v + 1;
            }
            out << '}';
        }
    }
    if (first_part) out << "(empty)";
    return out.str();
}

bool is_good(const Graph& g, const CanonicalPartition& p, const PartitionSpec& spec) {
    if (static_cast<int>(p.parts_by_residue.size()) != spec.q)
        throw std::invalid_argument("is_good: partition does not match spec modulus");
    VertexSet seen(g.n);
    int covered = 0;
    for (int x = 0; x < spec.q; ++x) {
        const auto& parts = p.parts_by_residue[static_cast<std::size_t>(x)];
        if (static_cast<int>(parts.size()) > spec.a[static_cast<std::size_t>(x)])
            throw std::invalid_argument("is_good: more parts than the spec allows for a residue");
        for (const VertexSet& part : parts) {
            if (part.size() != g.n) throw std::invalid_argument("is_good: part size does not match graph");
            int pc = part.popcount();
            if (pc == 0) throw std::invalid_argument("is_good: canonical partitions contain no empty parts");
            if (seen.and_popcount(part) != 0) throw std::invalid_argument("is_good: parts are not disjoint");
            seen.or_with(part);
            covered += pc;
        }
    }
    if (covered != g.n) throw std::invalid_argument("is_good: parts do not cover all vertices");

    for (int x = 0; x < spec.q; ++x)
        for (const VertexSet& part : p.parts_by_residue[static_cast<std::size_t>(x)])
            for (int v = part.find_first(); v >= 0; v = part.find_first(v + 1))
                if (induced_degree(g, part, v) % spec.q != x) return false;
    return true;
}

namespace {

// Residue of each of the q labeled slots, in slot order.
std::vector<int> slot_residues(const PartitionSpec& spec) {
    std::vector<int> res;
    for (int x = 0; x < spec.q; ++x)
        for (int i = 0; i < spec.a[static_cast<std::size_t>(x)]; ++i) res.push_back(x);
    return res;
}

std::uint64_t assignment_space(const Graph& g, const PartitionSpec& spec) {
    const std::uint64_t guard = 1ull << 24;
    std::uint64_t total = 1;
    for (int i = 0; i < g.n; ++i) {
        if (total > guard / static_cast<std::uint64_t>(spec.q)) {
            throw std::invalid_argument("brute-force guard: q^n = " + std::to_string(spec.q) + "^" +
                                        std::to_string(g.n) + " exceeds 2^24; use the GF(2) engine for q=2 or reduce n");
        }
        total *= static_cast<std::uint64_t>(spec.q);
    }
    return total;
}

CanonicalPartition canonicalize(const std::vector<VertexSet>& slot_sets, const std::vector<int>& residues, int q) {
    CanonicalPartition p;
    p.parts_by_residue.assign(static_cast<std::size_t>(q), {});
    for (std::size_t t = 0; t < slot_sets.size(); ++t)
        if (slot_sets[t].any()) p.parts_by_residue[static_cast<std::size_t>(residues[t])].push_back(slot_sets[t]);
    for (auto& parts : p.parts_by_residue)
        std::sort(parts.begin(), parts.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
    return p;
}

// Walks a contiguous range of base-q assignment codes, collecting canonical
// encodings of the good ones.
void scan_range(const Graph& g, const PartitionSpec& spec, const std::vector<int>& residues, std::uint64_t begin,
                std::uint64_t end, std::map<std::string, CanonicalPartition>& found) {
    const int n = g.n, q = spec.q;
    std::vector<int> assign(static_cast<std::size_t>(n));
    std::vector<VertexSet> slot_sets(static_cast<std::size_t>(q), VertexSet(n));

    for (std::uint64_t code = begin; code < end; ++code) {
        std::uint64_t rest = code;
        for (int v = n - 1; v >= 0; --v) {
            assign[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
            rest /= static_cast<std::uint64_t>(q);
        }
        for (auto& s : slot_sets) s.clear();
        for (int v = 0; v < n; ++v) slot_sets[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])].set(v);

        bool good = true;
        for (int v = 0; v < n && good; ++v) {
            int slot = assign[static_cast<std::size_t>(v)];
            int deg = g.adj[static_cast<std::size_t>(v)].and_popcount(slot_sets[static_cast<std::size_t>(slot)]);
            good = deg % q == residues[static_cast<std::size_t>(slot)];
        }
        if (!good) continue;

        CanonicalPartition p = canonicalize(slot_sets, residues, q);
        found.emplace(p.key(), std::move(p));
    }
}

std::vector<CanonicalPartition> enumerate_impl(const Graph& g, const PartitionSpec& spec, bool parallel) {
    const std::uint64_t total = assignment_space(g, spec);
    const std::vector<int> residues = slot_residues(spec);

    int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<std::map<std::string, CanonicalPartition>> local(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        std::uint64_t chunk = (total + static_cast<std::uint64_t>(nt) - 1) / static_cast<std::uint64_t>(nt);
        std::uint64_t begin = chunk * static_cast<std::uint64_t>(tid);
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin < end) scan_range(g, spec, residues, begin, end, local[static_cast<std::size_t>(tid)]);
    }

    std::map<std::string, CanonicalPartition> merged;
    for (auto& m : local) merged.merge(m);
    std::vector<CanonicalPartition> out;
    out.reserve(merged.size());
    for (auto& [k, p] : merged) out.push_back(std::move(p));
    return out;
}

} // namespace

std::vector<CanonicalPartition> enumerate_good(const Graph& g, const PartitionSpec& spec) {
    return enumerate_impl(g, spec, true);
}

std::vector<CanonicalPartition> enumerate_good_serial(const Graph& g, const PartitionSpec& spec) {
    return enumerate_impl(g, spec, false);
}

std::uint64_t count_good(const Graph& g, const PartitionSpec& spec) { return enumerate_impl(g, spec, true).size(); }

std::uint64_t count_good_serial(const Graph& g, const PartitionSpec& spec) {
    return enumerate_impl(g, spec, false).size();
}

} // namespace modpart
