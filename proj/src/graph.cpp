#include "modpart/graph.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "modpart/rng.hpp"

namespace modpart {

Graph::Graph(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
    adj.assign(static_cast<std::size_t>(n), BitVec(n));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    adj[static_cast<std::size_t>(u)].set(v);
    adj[static_cast<std::size_t>(v)].set(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& row : adj) total += row.popcount();
    return total / 2;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph sample_gnp(int n, const mpq_class& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw std::invalid_argument("sample_gnp: p must be in [0,1]");
    if (!p.get_num().fits_ulong_p() || !p.get_den().fits_ulong_p())
        throw std::invalid_argument("sample_gnp: p numerator/denominator must fit in 64 bits");
    const std::uint64_t num = p.get_num().get_ui();
    const std::uint64_t den = p.get_den().get_ui();
    const unsigned __int128 threshold = static_cast<unsigned __int128>(num) << 64;

    Graph g(n);
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++idx) {
            std::uint64_t r = mix64(seed, idx);
            if (static_cast<unsigned __int128>(r) * den < threshold) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) d[static_cast<std::size_t>(v)] = g.adj[static_cast<std::size_t>(v)].popcount();
    return d;
}

int induced_degree(const Graph& g, const VertexSet& part, int v) {
    if (!part.get(v)) throw std::invalid_argument("induced_degree: vertex is not in the part");
    return g.adj[static_cast<std::size_t>(v)].and_popcount(part);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("edge list line " + std::to_string(line) + ": " + what);
}

// Strictly parse one line as exactly `count` non-negative integers.
std::vector<long> parse_ints(const std::string& line, int lineno, std::size_t count) {
    std::vector<long> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < line.size()) {
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || ptr == line.data() + i) parse_fail(lineno, "expected integer");
        i = static_cast<std::size_t>(ptr - line.data());
        out.push_back(value);
        skip_ws();
    }
    if (out.size() != count)
        parse_fail(lineno, "expected " + std::to_string(count) + " fields, found " + std::to_string(out.size()));
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) parse_fail(1, "missing header \"n m\"");
    ++lineno;
    auto header = parse_ints(line, lineno, 2);
    long n = header[0], m = header[1];
    if (n < 1) parse_fail(lineno, "vertex count must be >= 1");
    if (m < 0) parse_fail(lineno, "edge count must be >= 0");

    Graph g(static_cast<int>(n));
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.eof()) break;
        auto fields = parse_ints(line, lineno, 2);
        long u = fields[0], v = fields[1];
        if (u < 1 || u > n || v < 1 || v > n) parse_fail(lineno, "vertex out of range 1.." + std::to_string(n));
        if (u == v) parse_fail(lineno, "loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            parse_fail(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        ++seen;
    }
    if (seen != m)
        parse_fail(lineno + 1, "header announced " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

} // namespace modpart
