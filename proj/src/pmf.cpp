#include "modpart/pmf.hpp"

#include <set>
#include <stdexcept>

namespace modpart {

mpq_class RationalPMF::total() const {
    mpq_class t = 0;
    for (const auto& m : mass) t += m;
    return t;
}

mpq_class RationalPMF::mean() const {
    mpq_class t = 0;
    for (std::size_t i = 0; i < support.size(); ++i) t += mpq_class(support[i]) * mass[i];
    return t;
}

mpq_class RationalPMF::mass_at(const mpz_class& value) const {
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] == value) return mass[i];
    return 0;
}

RationalPMF RationalPMF::from_map(const std::map<mpz_class, mpq_class>& m, bool complete) {
    RationalPMF p;
    p.complete = complete;
    for (const auto& [v, q] : m) {
        p.support.push_back(v);
        p.mass.push_back(q);
    }
    return p;
}

bool same_distribution(const RationalPMF& a, const RationalPMF& b) {
    std::map<mpz_class, mpq_class> ma, mb;
    for (std::size_t i = 0; i < a.support.size(); ++i)
        if (a.mass[i] != 0) ma[a.support[i]] = a.mass[i];
    for (std::size_t i = 0; i < b.support.size(); ++i)
        if (b.mass[i] != 0) mb[b.support[i]] = b.mass[i];
    return ma == mb;
}

mpq_class tv_distance(const RationalPMF& a, const RationalPMF& b) {
    std::set<mpz_class> keys(a.support.begin(), a.support.end());
    keys.insert(b.support.begin(), b.support.end());
    mpq_class sum = 0;
    for (const auto& k : keys) sum += abs(a.mass_at(k) - b.mass_at(k));
    return sum / 2;
}

mpq_class EmpiricalPMF::frequency(const mpz_class& value) const {
    if (trials == 0) throw std::invalid_argument("EmpiricalPMF: no trials");
    auto it = histogram.find(value);
    if (it == histogram.end()) return 0;
    mpq_class f(it->second, trials);
    f.canonicalize();
    return f;
}

RationalPMF EmpiricalPMF::normalized() const {
    if (trials == 0) throw std::invalid_argument("EmpiricalPMF: no trials");
    RationalPMF p;
    for (const auto& [v, c] : histogram) {
        p.support.push_back(v);
        mpq_class f(c, trials);
        f.canonicalize();
        p.mass.push_back(f);
    }
    return p;
}

mpq_class tv_distance(const EmpiricalPMF& a, const RationalPMF& b) { return tv_distance(a.normalized(), b); }

} // namespace modpart
