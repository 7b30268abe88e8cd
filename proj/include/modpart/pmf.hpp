#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace modpart {

// Probability mass function with exact big-rational masses over integer
// support values. `complete` marks PMFs whose masses sum to exactly 1;
// truncated PMFs record a bound on the mass outside the listed support.
struct RationalPMF {
    std::vector<mpz_class> support; // strictly ascending
    std::vector<mpq_class> mass;    // parallel to support, >= 0
    bool complete = true;
    mpq_class tail_bound = 0;

    mpq_class total() const;
    mpq_class mean() const;
    mpq_class mass_at(const mpz_class& value) const;

    static RationalPMF from_map(const std::map<mpz_class, mpq_class>& m, bool complete = true);
};

// Equality of the distributions: identical nonzero masses.
bool same_distribution(const RationalPMF& a, const RationalPMF& b);

// Half the L1 distance over the union support.
mpq_class tv_distance(const RationalPMF& a, const RationalPMF& b);

// Histogram of observed counts.
struct EmpiricalPMF {
    std::map<mpz_class, std::uint64_t> histogram;
    std::uint64_t trials = 0;

    mpq_class frequency(const mpz_class& value) const;
    RationalPMF normalized() const;
};

mpq_class tv_distance(const EmpiricalPMF& a, const RationalPMF& b);

} // namespace modpart
