#pragma once

#include <string>

#include <gmpxx.h>

#include "modpart/pmf.hpp"

namespace modpart {

// Number of symmetric n x n matrices over GF(2) with rank r:
// prod_{i=1}^{floor(r/2)} 2^{2i}/(2^{2i}-1) * prod_{i=0}^{r-1} (2^{n-i}-1).
mpz_class symmetric_rank_count(int n, int r);

// Probability that a uniformly random even symmetric n x n matrix has rank r;
// zero for r > n-1 (such a matrix never has full rank).
mpq_class even_symmetric_rank_prob(int n, int r);

// Exact distribution of the number of even/even bipartitions of G(n,1/2):
// support {2^0, ..., 2^{n-1}}.
RationalPMF dist_even_even(int n);

// Exact distribution of the number of even/odd bipartitions; for even n it
// coincides with the distribution at n-1.
RationalPMF dist_even_odd(int n);

// Exact distribution of the number of odd/odd bipartitions for even n,
// including the atom at 0 (the count is identically 0 for odd n).
RationalPMF dist_odd_odd(int n);

enum class LimitKind { X, Z };

// Truncated limit laws: Pr(X=2^k) = c * prod_{i<=k}(2^i-1)^{-1} and
// Pr(Z=2^k) = c 2^{-k} prod_{i<=k}(2^i-1)^{-1} with the exact atom
// Pr(Z=0) = 1/3, where c = prod_{i>=0}(1 - 2^{-2i-1}) evaluated as a partial
// product with error below 2^{-80}. tail_bound records 2*2^{-k_max}.
RationalPMF limit_dist(LimitKind kind, int k_max);

struct GenFunctionAudit {
    int terms = 0;
    int coeffs_checked = 0;
    bool coeff_identity_ok = false; // f(2x) == (1+x) f(x) coefficient-wise
    mpq_class f_at_1;
    mpq_class f_at_half;
    double dev_f1 = 0;      // |f(1) - 1|
    double dev_fhalf = 0;   // |f(1/2) - 2/3|
    double c_product = 0;   // prod (1 - 2^{-2i-1})
    double c_sum_form = 0;  // (sum_{j>=1} prod_{i<=j}(2^i-1)^{-1})^{-1}
    std::string note;

    bool ok() const { return coeff_identity_ok && dev_f1 < 1e-12 && dev_fhalf < 1e-12; }
};

// Builds the truncated series f(x) = c sum_k x^k prod_{i<=k}(2^i-1)^{-1},
// verifies the functional equation f(2x) = (1+x) f(x) coefficient-wise and
// evaluates f(1) and f(1/2) against 1 and 2/3. Also reports both published
// expressions for the constant c, which disagree under a literal reading;
// the product form is the one that normalizes.
GenFunctionAudit generating_function_audit(int terms);

} // namespace modpart
