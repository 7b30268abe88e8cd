#include "modpart/cyclo.hpp"

#include <stdexcept>

namespace modpart {

int RatPoly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void RatPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

namespace {

// Exact division of polynomials; requires the divisor to divide evenly.
RatPoly poly_div_exact(RatPoly num, const RatPoly& den) {
    int dd = den.degree();
    if (dd < 0) throw std::invalid_argument("poly_div_exact: division by zero polynomial");
    RatPoly quot;
    int dn = num.degree();
    if (dn < dd) {
        if (dn >= 0) throw std::logic_error("poly_div_exact: inexact division");
        return quot;
    }
    quot.c.assign(static_cast<std::size_t>(dn - dd + 1), 0);
    for (int i = dn; i >= dd; --i) {
        mpq_class f = num.c[static_cast<std::size_t>(i)] / den.c[static_cast<std::size_t>(dd)];
        if (f == 0) continue;
        quot.c[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) num.c[static_cast<std::size_t>(i - dd + j)] -= f * den.c[static_cast<std::size_t>(j)];
    }
    if (num.degree() >= 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

} // namespace

RatPoly cyclotomic_polynomial(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
    // x^q - 1
    RatPoly t;
    t.c.assign(static_cast<std::size_t>(q) + 1, 0);
    t.c[0] = -1;
    t.c[static_cast<std::size_t>(q)] = 1;
    for (int d = 1; d < q; ++d)
        if (q % d == 0) t = poly_div_exact(std::move(t), cyclotomic_polynomial(d));
    t.trim();
    return t;
}

CycloValue::CycloValue(int q) {
    if (q < 1) throw std::invalid_argument("CycloValue: q must be >= 1");
    coeff_.assign(static_cast<std::size_t>(q), 0);
}

CycloValue CycloValue::rational(int q, const mpq_class& v) {
    CycloValue c(q);
    c.coeff_[0] = v;
    return c;
}

CycloValue CycloValue::root_power(int q, long e) {
    CycloValue c(q);
    long r = e % q;
    if (r < 0) r += q;
    c.coeff_[static_cast<std::size_t>(r)] = 1;
    return c;
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
    if (o.coeff_.size() != coeff_.size()) throw std::invalid_argument("CycloValue: mixed moduli");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CycloValue& CycloValue::operator*=(const CycloValue& o) {
    if (o.coeff_.size() != coeff_.size()) throw std::invalid_argument("CycloValue: mixed moduli");
    const std::size_t n = coeff_.size();
    std::vector<mpq_class> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.coeff_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n; // x^q == 1
            out[k] += coeff_[i] * o.coeff_[j];
        }
    }
    coeff_ = std::move(out);
    return *this;
}

CycloValue& CycloValue::operator*=(const mpq_class& s) {
    for (auto& c : coeff_) c *= s;
    return *this;
}

CycloValue CycloValue::pow(unsigned long e) const {
    CycloValue base = *this;
    CycloValue result = rational(q(), 1);
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

mpq_class CycloValue::to_rational() const {
    const int q = this->q();
    RatPoly phi = cyclotomic_polynomial(q);
    const int d = phi.degree();
    std::vector<mpq_class> rem = coeff_;
    for (int i = q - 1; i >= d; --i) {
        if (rem[static_cast<std::size_t>(i)] == 0) continue;
        mpq_class f = rem[static_cast<std::size_t>(i)]; // phi is monic
        for (int j = 0; j <= d; ++j) rem[static_cast<std::size_t>(i - d + j)] -= f * phi.c[static_cast<std::size_t>(j)];
    }
    for (int i = 1; i < d; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0)
            throw std::logic_error("CycloValue::to_rational: reduction mod the cyclotomic polynomial is not constant");
    return rem[0];
}

} // namespace modpart
