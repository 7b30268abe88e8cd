#pragma once

#include <vector>

#include <gmpxx.h>

namespace modpart {

// Dense polynomial over the rationals; c[i] is the coefficient of x^i.
struct RatPoly {
    std::vector<mpq_class> c;

    int degree() const; // -1 for the zero polynomial
    void trim();
};

// q-th cyclotomic polynomial, computed by dividing x^q - 1 by the cyclotomic
// polynomials of the proper divisors of q.
RatPoly cyclotomic_polynomial(int q);

// Element of Q[x]/(x^q - 1), the symbolic home of the q-th roots of unity.
// A value known to be rational (i.e. congruent to a constant modulo the q-th
// cyclotomic polynomial) is extracted with to_rational(), which checks that
// the reduction really is constant instead of assuming it.
class CycloValue {
public:
    explicit CycloValue(int q);

    static CycloValue rational(int q, const mpq_class& v);
    static CycloValue root_power(int q, long e); // x^(e mod q)

    int q() const { return static_cast<int>(coeff_.size()); }
    const std::vector<mpq_class>& coefficients() const { return coeff_; }

    CycloValue& operator+=(const CycloValue& o);
    CycloValue& operator*=(const CycloValue& o);
    CycloValue& operator*=(const mpq_class& s);
    friend CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
    friend CycloValue operator*(CycloValue a, const CycloValue& b) { return a *= b; }
    friend CycloValue operator*(CycloValue a, const mpq_class& s) { return a *= s; }
    bool operator==(const CycloValue& o) const = default;

    CycloValue pow(unsigned long e) const;

    // Remainder modulo the q-th cyclotomic polynomial; throws std::logic_error
    // if the remainder is not a constant.
    mpq_class to_rational() const;

private:
    std::vector<mpq_class> coeff_; // size q
};

} // namespace modpart
