#ifndef MNV_POLY_HPP
#define MNV_POLY_HPP

#include <vector>

#include "mnv/common.hpp"

namespace mnv {

// Dense univariate polynomial over Q, coefficients low degree first,
// no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rat& r);
    static QPoly monomial(const Rat& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // quotient/remainder by a nonzero divisor
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    bool divides_exactly(const QPoly& divisor, QPoly* quotient) const;

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const; // requires integer result

    QPoly monic() const;
    // coefficients reversed: t^deg * p(1/t)
    QPoly reversed() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

QPoly poly_gcd(QPoly a, QPoly b);

// n-th cyclotomic polynomial, integer coefficients; cached, thread-safe.
const QPoly& cyclotomic_polynomial(i64 n);

} // namespace mnv

#endif
