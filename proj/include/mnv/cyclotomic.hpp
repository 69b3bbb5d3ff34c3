#ifndef MNV_CYCLOTOMIC_HPP
#define MNV_CYCLOTOMIC_HPP

#include <compare>
#include <string>
#include <vector>

#include "mnv/common.hpp"

namespace mnv {

// Exact element of Q(zeta_n). Canonical form: n is the true conductor
// (never 2 mod 4), coefficients are the power basis 1, z, ..., z^(phi(n)-1)
// reduced modulo the n-th cyclotomic polynomial. Equality of values is
// equality of canonical forms. Immutable.
class Cyc {
public:
    Cyc() : n_(1), c_{} {}
    static Cyc rational(const Rat& r);
    static Cyc integer(const Int& z) { return rational(Rat(z)); }
    // zeta_n^e
    static Cyc root(i64 n, i64 e);
    // from coefficients on powers zeta_n^0..^(deg) (any length <= n), canonicalized
    static Cyc from_powers(i64 n, std::vector<Rat> coeffs);

    i64 conductor() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return n_ == 1; }
    Rat rational_value() const; // requires is_rational()

    // coefficient of zeta_n^e in the canonical basis
    Rat coeff(i64 e) const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator-() const;
    bool operator==(const Cyc& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // complex conjugate
    Cyc conj() const;

    // total order for deterministic sorting (conductor, then coefficients)
    std::strong_ordering cmp(const Cyc& o) const;

    // byte-stable display: "c0 + c1*z(n)^e1 + ..." with ascending exponents
    std::string str() const;

private:
    i64 n_;              // conductor
    std::vector<Rat> c_; // size phi(n_) once canonical; empty means 0
};

inline Cyc sqrt3() { return Cyc::root(12, 1) - Cyc::root(12, 5); }
inline Cyc sqrt_minus3() { return -Cyc::root(3, 1) + Cyc::root(3, 2); }
inline Cyc sqrt2() { return Cyc::root(8, 1) - Cyc::root(8, 3); }

// Galois automorphism of Q(zeta_modulus): zeta ↦ zeta^mult, gcd(mult, modulus) = 1.
struct GaloisMap {
    i64 modulus;
    i64 mult;
};

// Applies sigma to a; requires conductor(a) | sigma.modulus.
Cyc galois_apply(const GaloisMap& sigma, const Cyc& a);

// Lift sigma to a larger modulus (modulus | big), keeping the action on
// Q(zeta_modulus) and acting trivially on the coprime remainder.
GaloisMap galois_lift(const GaloisMap& sigma, i64 big);

// Generators of the restriction to Q(zeta_n) of the Galois subgroup fixing
// ell-local structure: writing n = ell^a * m with gcd(ell, m) = 1, the members
// are exactly the multipliers j with j = ell^k (mod m) for some k >= 0 and j
// arbitrary invertible mod ell^a.
struct HGroup {
    i64 ell;
    i64 modulus;
    std::vector<GaloisMap> gens;
    // all multipliers, enumerated from the generators (modulus is small here)
    std::vector<i64> elements() const;
};

HGroup h_group(i64 ell, i64 n);

bool is_h_fixed(const Cyc& a, i64 ell);

// true iff a lies in Q(sqrt 2) (conductor divides 8 and fixed by z8 -> z8^-1)
bool in_q_sqrt2(const Cyc& a);

} // namespace mnv

#endif
