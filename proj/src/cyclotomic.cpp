#include "mnv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "mnv/poly.hpp"

namespace mnv {

namespace {

std::vector<i64> prime_divisors(i64 n)
{
    std::vector<i64> ps;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// reduce a power vector (coefficient of zeta_n^i at index i, any length)
// modulo Phi_n to degree < phi(n)
std::vector<Rat> reduce_mod_phi(i64 n, std::vector<Rat> v)
{
    const QPoly& phi = cyclotomic_polynomial(n);
    size_t deg = static_cast<size_t>(phi.degree());
    // fold exponents >= n first
    if (v.size() > static_cast<size_t>(n)) {
        std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
        for (size_t i = 0; i < v.size(); ++i) w[i % static_cast<size_t>(n)] += v[i];
        v = std::move(w);
    }
    while (v.size() > deg) {
        Rat lead = v.back();
        size_t top = v.size() - 1;
        if (lead != 0) {
            for (size_t j = 0; j < deg; ++j)
                v[top - deg + j] -= lead * phi.coeff(static_cast<int>(j));
        }
        v.pop_back();
    }
    v.resize(deg, Rat(0));
    return v;
}

// embedding matrix of Q(zeta_m) into Q(zeta_n) on power bases (m | n),
// column i = coefficients of zeta_n^(i*n/m) reduced mod Phi_n
struct Embedding {
    i64 m, n;
    std::vector<std::vector<Rat>> cols;
};

const Embedding& embedding(i64 m, i64 n)
{
    static std::map<std::pair<i64, i64>, Embedding> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Embedding e;
    e.m = m;
    e.n = n;
    i64 step = n / m;
    i64 pm = euler_phi(m);
    for (i64 i = 0; i < pm; ++i) {
        std::vector<Rat> v(static_cast<size_t>(i * step) + 1, Rat(0));
        v.back() = 1;
        e.cols.push_back(reduce_mod_phi(n, std::move(v)));
    }
    return cache[key] = std::move(e);
}

// express v (power basis of Q(zeta_n)) in Q(zeta_m) if possible
bool try_descend(i64 n, const std::vector<Rat>& v, i64 m, std::vector<Rat>* out)
{
    const Embedding& E = embedding(m, n);
    size_t rows = v.size();
    size_t ncols = E.cols.size();
    // Gaussian elimination on [E | v]
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < E.cols[j].size() && i < rows; ++i) a[i][j] = E.cols[j][i];
    for (size_t i = 0; i < rows; ++i) a[i][ncols] = v[i];

    std::vector<int> pivot_col(rows, -1);
    size_t prow = 0;
    for (size_t col = 0; col < ncols && prow < rows; ++col) {
        size_t sel = prow;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[prow]);
        Rat inv = Rat(1) / a[prow][col];
        for (size_t j = col; j <= ncols; ++j) a[prow][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i != prow && a[i][col] != 0) {
                Rat f = a[i][col];
                for (size_t j = col; j <= ncols; ++j) a[i][j] -= f * a[prow][j];
            }
        }
        pivot_col[prow] = static_cast<int>(col);
        ++prow;
    }
    // consistency: rows without pivot must have zero rhs
    for (size_t i = prow; i < rows; ++i)
        if (a[i][ncols] != 0) return false;
    std::vector<Rat> x(ncols, Rat(0));
    for (size_t i = 0; i < prow; ++i) x[static_cast<size_t>(pivot_col[i])] = a[i][ncols];
    *out = std::move(x);
    return true;
}

i64 strip_two_mod_four(i64 n)
{
    return (n % 4 == 2) ? n / 2 : n;
}

i64 crt2(i64 r1, i64 m1, i64 r2, i64 m2)
{
    // coprime moduli
    i64 m = m1 * m2;
    i64 inv = invmod64(m1 % m2, m2);
    i64 t = mod64((r2 - r1) % m2 * inv % m2, m2);
    return mod64(r1 + m1 * t, m);
}

i64 primitive_root_mod_prime_power(i64 p, int a)
{
    MNV_REQUIRE(p % 2 == 1, "primitive root: odd prime required");
    auto fact = prime_divisors(p - 1);
    i64 g = 2;
    for (;; ++g) {
        bool ok = true;
        for (i64 q : fact) {
            if (powmod64(static_cast<u64>(g), static_cast<u64>((p - 1) / q),
                         static_cast<u64>(p)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    if (a >= 2) {
        i64 p2 = p * p;
        if (powmod64(static_cast<u64>(g), static_cast<u64>(p - 1),
                     static_cast<u64>(p2)) == 1)
            g += p;
    }
    i64 mod = 1;
    for (int i = 0; i < a; ++i) mod *= p;
    return mod64(g, mod);
}

} // namespace

Cyc Cyc::rational(const Rat& r)
{
    Cyc c;
    c.n_ = 1;
    if (r != 0) c.c_ = {r};
    return c;
}

Cyc Cyc::from_powers(i64 n, std::vector<Rat> coeffs)
{
    MNV_REQUIRE(n >= 1, "Cyc::from_powers: conductor must be positive");
    // rewrite 2 mod 4 conductor: zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    if (n % 4 == 2) {
        i64 m = n / 2;
        std::vector<Rat> w(static_cast<size_t>(m), Rat(0));
        if (coeffs.size() > static_cast<size_t>(n)) {
            std::vector<Rat> folded(static_cast<size_t>(n), Rat(0));
            for (size_t i = 0; i < coeffs.size(); ++i)
                folded[i % static_cast<size_t>(n)] += coeffs[i];
            coeffs = std::move(folded);
        }
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e] == 0) continue;
            i64 ee = static_cast<i64>(e);
            i64 newe = mod64(ee * ((m + 1) / 2), m);
            Rat sgn = (ee % 2 == 0) ? Rat(1) : Rat(-1);
            w[static_cast<size_t>(newe)] += sgn * coeffs[e];
        }
        return from_powers(m, std::move(w));
    }

    std::vector<Rat> v = reduce_mod_phi(n, std::move(coeffs));
    // conductor descent
    for (;;) {
        bool all_zero = true;
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) {
                all_zero = false;
                break;
            }
        if (n == 1 || all_zero) {
            Cyc c;
            c.n_ = 1;
            if (!v.empty() && v[0] != 0) c.c_ = {v[0]};
            return c;
        }
        bool descended = false;
        for (i64 p : prime_divisors(n)) {
            i64 m = strip_two_mod_four(n / p);
            if (m == n) continue;
            std::vector<Rat> down;
            if (try_descend(n, v, m, &down)) {
                n = m;
                v = std::move(down);
                v = reduce_mod_phi(n, std::move(v));
                descended = true;
                break;
            }
        }
        if (!descended) break;
    }
    Cyc c;
    c.n_ = n;
    c.c_ = std::move(v);
    return c;
}

Cyc Cyc::root(i64 n, i64 e)
{
    MNV_REQUIRE(n >= 1, "Cyc::root: order must be positive");
    e = mod64(e, n);
    i64 g = std::gcd(e, n);
    if (g > 1) {
        n /= g;
        e /= g;
    }
    std::vector<Rat> v(static_cast<size_t>(e) + 1, Rat(0));
    v.back() = 1;
    return from_powers(n, std::move(v));
}

Rat Cyc::rational_value() const
{
    MNV_REQUIRE(is_rational(), "Cyc::rational_value: value is irrational");
    return c_.empty() ? Rat(0) : c_[0];
}

Rat Cyc::coeff(i64 e) const
{
    if (e < 0 || e >= static_cast<i64>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(e)];
}

Cyc Cyc::operator+(const Cyc& o) const
{
    i64 L = lcm64(n_, o.n_);
    std::vector<Rat> v(static_cast<size_t>(std::max<i64>(L, 1)), Rat(0));
    i64 s1 = L / n_, s2 = L / o.n_;
    for (size_t i = 0; i < c_.size(); ++i) v[static_cast<size_t>(i * s1)] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[static_cast<size_t>(i * s2)] += o.c_[i];
    return from_powers(L, std::move(v));
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const
{
    Cyc c(*this);
    for (auto& x : c.c_) x = -x;
    return c;
}

Cyc Cyc::operator*(const Cyc& o) const
{
    if (is_zero() || o.is_zero()) return Cyc();
    i64 L = lcm64(n_, o.n_);
    i64 s1 = L / n_, s2 = L / o.n_;
    std::vector<Rat> v(c_.size() * static_cast<size_t>(s1) +
                           o.c_.size() * static_cast<size_t>(s2),
                       Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i * static_cast<size_t>(s1) + j * static_cast<size_t>(s2)] += c_[i] * o.c_[j];
        }
    }
    return from_powers(L, std::move(v));
}

Cyc Cyc::conj() const
{
    if (n_ == 1) return *this;
    return galois_apply(GaloisMap{n_, n_ - 1}, *this);
}

std::strong_ordering Cyc::cmp(const Cyc& o) const
{
    if (n_ != o.n_) return n_ <=> o.n_;
    if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyc::str() const
{
    if (is_zero()) return "0";
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < c_.size(); ++e) {
        const Rat& a = c_[e];
        if (a == 0) continue;
        Rat mag = a > 0 ? a : Rat(-a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a > 0 ? " + " : " - ");
        }
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "z(" << n_ << ")^" << e;
        }
    }
    return os.str();
}

Cyc galois_apply(const GaloisMap& sigma, const Cyc& a)
{
    MNV_REQUIRE(sigma.modulus >= 1 && std::gcd(sigma.mult, sigma.modulus) == 1,
                "galois_apply: multiplier not invertible mod modulus");
    if (a.is_rational()) return a;
    i64 m = a.conductor();
    MNV_REQUIRE(sigma.modulus % m == 0,
                "galois_apply: conductor does not divide modulus; lift sigma to a "
                "common modulus first");
    i64 j = mod64(sigma.mult, m);
    std::vector<Rat> v(static_cast<size_t>(m), Rat(0));
    i64 pm = euler_phi(m);
    for (i64 i = 0; i < pm; ++i) {
        Rat ci = a.coeff(i);
        if (ci == 0) continue;
        v[static_cast<size_t>(mod64(i * j, m))] += ci;
    }
    return Cyc::from_powers(m, std::move(v));
}

GaloisMap galois_lift(const GaloisMap& sigma, i64 big)
{
    MNV_REQUIRE(big % sigma.modulus == 0, "galois_lift: modulus must divide target");
    if (big == sigma.modulus) return sigma;
    // CRT over prime powers of big: match sigma on primes dividing the old
    // modulus, act trivially elsewhere
    i64 rem = big;
    i64 r = 0, mod = 1;
    for (i64 p = 2; p <= rem; ++p) {
        if (rem % p != 0) continue;
        i64 pa = 1;
        while (rem % p == 0) {
            rem /= p;
            pa *= p;
        }
        i64 target = (sigma.modulus % p == 0) ? mod64(sigma.mult, pa) : 1;
        r = (mod == 1) ? target : crt2(r, mod, target, pa);
        mod *= pa;
        if (rem == 1) break;
    }
    MNV_REQUIRE(mod64(r, sigma.modulus) == mod64(sigma.mult, sigma.modulus),
                "galois_lift: lift does not restrict correctly");
    return GaloisMap{big, r == 0 ? 1 : r};
}

HGroup h_group(i64 ell, i64 n)
{
    MNV_REQUIRE(n >= 1 && ell >= 2, "h_group: bad arguments");
    HGroup H;
    H.ell = ell;
    H.modulus = n;
    i64 la = 1;
    int a = 0;
    i64 m = n;
    while (m % ell == 0) {
        m /= ell;
        la *= ell;
        ++a;
    }
    if (m > 1) {
        // generator acting as ell on the prime-to-ell part, trivially on the rest
        i64 j = (a == 0) ? mod64(ell, m) : crt2(mod64(ell, m), m, 1, la);
        H.gens.push_back(GaloisMap{n, j == 0 ? 1 : j});
    }
    if (a >= 1) {
        std::vector<i64> unit_gens;
        if (ell == 2) {
            if (a == 2) unit_gens = {3};
            else if (a >= 3) unit_gens = {la - 1, 5};
        } else {
            unit_gens = {primitive_root_mod_prime_power(ell, a)};
        }
        for (i64 g : unit_gens) {
            i64 j = (m == 1) ? mod64(g, la) : crt2(1, m, mod64(g, la), la);
            H.gens.push_back(GaloisMap{n, j == 0 ? 1 : j});
        }
    }
    if (H.gens.empty()) H.gens.push_back(GaloisMap{n, 1});
    return H;
}

std::vector<i64> HGroup::elements() const
{
    std::set<i64> seen{1 % modulus == 0 ? i64(0) : i64(1)};
    if (modulus == 1) return {0};
    std::vector<i64> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 x : frontier) {
            for (const auto& g : gens) {
                i64 y = mod64(x * g.mult, modulus);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool is_h_fixed(const Cyc& a, i64 ell)
{
    if (a.is_rational()) return true;
    HGroup H = h_group(ell, a.conductor());
    for (const auto& g : H.gens)
        if (galois_apply(g, a) != a) return false;
    return true;
}

bool in_q_sqrt2(const Cyc& a)
{
    if (a.is_rational()) return true;
    if (8 % a.conductor() != 0) return false;
    return galois_apply(GaloisMap{8, 7}, a) == a;
}

} // namespace mnv
