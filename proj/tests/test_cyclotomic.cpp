#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mnv/cyclotomic.hpp"
#include "mnv/poly.hpp"

using namespace mnv;

// ---------------------------------------------------------------------------
// Independent naive oracle: polynomial arithmetic modulo Phi_n on full power
// vectors, written without the library's reduction or descent machinery.
namespace oracle {

using Vec = std::vector<Rat>;

// quotient of a by b, assuming exact division and monic b
Vec exact_div(Vec a, const Vec& b)
{
    size_t db = b.size() - 1;
    Vec quo(a.size() - db, Rat(0));
    for (size_t i = a.size(); i-- > db;) {
        Rat f = a[i];
        if (f == 0) continue;
        quo[i - db] = f;
        for (size_t j = 0; j < b.size(); ++j) a[i - db + j] -= f * b[j];
    }
    return quo;
}

Vec phi(i64 n)
{
    // (x^n - 1) / prod_{d | n, d < n} phi(d)
    Vec num(static_cast<size_t>(n) + 1, Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (i64 d = 1; d < n; ++d)
        if (n % d == 0) num = exact_div(num, phi(d));
    return num;
}

Vec reduce(i64 n, Vec v)
{
    Vec p = phi(n);
    size_t deg = p.size() - 1;
    if (v.size() > static_cast<size_t>(n)) {
        Vec w(static_cast<size_t>(n), Rat(0));
        for (size_t i = 0; i < v.size(); ++i) w[i % static_cast<size_t>(n)] += v[i];
        v = w;
    }
    while (v.size() > deg) {
        Rat lead = v.back();
        size_t top = v.size() - 1;
        for (size_t j = 0; j + 1 < p.size(); ++j) v[top - deg + j] -= lead * p[j];
        v.pop_back();
    }
    v.resize(deg, Rat(0));
    return v;
}

Vec mul(i64 n, const Vec& a, const Vec& b)
{
    Vec r(a.size() + b.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(n, r);
}

Vec galois(i64 n, i64 j, const Vec& a)
{
    Vec r(static_cast<size_t>(n), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[static_cast<size_t>((static_cast<i64>(i) * j) % n)] += a[i];
    return reduce(n, r);
}

Cyc to_cyc(i64 n, const Vec& v) { return Cyc::from_powers(n, v); }

} // namespace oracle

TEST_CASE("roots of unity: basic constructors")
{
    CHECK(Cyc::root(1, 0) == Cyc::rational(1));
    CHECK(Cyc::root(4, 2) == Cyc::rational(-1));
    CHECK(Cyc::root(5, 7) == Cyc::root(5, 2));
    CHECK(Cyc::root(6, 1).conductor() == 3); // 2 mod 4 conductors collapse
    CHECK(Cyc::root(2, 1) == Cyc::rational(-1));
}

TEST_CASE("sqrt(3) = z12 - z12^5 and sqrt(-3) = -z3 + z3^2 square correctly")
{
    Cyc r3 = Cyc::root(12, 1) - Cyc::root(12, 5);
    CHECK(r3 * r3 == Cyc::rational(3));
    // same via the naive oracle
    oracle::Vec v(12, Rat(0));
    v[1] = 1;
    v[5] = -1;
    oracle::Vec sq = oracle::mul(12, v, v);
    CHECK(oracle::to_cyc(12, sq) == Cyc::rational(3));

    Cyc rm3 = -Cyc::root(3, 1) + Cyc::root(3, 2);
    CHECK(rm3 * rm3 == Cyc::rational(-3));
    oracle::Vec w(3, Rat(0));
    w[1] = -1;
    w[2] = 1;
    CHECK(oracle::to_cyc(3, oracle::mul(3, w, w)) == Cyc::rational(-3));

    Cyc r2 = sqrt2();
    CHECK(r2 * r2 == Cyc::rational(2));

    Cyc any = Cyc::root(7, 3) + Cyc::rational(Rat(1, 2));
    CHECK(any + Cyc() == any);
}

TEST_CASE("conductor computation")
{
    CHECK(Cyc::rational(Rat(7, 2)).conductor() == 1);
    CHECK(sqrt3().conductor() == 12);
    CHECK(sqrt_minus3().conductor() == 3);
    CHECK(sqrt2().conductor() == 8);
    // zeta5 + zeta5^4 generates the real quadratic subfield of Q(zeta5)
    Cyc golden = Cyc::root(5, 1) + Cyc::root(5, 4);
    CHECK(golden.conductor() == 5);
    CHECK(golden * golden + golden == Cyc::rational(1)); // root of x^2 + x - 1
}

TEST_CASE("sqrt(3) lies in no proper cyclotomic subfield of Q(zeta12)")
{
    // oracle route: membership in Q(zeta_m) means fixed by all j = 1 mod m
    oracle::Vec v(12, Rat(0));
    v[1] = 1;
    v[5] = -1;
    oracle::Vec canon = oracle::reduce(12, v);
    for (i64 m : {1, 2, 3, 4, 6}) {
        bool fixed_by_all = true;
        for (i64 j : {1, 5, 7, 11}) {
            if (j % m != 1 % m) continue;
            if (oracle::galois(12, j, v) != canon) fixed_by_all = false;
        }
        CHECK_FALSE(fixed_by_all);
    }
}

TEST_CASE("galois action examples")
{
    CHECK(galois_apply(GaloisMap{3, 2}, Cyc::root(3, 1)) == Cyc::root(3, 2));
    CHECK(galois_apply(GaloisMap{12, 5}, sqrt3()) == -sqrt3());
    CHECK(galois_apply(GaloisMap{12, 11}, sqrt3()) == sqrt3());
    CHECK(galois_apply(GaloisMap{12, 7}, sqrt3()) == -sqrt3());
    // conjugation fixes real values, inverts others
    CHECK(Cyc::root(5, 1).conj() == Cyc::root(5, 4));
    CHECK(sqrt3().conj() == sqrt3());
    CHECK_THROWS_AS(galois_apply(GaloisMap{8, 3}, sqrt3()), Error);
}

TEST_CASE("galois lift")
{
    GaloisMap s{12, 5};
    GaloisMap t = galois_lift(s, 60);
    CHECK(t.modulus == 60);
    CHECK(t.mult % 12 == 5);
    CHECK(std::gcd(t.mult, i64(60)) == 1);
    CHECK(galois_apply(t, sqrt3()) == -sqrt3());
}

TEST_CASE("h_group structure")
{
    // 7 = 1 mod 3: restriction to Q(zeta3) is trivial
    HGroup h73 = h_group(7, 3);
    for (const auto& g : h73.gens) CHECK(mod64(g.mult, 3) == 1);
    CHECK(is_h_fixed(sqrt_minus3(), 7));

    // multiplier 5 shows up for ell = 5 on Q(zeta12) and moves sqrt(3)
    HGroup h512 = h_group(5, 12);
    bool has5 = false;
    for (const auto& g : h512.gens)
        if (mod64(g.mult, 12) == 5) has5 = true;
    CHECK(has5);
    CHECK(galois_apply(GaloisMap{12, 5}, sqrt3()) == -sqrt3());

    HGroup triv = h_group(11, 1);
    CHECK(triv.gens.size() == 1);

    CHECK(is_h_fixed(sqrt3(), 11));
    CHECK_FALSE(is_h_fixed(sqrt3(), 5));
    CHECK(is_h_fixed(Cyc::rational(Rat(22, 7)), 5));
}

TEST_CASE("h_group elements are ell-power multipliers on prime-to-ell roots")
{
    for (i64 ell : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                    67, 71, 73, 79, 83, 89, 97}) {
        for (i64 m = 1; m <= 60; ++m) {
            if (m % 4 == 2 || m % ell == 0) continue;
            std::set<i64> powers;
            i64 x = 1 % m;
            do {
                powers.insert(x);
                x = mod64(x * ell, m);
            } while (!powers.count(x));
            for (i64 j : h_group(ell, m).elements()) {
                CAPTURE(ell);
                CAPTURE(m);
                CAPTURE(j);
                CHECK(powers.count(mod64(j == 0 ? 1 : j, m)) == 1);
            }
        }
    }
}

TEST_CASE("galois maps are field automorphisms (fuzz)")
{
    std::mt19937 rng(20240817);
    auto random_cyc = [&](i64 n) {
        std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
        std::uniform_int_distribution<int> coef(-3, 3);
        for (auto& x : v) x = coef(rng);
        return Cyc::from_powers(n, v);
    };
    const i64 mods[] = {3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24};
    for (int iter = 0; iter < 200; ++iter) {
        i64 n = mods[static_cast<size_t>(rng() % std::size(mods))];
        Cyc a = random_cyc(n), b = random_cyc(n);
        i64 j = 1 + static_cast<i64>(rng() % static_cast<u64>(n));
        while (std::gcd(j, n) != 1) ++j;
        GaloisMap s{n, j % n == 0 ? 1 : j % n};
        CHECK(galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b));
        CHECK(galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b));
    }
}

TEST_CASE("galois orbit sums are rational (trace property)")
{
    std::mt19937 rng(7);
    const i64 mods[] = {5, 7, 8, 9, 12, 15};
    for (int iter = 0; iter < 60; ++iter) {
        i64 n = mods[static_cast<size_t>(rng() % std::size(mods))];
        std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
        std::uniform_int_distribution<int> coef(-2, 2);
        for (auto& x : v) x = coef(rng);
        Cyc a = Cyc::from_powers(n, v);
        Cyc trace;
        i64 m = a.conductor();
        for (i64 j = 1; j <= m; ++j) {
            if (std::gcd(j, m) != 1) continue;
            trace = trace + galois_apply(GaloisMap{m, j % m == 0 ? 1 : j}, a);
        }
        CHECK(trace.is_rational());
    }
}

TEST_CASE("canonical form round trip against the naive oracle (fuzz)")
{
    std::mt19937 rng(101);
    int checked = 0;
    for (i64 n : {4, 5, 8, 9, 12, 16, 20, 25, 27, 36}) {
        for (int iter = 0; iter < 100; ++iter) {
            std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
            std::uniform_int_distribution<int> coef(-4, 4);
            for (auto& x : v) x = coef(rng);
            Cyc a = Cyc::from_powers(n, v);
            // rebuild from a stretched representation at a larger modulus
            std::vector<Rat> stretched(static_cast<size_t>(2 * n), Rat(0));
            for (size_t i = 0; i < v.size(); ++i) stretched[2 * i] = v[i];
            CHECK(Cyc::from_powers(2 * n, stretched) == a);
            // product against oracle at conductor n
            std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
            for (auto& x : w) x = coef(rng);
            Cyc b = Cyc::from_powers(n, w);
            CHECK(a * b == oracle::to_cyc(n, oracle::mul(n, v, w)));
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

TEST_CASE("display form is byte-stable and sorted")
{
    // power basis of Q(zeta12) is 1, z, z^2, z^3: z^5 reduces to z^3 - z
    CHECK(sqrt3().str() == "2*z(12)^1 - z(12)^3");
    CHECK(sqrt_minus3().str() == "-1 - 2*z(3)^1");
    CHECK(Cyc::rational(Rat(7, 2)).str() == "7/2");
    CHECK(Cyc().str() == "0");
    CHECK((Cyc::rational(2) + Cyc::root(5, 2)).str() == "2 + z(5)^2");
}

TEST_CASE("field membership helper for Q(sqrt 2)")
{
    CHECK(in_q_sqrt2(sqrt2()));
    CHECK(in_q_sqrt2(Cyc::rational(5)));
    CHECK(in_q_sqrt2(sqrt2() + Cyc::rational(3)));
    CHECK_FALSE(in_q_sqrt2(Cyc::root(8, 1)));
    CHECK_FALSE(in_q_sqrt2(sqrt3()));
}
