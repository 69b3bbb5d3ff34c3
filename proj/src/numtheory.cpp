#include "mnv/numtheory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mnv/cyclotomic.hpp"
#include "mnv/poly.hpp"

namespace mnv {

bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n)
{
    MNV_REQUIRE(n >= 1, "factorize: positive input required");
    std::vector<std::pair<u64, int>> f;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

u64 order_mod(u64 q, u64 ell)
{
    MNV_REQUIRE(ell >= 2, "order_mod: modulus must be at least 2");
    MNV_REQUIRE(q % ell != 0, "order_mod: ell divides q");
    u64 x = q % ell;
    u64 d = 1;
    u64 acc = x;
    while (acc != 1) {
        acc = mulmod64(acc, x, ell);
        ++d;
        MNV_REQUIRE(d <= ell, "order_mod: no order found (modulus not prime?)");
    }
    return d;
}

Int cyclotomic_eval(int d, const Int& q)
{
    return cyclotomic_polynomial(d).eval_int(q);
}

std::string series_name(Series s) { return s == Series::G2 ? "G2" : "B2"; }

Series series_from_name(const std::string& name)
{
    if (name == "G2") return Series::G2;
    if (name == "B2") return Series::B2;
    throw Error("unknown series: " + name);
}

SeriesParams make_params(Series series, int f)
{
    MNV_REQUIRE(f >= 1, "make_params: f must be positive");
    SeriesParams p;
    p.series = series;
    p.f = f;
    p.p = (series == Series::G2) ? 3 : 2;
    p.q = 1;
    for (int i = 0; i < f; ++i) p.q *= p.p;
    return p;
}

const std::vector<int>& valid_d(Series series)
{
    static const std::vector<int> g2{1, 2, 3, 6};
    static const std::vector<int> b2{1, 2, 4};
    return series == Series::G2 ? g2 : b2;
}

FactoredOrder group_order(const SeriesParams& params)
{
    FactoredOrder fo;
    const Int& q = params.q;
    auto phi = [&](int d) { return cyclotomic_eval(d, q); };
    if (params.series == Series::G2) {
        fo.pieces = {{"q^6", q * q * q * q * q * q},
                     {"phi1^2", phi(1) * phi(1)},
                     {"phi2^2", phi(2) * phi(2)},
                     {"phi3", phi(3)},
                     {"phi6", phi(6)}};
    } else {
        fo.pieces = {{"q^4", q * q * q * q},
                     {"phi1^2", phi(1) * phi(1)},
                     {"phi2^2", phi(2) * phi(2)},
                     {"phi4", phi(4)}};
    }
    fo.total = 1;
    for (const auto& [name, value] : fo.pieces) fo.total *= value;
    return fo;
}

std::vector<PrimeContext> relevant_primes(const SeriesParams& params)
{
    u64 min_ell = (params.series == Series::G2) ? 5 : 3;
    std::map<u64, int> found;
    for (int d : valid_d(params.series)) {
        Int v = cyclotomic_eval(d, params.q);
        MNV_REQUIRE(v > 0 && v < Int(std::numeric_limits<u64>::max()),
                    "relevant_primes: cyclotomic value out of factoring range");
        for (auto [ell, e] : factorize(static_cast<u64>(v))) {
            (void)e;
            if (ell < min_ell || static_cast<i64>(ell) == params.p) continue;
            u64 q64 = static_cast<u64>(params.q % ell);
            int dd = static_cast<int>(order_mod(q64 == 0 ? 1 : q64, ell));
            MNV_REQUIRE(cyclotomic_eval(dd, params.q) % ell == 0,
                        "relevant_primes: ell does not divide phi_d(q)");
            found[ell] = dd;
        }
    }
    std::vector<PrimeContext> out;
    for (auto [ell, d] : found) out.push_back(PrimeContext{ell, d});
    return out;
}

namespace {

std::vector<u64> primes_up_to(u64 bound)
{
    std::vector<char> sieve(bound + 1, 1);
    std::vector<u64> primes;
    for (u64 i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= bound; j += i) sieve[j] = 0;
    }
    return primes;
}

struct ClauseSpec {
    std::vector<int> f_range;
    // hypothesis: does ell divide the clause value for this f?
    bool (*hyp)(u64 ell, int f);
    // congruence conclusion
    bool (*conc)(u64 ell);
    // fixed value under the ell-local Galois subgroup
    Cyc (*fixed_value)();
    const char* conc_desc;
};

bool hyp_a(u64 ell, int f) { return powmod64(3, static_cast<u64>(f), ell) == 1; }
bool hyp_b(u64 ell, int f) { return powmod64(3, static_cast<u64>(f), ell) == ell - 1; }
bool hyp_c(u64 ell, int f)
{
    u64 q = powmod64(3, static_cast<u64>(f), ell);
    u64 plus = (mulmod64(q, q, ell) + q + 1) % ell;
    u64 minus = (mulmod64(q, q, ell) + (ell - q) + 1) % ell;
    return plus == 0 || minus == 0;
}
bool hyp_d(u64 ell, int f) { return powmod64(2, static_cast<u64>(f), ell) == 1; }
bool hyp_e(u64 ell, int f)
{
    return powmod64(2, 2 * static_cast<u64>(f), ell) == ell - 1;
}

bool conc_a(u64 ell) { return ell % 12 == 1 || ell % 12 == 11; }
bool conc_b(u64 ell) { return ell % 12 == 1 || ell % 12 == 7; }
bool conc_c(u64 ell) { return ell % 3 == 1; }
bool conc_d(u64 ell) { return ell % 8 == 1 || ell % 8 == 7; }
bool conc_e(u64 ell) { return ell % 4 == 1; }

Cyc zeta4() { return Cyc::root(4, 1); }

const ClauseSpec& clause(CongruenceCase cs)
{
    static const std::map<CongruenceCase, ClauseSpec> table = {
        {CongruenceCase::A, {{1, 3, 5, 7, 9}, hyp_a, conc_a, sqrt3, "ell = 1,11 mod 12"}},
        {CongruenceCase::B, {{1, 3, 5, 7, 9}, hyp_b, conc_b, sqrt_minus3, "ell = 1,7 mod 12"}},
        {CongruenceCase::C,
         {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, hyp_c, conc_c, sqrt_minus3, "ell = 1 mod 3"}},
        {CongruenceCase::D, {{1, 3, 5, 7, 9}, hyp_d, conc_d, sqrt2, "ell = 1,7 mod 8"}},
        {CongruenceCase::E,
         {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, hyp_e, conc_e, zeta4, "ell = 1 mod 4"}},
    };
    return table.at(cs);
}

} // namespace

std::vector<ScanViolation> congruence_scan(CongruenceCase cs, u64 bound)
{
    MNV_REQUIRE(bound >= 5, "congruence_scan: bound too small");
    const ClauseSpec& spec = clause(cs);
    std::vector<ScanViolation> bad;
    // fixedness of the clause value depends only on ell, not f; cache per prime
    for (u64 ell : primes_up_to(bound)) {
        if (ell == 2) continue;
        bool any_instance = false;
        for (int f : spec.f_range) {
            if (!spec.hyp(ell, f)) continue;
            any_instance = true;
            if (!spec.conc(ell))
                bad.push_back({ell, f, std::string("congruence failed: ") + spec.conc_desc});
        }
        if (any_instance && !is_h_fixed(spec.fixed_value(), static_cast<i64>(ell)))
            bad.push_back({ell, 0, "Galois fixedness failed"});
    }
    return bad;
}

u64 congruence_instance_count(CongruenceCase cs, u64 bound)
{
    const ClauseSpec& spec = clause(cs);
    u64 count = 0;
    for (u64 ell : primes_up_to(bound)) {
        if (ell == 2) continue;
        for (int f : spec.f_range)
            if (spec.hyp(ell, f)) ++count;
    }
    return count;
}

std::string congruence_fixedness_crosscheck(u64 bound)
{
    struct Probe {
        Cyc value;
        const char* name;
        bool (*predict)(u64 ell);
    };
    const Probe probes[] = {
        {sqrt3(), "sqrt(3)", [](u64 ell) { return ell % 12 == 1 || ell % 12 == 11; }},
        {sqrt_minus3(), "sqrt(-3)", [](u64 ell) { return ell % 3 == 1; }},
        {sqrt2(), "sqrt(2)", [](u64 ell) { return ell % 8 == 1 || ell % 8 == 7; }},
        {Cyc::root(4, 1), "zeta_4", [](u64 ell) { return ell % 4 == 1; }},
    };
    for (u64 ell : primes_up_to(bound)) {
        if (ell == 2) continue;
        for (const auto& probe : probes) {
            bool direct = is_h_fixed(probe.value, static_cast<i64>(ell));
            bool predicted = probe.predict(ell);
            if (direct != predicted) {
                std::ostringstream os;
                os << "route disagreement at ell=" << ell << " on " << probe.name
                   << ": direct=" << direct << " predicted=" << predicted;
                return os.str();
            }
        }
    }
    return "";
}

} // namespace mnv
