#ifndef MNV_COMMON_HPP
#define MNV_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mnv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;
using u64 = std::uint64_t;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MNV_REQUIRE(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond)) throw ::mnv::Error(msg);                                  \
    } while (0)

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm64(i64 a, i64 b) { return std::lcm(a, b); }

// a mod m normalized to [0, m)
inline i64 mod64(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline u64 mulmod64(u64 a, u64 b, u64 m)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod64(u64 base, u64 exp, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// inverse of a mod m, gcd(a, m) = 1
inline i64 invmod64(i64 a, i64 m)
{
    i64 t = 0, newt = 1, r = m, newr = mod64(a, m);
    while (newr != 0) {
        i64 q = r / newr;
        i64 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    MNV_REQUIRE(r == 1, "invmod64: arguments not coprime");
    return mod64(t, m);
}

inline i64 euler_phi(i64 n)
{
    i64 result = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace mnv

#endif
