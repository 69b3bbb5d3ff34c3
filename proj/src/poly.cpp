#include "mnv/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace mnv {

namespace {
const Rat kZero = Rat(0);
}

QPoly QPoly::constant(const Rat& r)
{
    if (r == 0) return QPoly();
    return QPoly(std::vector<Rat>{r});
}

QPoly QPoly::monomial(const Rat& coeff, int degree)
{
    if (coeff == 0) return QPoly();
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coeff;
    return QPoly(std::move(c));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

QPoly QPoly::operator+(const QPoly& o) const
{
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const
{
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const
{
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const
{
    MNV_REQUIRE(!divisor.is_zero(), "QPoly::divmod: division by zero polynomial");
    std::vector<Rat> rem(c_);
    int dd = divisor.degree();
    const Rat& lead = divisor.c_.back();
    if (static_cast<int>(rem.size()) - 1 < dd) return {QPoly(), QPoly(std::move(rem))};
    std::vector<Rat> quo(rem.size() - dd, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / lead;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

bool QPoly::divides_exactly(const QPoly& divisor, QPoly* quotient) const
{
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = q;
    return true;
}

Rat QPoly::eval(const Rat& x) const
{
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Int QPoly::eval_int(const Int& x) const
{
    Rat r = eval(Rat(x));
    MNV_REQUIRE(denominator(r) == 1, "QPoly::eval_int: non-integral value");
    return numerator(r);
}

QPoly QPoly::monic() const
{
    MNV_REQUIRE(!is_zero(), "QPoly::monic: zero polynomial");
    std::vector<Rat> r(c_);
    Rat lead = r.back();
    for (auto& x : r) x /= lead;
    return QPoly(std::move(r));
}

QPoly QPoly::reversed() const
{
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return QPoly(std::move(r));
}

std::string QPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rat mag = a > 0 ? a : Rat(-a);
        if (mag != 1 || i == 0) os << mag.str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

QPoly poly_gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

const QPoly& cyclotomic_polynomial(i64 n)
{
    static std::map<i64, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MNV_REQUIRE(n >= 1, "cyclotomic_polynomial: n must be positive");

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without re-entering the lock.
    std::vector<i64> todo{n};
    while (!todo.empty()) {
        i64 m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (i64 d = 1; d < m; ++d) {
            if (m % d == 0 && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        std::vector<Rat> xn(m + 1, Rat(0));
        xn[0] = -1;
        xn[m] = 1;
        QPoly p{std::move(xn)};
        for (i64 d = 1; d < m; ++d) {
            if (m % d == 0) {
                auto [q, r] = p.divmod(cache[d]);
                MNV_REQUIRE(r.is_zero(), "cyclotomic_polynomial: inexact division");
                p = std::move(q);
            }
        }
        cache[m] = std::move(p);
        todo.pop_back();
    }
    return cache[n];
}

} // namespace mnv
