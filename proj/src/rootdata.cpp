#include "mnv/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mnv/poly.hpp"

namespace mnv {

namespace {
Rat frac_mod1(const Rat& r)
{
    Int n = numerator(r), d = denominator(r);
    Int m = n % d;
    if (m < 0) m += d;
    return Rat(m, d);
}
} // namespace

Vec2Q Vec2Q::of(const Rat& a, const Rat& b) { return Vec2Q{frac_mod1(a), frac_mod1(b)}; }

Vec2Q Vec2Q::apply(const Mat2& m) const
{
    return Vec2Q::of(m.a * x + m.b * y, m.c * x + m.d * y);
}

Vec2Q Vec2Q::scale(i64 k) const { return Vec2Q::of(k * x, k * y); }

Vec2Q Vec2Q::add(const Vec2Q& o) const { return Vec2Q::of(x + o.x, y + o.y); }

i64 Vec2Q::order() const
{
    return lcm64(static_cast<i64>(denominator(x)), static_cast<i64>(denominator(y)));
}

std::string Vec2Q::str() const
{
    return "(" + x.str() + "," + y.str() + ")";
}

Snf2 smith_normal_form(const Mat2& A)
{
    Snf2 s;
    s.D = A;
    s.U = Mat2::identity();
    s.V = Mat2::identity();
    auto row_swap = [&]() {
        std::swap(s.D.a, s.D.c);
        std::swap(s.D.b, s.D.d);
        std::swap(s.U.a, s.U.c);
        std::swap(s.U.b, s.U.d);
    };
    auto col_swap = [&]() {
        std::swap(s.D.a, s.D.b);
        std::swap(s.D.c, s.D.d);
        std::swap(s.V.a, s.V.b);
        std::swap(s.V.c, s.V.d);
    };
    auto row_addmul = [&](i64 k) { // row0 += k * row1
        s.D.a += k * s.D.c;
        s.D.b += k * s.D.d;
        s.U.a += k * s.U.c;
        s.U.b += k * s.U.d;
    };
    auto row_addmul_10 = [&](i64 k) { // row1 += k * row0
        s.D.c += k * s.D.a;
        s.D.d += k * s.D.b;
        s.U.c += k * s.U.a;
        s.U.d += k * s.U.b;
    };
    auto col_addmul = [&](i64 k) { // col0 += k * col1
        s.D.a += k * s.D.b;
        s.D.c += k * s.D.d;
        s.V.a += k * s.V.b;
        s.V.c += k * s.V.d;
    };
    auto col_addmul_10 = [&](i64 k) { // col1 += k * col0
        s.D.b += k * s.D.a;
        s.D.d += k * s.D.c;
        s.V.b += k * s.V.a;
        s.V.d += k * s.V.c;
    };
    for (int guard = 0; guard < 256; ++guard) {
        // bring a nonzero minimal entry into position (0,0)
        i64 best = 0;
        int where = -1;
        i64 vals[4] = {s.D.a, s.D.b, s.D.c, s.D.d};
        for (int i = 0; i < 4; ++i) {
            if (vals[i] != 0 && (where < 0 || std::abs(vals[i]) < best)) {
                best = std::abs(vals[i]);
                where = i;
            }
        }
        MNV_REQUIRE(where >= 0, "smith_normal_form: zero matrix unsupported");
        if (where == 1) col_swap();
        else if (where == 2) row_swap();
        else if (where == 3) {
            row_swap();
            col_swap();
        }
        if (s.D.c % s.D.a != 0) {
            row_addmul_10(-(s.D.c / s.D.a));
            continue;
        }
        if (s.D.b % s.D.a != 0) {
            col_addmul_10(-(s.D.b / s.D.a));
            continue;
        }
        row_addmul_10(-(s.D.c / s.D.a));
        col_addmul_10(-(s.D.b / s.D.a));
        if (s.D.d % s.D.a != 0) {
            // fold row 1 into row 0 to force divisibility
            row_addmul(1);
            continue;
        }
        break;
    }
    MNV_REQUIRE(s.D.b == 0 && s.D.c == 0 && s.D.d % s.D.a == 0,
                "smith_normal_form: reduction failed");
    if (s.D.a < 0) {
        s.D.a = -s.D.a;
        s.U.a = -s.U.a;
        s.U.b = -s.U.b;
    }
    if (s.D.d < 0) {
        s.D.d = -s.D.d;
        s.U.c = -s.U.c;
        s.U.d = -s.U.d;
    }
    MNV_REQUIRE(s.U * A * s.V == s.D, "smith_normal_form: transform mismatch");
    MNV_REQUIRE(std::abs(s.U.det()) == 1 && std::abs(s.V.det()) == 1,
                "smith_normal_form: transforms not unimodular");
    return s;
}

// ---------------------------------------------------------------------------

int RootDatum2::weyl_index(const Mat2& my) const
{
    for (size_t i = 0; i < wy.size(); ++i)
        if (wy[i] == my) return static_cast<int>(i);
    return -1;
}

int RootDatum2::root_index(i64 rx, i64 ry) const
{
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].first == rx && roots[i].second == ry) return static_cast<int>(i);
    return -1;
}

Rat RootDatum2::pair_root(int root, const Vec2Q& v) const
{
    auto [rx, ry] = roots[static_cast<size_t>(root)];
    Rat u1 = rx * pairing.a + ry * pairing.c;
    Rat u2 = rx * pairing.b + ry * pairing.d;
    return u1 * v.x + u2 * v.y;
}

RootDatum2 RootDatum2::dual() const
{
    RootDatum2 d(*this);
    d.dual_side = !dual_side;
    std::swap(d.roots, d.coroots);
    std::swap(d.wx, d.wy);
    d.pairing = pairing.transpose();
    return d;
}

namespace {

RootDatum2 build_datum(Series series)
{
    RootDatum2 rd;
    rd.series = series;
    rd.p = (series == Series::G2) ? 3 : 2;
    Mat2 sxa, sya, sxb, syb;
    std::pair<i64, i64> alpha_x, alpha_y, beta_x, beta_y;
    if (series == Series::G2) {
        // alpha short, beta long; <beta, alpha^> = -3, <alpha, beta^> = -1
        rd.pairing = Mat2{2, -1, -3, 2};
        sxa = Mat2{-1, 3, 0, 1};
        sya = Mat2{-1, 1, 0, 1};
        sxb = Mat2{1, 0, 1, -1};
        syb = Mat2{1, 0, 3, -1};
        alpha_x = {1, 0};
        alpha_y = {1, 0};
        beta_x = {0, 1};
        beta_y = {0, 1};
    } else {
        // alpha = e1 - e2 short, beta = 2 e2 long, on the weight lattice Z^2
        rd.pairing = Mat2::identity();
        sxa = Mat2{0, 1, 1, 0};
        sya = sxa;
        sxb = Mat2{1, 0, 0, -1};
        syb = sxb;
        alpha_x = {1, -1};
        alpha_y = {1, -1};
        beta_x = {0, 2};
        beta_y = {0, 1};
    }

    // close the simple roots under the two reflections, tracking coroots and length
    struct Entry {
        std::pair<i64, i64> x, y;
        int lng;
    };
    std::vector<Entry> found{{alpha_x, alpha_y, 0}, {beta_x, beta_y, 1}};
    auto find_x = [&](std::pair<i64, i64> v) {
        for (size_t i = 0; i < found.size(); ++i)
            if (found[i].x == v) return static_cast<int>(i);
        return -1;
    };
    for (size_t head = 0; head < found.size(); ++head) {
        for (const auto& [mx, my] : {std::pair{sxa, sya}, std::pair{sxb, syb}}) {
            Entry e{mx.apply(found[head].x.first, found[head].x.second),
                    my.apply(found[head].y.first, found[head].y.second), found[head].lng};
            if (find_x(e.x) < 0) found.push_back(e);
        }
        Entry neg{{-found[head].x.first, -found[head].x.second},
                  {-found[head].y.first, -found[head].y.second},
                  found[head].lng};
        if (find_x(neg.x) < 0) found.push_back(neg);
    }
    size_t expected = (series == Series::G2) ? 12 : 8;
    MNV_REQUIRE(found.size() == expected, "root closure has wrong size");
    for (const auto& e : found) {
        rd.roots.push_back(e.x);
        rd.coroots.push_back(e.y);
        rd.is_long.push_back(e.lng);
    }

    // enumerate the Weyl group as aligned (perm, X matrix, Y matrix) triples
    auto perm_of = [&](const Mat2& mx) {
        Perm p;
        p.img.resize(rd.roots.size());
        for (size_t i = 0; i < rd.roots.size(); ++i) {
            auto im = mx.apply(rd.roots[i].first, rd.roots[i].second);
            int j = rd.root_index(im.first, im.second);
            MNV_REQUIRE(j >= 0, "Weyl element does not preserve the roots");
            p.img[i] = static_cast<uint16_t>(j);
        }
        return p;
    };
    std::vector<std::pair<Mat2, Mat2>> elems{{Mat2::identity(), Mat2::identity()}};
    std::vector<std::pair<Mat2, Mat2>> gens{{sxa, sya}, {sxb, syb}};
    auto matfind = [&](const Mat2& mx) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i].first == mx) return static_cast<int>(i);
        return -1;
    };
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& [gx, gy] : gens) {
            Mat2 nx = elems[head].first * gx;
            Mat2 ny = elems[head].second * gy;
            if (matfind(nx) < 0) elems.emplace_back(nx, ny);
        }
    }
    size_t worder = (series == Series::G2) ? 12 : 8;
    MNV_REQUIRE(elems.size() == worder, "Weyl group has wrong order");
    std::vector<Perm> perms;
    for (const auto& [mx, my] : elems) {
        rd.wx.push_back(mx);
        rd.wy.push_back(my);
        perms.push_back(perm_of(mx));
    }
    rd.wperm = FiniteGroup::from_elements(perms, {perm_of(sxa), perm_of(sxb)});
    // alignment: from_elements preserves the given order, so index i of wperm
    // matches wx[i], wy[i]; spot check products
    for (int i = 0; i < rd.wperm.order(); ++i) {
        int j = rd.wperm.mult(i, 1);
        MNV_REQUIRE(rd.wx[static_cast<size_t>(j)] == rd.wx[static_cast<size_t>(i)] * sxb,
                    "Weyl matrix alignment broken");
    }

    // the reflection attached to each root: y -> y - <alpha, y> alpha^
    for (size_t r = 0; r < rd.roots.size(); ++r) {
        auto [cx, cy] = rd.coroots[r];
        i64 u1 = rd.roots[r].first * rd.pairing.a + rd.roots[r].second * rd.pairing.c;
        i64 u2 = rd.roots[r].first * rd.pairing.b + rd.roots[r].second * rd.pairing.d;
        Mat2 refl{1 - cx * u1, -cx * u2, -cy * u1, 1 - cy * u2};
        int idx = rd.weyl_index(refl);
        MNV_REQUIRE(idx >= 0, "root reflection not found in the Weyl group");
        rd.reflection_of_root.push_back(idx);
    }
    return rd;
}

} // namespace

const RootDatum2& root_datum(Series series)
{
    static const RootDatum2 g2 = build_datum(Series::G2);
    static const RootDatum2 b2 = build_datum(Series::B2);
    return series == Series::G2 ? g2 : b2;
}

TorusClass sylow_torus(const RootDatum2& rd, i64 q, int d)
{
    const auto& dd = valid_d(rd.series);
    MNV_REQUIRE(std::find(dd.begin(), dd.end(), d) != dd.end(),
                "sylow_torus: invalid d for this series");
    Mat2 w;
    if (d == 1) {
        w = Mat2::identity();
    } else if (d == 2) {
        w = Mat2::scalar(-1); // the longest element acts as -1 in rank 2 here
    } else {
        Mat2 sa = rd.wy[static_cast<size_t>(rd.wperm.generator_indices()[0])];
        Mat2 sb = rd.wy[static_cast<size_t>(rd.wperm.generator_indices()[1])];
        Mat2 c = sa * sb;
        w = (d == 3) ? c * c : c; // order 3 for d=3; full rotation for d=6 / d=4
    }
    int widx = rd.weyl_index(w);
    MNV_REQUIRE(widx >= 0, "sylow_torus: twist not in Weyl group");

    TorusClass tc;
    tc.series = rd.series;
    tc.d = d;
    tc.q = q;
    tc.widx = widx;
    tc.rel = Mat2{q * w.a - 1, q * w.b, q * w.c, q * w.d - 1};
    Snf2 s = smith_normal_form(tc.rel);
    tc.inv1 = s.d1();
    tc.inv2 = s.d2();
    tc.V = s.V;
    tc.order = tc.inv1 * tc.inv2;
    MNV_REQUIRE(tc.order == std::abs(tc.rel.det()), "sylow_torus: order mismatch");
    Int predicted = cyclotomic_eval(d, Int(q));
    if (d == 1 || d == 2) predicted *= predicted;
    MNV_REQUIRE(Int(tc.order) == predicted, "sylow_torus: phi_d-part mismatch");
    return tc;
}

std::vector<Vec2Q> torus_points(const TorusClass& tc, i64 cap)
{
    MNV_REQUIRE(tc.order <= cap, "torus_points: enumeration cap exceeded");
    std::vector<Vec2Q> pts;
    pts.reserve(static_cast<size_t>(tc.order));
    for (i64 a = 0; a < tc.inv1; ++a) {
        for (i64 b = 0; b < tc.inv2; ++b) {
            Rat xa(a, tc.inv1), xb(b, tc.inv2);
            pts.push_back(Vec2Q::of(tc.V.a * xa + tc.V.b * xb, tc.V.c * xa + tc.V.d * xb));
        }
    }
    // kernel property
    for (const auto& p : pts) {
        Rat r1 = tc.rel.a * p.x + tc.rel.b * p.y;
        Rat r2 = tc.rel.c * p.x + tc.rel.d * p.y;
        MNV_REQUIRE(denominator(r1) == 1 && denominator(r2) == 1,
                    "torus_points: point not annihilated by the twist relation");
    }
    return pts;
}

RelWeyl relative_weyl(const RootDatum2& rd, int d)
{
    TorusClass tc = sylow_torus(rd, 2, d); // q is irrelevant for the twist
    std::vector<int> cent;
    for (int i = 0; i < rd.wperm.order(); ++i)
        if (rd.wy[static_cast<size_t>(i)] * rd.wy[static_cast<size_t>(tc.widx)] ==
            rd.wy[static_cast<size_t>(tc.widx)] * rd.wy[static_cast<size_t>(i)])
            cent.push_back(i);
    EmbeddedSubgroup S = embedded_subgroup(rd.wperm, cent);
    RelWeyl rw;
    rw.windices = S.to_ambient;
    rw.grp = std::move(S.grp);
    rw.type = small_group_type(rw.grp);
    return rw;
}

Int twisted_centralizer_order(const RootDatum2& rd, const std::vector<int>& subsystem,
                              int twist_widx, const Int& q)
{
    // W_H: closure of the reflections attached to the subsystem
    std::set<int> wh{0};
    std::vector<int> frontier{0};
    std::vector<int> gens;
    for (int r : subsystem) gens.push_back(rd.reflection_of_root[static_cast<size_t>(r)]);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int g : gens) {
                int y = rd.wperm.mult(x, g);
                if (wh.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    // inverse Molien series of the coset W_H * twist
    QPoly num, den = QPoly::constant(1);
    for (int u : wh) {
        int uw = rd.wperm.mult(u, twist_widx);
        const Mat2& m = rd.wy[static_cast<size_t>(uw)];
        QPoly p(std::vector<Rat>{Rat(1), Rat(-m.trace()), Rat(m.det())});
        num = num * p + den;
        den = den * p;
    }
    QPoly g = poly_gcd(num, den);
    QPoly nred, dred;
    MNV_REQUIRE(num.divides_exactly(g, &nred) && den.divides_exactly(g, &dred),
                "twisted order: gcd reduction failed");
    QPoly scaled = dred * QPoly::constant(Rat(static_cast<i64>(wh.size())));
    QPoly B;
    MNV_REQUIRE(scaled.divides_exactly(nred, &B),
                "twisted order: Molien series is not the inverse of a polynomial");
    Int part = B.reversed().eval_int(Int(q));
    if (part < 0) part = -part;
    Int result = part;
    for (size_t i = 0; i < subsystem.size() / 2; ++i) result *= q;
    return result;
}

std::vector<std::pair<std::string, int>> component_orbits(const RootDatum2& rd,
                                                          const std::vector<int>& subsystem,
                                                          int twist_widx)
{
    size_t n = subsystem.size();
    if (n == 0) return {};
    // connected components: roots linked when their pairing is nonzero
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    auto linked = [&](int i, int j) {
        auto [cx, cy] = rd.coroots[static_cast<size_t>(subsystem[static_cast<size_t>(j)])];
        auto [rx, ry] = rd.roots[static_cast<size_t>(subsystem[static_cast<size_t>(i)])];
        i64 val = (rx * rd.pairing.a + ry * rd.pairing.c) * cx +
                  (rx * rd.pairing.b + ry * rd.pairing.d) * cy;
        return val != 0;
    };
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        std::vector<size_t> stack{i};
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (comp[j] < 0 && linked(static_cast<int>(cur), static_cast<int>(j))) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    std::vector<int> comp_size(static_cast<size_t>(ncomp), 0);
    for (size_t i = 0; i < n; ++i) ++comp_size[static_cast<size_t>(comp[i])];
    auto type_of = [&](int c) -> std::string {
        switch (comp_size[static_cast<size_t>(c)]) {
        case 2: return "A1";
        case 6: return "A2";
        case 8: return "B2";
        case 12: return "G2";
        default: throw Error("component_orbits: unrecognized component size");
        }
    };
    // orbits of components under the twist's root permutation
    const Perm& tw = rd.wperm.element(twist_widx);
    auto comp_image = [&](int c) {
        for (size_t i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            int moved = tw(subsystem[i]);
            for (size_t j = 0; j < n; ++j)
                if (subsystem[j] == moved) return comp[j];
            throw Error("component_orbits: twist does not preserve the subsystem");
        }
        throw Error("component_orbits: empty component");
    };
    std::vector<std::pair<std::string, int>> out;
    std::vector<char> seen(static_cast<size_t>(ncomp), 0);
    for (int c = 0; c < ncomp; ++c) {
        if (seen[static_cast<size_t>(c)]) continue;
        int len = 0;
        int cur = c;
        do {
            seen[static_cast<size_t>(cur)] = 1;
            ++len;
            cur = comp_image(cur);
        } while (cur != c);
        out.emplace_back(type_of(c), len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string torus_factor_label(const QPoly& charpoly)
{
    QPoly rem = charpoly;
    std::map<int, int> mult;
    bool progress = true;
    while (rem.degree() > 0 && progress) {
        progress = false;
        for (int d : {1, 2, 3, 4, 6}) {
            QPoly quo;
            if (rem.divides_exactly(cyclotomic_polynomial(d), &quo)) {
                ++mult[d];
                rem = quo;
                progress = true;
                break;
            }
        }
    }
    MNV_REQUIRE(rem.degree() == 0, "torus_factor_label: non-cyclotomic factor");
    std::ostringstream os;
    os << "T(";
    bool first = true;
    for (auto [d, e] : mult) {
        if (!first) os << "*";
        os << "phi" << d;
        if (e > 1) os << "^" << e;
        first = false;
    }
    os << ")";
    return os.str();
}

} // namespace

std::string centralizer_type_label(const RootDatum2& rd, const std::vector<int>& subsystem,
                                   int twist_widx)
{
    auto comps = component_orbits(rd, subsystem, twist_widx);
    std::ostringstream os;
    bool first = true;
    for (const auto& [type, len] : comps) {
        if (!first) os << ".";
        os << type;
        if (len > 1) os << "[" << len << "]";
        first = false;
    }
    // rank of the subsystem span
    int rank = 0;
    if (!subsystem.empty()) {
        rank = 1;
        auto [x0, y0] = rd.roots[static_cast<size_t>(subsystem[0])];
        for (int r : subsystem) {
            auto [x1, y1] = rd.roots[static_cast<size_t>(r)];
            if (x0 * y1 - y0 * x1 != 0) {
                rank = 2;
                break;
            }
        }
    }
    const Mat2& m = rd.wy[static_cast<size_t>(twist_widx)];
    if (rank == 0) {
        QPoly cp(std::vector<Rat>{Rat(m.det()), Rat(-m.trace()), Rat(1)});
        os << torus_factor_label(cp);
    } else if (rank == 1) {
        // integral direction orthogonal to the subsystem
        auto [rx, ry] = rd.roots[static_cast<size_t>(subsystem[0])];
        i64 u1 = rx * rd.pairing.a + ry * rd.pairing.c;
        i64 u2 = rx * rd.pairing.b + ry * rd.pairing.d;
        i64 g = std::gcd(std::abs(u1), std::abs(u2));
        i64 v1 = -u2 / g, v2 = u1 / g;
        auto [w1, w2] = m.apply(v1, v2);
        i64 lambda;
        if (w1 == v1 && w2 == v2) lambda = 1;
        else if (w1 == -v1 && w2 == -v2) lambda = -1;
        else throw Error("centralizer_type_label: twist does not stabilize the torus line");
        os << "." << torus_factor_label(QPoly(std::vector<Rat>{Rat(-lambda), Rat(1)}));
    }
    return os.str();
}

namespace {

std::vector<int> subsystem_of(const RootDatum2& rd, const Vec2Q& v)
{
    std::vector<int> out;
    for (size_t r = 0; r < rd.roots.size(); ++r)
        if (denominator(rd.pair_root(static_cast<int>(r), v)) == 1)
            out.push_back(static_cast<int>(r));
    return out;
}

SsClass make_class(const RootDatum2& rd, const Vec2Q& rep, i64 orbit_size,
                   std::vector<int> stab, int twist_widx, i64 q)
{
    SsClass c;
    c.rep = rep;
    c.orbit_size = orbit_size;
    c.stab_windices = std::move(stab);
    c.subsystem = subsystem_of(rd, rep);
    c.twist_widx = twist_widx;
    c.n_pos = static_cast<int>(c.subsystem.size() / 2);
    c.type_label = centralizer_type_label(rd, c.subsystem, twist_widx);
    c.cent_order = twisted_centralizer_order(rd, c.subsystem, twist_widx, Int(q));
    EmbeddedSubgroup S = embedded_subgroup(rd.wperm, c.stab_windices);
    c.stab_type = small_group_type(S.grp);
    return c;
}

} // namespace

std::vector<SsClass> ss_classes_in_sylow_torus(const RootDatum2& rd, i64 q, int d)
{
    TorusClass tc = sylow_torus(rd, q, d);
    std::vector<Vec2Q> pts = torus_points(tc);
    RelWeyl wd = relative_weyl(rd, d);
    std::map<Vec2Q, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);

    std::vector<char> visited(pts.size(), 0);
    std::vector<SsClass> out;
    i64 covered = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (visited[i]) continue;
        std::vector<int> orbit{static_cast<int>(i)};
        visited[i] = 1;
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (int w : wd.windices) {
                Vec2Q im = pts[static_cast<size_t>(orbit[head])].apply(rd.wy[static_cast<size_t>(w)]);
                auto it = index.find(im);
                MNV_REQUIRE(it != index.end(), "ss_classes: orbit left the torus");
                if (!visited[static_cast<size_t>(it->second)]) {
                    visited[static_cast<size_t>(it->second)] = 1;
                    orbit.push_back(it->second);
                }
            }
        }
        std::vector<int> stab;
        for (int w : wd.windices)
            if (pts[i].apply(rd.wy[static_cast<size_t>(w)]) == pts[i]) stab.push_back(w);
        MNV_REQUIRE(static_cast<i64>(stab.size()) * static_cast<i64>(orbit.size()) ==
                        wd.grp.order(),
                    "ss_classes: orbit-stabilizer mismatch");
        out.push_back(make_class(rd, pts[i], static_cast<i64>(orbit.size()), std::move(stab),
                                 tc.widx, q));
        covered += static_cast<i64>(orbit.size());
    }
    MNV_REQUIRE(covered == tc.order, "ss_classes: orbits do not cover the torus");
    return out;
}

SsClass centralizer_class(const RootDatum2& rd, const Vec2Q& s, i64 q, int d)
{
    auto classes = ss_classes_in_sylow_torus(rd, q, d);
    TorusClass tc = sylow_torus(rd, q, d);
    RelWeyl wd = relative_weyl(rd, d);
    for (const auto& c : classes) {
        for (int w : wd.windices)
            if (s.apply(rd.wy[static_cast<size_t>(w)]) == c.rep) return c;
    }
    (void)tc;
    throw Error("centralizer_class: point not in the Sylow torus");
}

std::vector<SsClass> all_semisimple_classes(const RootDatum2& rd, i64 q, i64 cap)
{
    // common denominator: lcm of the exponents of all twisted torus fixed groups
    i64 L = 1;
    for (const auto& my : rd.wy) {
        Mat2 rel{q * my.a - 1, q * my.b, q * my.c, q * my.d - 1};
        L = lcm64(L, smith_normal_form(rel).d2());
    }
    MNV_REQUIRE(L % rd.p != 0, "all_semisimple_classes: denominator not prime to p");
    MNV_REQUIRE(L * L <= cap, "all_semisimple_classes: enumeration cap exceeded");

    auto idx = [&](i64 a, i64 b) { return a * L + b; };
    std::vector<char> visited(static_cast<size_t>(L * L), 0);
    std::vector<SsClass> out;
    for (i64 a = 0; a < L; ++a) {
        for (i64 b = 0; b < L; ++b) {
            if (visited[static_cast<size_t>(idx(a, b))]) continue;
            // W-orbit of (a/L, b/L)
            std::vector<std::pair<i64, i64>> orbit{{a, b}};
            std::set<i64> members{idx(a, b)};
            visited[static_cast<size_t>(idx(a, b))] = 1;
            for (size_t head = 0; head < orbit.size(); ++head) {
                for (const auto& my : rd.wy) {
                    i64 na = mod64(my.a * orbit[head].first + my.b * orbit[head].second, L);
                    i64 nb = mod64(my.c * orbit[head].first + my.d * orbit[head].second, L);
                    if (members.insert(idx(na, nb)).second) {
                        visited[static_cast<size_t>(idx(na, nb))] = 1;
                        orbit.emplace_back(na, nb);
                    }
                }
            }
            // Frobenius stability: q * rep must lie in the orbit
            i64 qa = mod64(q * a, L), qb = mod64(q * b, L);
            if (!members.count(idx(qa, qb))) continue;
            // twist: least u with M_u(rep) = q * rep, inverted
            int twist = -1;
            for (size_t u = 0; u < rd.wy.size(); ++u) {
                const Mat2& my = rd.wy[u];
                if (mod64(my.a * a + my.b * b, L) == qa &&
                    mod64(my.c * a + my.d * b, L) == qb) {
                    twist = rd.wperm.inverse(static_cast<int>(u));
                    break;
                }
            }
            MNV_REQUIRE(twist >= 0, "all_semisimple_classes: twist not found");
            Vec2Q rep = Vec2Q::of(Rat(a, L), Rat(b, L));
            {
                const Mat2& tm = rd.wy[static_cast<size_t>(twist)];
                Vec2Q probe = rep.apply(tm).scale(q);
                MNV_REQUIRE(probe == rep, "all_semisimple_classes: twist relation fails");
            }
            // stabilizer in W and the connected-centralizer assertion
            std::vector<int> stab;
            for (size_t u = 0; u < rd.wy.size(); ++u) {
                const Mat2& my = rd.wy[u];
                if (mod64(my.a * a + my.b * b, L) == mod64(a, L) &&
                    mod64(my.c * a + my.d * b, L) == mod64(b, L))
                    stab.push_back(static_cast<int>(u));
            }
            std::vector<int> subsystem = subsystem_of(rd, rep);
            {
                std::set<int> refl_closure{0};
                std::vector<int> frontier{0};
                while (!frontier.empty()) {
                    std::vector<int> next;
                    for (int x : frontier) {
                        for (int r : subsystem) {
                            int y = rd.wperm.mult(x, rd.reflection_of_root[static_cast<size_t>(r)]);
                            if (refl_closure.insert(y).second) next.push_back(y);
                        }
                    }
                    frontier = std::move(next);
                }
                std::set<int> stabset(stab.begin(), stab.end());
                MNV_REQUIRE(stabset == refl_closure,
                            "all_semisimple_classes: stabilizer is not the reflection "
                            "subgroup (disconnected centralizer?)");
            }
            out.push_back(make_class(rd, rep, static_cast<i64>(orbit.size()), std::move(stab),
                                     twist, q));
        }
    }
    return out;
}

GraphAut graph_automorphism(const RootDatum2& rd)
{
    GraphAut ga;
    if (rd.series == Series::G2) ga.ty = Mat2{0, 1, 3, 0};
    else ga.ty = Mat2{1, 1, 1, -1};
    // X side: the pairing adjoint, tx^T P = P ty
    Mat2 pinv = rd.pairing.inverse_unimodular();
    ga.tx = (rd.pairing * ga.ty * pinv).transpose();
    MNV_REQUIRE(ga.ty * ga.ty == Mat2::scalar(rd.p), "graph automorphism: ty^2 != p");
    MNV_REQUIRE(ga.tx * ga.tx == Mat2::scalar(rd.p), "graph automorphism: tx^2 != p");

    // short roots map to long roots; long roots map to p times short roots
    std::set<std::pair<i64, i64>> shorts, longs;
    for (size_t r = 0; r < rd.roots.size(); ++r)
        (rd.is_long[r] ? longs : shorts).insert(rd.roots[r]);
    for (size_t r = 0; r < rd.roots.size(); ++r) {
        auto im = ga.tx.apply(rd.roots[r].first, rd.roots[r].second);
        if (!rd.is_long[r]) {
            MNV_REQUIRE(longs.count(im) == 1, "graph automorphism: short root image");
        } else {
            MNV_REQUIRE(im.first % rd.p == 0 && im.second % rd.p == 0 &&
                            shorts.count({im.first / rd.p, im.second / rd.p}) == 1,
                        "graph automorphism: long root image");
        }
    }

    // induced map on W: conjugation, with the scalar p cancelling
    for (size_t i = 0; i < rd.wy.size(); ++i) {
        Mat2 n = ga.ty * rd.wy[i] * ga.ty;
        MNV_REQUIRE(n.a % rd.p == 0 && n.b % rd.p == 0 && n.c % rd.p == 0 && n.d % rd.p == 0,
                    "graph automorphism: conjugate not divisible by p");
        Mat2 m{n.a / rd.p, n.b / rd.p, n.c / rd.p, n.d / rd.p};
        int j = rd.weyl_index(m);
        MNV_REQUIRE(j >= 0, "graph automorphism: conjugate leaves W");
        ga.wmap.push_back(j);
    }
    for (size_t i = 0; i < ga.wmap.size(); ++i)
        MNV_REQUIRE(ga.wmap[static_cast<size_t>(ga.wmap[i])] == static_cast<int>(i),
                    "graph automorphism: induced map is not an involution");
    auto gi = rd.wperm.generator_indices();
    MNV_REQUIRE(ga.wmap[static_cast<size_t>(gi[0])] == gi[1] &&
                    ga.wmap[static_cast<size_t>(gi[1])] == gi[0],
                "graph automorphism: does not swap the simple reflections");
    ga.on_w = make_automorphism(
        rd.wperm, {rd.wperm.element(ga.wmap[static_cast<size_t>(gi[0])]),
                   rd.wperm.element(ga.wmap[static_cast<size_t>(gi[1])])});
    return ga;
}

i64 coroot_halfpoint_group_order(const RootDatum2& rd)
{
    if (rd.p == 2) return 1; // half points are p-torsion, hence trivial in the p'-part
    std::set<std::pair<i64, i64>> pts{{0, 0}};
    std::vector<std::pair<i64, i64>> frontier{{0, 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<i64, i64>> next;
        for (auto [x, y] : frontier) {
            for (const auto& [cx, cy] : rd.coroots) {
                std::pair<i64, i64> s{mod64(x + cx, 2), mod64(y + cy, 2)};
                if (pts.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    return static_cast<i64>(pts.size());
}

} // namespace mnv
