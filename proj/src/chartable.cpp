#include "mnv/chartable.hpp"

#include <algorithm>
#include <numeric>

#include "mnv/numtheory.hpp"

namespace mnv {

namespace {

// ---------------------------------------------------------------------------
// abelian case: iterated cyclic extensions, characters tracked additively as
// homomorphisms into Q/Z

Rat frac_mod1(const Rat& r)
{
    Int n = numerator(r), d = denominator(r);
    Int m = n % d;
    if (m < 0) m += d;
    return Rat(m, d);
}

CharTable abelian_character_table(const FiniteGroup& G)
{
    int n = G.order();
    // chars: value at each element, as an element of Q/Z
    std::vector<std::vector<Rat>> chars{std::vector<Rat>(static_cast<size_t>(n), Rat(0))};
    std::vector<int> members{0};                    // current subgroup, element ids
    std::vector<int> pos(static_cast<size_t>(n), -1); // element id -> index in members
    pos[0] = 0;
    // only the first |members| entries of each char row are meaningful
    for (int gi : G.generator_indices()) {
        if (pos[static_cast<size_t>(gi)] >= 0) continue;
        // relative order of gi over the current subgroup
        int m = 1;
        int x = gi;
        while (pos[static_cast<size_t>(x)] < 0) {
            x = G.mult(x, gi);
            ++m;
        }
        int gm_pos = pos[static_cast<size_t>(x)]; // gi^m, inside the subgroup
        std::vector<int> new_members = members;
        std::vector<int> new_pos = pos;
        int old_size = static_cast<int>(members.size());
        int t_x = gi;
        for (int t = 1; t < m; ++t) {
            for (int i = 0; i < old_size; ++i) {
                int e = G.mult(members[static_cast<size_t>(i)], t_x);
                MNV_REQUIRE(new_pos[static_cast<size_t>(e)] < 0,
                            "abelian_character_table: coset overlap");
                new_pos[static_cast<size_t>(e)] = static_cast<int>(new_members.size());
                new_members.push_back(e);
            }
            t_x = G.mult(t_x, gi);
        }
        std::vector<std::vector<Rat>> next;
        next.reserve(chars.size() * static_cast<size_t>(m));
        for (const auto& chi : chars) {
            const Rat& base = chi[static_cast<size_t>(members[static_cast<size_t>(gm_pos)])];
            for (int k = 0; k < m; ++k) {
                // xi with m*xi = chi(gi^m) in Q/Z
                Rat xi = frac_mod1((base + k) / m);
                std::vector<Rat> ext(static_cast<size_t>(n), Rat(0));
                Rat xpow = 0;
                int tx = 0; // gi^t
                for (int t = 0; t < m; ++t) {
                    for (int i = 0; i < old_size; ++i) {
                        int e = G.mult(members[static_cast<size_t>(i)], tx);
                        ext[static_cast<size_t>(e)] =
                            frac_mod1(chi[static_cast<size_t>(members[static_cast<size_t>(i)])] + xpow);
                    }
                    xpow = frac_mod1(xpow + xi);
                    tx = G.mult(tx, gi);
                }
                next.push_back(std::move(ext));
            }
        }
        chars = std::move(next);
        members = std::move(new_members);
        pos = std::move(new_pos);
    }
    MNV_REQUIRE(static_cast<int>(members.size()) == n,
                "abelian_character_table: generators do not generate");

    const ConjClasses& cc = G.classes();
    CharTable T;
    for (const auto& chi : chars) {
        ClassFunction f;
        f.reserve(cc.reps.size());
        for (int rep : cc.reps) {
            const Rat& v = chi[static_cast<size_t>(rep)];
            Int den = denominator(v), num = numerator(v);
            f.push_back(Cyc::root(static_cast<i64>(den), static_cast<i64>(num)));
        }
        T.irr.push_back(std::move(f));
        T.degrees.push_back(1);
    }
    return T;
}

// ---------------------------------------------------------------------------
// Dixon class-matrix method over F_e

struct Fp {
    i64 p;
    i64 add(i64 a, i64 b) const { return (a + b) % p; }
    i64 sub(i64 a, i64 b) const { return mod64(a - b, p); }
    i64 mul(i64 a, i64 b) const { return (a * b) % p; }
    i64 inv(i64 a) const { return invmod64(a, p); }
    i64 pow(i64 a, i64 e) const
    {
        return static_cast<i64>(powmod64(static_cast<u64>(mod64(a, p)),
                                         static_cast<u64>(e), static_cast<u64>(p)));
    }
};

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

// solve B x = v where the columns of B are independent; returns false if
// inconsistent
bool solve_in_span(const Fp& F, const std::vector<Vec>& basis, Vec v, Vec* coords)
{
    size_t dim = v.size();
    size_t k = basis.size();
    Mat a(dim, Vec(k + 1, 0));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
    for (size_t i = 0; i < dim; ++i) a[i][k] = v[i];
    std::vector<int> pivot(k, -1);
    size_t prow = 0;
    for (size_t col = 0; col < k && prow < dim; ++col) {
        size_t sel = prow;
        while (sel < dim && a[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(a[sel], a[prow]);
        i64 inv = F.inv(a[prow][col]);
        for (size_t j = col; j <= k; ++j) a[prow][j] = F.mul(a[prow][j], inv);
        for (size_t i = 0; i < dim; ++i) {
            if (i != prow && a[i][col] != 0) {
                i64 f = a[i][col];
                for (size_t j = col; j <= k; ++j)
                    a[i][j] = F.sub(a[i][j], F.mul(f, a[prow][j]));
            }
        }
        pivot[col] = static_cast<int>(prow);
        ++prow;
    }
    for (size_t i = prow; i < dim; ++i)
        if (a[i][k] != 0) return false;
    coords->assign(k, 0);
    for (size_t col = 0; col < k; ++col)
        if (pivot[col] >= 0) (*coords)[col] = a[static_cast<size_t>(pivot[col])][k];
    return true;
}

// nullspace basis of a square matrix over F_e
std::vector<Vec> nullspace(const Fp& F, Mat a)
{
    size_t n = a.size();
    std::vector<int> pivot_of_col(n, -1);
    size_t prow = 0;
    for (size_t col = 0; col < n && prow < n; ++col) {
        size_t sel = prow;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[prow]);
        i64 inv = F.inv(a[prow][col]);
        for (size_t j = 0; j < n; ++j) a[prow][j] = F.mul(a[prow][j], inv);
        for (size_t i = 0; i < n; ++i) {
            if (i != prow && a[i][col] != 0) {
                i64 f = a[i][col];
                for (size_t j = 0; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[prow][j]));
            }
        }
        pivot_of_col[col] = static_cast<int>(prow);
        ++prow;
    }
    std::vector<Vec> basis;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vec v(n, 0);
        v[col] = 1;
        for (size_t c = 0; c < n; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = F.sub(0, a[static_cast<size_t>(pivot_of_col[c])][col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

i64 find_primitive_root(i64 p)
{
    auto fact = factorize(static_cast<u64>(p - 1));
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : fact) {
            (void)e;
            if (powmod64(static_cast<u64>(g), static_cast<u64>((p - 1) / static_cast<i64>(q)),
                         static_cast<u64>(p)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("find_primitive_root: none found");
}

CharTable dixon_character_table(const FiniteGroup& G)
{
    const ConjClasses& cc = G.classes();
    int k = cc.count();
    int n = G.order();
    int expo = G.exponent();

    // least prime e = 1 mod exponent with e > 2 sqrt(|G|)
    i64 e = 0;
    for (i64 cand = expo + 1;; cand += expo) {
        if (4 * static_cast<i64>(n) >= cand * cand) continue;
        if (is_prime(static_cast<u64>(cand))) {
            e = cand;
            break;
        }
    }
    Fp F{e};

    // class multiplication coefficients a[i][j][t]: #{(x,y) in C_i x C_j : xy = rep_t}
    std::vector<std::vector<int>> members(static_cast<size_t>(k));
    for (int x = 0; x < n; ++x)
        members[static_cast<size_t>(cc.class_of[static_cast<size_t>(x)])].push_back(x);
    std::vector<Mat> M(static_cast<size_t>(k), Mat(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0)));
    for (int i = 0; i < k; ++i) {
        for (int t = 0; t < k; ++t) {
            for (int x : members[static_cast<size_t>(i)]) {
                int y = G.mult(G.inverse(x), cc.reps[static_cast<size_t>(t)]);
                int j = cc.class_of[static_cast<size_t>(y)];
                // matrix of multiplication by class sum i on basis {K_j}
                ++M[static_cast<size_t>(i)][static_cast<size_t>(t)][static_cast<size_t>(j)];
            }
        }
    }
    for (auto& m : M)
        for (auto& row : m)
            for (auto& x : row) x %= e;

    // split the class algebra into common eigenvectors
    std::vector<std::vector<Vec>> subspaces;
    {
        std::vector<Vec> full;
        for (int i = 0; i < k; ++i) {
            Vec v(static_cast<size_t>(k), 0);
            v[static_cast<size_t>(i)] = 1;
            full.push_back(std::move(v));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        bool all_one = true;
        for (const auto& s : subspaces)
            if (s.size() > 1) all_one = false;
        if (all_one) break;
        std::vector<std::vector<Vec>> next;
        for (auto& basis : subspaces) {
            size_t d = basis.size();
            if (d == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            // matrix C of M_i on this invariant subspace
            Mat C(d, Vec(d, 0));
            for (size_t bcol = 0; bcol < d; ++bcol) {
                Vec image(static_cast<size_t>(k), 0);
                for (int r = 0; r < k; ++r) {
                    i64 acc = 0;
                    for (int c = 0; c < k; ++c)
                        acc = F.add(acc, F.mul(M[static_cast<size_t>(i)][static_cast<size_t>(r)][static_cast<size_t>(c)] % e,
                                               basis[bcol][static_cast<size_t>(c)]));
                    image[static_cast<size_t>(r)] = acc;
                }
                Vec coords;
                MNV_REQUIRE(solve_in_span(F, basis, image, &coords),
                            "dixon: subspace not invariant");
                for (size_t r = 0; r < d; ++r) C[r][bcol] = coords[r];
            }
            for (i64 lam = 0; lam < e; ++lam) {
                Mat A = C;
                for (size_t r = 0; r < d; ++r) A[r][r] = F.sub(A[r][r], lam);
                auto null_b = nullspace(F, A);
                if (null_b.empty()) continue;
                std::vector<Vec> sub;
                for (const auto& coords : null_b) {
                    Vec v(static_cast<size_t>(k), 0);
                    for (size_t j = 0; j < d; ++j)
                        for (int r = 0; r < k; ++r)
                            v[static_cast<size_t>(r)] =
                                F.add(v[static_cast<size_t>(r)], F.mul(coords[j], basis[j][static_cast<size_t>(r)]));
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
        }
        subspaces = std::move(next);
    }
    MNV_REQUIRE(static_cast<int>(subspaces.size()) == k,
                "dixon: class algebra did not split into " + std::to_string(k) + " lines");

    // central characters omega_i = |C_i| chi(g_i) / chi(1) from each line
    std::vector<Vec> omegas;
    for (const auto& line : subspaces) {
        const Vec& v = line[0];
        size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        MNV_REQUIRE(piv < v.size(), "dixon: zero eigenvector");
        Vec w(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            // eigenvalue of M_i on v, read off at the pivot row
            i64 acc = 0;
            for (int c = 0; c < k; ++c)
                acc = F.add(acc, F.mul(M[static_cast<size_t>(i)][piv][static_cast<size_t>(c)], v[static_cast<size_t>(c)]));
            w[static_cast<size_t>(i)] = F.mul(acc, F.inv(v[piv]));
        }
        omegas.push_back(std::move(w));
    }

    // degrees: chi(1)^2 = |G| / sum_i omega_i omega_{i*} / |C_i|
    std::vector<i64> degrees(omegas.size());
    for (size_t c = 0; c < omegas.size(); ++c) {
        i64 s = 0;
        for (int i = 0; i < k; ++i) {
            i64 term = F.mul(omegas[c][static_cast<size_t>(i)],
                             omegas[c][static_cast<size_t>(cc.inv_class[static_cast<size_t>(i)])]);
            s = F.add(s, F.mul(term, F.inv(cc.sizes[static_cast<size_t>(i)] % e)));
        }
        i64 d2 = F.mul(n % e, F.inv(s));
        // chi(1) <= sqrt|G| < e/2, so exactly one square root lies below e/2
        i64 deg = -1;
        for (i64 t = 1; 2 * t < e; ++t) {
            if (F.mul(t, t) == d2 && t * t <= n) {
                deg = t;
                break;
            }
        }
        MNV_REQUIRE(deg > 0, "dixon: degree not recovered");
        degrees[c] = deg;
    }
    {
        i64 degsum = 0;
        for (size_t c = 0; c < degrees.size(); ++c) degsum += degrees[c] * degrees[c];
        MNV_REQUIRE(degsum == n, "dixon: degree squares do not sum to |G|");
    }

    // lift values: chi(g) = sum_s m_s zeta_o^s with the multiplicities m_s
    // recovered mod e (they are bounded by chi(1) < e)
    i64 w = find_primitive_root(e);
    // power map on classes
    std::vector<std::vector<int>> power_class(static_cast<size_t>(k));
    std::vector<int> rep_order(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) {
        int o = G.element_order(cc.reps[static_cast<size_t>(t)]);
        rep_order[static_cast<size_t>(t)] = o;
        power_class[static_cast<size_t>(t)].resize(static_cast<size_t>(o));
        for (int s = 0; s < o; ++s)
            power_class[static_cast<size_t>(t)][static_cast<size_t>(s)] =
                cc.class_of[static_cast<size_t>(G.power(cc.reps[static_cast<size_t>(t)], s))];
    }

    CharTable T;
    for (size_t c = 0; c < omegas.size(); ++c) {
        // theta_j = chi(g_j) mod e
        Vec theta(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
            theta[static_cast<size_t>(j)] =
                F.mul(F.mul(omegas[c][static_cast<size_t>(j)], degrees[c] % e),
                      F.inv(cc.sizes[static_cast<size_t>(j)] % e));
        ClassFunction f(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            int o = rep_order[static_cast<size_t>(j)];
            i64 z = F.pow(w, (e - 1) / o);
            i64 zinv = F.inv(z);
            std::vector<Rat> coeffs(static_cast<size_t>(o), Rat(0));
            i64 oinv = F.inv(o % e);
            i64 total = 0;
            for (int s = 0; s < o; ++s) {
                i64 acc = 0;
                i64 zs = F.pow(zinv, s);
                i64 zst = 1;
                for (int t = 0; t < o; ++t) {
                    acc = F.add(acc, F.mul(theta[static_cast<size_t>(power_class[static_cast<size_t>(j)][static_cast<size_t>(t)])], zst));
                    zst = F.mul(zst, zs);
                }
                i64 ms = F.mul(acc, oinv);
                MNV_REQUIRE(ms <= degrees[c], "dixon: eigenvalue multiplicity out of range");
                total += ms;
                coeffs[static_cast<size_t>(s)] = Rat(ms);
            }
            MNV_REQUIRE(total == degrees[c], "dixon: multiplicities do not sum to degree");
            f[static_cast<size_t>(j)] = Cyc::from_powers(o, std::move(coeffs));
        }
        MNV_REQUIRE(f[0] == Cyc::rational(Rat(degrees[c])), "dixon: identity value mismatch");
        T.irr.push_back(std::move(f));
        T.degrees.push_back(degrees[c]);
    }
    return T;
}

void sort_table(CharTable& T)
{
    std::vector<int> perm(T.irr.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (T.degrees[static_cast<size_t>(a)] != T.degrees[static_cast<size_t>(b)])
            return T.degrees[static_cast<size_t>(a)] < T.degrees[static_cast<size_t>(b)];
        const auto& fa = T.irr[static_cast<size_t>(a)];
        const auto& fb = T.irr[static_cast<size_t>(b)];
        for (size_t i = 0; i < fa.size(); ++i) {
            auto c = fa[i].cmp(fb[i]);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        }
        return false;
    });
    CharTable S;
    for (int i : perm) {
        S.irr.push_back(std::move(T.irr[static_cast<size_t>(i)]));
        S.degrees.push_back(T.degrees[static_cast<size_t>(i)]);
    }
    T = std::move(S);
}

} // namespace

CharTable character_table(const FiniteGroup& G)
{
    CharTable T = G.is_abelian() ? abelian_character_table(G) : dixon_character_table(G);
    MNV_REQUIRE(T.count() == G.classes().count(),
                "character_table: row count != class count");
    sort_table(T);
    // exact row orthogonality, always enforced
    for (int i = 0; i < T.count(); ++i) {
        for (int j = i; j < T.count(); ++j) {
            Cyc ip = inner_product(G, T.irr[static_cast<size_t>(i)], T.irr[static_cast<size_t>(j)]);
            MNV_REQUIRE(ip == (i == j ? Cyc::rational(1) : Cyc()),
                        "character_table: row orthogonality failed");
        }
    }
    return T;
}

Cyc inner_product(const FiniteGroup& G, const ClassFunction& a, const ClassFunction& b)
{
    const ConjClasses& cc = G.classes();
    Cyc s;
    for (int i = 0; i < cc.count(); ++i)
        s = s + Cyc::rational(cc.sizes[static_cast<size_t>(i)]) * a[static_cast<size_t>(i)] *
                    b[static_cast<size_t>(i)].conj();
    return s * Cyc::rational(Rat(1, G.order()));
}

void verify_character_table(const FiniteGroup& G, const CharTable& T)
{
    const ConjClasses& cc = G.classes();
    int k = cc.count();
    MNV_REQUIRE(T.count() == k, "verify: row count");
    Int degsum = 0;
    for (i64 d : T.degrees) degsum += Int(d) * d;
    MNV_REQUIRE(degsum == G.order(), "verify: sum of squared degrees");
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            MNV_REQUIRE(inner_product(G, T.irr[static_cast<size_t>(i)], T.irr[static_cast<size_t>(j)]) ==
                            (i == j ? Cyc::rational(1) : Cyc()),
                        "verify: row orthogonality");
    // column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |C_G(c)|
    for (int c = 0; c < k; ++c) {
        for (int c2 = c; c2 < k; ++c2) {
            Cyc s;
            for (int i = 0; i < k; ++i)
                s = s + T.irr[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                            T.irr[static_cast<size_t>(i)][static_cast<size_t>(c2)].conj();
            Cyc expect = (c == c2)
                             ? Cyc::rational(Rat(G.order(), cc.sizes[static_cast<size_t>(c)]))
                             : Cyc();
            MNV_REQUIRE(s == expect, "verify: column orthogonality");
        }
    }
    // regular character decomposition: sum_i deg_i chi_i = |G| at 1, else 0
    for (int c = 0; c < k; ++c) {
        Cyc s;
        for (int i = 0; i < k; ++i)
            s = s + Cyc::rational(T.degrees[static_cast<size_t>(i)]) *
                        T.irr[static_cast<size_t>(i)][static_cast<size_t>(c)];
        MNV_REQUIRE(s == (c == 0 ? Cyc::rational(G.order()) : Cyc()),
                    "verify: regular character decomposition");
    }
}

ClassFunction restrict_to(const FiniteGroup& ambient, const ClassFunction& chi,
                          const EmbeddedSubgroup& S)
{
    const ConjClasses& acc = ambient.classes();
    const ConjClasses& scc = S.grp.classes();
    ClassFunction f;
    f.reserve(scc.reps.size());
    for (int rep : scc.reps) {
        int amb = S.to_ambient[static_cast<size_t>(rep)];
        f.push_back(chi[static_cast<size_t>(acc.class_of[static_cast<size_t>(amb)])]);
    }
    return f;
}

ClassFunction induce_from(const FiniteGroup& ambient, const EmbeddedSubgroup& S,
                          const ClassFunction& chi_on_sub)
{
    const ConjClasses& acc = ambient.classes();
    const ConjClasses& scc = S.grp.classes();
    ClassFunction f;
    for (int t = 0; t < acc.count(); ++t) {
        int h = acc.reps[static_cast<size_t>(t)];
        Cyc s;
        for (int y = 0; y < ambient.order(); ++y) {
            int x = ambient.conjugate(h, ambient.inverse(y));
            auto it = S.from_ambient.find(x);
            if (it == S.from_ambient.end()) continue;
            s = s + chi_on_sub[static_cast<size_t>(scc.class_of[static_cast<size_t>(it->second)])];
        }
        f.push_back(s * Cyc::rational(Rat(1, S.grp.order())));
    }
    return f;
}

std::vector<ClassFunction> extensions_of(const FiniteGroup& ambient,
                                         const EmbeddedSubgroup& normal_sub,
                                         const ClassFunction& chi,
                                         const CharTable& ambient_table)
{
    // invariance of chi under ambient conjugation
    const ConjClasses& scc = normal_sub.grp.classes();
    for (int g = 0; g < ambient.order(); ++g) {
        for (int rep : scc.reps) {
            int amb = normal_sub.to_ambient[static_cast<size_t>(rep)];
            int conj = ambient.conjugate(amb, g);
            auto it = normal_sub.from_ambient.find(conj);
            MNV_REQUIRE(it != normal_sub.from_ambient.end(),
                        "extensions_of: subgroup is not normal");
            if (chi[static_cast<size_t>(scc.class_of[static_cast<size_t>(it->second)])] !=
                chi[static_cast<size_t>(scc.class_of[static_cast<size_t>(
                    normal_sub.from_ambient.at(amb))])])
                throw Error("extensions_of: character is not invariant");
        }
    }
    std::vector<ClassFunction> out;
    for (const auto& row : ambient_table.irr) {
        if (restrict_to(ambient, row, normal_sub) == chi) out.push_back(row);
    }
    return out;
}

std::vector<int> aut_action_on_table(const FiniteGroup& G, const GroupAutomorphism& a,
                                     const CharTable& T)
{
    const ConjClasses& cc = G.classes();
    std::vector<int> inv_map(a.elem_map.size());
    for (size_t i = 0; i < a.elem_map.size(); ++i)
        inv_map[static_cast<size_t>(a.elem_map[i])] = static_cast<int>(i);
    std::vector<int> perm;
    for (const auto& row : T.irr) {
        ClassFunction moved(row.size());
        for (int kcl = 0; kcl < cc.count(); ++kcl) {
            int pre = inv_map[static_cast<size_t>(cc.reps[static_cast<size_t>(kcl)])];
            moved[static_cast<size_t>(kcl)] = row[static_cast<size_t>(cc.class_of[static_cast<size_t>(pre)])];
        }
        int found = -1;
        for (int i = 0; i < T.count(); ++i)
            if (T.irr[static_cast<size_t>(i)] == moved) {
                found = i;
                break;
            }
        MNV_REQUIRE(found >= 0, "aut_action_on_table: image is not irreducible");
        perm.push_back(found);
    }
    return perm;
}

i64 lcm_conductor(const ClassFunction& f)
{
    i64 m = 1;
    for (const auto& v : f) m = lcm64(m, v.conductor());
    return m;
}

ClassFunction apply_galois(const GaloisMap& sigma, const ClassFunction& f)
{
    i64 m = lcm64(lcm_conductor(f), sigma.modulus);
    GaloisMap lifted = galois_lift(sigma, m);
    ClassFunction out;
    out.reserve(f.size());
    for (const auto& v : f) out.push_back(galois_apply(lifted, v));
    return out;
}

std::vector<int> galois_action_on_table(const FiniteGroup& G, const GaloisMap& sigma,
                                        const CharTable& T)
{
    (void)G;
    std::vector<int> perm;
    for (const auto& row : T.irr) {
        ClassFunction moved = apply_galois(sigma, row);
        int found = -1;
        for (int i = 0; i < T.count(); ++i)
            if (T.irr[static_cast<size_t>(i)] == moved) {
                found = i;
                break;
            }
        MNV_REQUIRE(found >= 0, "galois_action_on_table: image is not in the table");
        perm.push_back(found);
    }
    return perm;
}

} // namespace mnv
