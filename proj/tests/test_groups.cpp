#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mnv/chartable.hpp"
#include "mnv/group.hpp"

using namespace mnv;

namespace {

// dihedral group of order 2m as two reflections on 2m points
FiniteGroup dihedral(int m)
{
    size_t n = static_cast<size_t>(2 * m);
    std::vector<std::vector<int>> c1, c2;
    // reflections of a 2m-gon across adjacent axes generate D_{2m}
    for (int i = 0; i < 2 * m; ++i) {
        int j1 = mod64(-i, 2 * m);
        int j2 = mod64(2 - i, 2 * m);
        if (i < j1) c1.push_back({i, j1});
        if (i < j2) c2.push_back({i, j2});
    }
    return FiniteGroup::generate({Perm::from_cycles(n, c1), Perm::from_cycles(n, c2)});
}

FiniteGroup cyclic(int n)
{
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = i;
    return FiniteGroup::generate({Perm::from_cycles(static_cast<size_t>(n), {cyc})});
}

FiniteGroup sym(int n)
{
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = i;
    return FiniteGroup::generate(
        {Perm::from_cycles(static_cast<size_t>(n), {{0, 1}}),
         Perm::from_cycles(static_cast<size_t>(n), {cyc})});
}

} // namespace

TEST_CASE("generation and orders")
{
    CHECK(dihedral(6).order() == 12);
    CHECK(dihedral(4).order() == 8);
    CHECK(cyclic(7).order() == 7);
    CHECK(sym(6).order() == 720);
    CHECK_THROWS_AS(FiniteGroup::generate({Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})}, 5),
                    Error);
}

TEST_CASE("conjugacy classes")
{
    auto d12 = dihedral(6);
    const auto& cc = d12.classes();
    REQUIRE(cc.count() == 6);
    CHECK(cc.sizes == std::vector<int>{1, 1, 2, 2, 3, 3});
    int total = 0;
    for (int s : cc.sizes) total += s;
    CHECK(total == 12);

    CHECK(cyclic(6).classes().count() == 6);
    CHECK(dihedral(4).classes().count() == 5);
    CHECK(sym(6).classes().count() == 11);
}

TEST_CASE("abelian character tables")
{
    auto c6 = cyclic(6);
    auto T = character_table(c6);
    REQUIRE(T.count() == 6);
    for (i64 d : T.degrees) CHECK(d == 1);
    for (const auto& row : T.irr)
        for (const auto& v : row) CHECK((v.conductor() == 1 || v.conductor() == 3 ||
                                         v.conductor() == 6 || v.conductor() == 2));
    verify_character_table(c6, T);

    auto c1 = FiniteGroup::generate({Perm::identity(1)});
    auto T1 = character_table(c1);
    REQUIRE(T1.count() == 1);
    CHECK(T1.irr[0][0] == Cyc::rational(1));
}

TEST_CASE("Dixon on small nonabelian groups")
{
    auto d12 = dihedral(6);
    auto T = character_table(d12);
    REQUIRE(T.count() == 6);
    CHECK(T.degrees == std::vector<i64>{1, 1, 1, 1, 2, 2});
    verify_character_table(d12, T);

    auto d8 = dihedral(4);
    auto T8 = character_table(d8);
    CHECK(T8.degrees == std::vector<i64>{1, 1, 1, 1, 2});
    verify_character_table(d8, T8);

    auto s3 = sym(3);
    auto T3 = character_table(s3);
    CHECK(T3.degrees == std::vector<i64>{1, 1, 2});
    verify_character_table(s3, T3);
}

TEST_CASE("Dixon on S6: full orthogonality and known degrees")
{
    auto s6 = sym(6);
    auto T = character_table(s6);
    REQUIRE(T.count() == 11);
    CHECK(T.degrees == std::vector<i64>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
    verify_character_table(s6, T);
    // S6 is rational
    for (const auto& row : T.irr)
        for (const auto& v : row) CHECK(v.is_rational());
}

TEST_CASE("degree-2 characters of the order-12 dihedral group on named classes")
{
    // Weyl group of the rank-2 hexagonal root system, generated by the two
    // simple reflections acting on the 12 roots (same abstract group as above,
    // but with the class representatives named by words in the generators).
    auto W = dihedral(6);
    const auto& cc = W.classes();
    int sa = W.index_of(W.generators()[0]);
    int sb = W.index_of(W.generators()[1]);
    int r = W.mult(sb, sa);
    // class indices of (), s_a, r, r^2, s_b, r^3
    std::vector<int> cls = {
        cc.class_of[0],
        cc.class_of[static_cast<size_t>(sa)],
        cc.class_of[static_cast<size_t>(r)],
        cc.class_of[static_cast<size_t>(W.power(r, 2))],
        cc.class_of[static_cast<size_t>(sb)],
        cc.class_of[static_cast<size_t>(W.power(r, 3))],
    };
    auto T = character_table(W);
    // the two degree-2 rows take values (2,0,-1,-1,0,2) and (2,0,1,-1,0,-2)
    auto values_on = [&](int row) {
        std::vector<Cyc> v;
        for (int c : cls) v.push_back(T.irr[static_cast<size_t>(row)][static_cast<size_t>(c)]);
        return v;
    };
    auto as_ints = [](std::initializer_list<int> xs) {
        std::vector<Cyc> v;
        for (int x : xs) v.push_back(Cyc::rational(x));
        return v;
    };
    std::vector<std::vector<Cyc>> got = {values_on(4), values_on(5)};
    std::vector<std::vector<Cyc>> want = {as_ints({2, 0, -1, -1, 0, 2}),
                                          as_ints({2, 0, 1, -1, 0, -2})};
    CHECK((got[0] == want[0] || got[0] == want[1]));
    CHECK((got[1] == want[0] || got[1] == want[1]));
    CHECK(got[0] != got[1]);
}

TEST_CASE("semidirect products")
{
    // C3 with inversion gives S3
    auto c3 = cyclic(3);
    auto inv = make_automorphism(c3, {c3.element(c3.inverse(c3.generator_indices()[0]))});
    CHECK(inv.order == 2);
    auto sp = semidirect_product(c3, inv);
    CHECK(sp.group.order() == 6);
    CHECK(sp.group.classes().count() == 3);
    CHECK(small_group_type(sp.group) == "D6");

    // swapping the two reflections of the order-12 dihedral group
    auto W = dihedral(6);
    auto phi = make_automorphism(W, {W.generators()[1], W.generators()[0]});
    CHECK(phi.order == 2);
    auto sp2 = semidirect_product(W, phi);
    CHECK(sp2.group.order() == 24);
    // e g e^-1 = phi(g)
    for (int t = 0; t < 2; ++t) {
        int g = sp2.embed[static_cast<size_t>(W.generator_indices()[static_cast<size_t>(t)])];
        int lhs = sp2.group.conjugate(g, sp2.coset_gen);
        int rhs = sp2.embed[static_cast<size_t>(
            phi.elem_map[static_cast<size_t>(W.generator_indices()[static_cast<size_t>(t)])])];
        CHECK(lhs == rhs);
    }

    // swapping the two reflections of the order-8 dihedral group: order 16, 7 classes
    auto B = dihedral(4);
    auto phiB = make_automorphism(B, {B.generators()[1], B.generators()[0]});
    auto sp3 = semidirect_product(B, phiB);
    CHECK(sp3.group.order() == 16);
    CHECK(sp3.group.classes().count() == 7);
}

TEST_CASE("automorphism rejects non-relations")
{
    auto c4 = cyclic(4);
    // sending a generator of C4 to an involution is not an automorphism
    CHECK_THROWS_AS(
        make_automorphism(c4, {c4.element(c4.power(c4.generator_indices()[0], 2))}), Error);
}

TEST_CASE("restriction, induction, Frobenius reciprocity")
{
    // C13 ⋊ C6 with the action of order 6 (2 is a primitive root mod 13: 2^6 = 12 = -1;
    // use multiplication by 4 = 2^2 for order 6 ... 4^k mod 13 cycles with order 6)
    auto c13 = cyclic(13);
    // automorphism x -> 4x on Z/13
    Perm quad;
    quad.img.resize(13);
    for (int i = 0; i < 13; ++i) quad.img[static_cast<size_t>(i)] = static_cast<uint16_t>((4 * i) % 13);
    // generator of c13 is the +1 shift; its image under x->4x is the +4 shift
    Perm gen_img;
    gen_img.img.resize(13);
    for (int i = 0; i < 13; ++i) gen_img.img[static_cast<size_t>(i)] = static_cast<uint16_t>((i + 4) % 13);
    auto a = make_automorphism(c13, {gen_img});
    CHECK(a.order == 6);
    auto sp = semidirect_product(c13, a);
    const FiniteGroup& N = sp.group;
    CHECK(N.order() == 78);

    auto sub = embedded_subgroup(N, {sp.embed[1]});
    CHECK(sub.grp.order() == 13);
    auto subT = character_table(sub.grp);
    // induce a nontrivial linear character: degree 6
    ClassFunction ind = induce_from(N, sub, subT.irr[1]);
    CHECK(ind[0] == Cyc::rational(6));
    auto NT = character_table(N);
    verify_character_table(N, NT);
    CHECK(NT.count() == 8);
    CHECK(NT.degrees == std::vector<i64>{1, 1, 1, 1, 1, 1, 6, 6});
    // induced character is irreducible here
    CHECK(inner_product(N, ind, ind) == Cyc::rational(1));

    // restrict(induce(1_sub)) at identity = index
    ClassFunction one(static_cast<size_t>(sub.grp.classes().count()), Cyc::rational(1));
    ClassFunction ind1 = induce_from(N, sub, one);
    CHECK(ind1[0] == Cyc::rational(6));
    ClassFunction back = restrict_to(N, ind1, sub);
    CHECK(back[0] == Cyc::rational(6));

    // Frobenius reciprocity on fuzzed integer class functions
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int it = 0; it < 100; ++it) {
        ClassFunction f, g;
        for (int i = 0; i < sub.grp.classes().count(); ++i)
            f.push_back(Cyc::rational(coef(rng)));
        for (int i = 0; i < N.classes().count(); ++i) g.push_back(Cyc::rational(coef(rng)));
        Cyc lhs = inner_product(N, induce_from(N, sub, f), g);
        Cyc rhs = inner_product(sub.grp, f, restrict_to(N, g, sub));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("extensions of invariant characters")
{
    auto W = dihedral(6);
    auto phi = make_automorphism(W, {W.generators()[1], W.generators()[0]});
    auto sp = semidirect_product(W, phi);
    auto sub = embedded_subgroup(sp.group, {sp.embed[static_cast<size_t>(W.generator_indices()[0])],
                                            sp.embed[static_cast<size_t>(W.generator_indices()[1])]});
    REQUIRE(sub.grp.order() == 12);
    auto subT = character_table(sub.grp);
    auto bigT = character_table(sp.group);
    // each degree-2 character of the normal dihedral subgroup has exactly 2 extensions
    int deg2 = 0;
    for (int i = 0; i < subT.count(); ++i) {
        if (subT.degrees[static_cast<size_t>(i)] != 2) continue;
        ++deg2;
        auto exts = extensions_of(sp.group, sub, subT.irr[static_cast<size_t>(i)], bigT);
        CHECK(exts.size() == 2);
        for (const auto& ext : exts)
            CHECK(restrict_to(sp.group, ext, sub) == subT.irr[static_cast<size_t>(i)]);
    }
    CHECK(deg2 == 2);
    // the trivial character of the subgroup extends to the trivial character
    ClassFunction one(static_cast<size_t>(sub.grp.classes().count()), Cyc::rational(1));
    auto triv_exts = extensions_of(sp.group, sub, one, bigT);
    bool has_trivial = false;
    for (const auto& ext : triv_exts) {
        bool all_one = true;
        for (const auto& v : ext)
            if (v != Cyc::rational(1)) all_one = false;
        if (all_one) has_trivial = true;
    }
    CHECK(has_trivial);
}

TEST_CASE("automorphism and Galois actions on tables")
{
    auto c6 = cyclic(6);
    auto T6 = character_table(c6);
    // conjugation pairs characters with their inverses
    auto conj_perm = galois_action_on_table(c6, GaloisMap{6, 5}, T6);
    for (int i = 0; i < 6; ++i) {
        int j = conj_perm[static_cast<size_t>(i)];
        CHECK(conj_perm[static_cast<size_t>(j)] == i);
    }

    // the reflection swap fixes both degree-2 characters of the order-12 group
    auto W = dihedral(6);
    auto phi = make_automorphism(W, {W.generators()[1], W.generators()[0]});
    auto TW = character_table(W);
    auto pw = aut_action_on_table(W, phi, TW);
    CHECK(pw[4] == 4);
    CHECK(pw[5] == 5);

    // any Galois map is the identity on a rational table
    auto s3 = sym(3);
    auto T3 = character_table(s3);
    auto p3 = galois_action_on_table(s3, GaloisMap{12, 7}, T3);
    for (int i = 0; i < 3; ++i) CHECK(p3[static_cast<size_t>(i)] == i);

    // aut and Galois actions commute
    auto pg = galois_action_on_table(W, GaloisMap{12, 5}, TW);
    for (int i = 0; i < TW.count(); ++i)
        CHECK(pw[static_cast<size_t>(pg[static_cast<size_t>(i)])] ==
              pg[static_cast<size_t>(pw[static_cast<size_t>(i)])]);
}

TEST_CASE("small group type tags")
{
    CHECK(small_group_type(cyclic(6)) == "C6");
    CHECK(small_group_type(dihedral(4)) == "D8");
    CHECK(small_group_type(dihedral(6)) == "D12");
    auto c2 = cyclic(2);
    auto c2c2 = FiniteGroup::generate(
        {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
    CHECK(small_group_type(c2) == "C2");
    CHECK(small_group_type(c2c2) == "C2xC2");
    CHECK(small_group_type(cyclic(4)) == "C4");
    CHECK(small_group_type(FiniteGroup::generate({Perm::identity(1)})) == "1");
}
