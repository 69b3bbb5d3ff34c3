#ifndef MNV_ROOTDATA_HPP
#define MNV_ROOTDATA_HPP

#include <string>
#include <vector>

#include "mnv/chartable.hpp"
#include "mnv/group.hpp"
#include "mnv/numtheory.hpp"

namespace mnv {

// 2x2 integer matrix [[a,b],[c,d]], acting on column vectors
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;
    static Mat2 identity() { return {}; }
    static Mat2 scalar(i64 s) { return {s, 0, 0, s}; }
    Mat2 operator*(const Mat2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const = default;
    i64 det() const { return a * d - b * c; }
    i64 trace() const { return a + d; }
    Mat2 transpose() const { return {a, c, b, d}; }
    // inverse, valid when det = ±1
    Mat2 inverse_unimodular() const
    {
        i64 dt = det();
        MNV_REQUIRE(dt == 1 || dt == -1, "Mat2: not unimodular");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    std::pair<i64, i64> apply(i64 x, i64 y) const { return {a * x + b * y, c * x + d * y}; }
};

// element of (Q/Z)^2, kept normalized to [0,1)
struct Vec2Q {
    Rat x, y;
    static Vec2Q of(const Rat& a, const Rat& b);
    Vec2Q apply(const Mat2& m) const;
    Vec2Q scale(i64 k) const;
    Vec2Q add(const Vec2Q& o) const;
    bool operator==(const Vec2Q& o) const { return x == o.x && y == o.y; }
    bool operator<(const Vec2Q& o) const { return x != o.x ? x < o.x : y < o.y; }
    bool is_zero() const { return x == 0 && y == 0; }
    i64 order() const; // additive order in (Q/Z)^2
    std::string str() const;
};

// U * A * V = D = diag(d1, d2) with d1 | d2, U and V unimodular
struct Snf2 {
    Mat2 U, V, D;
    i64 d1() const { return D.a; }
    i64 d2() const { return D.d; }
};
Snf2 smith_normal_form(const Mat2& A);

// Rank-2 root datum with the Weyl group realized three ways at aligned
// indices: permutations of the roots, matrices on the character lattice X,
// matrices on the cocharacter lattice Y.
struct RootDatum2 {
    Series series;
    i64 p;
    bool dual_side = false;
    std::vector<std::pair<i64, i64>> roots;   // X coordinates
    std::vector<std::pair<i64, i64>> coroots; // Y coordinates, aligned with roots
    std::vector<int> is_long;                 // per root
    Mat2 pairing;                             // <x, y> = x^T P y
    FiniteGroup wperm;                        // W acting on the root list
    std::vector<Mat2> wx, wy;                 // matrices aligned with wperm indices
    std::vector<int> reflection_of_root;      // root index -> Weyl element index

    int weyl_index(const Mat2& my) const;
    int root_index(i64 rx, i64 ry) const;
    // <root_i, v> for v in Y ⊗ Q/Z (or the dual-side analogue)
    Rat pair_root(int root, const Vec2Q& v) const;
    RootDatum2 dual() const;
};

const RootDatum2& root_datum(Series series);

struct TorusClass {
    Series series;
    int d;
    i64 q;
    int widx;       // twist element index in the Weyl enumeration
    Mat2 rel;       // q * M_w - I on Y
    i64 inv1, inv2; // abelian invariants, inv1 | inv2
    Mat2 V;         // points are V * (a/inv1, b/inv2)
    i64 order;
};

TorusClass sylow_torus(const RootDatum2& rd, i64 q, int d);
std::vector<Vec2Q> torus_points(const TorusClass& tc, i64 cap = 10000000);

// centralizer of the twist in W, as a subgroup with aligned Weyl indices
struct RelWeyl {
    std::vector<int> windices; // subgroup element i <-> Weyl element windices[i]
    FiniteGroup grp;
    std::string type;
};
RelWeyl relative_weyl(const RootDatum2& rd, int d);

// |H^F| where H is the connected centralizer with the given root subsystem
// and F acts on Y as q * M_twist: equals q^(#subsystem/2) times the reversed
// inverse Molien series of the coset W_H * twist evaluated at q.
Int twisted_centralizer_order(const RootDatum2& rd, const std::vector<int>& subsystem,
                              int twist_widx, const Int& q);

// cyclotomic factorization label of the torus part plus component labels,
// e.g. "G2", "A1.A1", "A1.T(phi2)", "T(phi3)"
std::string centralizer_type_label(const RootDatum2& rd, const std::vector<int>& subsystem,
                                   int twist_widx);

// simple-component structure of a centralizer subsystem under the twist:
// one entry per Frobenius orbit of components: (component type, orbit length)
std::vector<std::pair<std::string, int>> component_orbits(const RootDatum2& rd,
                                                          const std::vector<int>& subsystem,
                                                          int twist_widx);

struct SsClass {
    Vec2Q rep;
    i64 orbit_size;
    std::vector<int> stab_windices; // stabilizer inside the acting group
    std::vector<int> subsystem;     // root indices with <alpha, rep> integral
    std::string type_label;
    std::string stab_type;
    Int cent_order;
    int n_pos;
    int twist_widx;
};

// W_d-orbits on the points of the Sylow d-torus
std::vector<SsClass> ss_classes_in_sylow_torus(const RootDatum2& rd, i64 q, int d);

// single-point version: the class of s inside the given torus
SsClass centralizer_class(const RootDatum2& rd, const Vec2Q& s, i64 q, int d);

// Frobenius-stable W-orbits on the prime-to-p torsion of Y ⊗ Q/Z with
// denominators bounded by the torus exponents; exactly q^2 classes
std::vector<SsClass> all_semisimple_classes(const RootDatum2& rd, i64 q, i64 cap = 2000000);

struct GraphAut {
    Mat2 tx, ty;              // p-isogeny squares to p * identity
    std::vector<int> wmap;    // induced map on Weyl element indices
    GroupAutomorphism on_w;   // same map as an automorphism of wperm
};

GraphAut graph_automorphism(const RootDatum2& rd);

// order of the subgroup of the prime-to-p torus generated by the images of
// the coroot half-points (trivial exactly when p = 2)
i64 coroot_halfpoint_group_order(const RootDatum2& rd);

} // namespace mnv

#endif
