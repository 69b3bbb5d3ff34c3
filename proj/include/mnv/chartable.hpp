#ifndef MNV_CHARTABLE_HPP
#define MNV_CHARTABLE_HPP

#include "mnv/cyclotomic.hpp"
#include "mnv/group.hpp"

namespace mnv {

// one exact value per conjugacy class, in the class order of the group
using ClassFunction = std::vector<Cyc>;

struct CharTable {
    std::vector<ClassFunction> irr; // sorted by (degree, lexicographic values)
    std::vector<i64> degrees;
    int count() const { return static_cast<int>(irr.size()); }
};

// Exact irreducible character table. Abelian groups are handled by iterated
// cyclic extensions; the general case runs the Burnside-Dixon class-matrix
// algorithm over F_e (e the least prime = 1 mod exponent(G) above 2*sqrt|G|)
// and lifts eigenvalue multiplicities to cyclotomic integers.
CharTable character_table(const FiniteGroup& G);

Cyc inner_product(const FiniteGroup& G, const ClassFunction& a, const ClassFunction& b);

// full orthogonality / degree / regular-character validation; throws on failure
void verify_character_table(const FiniteGroup& G, const CharTable& T);

ClassFunction restrict_to(const FiniteGroup& ambient, const ClassFunction& chi,
                          const EmbeddedSubgroup& S);

ClassFunction induce_from(const FiniteGroup& ambient, const EmbeddedSubgroup& S,
                          const ClassFunction& chi_on_sub);

// all irreducibles of the ambient group restricting to chi (chi irreducible on
// a normal subgroup, required invariant under the ambient group)
std::vector<ClassFunction> extensions_of(const FiniteGroup& ambient,
                                         const EmbeddedSubgroup& normal_sub,
                                         const ClassFunction& chi,
                                         const CharTable& ambient_table);

// permutation of the irreducible rows induced by an automorphism:
// result[i] = index of chi_i composed with the inverse automorphism
std::vector<int> aut_action_on_table(const FiniteGroup& G, const GroupAutomorphism& a,
                                     const CharTable& T);

// permutation of the rows under a Galois map (lifted internally to a common
// modulus with all value conductors)
std::vector<int> galois_action_on_table(const FiniteGroup& G, const GaloisMap& sigma,
                                        const CharTable& T);

ClassFunction apply_galois(const GaloisMap& sigma, const ClassFunction& f);

i64 lcm_conductor(const ClassFunction& f);

} // namespace mnv

#endif
