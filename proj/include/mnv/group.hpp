#ifndef MNV_GROUP_HPP
#define MNV_GROUP_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "mnv/perm.hpp"

namespace mnv {

// Conjugacy class data for a FiniteGroup. Classes are sorted by
// (size, least element index) so all downstream orderings are reproducible.
struct ConjClasses {
    std::vector<int> reps;      // element index of the representative
    std::vector<int> sizes;
    std::vector<int> class_of;  // element index -> class index
    std::vector<int> inv_class; // class of the inverses
    int count() const { return static_cast<int>(reps.size()); }
};

// Finite permutation group with fully enumerated elements.
// Element 0 is the identity; enumeration order is the deterministic BFS
// over the generator list, so indices are stable across runs.
class FiniteGroup {
public:
    static FiniteGroup generate(std::vector<Perm> gens, size_t max_order = 1000000);
    // from a closed element list (identity first); gens must generate it
    static FiniteGroup from_elements(std::vector<Perm> elems, std::vector<Perm> gens);

    int order() const { return static_cast<int>(elems_.size()); }
    size_t degree() const { return elems_.empty() ? 0 : elems_[0].degree(); }
    const Perm& element(int i) const { return elems_[static_cast<size_t>(i)]; }
    const std::vector<Perm>& generators() const { return gens_; }
    std::vector<int> generator_indices() const;

    int mult(int a, int b) const;
    int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
    int conjugate(int g, int by) const; // by * g * by^-1
    int power(int g, i64 e) const;
    int element_order(int g) const;
    int exponent() const;
    bool is_abelian() const;

    // index of a permutation, or -1
    int index_of(const Perm& p) const;

    const ConjClasses& classes() const;

    // centralizer / center as element index lists
    std::vector<int> centralizer(int g) const;

    // extends generator images to the unique compatible element map;
    // throws if the map is not an automorphism
    std::vector<int> extend_automorphism(const std::vector<Perm>& gen_images) const;

private:
    void finish(); // builds index, inverses, word tree checks
    std::vector<Perm> elems_;
    std::vector<Perm> gens_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::vector<int> inv_;
    mutable std::optional<ConjClasses> classes_;
};

struct GroupAutomorphism {
    std::vector<int> elem_map; // element index -> element index
    int order;                 // order as an automorphism
};

GroupAutomorphism make_automorphism(const FiniteGroup& G,
                                    const std::vector<Perm>& gen_images);
GroupAutomorphism inner_automorphism(const FiniteGroup& G, int g);
GroupAutomorphism compose(const FiniteGroup& G, const GroupAutomorphism& a,
                          const GroupAutomorphism& b);

// Split extension G ⋊ <a>, realized faithfully on |G| points via the right
// regular action of G and the natural action of the automorphism.
struct SemidirectProduct {
    FiniteGroup group;
    std::vector<int> embed; // G element index -> product element index
    int coset_gen;          // product element index of the automorphism generator
};

SemidirectProduct semidirect_product(const FiniteGroup& G, const GroupAutomorphism& a);

// Subgroup of an ambient group, with its own enumerated structure and the
// inclusion map into ambient element indices.
struct EmbeddedSubgroup {
    FiniteGroup grp;
    std::vector<int> to_ambient;               // sub elem index -> ambient elem index
    std::unordered_map<int, int> from_ambient; // valid for members only (as map)
};

EmbeddedSubgroup embedded_subgroup(const FiniteGroup& ambient,
                                   const std::vector<int>& gen_indices);

// small-group isomorphism-type tags, enough for the types used here
std::string small_group_type(const FiniteGroup& G);

} // namespace mnv

#endif
