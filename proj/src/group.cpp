#include "mnv/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mnv {

FiniteGroup FiniteGroup::generate(std::vector<Perm> gens, size_t max_order)
{
    MNV_REQUIRE(!gens.empty(), "generate: need at least one generator");
    size_t deg = gens[0].degree();
    for (const auto& g : gens) {
        MNV_REQUIRE(g.degree() == deg, "generate: generators act on different point sets");
        MNV_REQUIRE(g.is_valid(), "generate: invalid permutation");
    }
    FiniteGroup G;
    G.gens_ = gens;
    G.elems_.push_back(Perm::identity(deg));
    G.index_[G.elems_[0]] = 0;
    for (size_t head = 0; head < G.elems_.size(); ++head) {
        for (const auto& g : gens) {
            Perm next = G.elems_[head] * g;
            if (G.index_.emplace(next, static_cast<int>(G.elems_.size())).second) {
                G.elems_.push_back(std::move(next));
                MNV_REQUIRE(G.elems_.size() <= max_order,
                            "generate: group order exceeds bound " +
                                std::to_string(max_order));
            }
        }
    }
    G.finish();
    return G;
}

FiniteGroup FiniteGroup::from_elements(std::vector<Perm> elems, std::vector<Perm> gens)
{
    FiniteGroup G;
    MNV_REQUIRE(!elems.empty() && elems[0].is_identity(),
                "from_elements: identity must come first");
    G.elems_ = std::move(elems);
    G.gens_ = std::move(gens);
    for (size_t i = 0; i < G.elems_.size(); ++i)
        MNV_REQUIRE(G.index_.emplace(G.elems_[i], static_cast<int>(i)).second,
                    "from_elements: duplicate element");
    G.finish();
    return G;
}

void FiniteGroup::finish()
{
    inv_.resize(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) {
        int j = index_of(elems_[i].inverse());
        MNV_REQUIRE(j >= 0, "group not closed under inversion");
        inv_[i] = j;
    }
}

std::vector<int> FiniteGroup::generator_indices() const
{
    std::vector<int> idx;
    for (const auto& g : gens_) {
        int i = index_of(g);
        MNV_REQUIRE(i >= 0, "generator missing from element list");
        idx.push_back(i);
    }
    return idx;
}

int FiniteGroup::mult(int a, int b) const
{
    int i = index_of(elems_[static_cast<size_t>(a)] * elems_[static_cast<size_t>(b)]);
    MNV_REQUIRE(i >= 0, "group not closed under multiplication");
    return i;
}

int FiniteGroup::conjugate(int g, int by) const
{
    return mult(mult(by, g), inverse(by));
}

int FiniteGroup::power(int g, i64 e) const
{
    int r = 0;
    i64 n = e >= 0 ? e : -e;
    int base = e >= 0 ? g : inverse(g);
    while (n) {
        if (n & 1) r = mult(r, base);
        base = mult(base, base);
        n >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int g) const
{
    int o = 1;
    int x = g;
    while (x != 0) {
        x = mult(x, g);
        ++o;
    }
    return o;
}

int FiniteGroup::exponent() const
{
    i64 e = 1;
    for (int i = 0; i < order(); ++i) e = lcm64(e, element_order(i));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const
{
    for (const auto& a : gens_)
        for (const auto& b : gens_)
            if (!(a * b == b * a)) return false;
    return true;
}

int FiniteGroup::index_of(const Perm& p) const
{
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

const ConjClasses& FiniteGroup::classes() const
{
    if (classes_) return *classes_;
    int n = order();
    std::vector<int> class_of(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> found; // (least element, size) per raw class
    std::vector<int> raw_of(static_cast<size_t>(n), -1);
    auto gen_idx = generator_indices();
    int raw_count = 0;
    for (int e = 0; e < n; ++e) {
        if (raw_of[static_cast<size_t>(e)] >= 0) continue;
        // conjugation orbit under the generators
        std::vector<int> orbit{e};
        raw_of[static_cast<size_t>(e)] = raw_count;
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (int g : gen_idx) {
                int c = conjugate(orbit[head], g);
                if (raw_of[static_cast<size_t>(c)] < 0) {
                    raw_of[static_cast<size_t>(c)] = raw_count;
                    orbit.push_back(c);
                }
            }
        }
        found.emplace_back(e, static_cast<int>(orbit.size()));
        ++raw_count;
    }
    // order classes by (size, least element)
    std::vector<int> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (found[static_cast<size_t>(a)].second != found[static_cast<size_t>(b)].second)
            return found[static_cast<size_t>(a)].second < found[static_cast<size_t>(b)].second;
        return found[static_cast<size_t>(a)].first < found[static_cast<size_t>(b)].first;
    });
    std::vector<int> newpos(found.size());
    for (size_t i = 0; i < perm.size(); ++i) newpos[static_cast<size_t>(perm[i])] = static_cast<int>(i);

    ConjClasses cc;
    cc.reps.resize(found.size());
    cc.sizes.resize(found.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        cc.reps[i] = found[static_cast<size_t>(perm[i])].first;
        cc.sizes[i] = found[static_cast<size_t>(perm[i])].second;
    }
    for (int e = 0; e < n; ++e) class_of[static_cast<size_t>(e)] = newpos[static_cast<size_t>(raw_of[static_cast<size_t>(e)])];
    cc.class_of = std::move(class_of);
    cc.inv_class.resize(found.size());
    for (size_t k = 0; k < cc.reps.size(); ++k)
        cc.inv_class[k] = cc.class_of[static_cast<size_t>(inverse(cc.reps[k]))];
    classes_ = std::move(cc);
    return *classes_;
}

std::vector<int> FiniteGroup::centralizer(int g) const
{
    std::vector<int> out;
    for (int i = 0; i < order(); ++i)
        if (mult(i, g) == mult(g, i)) out.push_back(i);
    return out;
}

std::vector<int> FiniteGroup::extend_automorphism(const std::vector<Perm>& gen_images) const
{
    MNV_REQUIRE(gen_images.size() == gens_.size(),
                "extend_automorphism: one image per generator required");
    std::vector<int> img_idx;
    for (const auto& p : gen_images) {
        int i = index_of(p);
        MNV_REQUIRE(i >= 0, "extend_automorphism: image not in the group");
        img_idx.push_back(i);
    }
    // deterministic word tree: rebuild the generation BFS
    int n = order();
    std::vector<int> fmap(static_cast<size_t>(n), -1);
    fmap[0] = 0;
    std::vector<int> bfs{0};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    auto gidx = generator_indices();
    for (size_t head = 0; head < bfs.size(); ++head) {
        int x = bfs[head];
        for (size_t t = 0; t < gidx.size(); ++t) {
            int y = mult(x, gidx[t]);
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                fmap[static_cast<size_t>(y)] = mult(fmap[static_cast<size_t>(x)], img_idx[t]);
                bfs.push_back(y);
            }
        }
    }
    MNV_REQUIRE(bfs.size() == static_cast<size_t>(n),
                "extend_automorphism: generators do not generate the group");
    // homomorphism check on all (element, generator) pairs
    for (int x = 0; x < n; ++x) {
        for (size_t t = 0; t < gidx.size(); ++t) {
            if (fmap[static_cast<size_t>(mult(x, gidx[t]))] !=
                mult(fmap[static_cast<size_t>(x)], img_idx[t]))
                throw Error("extend_automorphism: generator images do not respect relations");
        }
    }
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int v : fmap) {
        MNV_REQUIRE(!hit[static_cast<size_t>(v)], "extend_automorphism: map not bijective");
        hit[static_cast<size_t>(v)] = 1;
    }
    return fmap;
}

GroupAutomorphism make_automorphism(const FiniteGroup& G, const std::vector<Perm>& gen_images)
{
    GroupAutomorphism a;
    a.elem_map = G.extend_automorphism(gen_images);
    // order of the automorphism
    std::vector<int> acc = a.elem_map;
    a.order = 1;
    auto is_id = [&](const std::vector<int>& m) {
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != static_cast<int>(i)) return false;
        return true;
    };
    while (!is_id(acc)) {
        std::vector<int> next(acc.size());
        for (size_t i = 0; i < acc.size(); ++i)
            next[i] = a.elem_map[static_cast<size_t>(acc[i])];
        acc = std::move(next);
        ++a.order;
        MNV_REQUIRE(a.order <= G.order(), "make_automorphism: runaway order");
    }
    return a;
}

GroupAutomorphism inner_automorphism(const FiniteGroup& G, int g)
{
    std::vector<Perm> images;
    for (const auto& s : G.generators()) {
        int i = G.index_of(s);
        images.push_back(G.element(G.conjugate(i, g)));
    }
    return make_automorphism(G, images);
}

GroupAutomorphism compose(const FiniteGroup& G, const GroupAutomorphism& a,
                          const GroupAutomorphism& b)
{
    std::vector<Perm> images;
    for (const auto& s : G.generators()) {
        int i = G.index_of(s);
        images.push_back(G.element(a.elem_map[static_cast<size_t>(b.elem_map[static_cast<size_t>(i)])]));
    }
    return make_automorphism(G, images);
}

SemidirectProduct semidirect_product(const FiniteGroup& G, const GroupAutomorphism& a)
{
    size_t n = static_cast<size_t>(G.order());
    // left regular action of G on itself
    auto left_perm = [&](int g) {
        Perm p;
        p.img.resize(n);
        for (size_t x = 0; x < n; ++x)
            p.img[x] = static_cast<uint16_t>(G.mult(g, static_cast<int>(x)));
        return p;
    };
    Perm aperm;
    aperm.img.resize(n);
    for (size_t x = 0; x < n; ++x)
        aperm.img[x] = static_cast<uint16_t>(a.elem_map[x]);

    std::vector<Perm> gens;
    for (const auto& g : G.generators()) gens.push_back(left_perm(G.index_of(g)));
    gens.push_back(aperm);

    SemidirectProduct sp{FiniteGroup::generate(gens), {}, 0};
    MNV_REQUIRE(sp.group.order() == G.order() * a.order,
                "semidirect_product: unexpected extension order");
    sp.embed.resize(n);
    for (size_t g = 0; g < n; ++g) {
        int i = sp.group.index_of(left_perm(static_cast<int>(g)));
        MNV_REQUIRE(i >= 0, "semidirect_product: embedding failed");
        sp.embed[g] = i;
    }
    sp.coset_gen = sp.group.index_of(aperm);
    return sp;
}

EmbeddedSubgroup embedded_subgroup(const FiniteGroup& ambient,
                                   const std::vector<int>& gen_indices)
{
    // BFS closure inside the ambient group
    std::vector<int> elems{0};
    std::set<int> seen{0};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (int g : gen_indices) {
            int y = ambient.mult(elems[head], g);
            if (seen.insert(y).second) elems.push_back(y);
        }
    }
    std::vector<Perm> perms;
    perms.reserve(elems.size());
    for (int i : elems) perms.push_back(ambient.element(i));
    std::vector<Perm> gens;
    for (int g : gen_indices) gens.push_back(ambient.element(g));
    if (gens.empty()) gens.push_back(ambient.element(0));

    EmbeddedSubgroup S;
    S.grp = FiniteGroup::from_elements(std::move(perms), std::move(gens));
    S.to_ambient = elems;
    for (size_t i = 0; i < elems.size(); ++i)
        S.from_ambient[elems[i]] = static_cast<int>(i);
    return S;
}

std::string small_group_type(const FiniteGroup& G)
{
    int n = G.order();
    if (n == 1) return "1";
    int exp = G.exponent();
    if (G.is_abelian()) {
        if (exp == n) return "C" + std::to_string(n);
        // rank-2 abelian: invariants (n/exp, exp)
        int d1 = n / exp;
        MNV_REQUIRE(exp % d1 == 0, "small_group_type: abelian rank > 2 unsupported");
        return "C" + std::to_string(d1) + "xC" + std::to_string(exp);
    }
    // dihedral test: rotation of order n/2 plus an inverting involution
    for (int r = 0; r < n; ++r) {
        if (G.element_order(r) != n / 2) continue;
        for (int s = 0; s < n; ++s) {
            if (G.element_order(s) != 2) continue;
            if (G.conjugate(r, s) == G.inverse(r)) {
                // s outside <r>
                bool inside = false;
                int x = 0;
                for (int k = 0; k < n / 2; ++k) {
                    if (x == s) inside = true;
                    x = G.mult(x, r);
                }
                if (!inside) return "D" + std::to_string(n);
            }
        }
    }
    return "G" + std::to_string(n);
}

} // namespace mnv
