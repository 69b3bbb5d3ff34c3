#ifndef MNV_PERM_HPP
#define MNV_PERM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mnv/common.hpp"

namespace mnv {

// Permutation of {0..n-1}, stored as the image sequence.
struct Perm {
    std::vector<uint16_t> img;

    Perm() = default;
    explicit Perm(std::vector<uint16_t> images) : img(std::move(images)) {}
    static Perm identity(size_t n)
    {
        Perm p;
        p.img.resize(n);
        for (size_t i = 0; i < n; ++i) p.img[i] = static_cast<uint16_t>(i);
        return p;
    }
    static Perm from_cycles(size_t n, const std::vector<std::vector<int>>& cycles)
    {
        Perm p = identity(n);
        for (const auto& c : cycles) {
            for (size_t i = 0; i < c.size(); ++i) {
                p.img[static_cast<size_t>(c[i])] =
                    static_cast<uint16_t>(c[(i + 1) % c.size()]);
            }
        }
        return p;
    }

    size_t degree() const { return img.size(); }
    int operator()(int x) const { return img[static_cast<size_t>(x)]; }

    // (a*b)(x) = a(b(x))
    Perm operator*(const Perm& b) const
    {
        Perm r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[b.img[i]];
        return r;
    }

    Perm inverse() const
    {
        Perm r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<uint16_t>(i);
        return r;
    }

    bool is_identity() const
    {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    bool is_valid() const
    {
        std::vector<char> seen(img.size(), 0);
        for (auto x : img) {
            if (x >= img.size() || seen[x]) return false;
            seen[x] = 1;
        }
        return true;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
};

struct PermHash {
    size_t operator()(const Perm& p) const
    {
        size_t h = 1469598103934665603ull;
        for (auto x : p.img) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace mnv

#endif
