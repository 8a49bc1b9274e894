#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

/// A bijection on strand positions {1..n}, stored 0-based.
///
/// Composition convention: compose(p, q) applies p first, then q, so the
/// image homomorphism from words satisfies image(uv) = compose(image(u), image(v)).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        Permutation p;
        p.img_.resize(static_cast<std::size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    /// Transposition of positions i and i+1 (1-based generator index i).
    static Permutation transposition(int n, int i) {
        if (i < 1 || i >= n) throw IndexOutOfRange("transposition index out of range");
        Permutation p = identity(n);
        std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
        return p;
    }

    /// The half-twist permutation i -> n+1-i.
    static Permutation half_twist(int n) {
        Permutation p;
        p.img_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = n - 1 - i;
        return p;
    }

    static Permutation from_zero_based(std::vector<int> images) {
        Permutation p;
        p.img_ = std::move(images);
        if (!p.is_bijection()) throw ParseError("image table is not a bijection");
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }

    /// Image of 0-based position i.
    int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p;
        p.img_.resize(img_.size());
        for (int i = 0; i < size(); ++i) p.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
        return p;
    }

    /// Apply p first, then q.
    friend Permutation compose(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size()) throw StrandMismatch("composing permutations of different degree");
        Permutation r;
        r.img_.resize(p.img_.size());
        for (int i = 0; i < p.size(); ++i)
            r.img_[static_cast<std::size_t>(i)] = q.img_[static_cast<std::size_t>(p.img_[static_cast<std::size_t>(i)])];
        return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    /// 1-based image list, e.g. "2 1 3".
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(img_[static_cast<std::size_t>(i)] + 1);
        }
        return s;
    }

    std::vector<int> one_based_images() const {
        std::vector<int> v(img_.size());
        for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
        return v;
    }

private:
    bool is_bijection() const {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
        return true;
    }

    std::vector<int> img_;
};

}  // namespace braidkit
