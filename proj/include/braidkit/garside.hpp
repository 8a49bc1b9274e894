#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

/// A permutation braid: the positive braid in which any two strands cross at
/// most once, determined by its permutation. Factors of a NormalForm are
/// stored as bare permutations under this correspondence.
using PermutationBraidFactor = Permutation;

/// The fundamental word D = (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1 s_2)(s_1).
inline BraidWord delta(int n) {
    if (n < 2) throw IndexOutOfRange("strand count must be at least 2");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int len = n - 1; len >= 1; --len)
        for (int i = 1; i <= len; ++i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

/// Starting set S(F): generator indices i such that s_i is a prefix of F.
/// For a permutation braid these are the descents of its permutation.
inline std::vector<int> starting_set(const Permutation& f) {
    std::vector<int> out;
    for (int i = 1; i < f.size(); ++i)
        if (f[i - 1] > f[i]) out.push_back(i);
    return out;
}

/// Finishing set F(F): indices i such that s_i is a suffix of F; the descents
/// of the inverse permutation.
inline std::vector<int> finishing_set(const Permutation& f) {
    return starting_set(f.inverse());
}

/// Conjugation by the fundamental braid on factors: tau(F) = D^-1 F D,
/// which maps s_i to s_{n-i}.
inline Permutation tau(const Permutation& f) {
    int n = f.size();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = n - 1 - f[n - 1 - x];
    return Permutation::from_zero_based(img);
}

/// True iff the adjacent factor pair (f1, f2) is left-weighted:
/// the starting set of f2 is contained in the finishing set of f1.
inline bool is_left_weighted(const Permutation& f1, const Permutation& f2) {
    if (f1.size() != f2.size()) throw StrandMismatch("factors from different braid groups");
    Permutation inv = f1.inverse();
    for (int i = 1; i < f2.size(); ++i)
        if (f2[i - 1] > f2[i] && !(inv[i - 1] > inv[i])) return false;
    return true;
}

namespace detail {

// Factor list engine for normal-form computation. Factors are flat n-entry
// permutation tables kept alongside their inverses so a single letter slide
// is O(1) and a pair adjustment is O(n) per slide.
class FactorChain {
public:
    explicit FactorChain(int n) : n_(n) {}

    int size() const { return static_cast<int>(fac_.size()) / n_; }

    const int* table(int t) const { return fac_.data() + static_cast<std::size_t>(t) * n_; }

    // Append a factor table and restore left-weightedness by bubbling the new
    // letters leftward. Pops the last factor if it drains to the identity.
    void append(const int* table) {
        const std::size_t base = fac_.size();
        fac_.resize(base + static_cast<std::size_t>(n_));
        inv_.resize(base + static_cast<std::size_t>(n_));
        for (int x = 0; x < n_; ++x) {
            fac_[base + static_cast<std::size_t>(x)] = table[x];
            inv_[base + static_cast<std::size_t>(table[x])] = x;
        }
        for (int t = size() - 2; t >= 0; --t)
            if (!fix_pair(t)) break;
        if (size() > 0 && is_identity(size() - 1)) pop_back();
    }

    // Slide prefix letters of factor t+1 into factor t until the pair is
    // left-weighted. Returns true if anything moved.
    bool fix_pair(int t) {
        int* a = fac_.data() + static_cast<std::size_t>(t) * n_;
        int* ai = inv_.data() + static_cast<std::size_t>(t) * n_;
        int* b = fac_.data() + static_cast<std::size_t>(t + 1) * n_;
        int* bi = inv_.data() + static_cast<std::size_t>(t + 1) * n_;
        bool changed = false;
        int i = 1;
        while (i < n_) {
            if (b[i - 1] > b[i] && !(ai[i - 1] > ai[i])) {
                // append s_i to a: values i-1 and i swap places
                int p = ai[i - 1], q = ai[i];
                a[p] = i;
                a[q] = i - 1;
                ai[i - 1] = q;
                ai[i] = p;
                // strip s_i from the front of b: arguments i-1 and i swap
                int u = b[i - 1], v = b[i];
                b[i - 1] = v;
                b[i] = u;
                bi[u] = i;
                bi[v] = i - 1;
                changed = true;
                // a slide at i only disturbs positions i-1 and later
                i = i > 1 ? i - 1 : 1;
            } else {
                ++i;
            }
        }
        return changed;
    }

    bool is_identity(int t) const {
        const int* f = table(t);
        for (int x = 0; x < n_; ++x)
            if (f[x] != x) return false;
        return true;
    }

    bool is_half_twist(int t) const {
        const int* f = table(t);
        for (int x = 0; x < n_; ++x)
            if (f[x] != n_ - 1 - x) return false;
        return true;
    }

    void pop_back() {
        fac_.resize(fac_.size() - static_cast<std::size_t>(n_));
        inv_.resize(inv_.size() - static_cast<std::size_t>(n_));
    }

    void remove_identities() {
        int out = 0;
        for (int t = 0; t < size(); ++t) {
            if (is_identity(t)) continue;
            if (out != t) {
                std::copy(table(t), table(t) + n_, fac_.begin() + static_cast<std::ptrdiff_t>(out) * n_);
                std::copy(inv_.begin() + static_cast<std::ptrdiff_t>(t) * n_,
                          inv_.begin() + static_cast<std::ptrdiff_t>(t + 1) * n_,
                          inv_.begin() + static_cast<std::ptrdiff_t>(out) * n_);
            }
            ++out;
        }
        fac_.resize(static_cast<std::size_t>(out) * n_);
        inv_.resize(static_cast<std::size_t>(out) * n_);
    }

    // Full sweeps until nothing changes; the bubbling in append already
    // leaves the chain left-weighted, so this normally confirms in one pass.
    void settle() {
        bool changed = true;
        while (changed) {
            changed = false;
            remove_identities();
            for (int t = size() - 2; t >= 0; --t)
                if (fix_pair(t)) changed = true;
        }
    }

private:
    int n_;
    std::vector<int> fac_;
    std::vector<int> inv_;
};

}  // namespace detail

/// Left canonical form D^r F_1 ... F_k with left-weighted permutation-braid
/// factors, none of which is the identity or D. Unique per group element.
struct NormalForm {
    int n = 2;
    std::int64_t delta_power = 0;
    std::vector<Permutation> factors;

    std::int64_t inf() const { return delta_power; }
    std::int64_t sup() const { return delta_power + static_cast<std::int64_t>(factors.size()); }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.n == b.n && a.delta_power == b.delta_power && a.factors == b.factors;
    }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

    /// Stable serialization usable as a set key.
    std::string canonical_key() const {
        std::string s = std::to_string(n) + ";" + std::to_string(delta_power) + ";";
        for (const auto& f : factors) {
            for (int i = 0; i < f.size(); ++i) {
                s += std::to_string(f[i]);
                s += ',';
            }
            s += '|';
        }
        return s;
    }

    /// Text rendering "D^r |" followed by the factors as 1-based image lists
    /// separated by " | ".
    std::string render() const {
        std::string s = "D^" + std::to_string(delta_power) + " |";
        for (std::size_t t = 0; t < factors.size(); ++t) {
            s += ' ';
            s += factors[t].to_string();
            if (t + 1 < factors.size()) s += " |";
        }
        return s;
    }
};

/// Compute the left canonical form of a word.
///
/// Each letter becomes one factor (negative letters contribute D^-1 times the
/// positive complement D s_i^-1), then local left-weighting sweeps run to a
/// fixpoint and D factors are absorbed into the exponent.
inline NormalForm normal_form(const BraidWord& w) {
    const int n = w.strands();

    std::int64_t neg_total = 0;
    for (int a : w.letters())
        if (a < 0) ++neg_total;

    detail::FactorChain chain(n);
    std::vector<int> table(static_cast<std::size_t>(n));
    std::int64_t negs_after = neg_total;
    for (int a : w.letters()) {
        const bool negative = a < 0;
        const int i = negative ? -a : a;
        if (negative) --negs_after;
        const bool apply_tau = (negs_after % 2) != 0;
        if (!negative) {
            // tau turns s_i into s_{n-i}
            const int j = apply_tau ? n - i : i;
            for (int x = 0; x < n; ++x) table[static_cast<std::size_t>(x)] = x;
            std::swap(table[static_cast<std::size_t>(j - 1)], table[static_cast<std::size_t>(j)]);
        } else {
            // complement D s_i^-1: half twist followed by the transposition,
            // reflected by tau when an odd number of D^-1 still passes over it
            for (int x = 0; x < n; ++x) {
                int y = n - 1 - x;
                if (y == i - 1)
                    y = i;
                else if (y == i)
                    y = i - 1;
                table[static_cast<std::size_t>(x)] = y;
            }
            if (apply_tau) {
                std::vector<int> t2(static_cast<std::size_t>(n));
                for (int x = 0; x < n; ++x) t2[static_cast<std::size_t>(x)] = n - 1 - table[static_cast<std::size_t>(n - 1 - x)];
                table = t2;
            }
        }
        chain.append(table.data());
    }

    chain.settle();

    std::int64_t r = -neg_total;
    int lead = 0;
    while (lead < chain.size() && chain.is_half_twist(lead)) ++lead;
    r += lead;

    NormalForm nf;
    nf.n = n;
    nf.delta_power = r;
    nf.factors.reserve(static_cast<std::size_t>(chain.size() - lead));
    for (int t = lead; t < chain.size(); ++t) {
        std::vector<int> img(chain.table(t), chain.table(t) + n);
        nf.factors.push_back(Permutation::from_zero_based(std::move(img)));
    }
    return nf;
}

/// Positive word of a permutation braid, peeling the smallest descent first.
inline std::vector<int> factor_letters(const Permutation& f) {
    std::vector<int> table(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) table[static_cast<std::size_t>(i)] = f[i];
    std::vector<int> out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i < f.size(); ++i) {
            if (table[static_cast<std::size_t>(i - 1)] > table[static_cast<std::size_t>(i)]) {
                out.push_back(i);
                std::swap(table[static_cast<std::size_t>(i - 1)], table[static_cast<std::size_t>(i)]);
                progress = true;
                break;
            }
        }
    }
    return out;
}

/// Word equal to the normal form: D^r followed by the factor words.
inline BraidWord rebuild(const NormalForm& nf) {
    std::vector<int> letters;
    BraidWord d = delta(nf.n);
    std::int64_t reps = nf.delta_power < 0 ? -nf.delta_power : nf.delta_power;
    for (std::int64_t t = 0; t < reps; ++t) {
        if (nf.delta_power > 0)
            for (int a : d.letters()) letters.push_back(a);
        else
            for (auto it = d.letters().rbegin(); it != d.letters().rend(); ++it) letters.push_back(-*it);
    }
    for (const auto& f : nf.factors)
        for (int a : factor_letters(f)) letters.push_back(a);
    return BraidWord(nf.n, std::move(letters));
}

/// Word-problem decision: true iff u = v in the braid group.
inline bool compare(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands()) throw StrandMismatch("comparing words with different strand counts");
    return normal_form(u) == normal_form(v);
}

/// (inf, sup) of the canonical form: (r, r + number of factors).
inline std::pair<std::int64_t, std::int64_t> inf_sup(const BraidWord& w) {
    NormalForm nf = normal_form(w);
    return {nf.inf(), nf.sup()};
}

}  // namespace braidkit
