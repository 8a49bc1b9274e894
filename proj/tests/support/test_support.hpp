#pragma once

// Test-only helpers: deterministic random words, sound relation rewrites,
// and brute-force oracles kept independent of the library's own criteria.

#include <cstdint>
#include <cstdlib>
#include <set>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/rng.hpp"

namespace testsupport {

using braidkit::BraidWord;
using braidkit::Permutation;
using braidkit::SplitMix64;

inline std::vector<int> random_letters(SplitMix64& rng, int n, int len) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) {
        int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        v.push_back(rng.below(2) ? i : -i);
    }
    return v;
}

inline BraidWord random_word(SplitMix64& rng, int n, int len) { return BraidWord(n, random_letters(rng, n, len)); }

/// Apply one sound rewrite: free insertion, free cancellation, a far
/// commutation swap, or a braid-relation triple replacement.
inline void mutate_letters(SplitMix64& rng, std::vector<int>& v, int n) {
    int kind = static_cast<int>(rng.below(4));
    if (kind == 0) {
        int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        int sgn = rng.below(2) ? 1 : -1;
        std::size_t pos = rng.below(v.size() + 1);
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), {sgn * i, -sgn * i});
    } else if (kind == 1) {
        for (std::size_t t = 0; t + 1 < v.size(); ++t)
            if (v[t] == -v[t + 1]) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(t), v.begin() + static_cast<std::ptrdiff_t>(t) + 2);
                return;
            }
    } else if (kind == 2) {
        if (v.size() < 2) return;
        std::size_t start = rng.below(v.size() - 1);
        for (std::size_t t = start; t + 1 < v.size(); ++t) {
            int a = std::abs(v[t]), b = std::abs(v[t + 1]);
            if (std::abs(a - b) >= 2) {
                std::swap(v[t], v[t + 1]);
                return;
            }
        }
    } else {
        if (v.size() < 3) return;
        std::size_t start = rng.below(v.size() - 2);
        for (std::size_t t = start; t + 2 < v.size(); ++t) {
            int a = v[t], b = v[t + 1], c = v[t + 2];
            if (a == c && ((a > 0) == (b > 0)) && std::abs(std::abs(a) - std::abs(b)) == 1) {
                v[t] = b;
                v[t + 1] = a;
                v[t + 2] = b;
                return;
            }
        }
    }
}

inline BraidWord relation_equivalent(SplitMix64& rng, const BraidWord& w, int moves) {
    std::vector<int> v = w.letters();
    for (int t = 0; t < moves; ++t) mutate_letters(rng, v, w.strands());
    return BraidWord(w.strands(), v);
}

inline int inversion_count(const Permutation& p) {
    int inv = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

namespace detail {

inline void brute_words_dfs(int n, const Permutation& target, int remaining, std::vector<int>& positions,
                            std::vector<std::vector<int>>& crossed, std::vector<int>& word,
                            std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        for (int s = 0; s < n; ++s)
            if (positions[static_cast<std::size_t>(s)] != target[s]) return;
        out.push_back(word);
        return;
    }
    for (int i = 1; i < n; ++i) {
        // strands currently at positions i-1 and i
        int s = -1, t = -1;
        for (int q = 0; q < n; ++q) {
            if (positions[static_cast<std::size_t>(q)] == i - 1) s = q;
            if (positions[static_cast<std::size_t>(q)] == i) t = q;
        }
        if (crossed[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) continue;  // would cross twice
        crossed[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = 1;
        crossed[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = 1;
        positions[static_cast<std::size_t>(s)] = i;
        positions[static_cast<std::size_t>(t)] = i - 1;
        word.push_back(i);
        brute_words_dfs(n, target, remaining - 1, positions, crossed, word, out);
        word.pop_back();
        positions[static_cast<std::size_t>(s)] = i - 1;
        positions[static_cast<std::size_t>(t)] = i;
        crossed[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = 0;
        crossed[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = 0;
    }
}

}  // namespace detail

/// Every positive word realizing the permutation braid of p: length equals
/// the inversion count and no strand pair crosses twice. Independent of any
/// descent-set reasoning.
inline std::vector<std::vector<int>> brute_permutation_braid_words(const Permutation& p) {
    int n = p.size();
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> crossed(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> word;
    std::vector<std::vector<int>> out;
    detail::brute_words_dfs(n, p, inversion_count(p), positions, crossed, word, out);
    return out;
}

inline std::set<int> brute_starting_set(const Permutation& p) {
    std::set<int> s;
    for (const auto& w : brute_permutation_braid_words(p))
        if (!w.empty()) s.insert(w.front());
    return s;
}

inline std::set<int> brute_finishing_set(const Permutation& p) {
    std::set<int> s;
    for (const auto& w : brute_permutation_braid_words(p))
        if (!w.empty()) s.insert(w.back());
    return s;
}

inline bool brute_left_weighted(const Permutation& f1, const Permutation& f2) {
    std::set<int> start = brute_starting_set(f2);
    std::set<int> finish = brute_finishing_set(f1);
    for (int i : start)
        if (!finish.count(i)) return false;
    return true;
}

/// All words over the signed generators up to the given length, for small
/// brute-force conjugator searches.
inline std::vector<BraidWord> all_words_up_to(int n, int max_len) {
    std::vector<BraidWord> out{BraidWord::identity(n)};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            for (int i = 1; i < n; ++i) {
                for (int sgn : {1, -1}) {
                    std::vector<int> v = w;
                    v.push_back(sgn * i);
                    out.emplace_back(n, v);
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace testsupport
