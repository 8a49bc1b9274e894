#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"

namespace braidkit {

/// Caps on search-set growth. Exceeding a cap raises ResourceLimit instead of
/// letting a saturation run without bound.
struct SearchLimits {
    std::size_t max_set = 1'000'000;
};

/// Conjugate by the initial factor (adjusted by tau for the D power):
/// D^r F_1 ... F_k  ->  D^r F_2 ... F_k tau^-r(F_1), renormalized.
/// Iterated cycling never decreases inf.
inline NormalForm cycling(const NormalForm& nf) {
    if (nf.factors.empty()) return nf;
    Permutation first = nf.factors.front();
    if (nf.delta_power % 2 != 0) first = tau(first);
    NormalForm shifted;
    shifted.n = nf.n;
    shifted.delta_power = nf.delta_power;
    shifted.factors.assign(nf.factors.begin() + 1, nf.factors.end());
    BraidWord body = rebuild(shifted);
    std::vector<int> letters = body.letters();
    for (int a : factor_letters(first)) letters.push_back(a);
    return normal_form(BraidWord(nf.n, std::move(letters)));
}

/// Conjugate by the inverse of the final factor:
/// D^r F_1 ... F_k  ->  D^r tau^r(F_k) F_1 ... F_{k-1}, renormalized.
/// Iterated decycling never increases sup.
inline NormalForm decycling(const NormalForm& nf) {
    if (nf.factors.empty()) return nf;
    Permutation last = nf.factors.back();
    if (nf.delta_power % 2 != 0) last = tau(last);
    std::vector<int> letters;
    BraidWord d = delta(nf.n);
    std::int64_t reps = nf.delta_power < 0 ? -nf.delta_power : nf.delta_power;
    for (std::int64_t t = 0; t < reps; ++t) {
        if (nf.delta_power > 0)
            for (int a : d.letters()) letters.push_back(a);
        else
            for (auto it = d.letters().rbegin(); it != d.letters().rend(); ++it) letters.push_back(-*it);
    }
    for (int a : factor_letters(last)) letters.push_back(a);
    for (std::size_t t = 0; t + 1 < nf.factors.size(); ++t)
        for (int a : factor_letters(nf.factors[t])) letters.push_back(a);
    return normal_form(BraidWord(nf.n, std::move(letters)));
}

/// The set of conjugates with maximal inf and minimal sup, as normal forms.
struct SummitSet {
    std::vector<NormalForm> elements;  // sorted by canonical key
    std::int64_t achieved_inf = 0;
    std::int64_t achieved_sup = 0;

    bool contains(const NormalForm& nf) const {
        return std::binary_search(elements.begin(), elements.end(), nf,
                                  [](const NormalForm& a, const NormalForm& b) {
                                      return a.canonical_key() < b.canonical_key();
                                  });
    }
};

namespace detail {

inline BraidWord word_of_factor(int n, const Permutation& f) {
    return BraidWord(n, factor_letters(f));
}

// All permutation braids except the identity, in a fixed enumeration order.
inline std::vector<Permutation> nontrivial_permutation_braids(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Permutation> out;
    while (std::next_permutation(idx.begin(), idx.end()))
        out.push_back(Permutation::from_zero_based(idx));
    return out;
}

// Raise inf by iterated cycling and lower sup by iterated decycling until a
// full loop of each produces no improvement.
inline NormalForm summit_representative(NormalForm nf, const SearchLimits& lim) {
    bool improved = true;
    while (improved) {
        improved = false;
        {
            std::unordered_set<std::string> seen{nf.canonical_key()};
            NormalForm cur = nf;
            while (true) {
                NormalForm nxt = cycling(cur);
                if (nxt.inf() > nf.inf()) {
                    nf = cur = nxt;
                    improved = true;
                    seen.clear();
                    seen.insert(nf.canonical_key());
                    continue;
                }
                if (!seen.insert(nxt.canonical_key()).second) break;
                if (seen.size() > lim.max_set) throw ResourceLimit("cycling orbit exceeded the configured cap");
                cur = nxt;
            }
        }
        {
            std::unordered_set<std::string> seen{nf.canonical_key()};
            NormalForm cur = nf;
            while (true) {
                NormalForm nxt = decycling(cur);
                if (nxt.sup() < nf.sup() && nxt.inf() >= nf.inf()) {
                    nf = cur = nxt;
                    improved = true;
                    seen.clear();
                    seen.insert(nf.canonical_key());
                    continue;
                }
                if (!seen.insert(nxt.canonical_key()).second) break;
                if (seen.size() > lim.max_set) throw ResourceLimit("decycling orbit exceeded the configured cap");
                cur = nxt;
            }
        }
    }
    return nf;
}

}  // namespace detail

/// Compute the full super summit set by saturating one summit representative
/// under conjugation by permutation braids, keeping elements at the achieved
/// (inf, sup). A conjugate strictly better than the current target restarts
/// the saturation from it.
inline SummitSet super_summit_set(const BraidWord& w, const SearchLimits& lim = {}) {
    const int n = w.strands();
    const auto conjugators = detail::nontrivial_permutation_braids(n);
    NormalForm base = detail::summit_representative(normal_form(w), lim);

    for (;;) {
        const std::int64_t target_inf = base.inf();
        const std::int64_t target_sup = base.sup();
        std::map<std::string, NormalForm> found;
        std::deque<NormalForm> queue;
        found.emplace(base.canonical_key(), base);
        queue.push_back(base);

        bool restarted = false;
        while (!queue.empty() && !restarted) {
            NormalForm cur = queue.front();
            queue.pop_front();
            BraidWord cur_word = rebuild(cur);
            for (const auto& s : conjugators) {
                BraidWord s_word = detail::word_of_factor(n, s);
                NormalForm cand = normal_form(concat(concat(invert(s_word), cur_word), s_word));
                if (cand.inf() > target_inf || cand.sup() < target_sup) {
                    base = detail::summit_representative(cand, lim);
                    restarted = true;
                    break;
                }
                if (cand.inf() != target_inf || cand.sup() != target_sup) continue;
                auto key = cand.canonical_key();
                if (found.emplace(std::move(key), cand).second) {
                    if (found.size() > lim.max_set) throw ResourceLimit("super summit set exceeded the configured cap");
                    queue.push_back(std::move(cand));
                }
            }
        }
        if (restarted) continue;

        SummitSet out;
        out.achieved_inf = target_inf;
        out.achieved_sup = target_sup;
        out.elements.reserve(found.size());
        for (auto& [key, nf] : found) out.elements.push_back(std::move(nf));
        return out;
    }
}

/// Conjugacy decision via summit sets, with the exponent sum as a fast
/// negative screen.
inline bool are_conjugate(const BraidWord& u, const BraidWord& v, const SearchLimits& lim = {}) {
    if (u.strands() != v.strands()) throw StrandMismatch("conjugacy operands have different strand counts");
    if (exp_sum(u) != exp_sum(v)) return false;
    SummitSet su = super_summit_set(u, lim);
    NormalForm v_rep = detail::summit_representative(normal_form(v), lim);
    if (v_rep.inf() != su.achieved_inf || v_rep.sup() != su.achieved_sup) return false;
    return su.contains(v_rep);
}

/// Result of searching for conjugating powers of a fixed generator: no power
/// works, finitely many do, or every integer does (the commuting case).
struct PowerSearchResult {
    enum class Kind { none, finite, all_integers };

    Kind kind = Kind::none;
    std::set<std::int64_t> values;

    static PowerSearchResult none() { return {}; }
    static PowerSearchResult finite(std::set<std::int64_t> ks) {
        PowerSearchResult r;
        r.kind = Kind::finite;
        r.values = std::move(ks);
        return r;
    }
    static PowerSearchResult all_integers() {
        PowerSearchResult r;
        r.kind = Kind::all_integers;
        return r;
    }
};

namespace detail {

inline bool commutes_with(const BraidWord& a, const BraidWord& g) {
    return compare(concat(a, g), concat(g, a));
}

// One direction of the power-conjugacy enumeration: looks for j > 0 with
// g^-j a g^j = target. Walks conjugates until the inf bound is violated or a
// form recurs.
inline std::optional<std::int64_t> power_conjugation_walk(const NormalForm& start, const NormalForm& target,
                                                          const BraidWord& g, std::int64_t inf_floor,
                                                          const SearchLimits& lim) {
    std::unordered_set<std::string> seen{start.canonical_key()};
    NormalForm cur = start;
    const BraidWord ginv = invert(g);
    for (std::int64_t j = 1;; ++j) {
        NormalForm nxt = normal_form(concat(concat(ginv, rebuild(cur)), g));
        if (nxt == target) return j;
        if (nxt.inf() < inf_floor) return std::nullopt;
        if (!seen.insert(nxt.canonical_key()).second) return std::nullopt;
        if (seen.size() > lim.max_set) throw ResourceLimit("power-conjugacy walk exceeded the configured cap");
        cur = nxt;
    }
}

}  // namespace detail

/// Find every k with s_i^-k a s_i^k = b.
///
/// The exponent sum screens first. If a commutes with s_i the answer is all
/// integers or none. Otherwise conjugates are enumerated in each direction
/// until b appears, the inf drops below min(inf(a), inf(b)), or a normal form
/// recurs; by the centralizer property at most one k can exist.
inline PowerSearchResult generator_power_conjugacy_search(const BraidWord& a, const BraidWord& b, int i,
                                                          const SearchLimits& lim = {}) {
    if (a.strands() != b.strands()) throw StrandMismatch("search operands have different strand counts");
    const int n = a.strands();
    if (i < 1 || i >= n) throw IndexOutOfRange("generator index out of range");
    if (exp_sum(a) != exp_sum(b)) return PowerSearchResult::none();

    const BraidWord g(n, {i});
    if (detail::commutes_with(a, g))
        return compare(a, b) ? PowerSearchResult::all_integers() : PowerSearchResult::none();
    if (compare(a, b)) return PowerSearchResult::finite({0});

    NormalForm na = normal_form(a);
    NormalForm nb = normal_form(b);
    const std::int64_t inf_floor = std::min(na.inf(), nb.inf());
    if (auto j = detail::power_conjugation_walk(na, nb, g, inf_floor, lim))
        return PowerSearchResult::finite({*j});
    if (auto j = detail::power_conjugation_walk(nb, na, g, inf_floor, lim))
        return PowerSearchResult::finite({-*j});
    return PowerSearchResult::none();
}

/// Decide whether w is conjugate to a power of s_k^p and return that power.
/// The exponent sum fixes the only candidate c = exp(w)/p; at most one power
/// can match because distinct powers have distinct exponent sums.
inline std::optional<std::int64_t> conjugate_power_of_h_search(const BraidWord& w, int k, std::int64_t p,
                                                               const SearchLimits& lim = {}) {
    const int n = w.strands();
    if (k < 1 || k >= n) throw IndexOutOfRange("generator index out of range");
    if (p < 1) throw IndexOutOfRange("power must be positive");
    const std::int64_t e = exp_sum(w);
    if (e % p != 0) return std::nullopt;
    const std::int64_t c = e / p;
    BraidWord target = power(BraidWord(n, {k}), e);
    if (are_conjugate(w, target, lim)) return c;
    return std::nullopt;
}

/// Find integers (m, n) with s_k^(pm) u s_k^(pn) = v, assuming u does not
/// commute with s_k. The exponent sum fixes m+n; the power-conjugacy search
/// against d = v s_k^(-p(m+n)) fixes m when the found power is a multiple
/// of p.
inline std::optional<std::pair<std::int64_t, std::int64_t>> double_coset_search(const BraidWord& u,
                                                                                const BraidWord& v, int k,
                                                                                std::int64_t p,
                                                                                const SearchLimits& lim = {}) {
    if (u.strands() != v.strands()) throw StrandMismatch("search operands have different strand counts");
    const int n = u.strands();
    if (k < 1 || k >= n) throw IndexOutOfRange("generator index out of range");
    if (p < 1) throw IndexOutOfRange("power must be positive");
    const BraidWord g(n, {k});
    if (detail::commutes_with(u, g)) throw CommutingInput("double-coset search requires a non-commuting left element");

    const std::int64_t diff = exp_sum(v) - exp_sum(u);
    if (diff % p != 0) return std::nullopt;
    const std::int64_t mn = diff / p;

    const BraidWord d = concat(v, power(g, -p * mn));
    PowerSearchResult res = generator_power_conjugacy_search(u, d, k, lim);
    if (res.kind != PowerSearchResult::Kind::finite) return std::nullopt;
    for (std::int64_t t : res.values) {
        if (t % p != 0) continue;
        const std::int64_t m = -t / p;
        const std::int64_t nn = mn - m;
        if (compare(concat(concat(power(g, p * m), u), power(g, p * nn)), v)) return std::make_pair(m, nn);
    }
    return std::nullopt;
}

}  // namespace braidkit
