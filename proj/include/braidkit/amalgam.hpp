#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/gwp.hpp"

namespace braidkit {

enum class Factor { A, B };

inline Factor other_factor(Factor f) { return f == Factor::A ? Factor::B : Factor::A; }

/// The cyclic amalgamation of two braid groups along s_k^p = t_j^r: factor A
/// is the braid group on n1 strands, factor B the one on n2 strands, and the
/// amalgamated subgroup H is generated by the identified power h.
struct AmalgamPresentation {
    int n1;
    int n2;
    int k;
    int j;
    std::int64_t p;
    std::int64_t r;

    AmalgamPresentation(int n1_, int n2_, int k_, int j_, std::int64_t p_, std::int64_t r_)
        : n1(n1_), n2(n2_), k(k_), j(j_), p(p_), r(r_) {
        if (n1 < 2 || n2 < 2) throw ParamError("strand counts must be at least 2");
        if (k < 1 || k > n1 - 1) throw ParamError("generator index k out of range");
        if (j < 1 || j > n2 - 1) throw ParamError("generator index j out of range");
        if (p < 1 || r < 1) throw ParamError("amalgamated powers must be positive");
    }

    int strands(Factor f) const { return f == Factor::A ? n1 : n2; }
    int generator_index(Factor f) const { return f == Factor::A ? k : j; }
    std::int64_t generator_power(Factor f) const { return f == Factor::A ? p : r; }

    BraidWord generator_word(Factor f) const { return BraidWord(strands(f), {generator_index(f)}); }

    /// The subgroup generator h written in factor f.
    BraidWord h_word(Factor f) const { return power(generator_word(f), generator_power(f)); }

    /// h^c written in factor f.
    BraidWord h_power_word(Factor f, std::int64_t c) const {
        return power(generator_word(f), generator_power(f) * c);
    }
};

/// A word in the amalgam: a list of syllables, each a braid word in one of
/// the two factors. Normalized words alternate factors and contain no
/// identity syllable.
struct Syllable {
    Factor factor = Factor::A;
    BraidWord word;
};

struct AmalgamWord {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    std::size_t length() const { return syllables.size(); }
};

namespace detail {

inline bool braid_is_trivial(const BraidWord& w) {
    NormalForm nf = normal_form(w);
    return nf.delta_power == 0 && nf.factors.empty();
}

inline void check_syllable(const Syllable& s, const AmalgamPresentation& pres) {
    if (s.word.strands() != pres.strands(s.factor))
        throw StrandMismatch("syllable strand count does not match its factor");
}

}  // namespace detail

/// Merge adjacent same-factor syllables and drop identity syllables until the
/// word alternates factors. Syllable words come out canonicalized.
inline AmalgamWord normalize_syllables(const AmalgamWord& w, const AmalgamPresentation& pres) {
    std::vector<Syllable> out;
    for (const Syllable& s : w.syllables) {
        detail::check_syllable(s, pres);
        if (detail::braid_is_trivial(s.word)) continue;
        if (!out.empty() && out.back().factor == s.factor) {
            out.back().word = concat(out.back().word, s.word);
            if (detail::braid_is_trivial(out.back().word)) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    for (Syllable& s : out) s.word = rebuild(normal_form(s.word));
    // popping a merged identity can expose same-factor neighbors; repeat
    for (std::size_t t = 1; t < out.size(); ++t) {
        if (out[t - 1].factor == out[t].factor) {
            AmalgamWord again;
            again.syllables = std::move(out);
            return normalize_syllables(again, pres);
        }
    }
    AmalgamWord res;
    res.syllables = std::move(out);
    return res;
}

/// Result of the reduction scan: either a reduced word with no syllable in
/// the amalgamated subgroup, or, when everything collapses into H, the empty
/// word together with the residual power of h.
struct AmalgamReduceResult {
    AmalgamWord word;
    std::optional<std::int64_t> h_power;
};

/// Scan the word for syllables lying in H (decided by the cyclic-subgroup
/// membership routine), rewrite each such syllable in the opposite factor,
/// and collapse with its neighbors until no syllable lies in H. A word that
/// shrinks to a lone H power terminates with that power reported instead of
/// bouncing between the factors forever.
inline AmalgamReduceResult amalgam_reduce(const AmalgamWord& w, const AmalgamPresentation& pres) {
    AmalgamWord norm = normalize_syllables(w, pres);
    std::vector<Syllable> out;
    std::deque<Syllable> work(norm.syllables.begin(), norm.syllables.end());

    auto prepend_to_work = [&](Factor f, BraidWord word) {
        for (;;) {
            NormalForm nf = normal_form(word);
            if (!(nf.delta_power == 0 && nf.factors.empty())) {
                work.push_front(Syllable{f, rebuild(nf)});
                return;
            }
            // the merged syllable vanished: its neighbors share a factor now
            if (!out.empty() && !work.empty() && out.back().factor == work.front().factor) {
                f = out.back().factor;
                word = concat(out.back().word, work.front().word);
                out.pop_back();
                work.pop_front();
                continue;
            }
            return;
        }
    };

    while (!work.empty()) {
        Syllable s = std::move(work.front());
        work.pop_front();
        GwpResult membership = gwp(pres.h_word(s.factor), s.word);
        if (!membership.is_power()) {
            out.push_back(std::move(s));
            continue;
        }
        const std::int64_t c = *membership.power;
        if (out.empty() && work.empty()) return {AmalgamWord{}, c};
        const Factor of = other_factor(s.factor);
        BraidWord merged = pres.h_power_word(of, c);
        if (!out.empty()) {
            merged = concat(out.back().word, merged);
            out.pop_back();
        }
        if (!work.empty()) {
            merged = concat(merged, work.front().word);
            work.pop_front();
        }
        prepend_to_work(of, std::move(merged));
    }

    if (out.empty()) return {AmalgamWord{}, 0};
    AmalgamWord res;
    res.syllables = std::move(out);
    return {std::move(res), std::nullopt};
}

/// Word problem in the amalgam: w = 1 iff reduction collapses to the empty
/// word with residual power zero.
inline bool amalgam_word_is_trivial(const AmalgamWord& w, const AmalgamPresentation& pres) {
    AmalgamReduceResult rr = amalgam_reduce(w, pres);
    return rr.word.empty() && rr.h_power && *rr.h_power == 0;
}

inline AmalgamWord amalgam_invert(const AmalgamWord& w) {
    AmalgamWord out;
    out.syllables.reserve(w.syllables.size());
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        out.syllables.push_back(Syllable{it->factor, invert(it->word)});
    return out;
}

inline AmalgamWord amalgam_concat(const AmalgamWord& u, const AmalgamWord& v) {
    AmalgamWord out;
    out.syllables.reserve(u.syllables.size() + v.syllables.size());
    out.syllables.insert(out.syllables.end(), u.syllables.begin(), u.syllables.end());
    out.syllables.insert(out.syllables.end(), v.syllables.begin(), v.syllables.end());
    return out;
}

/// u = v iff u v^-1 = 1.
inline bool amalgam_equal(const AmalgamWord& u, const AmalgamWord& v, const AmalgamPresentation& pres) {
    return amalgam_word_is_trivial(amalgam_concat(u, amalgam_invert(v)), pres);
}

/// Reduce and fold a residual H power back into a single factor-A syllable,
/// so every element gets a word form again.
inline AmalgamWord reduced_word_form(const AmalgamWord& w, const AmalgamPresentation& pres) {
    AmalgamReduceResult rr = amalgam_reduce(w, pres);
    if (!rr.h_power) return rr.word;
    if (*rr.h_power == 0) return AmalgamWord{};
    AmalgamWord out;
    out.syllables.push_back(Syllable{Factor::A, pres.h_power_word(Factor::A, *rr.h_power)});
    return out;
}

/// Conjugate w into a cyclically reduced form: syllable length at most 1, or
/// first and last syllables in different factors. Conjugation is by the last
/// syllable, repeated through re-reduction as merges collapse.
inline AmalgamWord cyclically_reduce(const AmalgamWord& w, const AmalgamPresentation& pres) {
    AmalgamWord cur = reduced_word_form(w, pres);
    while (cur.syllables.size() >= 2 && cur.syllables.front().factor == cur.syllables.back().factor) {
        AmalgamWord next;
        next.syllables.reserve(cur.syllables.size() - 1);
        Syllable first = cur.syllables.front();
        first.word = concat(cur.syllables.back().word, first.word);
        next.syllables.push_back(std::move(first));
        next.syllables.insert(next.syllables.end(), cur.syllables.begin() + 1, cur.syllables.end() - 1);
        cur = reduced_word_form(next, pres);
    }
    return cur;
}

/// Homomorphism to the integers sending every factor-A generator to r and
/// every factor-B generator to p; the amalgamating relation maps to
/// pr - rp = 0, so the value is invariant under all relations and under
/// conjugation. A cheap negative certificate for conjugacy.
inline std::int64_t amalgam_exp_invariant(const AmalgamWord& w, const AmalgamPresentation& pres) {
    std::int64_t total = 0;
    for (const Syllable& s : w.syllables) {
        detail::check_syllable(s, pres);
        total += (s.factor == Factor::A ? pres.r : pres.p) * exp_sum(s.word);
    }
    return total;
}

/// Conjugacy verdict plus, for single-syllable words settled through the
/// amalgamated subgroup, the witnessing power of h.
struct AmalgamConjugacyCertificate {
    bool verdict = false;
    std::optional<std::pair<int, std::int64_t>> witness;  // (cyclic shift, power of h)
};

namespace detail {

// Decide whether h^m a h^-m = b for some integer m, for aligned cyclically
// reduced syllable sequences of equal length and equal factor pattern.
inline std::optional<std::int64_t> conjugate_by_h_power(const std::vector<Syllable>& a,
                                                        const std::vector<Syllable>& b,
                                                        const AmalgamPresentation& pres,
                                                        const SearchLimits& lim) {
    const Factor f = a.front().factor;
    const int gi = pres.generator_index(f);
    const std::int64_t pw = pres.generator_power(f);
    const BraidWord& a1 = a.front().word;
    const BraidWord& b1 = b.front().word;

    if (a.size() == 1) {
        PowerSearchResult res = generator_power_conjugacy_search(a1, b1, gi, lim);
        if (res.kind == PowerSearchResult::Kind::all_integers) return 0;
        if (res.kind == PowerSearchResult::Kind::none) return std::nullopt;
        for (std::int64_t t : res.values)
            if (t % pw == 0) return -t / pw;
        return std::nullopt;
    }

    const BraidWord gen = pres.generator_word(f);
    if (detail::commutes_with(a1, gen)) {
        // a1 = b1 h^c forces the H power c; fold it into the next syllable
        GwpResult g = gwp(pres.h_word(f), concat(invert(b1), a1));
        if (!g.is_power()) return std::nullopt;
        const std::int64_t c = *g.power;
        std::vector<Syllable> a_tail(a.begin() + 1, a.end());
        std::vector<Syllable> b_tail(b.begin() + 1, b.end());
        a_tail.front().word = concat(pres.h_power_word(a_tail.front().factor, c), a_tail.front().word);
        return conjugate_by_h_power(a_tail, b_tail, pres, lim);
    }

    auto dc = double_coset_search(a1, b1, gi, pw, lim);
    if (!dc) return std::nullopt;
    const std::int64_t m = dc->first;
    AmalgamWord lhs;
    lhs.syllables.push_back(Syllable{f, pres.h_power_word(f, m)});
    lhs.syllables.insert(lhs.syllables.end(), a.begin(), a.end());
    lhs.syllables.push_back(Syllable{f, pres.h_power_word(f, -m)});
    AmalgamWord rhs;
    rhs.syllables = b;
    if (amalgam_equal(lhs, rhs, pres)) return m;
    return std::nullopt;
}

inline std::vector<Syllable> rotate_syllables(const std::vector<Syllable>& s, std::size_t by) {
    std::vector<Syllable> out;
    out.reserve(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) out.push_back(s[(t + by) % s.size()]);
    return out;
}

}  // namespace detail

/// Conjugacy decision in the amalgam. Inputs are cyclically reduced first;
/// the exponent invariant and the syllable length screen negatives; length-1
/// words are settled inside the factors or through H; longer words go
/// through the cyclic-permutation alignments, each decided by the
/// double-coset and power-conjugacy searches.
inline AmalgamConjugacyCertificate amalgam_are_conjugate(const AmalgamWord& u, const AmalgamWord& v,
                                                         const AmalgamPresentation& pres,
                                                         const SearchLimits& lim = {}) {
    AmalgamWord cu = cyclically_reduce(u, pres);
    AmalgamWord cv = cyclically_reduce(v, pres);

    if (amalgam_exp_invariant(cu, pres) != amalgam_exp_invariant(cv, pres)) return {false, std::nullopt};
    if (cu.length() != cv.length()) return {false, std::nullopt};
    if (cu.empty()) return {true, std::nullopt};

    if (cu.length() == 1) {
        const Syllable& su = cu.syllables.front();
        const Syllable& sv = cv.syllables.front();
        if (su.factor == sv.factor) {
            if (!are_conjugate(su.word, sv.word, lim)) return {false, std::nullopt};
            auto m = conjugate_power_of_h_search(su.word, pres.generator_index(su.factor),
                                                 pres.generator_power(su.factor), lim);
            if (m) return {true, std::make_pair(0, *m)};
            return {true, std::nullopt};
        }
        auto mu = conjugate_power_of_h_search(su.word, pres.generator_index(su.factor),
                                              pres.generator_power(su.factor), lim);
        if (!mu) return {false, std::nullopt};
        auto mv = conjugate_power_of_h_search(sv.word, pres.generator_index(sv.factor),
                                              pres.generator_power(sv.factor), lim);
        if (!mv || *mu != *mv) return {false, std::nullopt};
        return {true, std::make_pair(0, *mu)};
    }

    const std::size_t len = cu.length();
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Syllable> a = detail::rotate_syllables(cu.syllables, i);
        for (std::size_t jj = 0; jj < len; ++jj) {
            std::vector<Syllable> b = detail::rotate_syllables(cv.syllables, jj);
            bool aligned = true;
            for (std::size_t t = 0; t < len && aligned; ++t)
                if (a[t].factor != b[t].factor) aligned = false;
            if (!aligned) continue;
            if (detail::conjugate_by_h_power(a, b, pres, lim)) return {true, std::nullopt};
        }
    }
    return {false, std::nullopt};
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parse the amalgam word format: syllables separated by ";", each
/// "A: <word>" or "B: <word>" in the braid word text format.
inline AmalgamWord parse_amalgam_word(const std::string& text, const AmalgamPresentation& pres) {
    AmalgamWord out;
    if (detail::trim(text).empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        std::string body = detail::trim(part);
        if (body.empty()) throw ParseError("empty syllable in amalgam word");
        std::size_t colon = body.find(':');
        if (colon == std::string::npos) throw ParseError("syllable is missing its factor tag");
        std::string tag = detail::trim(body.substr(0, colon));
        Factor f;
        if (tag == "A")
            f = Factor::A;
        else if (tag == "B")
            f = Factor::B;
        else
            throw ParseError("factor tag must be A or B, got '" + tag + "'");
        BraidWord wd = parse_word(body.substr(colon + 1), pres.strands(f));
        out.syllables.push_back(Syllable{f, std::move(wd)});
        if (end == std::string::npos) break;
    }
    return out;
}

inline std::string render_amalgam_word(const AmalgamWord& w) {
    std::string s;
    for (std::size_t t = 0; t < w.syllables.size(); ++t) {
        if (t) s += "; ";
        s += w.syllables[t].factor == Factor::A ? "A: " : "B: ";
        s += w.syllables[t].word.to_string();
    }
    return s;
}

}  // namespace braidkit
