#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

/// A word in the Artin generators of the braid group on `n` strands.
///
/// Letters are signed generator indices: +i stands for s_i, -i for its
/// inverse, 1 <= i <= n-1. The empty letter list is the identity braid.
/// All operations are pure; BraidWord is an immutable value in spirit.
class BraidWord {
public:
    BraidWord() = default;

    BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
        if (n_ < 2) throw IndexOutOfRange("strand count must be at least 2");
        for (int a : letters_) {
            int i = a < 0 ? -a : a;
            if (i < 1 || i >= n_) throw IndexOutOfRange("generator index out of range");
        }
    }

    static BraidWord identity(int n) { return BraidWord(n, {}); }

    int strands() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.n_ == b.n_ && a.letters_ == b.letters_;
    }

    /// Letters joined by spaces; identity renders as the empty string.
    std::string to_string() const {
        std::string s;
        for (std::size_t t = 0; t < letters_.size(); ++t) {
            if (t) s += ' ';
            s += std::to_string(letters_[t]);
        }
        return s;
    }

private:
    int n_ = 2;
    std::vector<int> letters_;
};

/// Band generator a_{ts}: strand t crosses over strand s in front of the
/// strands between them. Requires 1 <= s < t <= n.
struct BandGenerator {
    int t = 2;
    int s = 1;
};

/// Exponent-sum homomorphism to the integers: the sum of the letter signs.
inline std::int64_t exp_sum(const BraidWord& w) {
    std::int64_t e = 0;
    for (int a : w.letters()) e += a > 0 ? 1 : -1;
    return e;
}

/// Cancel adjacent mutually inverse letters until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.letters().size());
    for (int a : w.letters()) {
        if (!out.empty() && out.back() == -a)
            out.pop_back();
        else
            out.push_back(a);
    }
    return BraidWord(w.strands(), std::move(out));
}

/// Image under the homomorphism to the symmetric group sending s_i to the
/// transposition (i, i+1). Maps each starting position to its final position.
inline Permutation permutation_image(const BraidWord& w) {
    int n = w.strands();
    std::vector<int> pos(static_cast<std::size_t>(n));          // strand -> position
    std::vector<int> occupant(static_cast<std::size_t>(n));     // position -> strand
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = occupant[static_cast<std::size_t>(i)] = i;
    for (int a : w.letters()) {
        int i = (a < 0 ? -a : a) - 1;  // 0-based position of the crossing
        int s = occupant[static_cast<std::size_t>(i)];
        int t = occupant[static_cast<std::size_t>(i + 1)];
        occupant[static_cast<std::size_t>(i)] = t;
        occupant[static_cast<std::size_t>(i + 1)] = s;
        pos[static_cast<std::size_t>(s)] = i + 1;
        pos[static_cast<std::size_t>(t)] = i;
    }
    return Permutation::from_zero_based(pos);
}

/// Concatenate and freely reduce.
inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands()) throw StrandMismatch("concatenating words with different strand counts");
    std::vector<int> out;
    out.reserve(u.letters().size() + v.letters().size());
    for (int a : u.letters()) {
        if (!out.empty() && out.back() == -a)
            out.pop_back();
        else
            out.push_back(a);
    }
    for (int a : v.letters()) {
        if (!out.empty() && out.back() == -a)
            out.pop_back();
        else
            out.push_back(a);
    }
    return BraidWord(u.strands(), std::move(out));
}

inline BraidWord invert(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.letters().size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
    return BraidWord(w.strands(), std::move(out));
}

/// c-th power, with w^0 the identity and w^-c = (w^-1)^c.
inline BraidWord power(const BraidWord& w, std::int64_t c) {
    BraidWord base = c < 0 ? invert(w) : w;
    std::int64_t reps = c < 0 ? -c : c;
    BraidWord out = BraidWord::identity(w.strands());
    for (std::int64_t t = 0; t < reps; ++t) out = concat(out, base);
    return out;
}

/// Expand a band generator into an Artin word:
///   a_{ts} = (s_{t-1} ... s_{s+1}) s_s (s_{s+1}^-1 ... s_{t-1}^-1),
/// which degenerates to [s_s] when t = s+1.
inline BraidWord band_to_artin(const BandGenerator& g, int n) {
    if (g.s < 1 || g.s >= g.t || g.t > n) throw IndexOutOfRange("band generator indices must satisfy 1 <= s < t <= n");
    std::vector<int> out;
    for (int i = g.t - 1; i > g.s; --i) out.push_back(i);
    out.push_back(g.s);
    for (int i = g.s + 1; i <= g.t - 1; ++i) out.push_back(-i);
    return BraidWord(n, std::move(out));
}

namespace detail {

inline bool parse_int(const std::string& tok, long& value) {
    if (tok.empty()) return false;
    std::size_t k = 0;
    if (tok[0] == '+' || tok[0] == '-') k = 1;
    if (k == tok.size()) return false;
    for (std::size_t t = k; t < tok.size(); ++t)
        if (tok[t] < '0' || tok[t] > '9') return false;
    value = std::strtol(tok.c_str(), nullptr, 10);
    return true;
}

// Band tokens look like "a(3,1)" or "a(3,1)^-1".
inline bool parse_band_token(const std::string& tok, BandGenerator& g, bool& inverted) {
    if (tok.size() < 6 || tok[0] != 'a' || tok[1] != '(') return false;
    std::size_t close = tok.find(')');
    if (close == std::string::npos) return false;
    std::string inside = tok.substr(2, close - 2);
    std::size_t comma = inside.find(',');
    if (comma == std::string::npos) return false;
    long t = 0, s = 0;
    if (!parse_int(inside.substr(0, comma), t) || !parse_int(inside.substr(comma + 1), s)) return false;
    std::string rest = tok.substr(close + 1);
    if (rest.empty())
        inverted = false;
    else if (rest == "^-1")
        inverted = true;
    else
        return false;
    g.t = static_cast<int>(t);
    g.s = static_cast<int>(s);
    return true;
}

}  // namespace detail

/// Parse the canonical word text format: whitespace-separated signed integers
/// (k means s_k, -k its inverse) or band tokens "a(t,s)" / "a(t,s)^-1".
inline BraidWord parse_word(const std::string& text, int n) {
    if (n < 2) throw IndexOutOfRange("strand count must be at least 2");
    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    while (in >> tok) {
        long v = 0;
        BandGenerator g;
        bool inverted = false;
        if (detail::parse_int(tok, v)) {
            if (v == 0) throw ParseError("generator index 0 is not a letter");
            long i = v < 0 ? -v : v;
            if (i >= n) throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
            letters.push_back(static_cast<int>(v));
        } else if (detail::parse_band_token(tok, g, inverted)) {
            BraidWord expanded = band_to_artin(g, n);
            if (inverted) expanded = invert(expanded);
            for (int a : expanded.letters()) letters.push_back(a);
        } else {
            throw ParseError("malformed token '" + tok + "'");
        }
    }
    return BraidWord(n, std::move(letters));
}

}  // namespace braidkit
