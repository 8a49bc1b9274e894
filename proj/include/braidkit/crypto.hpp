#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/rng.hpp"

namespace braidkit {

/// Commutator key agreement: public subgroups of the braid group given by
/// generator lists, private words built from `secret_len` generator factors.
struct AagParams {
    int n = 8;
    std::vector<BraidWord> gen_a;
    std::vector<BraidWord> gen_b;
    int secret_len = 6;
    std::uint64_t seed = 0;
};

/// Commuting-subgroups key agreement: private words of `secret_len` letters
/// drawn from the left block s_1..s_{l-1} (Alice) and the right block
/// s_{n-r+1}..s_{n-1} (Bob), around a public word x.
struct KlchkpParams {
    int n = 8;
    int l = 4;
    int r = 4;
    BraidWord x;
    int secret_len = 10;
    std::uint64_t seed = 0;
};

/// Everything an eavesdropper sees, plus both parties' derived keys.
struct ProtocolTranscript {
    std::vector<std::pair<std::string, NormalForm>> public_messages;
    NormalForm alice_key;
    NormalForm bob_key;

    bool agree() const { return alice_key == bob_key; }
};

enum class Party { alice, bob };

namespace detail {

// Stream layout per run seed: draw 0 seeds public-parameter sampling,
// draw 1 Alice's stream, draw 2 Bob's stream.
inline SplitMix64 party_stream(std::uint64_t seed, Party party) {
    SplitMix64 master(seed);
    std::uint64_t s0 = master.next();
    std::uint64_t s1 = master.next();
    std::uint64_t s2 = master.next();
    (void)s0;
    return SplitMix64(party == Party::alice ? s1 : s2);
}

inline SplitMix64 public_stream(std::uint64_t seed) {
    SplitMix64 master(seed);
    return SplitMix64(master.next());
}

// Uniform letter with index in [lo, hi], sign uniform, never cancelling the
// previous letter.
inline int random_letter(SplitMix64& rng, int lo, int hi, int prev) {
    for (;;) {
        int i = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
        int a = rng.below(2) ? i : -i;
        if (a != -prev) return a;
    }
}

inline BraidWord random_word(SplitMix64& rng, int n, int lo, int hi, int len) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(len));
    int prev = 0;
    for (int t = 0; t < len; ++t) {
        int a = random_letter(rng, lo, hi, prev);
        letters.push_back(a);
        prev = a;
    }
    return BraidWord(n, std::move(letters));
}

// (generator index, sign) sequence for a private subgroup word.
inline std::vector<std::pair<std::size_t, int>> factor_sequence(SplitMix64& rng, std::size_t num_gens,
                                                                int secret_len) {
    std::vector<std::pair<std::size_t, int>> out;
    out.reserve(static_cast<std::size_t>(secret_len));
    for (int t = 0; t < secret_len; ++t)
        out.emplace_back(rng.below(num_gens), rng.below(2) ? 1 : -1);
    return out;
}

inline BraidWord product_of_factors(const std::vector<BraidWord>& gens,
                                    const std::vector<std::pair<std::size_t, int>>& factors, int n) {
    BraidWord w = BraidWord::identity(n);
    for (auto [idx, sgn] : factors) w = concat(w, sgn > 0 ? gens[idx] : invert(gens[idx]));
    return w;
}

inline void validate(const AagParams& p) {
    if (p.n < 2) throw ParamError("strand count must be at least 2");
    if (p.gen_a.empty() || p.gen_b.empty()) throw ParamError("both public subgroups need generators");
    if (p.secret_len < 1) throw ParamError("secret length must be positive");
    for (const auto& g : p.gen_a)
        if (g.strands() != p.n) throw ParamError("subgroup generator has the wrong strand count");
    for (const auto& g : p.gen_b)
        if (g.strands() != p.n) throw ParamError("subgroup generator has the wrong strand count");
}

inline void validate(const KlchkpParams& p) {
    if (p.l < 2 || p.r < 2) throw ParamError("both blocks need at least 2 strands");
    if (p.l + p.r != p.n) throw ParamError("block sizes must add up to the strand count");
    if (p.x.strands() != p.n) throw ParamError("public word has the wrong strand count");
    if (p.secret_len < 1) throw ParamError("secret length must be positive");
}

}  // namespace detail

/// Private word for one party, deterministic in the passed stream state.
inline BraidWord sample_secret(SplitMix64& rng, const AagParams& params, Party party) {
    const auto& gens = party == Party::alice ? params.gen_a : params.gen_b;
    auto factors = detail::factor_sequence(rng, gens.size(), params.secret_len);
    return detail::product_of_factors(gens, factors, params.n);
}

/// Private word for one party: letters confined to the party's strand block.
inline BraidWord sample_secret(SplitMix64& rng, const KlchkpParams& params, Party party) {
    if (party == Party::alice) return detail::random_word(rng, params.n, 1, params.l - 1, params.secret_len);
    return detail::random_word(rng, params.n, params.n - params.r + 1, params.n - 1, params.secret_len);
}

/// Run the commutator protocol. Both parties derive the commutator of their
/// private words from the transmitted normal forms alone; the shared key is
/// its normal form.
inline ProtocolTranscript aag_run(const AagParams& params) {
    detail::validate(params);
    const int n = params.n;
    SplitMix64 alice_rng = detail::party_stream(params.seed, Party::alice);
    SplitMix64 bob_rng = detail::party_stream(params.seed, Party::bob);

    auto a_factors = detail::factor_sequence(alice_rng, params.gen_a.size(), params.secret_len);
    auto b_factors = detail::factor_sequence(bob_rng, params.gen_b.size(), params.secret_len);
    BraidWord a = detail::product_of_factors(params.gen_a, a_factors, n);
    BraidWord b = detail::product_of_factors(params.gen_b, b_factors, n);

    ProtocolTranscript t;
    std::vector<NormalForm> b_prime;  // Alice's transmissions: a g a^-1 for g in gen_b
    std::vector<NormalForm> a_prime;  // Bob's transmissions: b g b^-1 for g in gen_a
    for (std::size_t i = 0; i < params.gen_b.size(); ++i) {
        NormalForm nf = normal_form(concat(concat(a, params.gen_b[i]), invert(a)));
        t.public_messages.emplace_back("b'" + std::to_string(i + 1), nf);
        b_prime.push_back(std::move(nf));
    }
    for (std::size_t i = 0; i < params.gen_a.size(); ++i) {
        NormalForm nf = normal_form(concat(concat(b, params.gen_a[i]), invert(b)));
        t.public_messages.emplace_back("a'" + std::to_string(i + 1), nf);
        a_prime.push_back(std::move(nf));
    }

    // Alice reassembles b a b^-1 from Bob's transmissions along her own
    // factor sequence, then forms a (b a b^-1)^-1.
    BraidWord bab = BraidWord::identity(n);
    for (auto [idx, sgn] : a_factors) {
        BraidWord piece = rebuild(a_prime[idx]);
        bab = concat(bab, sgn > 0 ? piece : invert(piece));
    }
    t.alice_key = normal_form(concat(a, invert(bab)));

    // Bob reassembles a b a^-1 and forms (a b a^-1) b^-1.
    BraidWord aba = BraidWord::identity(n);
    for (auto [idx, sgn] : b_factors) {
        BraidWord piece = rebuild(b_prime[idx]);
        aba = concat(aba, sgn > 0 ? piece : invert(piece));
    }
    t.bob_key = normal_form(concat(aba, invert(b)));
    return t;
}

/// Run the commuting-subgroups protocol. Each party conjugates the public
/// word by its private word; the blocks commute, so both end at the same key.
inline ProtocolTranscript klchkp_run(const KlchkpParams& params) {
    detail::validate(params);
    SplitMix64 alice_rng = detail::party_stream(params.seed, Party::alice);
    SplitMix64 bob_rng = detail::party_stream(params.seed, Party::bob);
    BraidWord a = sample_secret(alice_rng, params, Party::alice);
    BraidWord b = sample_secret(bob_rng, params, Party::bob);

    ProtocolTranscript t;
    NormalForm axa = normal_form(concat(concat(a, params.x), invert(a)));
    NormalForm bxb = normal_form(concat(concat(b, params.x), invert(b)));
    t.public_messages.emplace_back("axa^-1", axa);
    t.public_messages.emplace_back("bxb^-1", bxb);
    t.alice_key = normal_form(concat(concat(a, rebuild(bxb)), invert(a)));
    t.bob_key = normal_form(concat(concat(b, rebuild(axa)), invert(b)));
    return t;
}

/// Desk-scale parameters: n=8, five public generators of length 5 per side,
/// six-factor secrets. Generator words come from the seed's public stream.
inline AagParams desk_aag_params(std::uint64_t seed) {
    AagParams p;
    p.n = 8;
    p.secret_len = 6;
    p.seed = seed;
    SplitMix64 rng = detail::public_stream(seed);
    for (int t = 0; t < 5; ++t) p.gen_a.push_back(detail::random_word(rng, p.n, 1, p.n - 1, 5));
    for (int t = 0; t < 5; ++t) p.gen_b.push_back(detail::random_word(rng, p.n, 1, p.n - 1, 5));
    return p;
}

/// Published-scale parameters: n=80, twenty generators of length 5..10 per
/// side, secrets of 100 factors. Expensive; not part of the fast suites.
inline AagParams paper_scale_aag_params(std::uint64_t seed) {
    AagParams p;
    p.n = 80;
    p.secret_len = 100;
    p.seed = seed;
    SplitMix64 rng = detail::public_stream(seed);
    for (int side = 0; side < 2; ++side) {
        auto& gens = side == 0 ? p.gen_a : p.gen_b;
        for (int t = 0; t < 20; ++t) {
            int len = 5 + static_cast<int>(rng.below(6));
            gens.push_back(detail::random_word(rng, p.n, 1, p.n - 1, len));
        }
    }
    return p;
}

/// Desk-scale parameters: n=8, l=r=4, public word of 20 letters, secrets of
/// 10 letters.
inline KlchkpParams desk_klchkp_params(std::uint64_t seed) {
    KlchkpParams p;
    p.n = 8;
    p.l = 4;
    p.r = 4;
    p.secret_len = 10;
    p.seed = seed;
    SplitMix64 rng = detail::public_stream(seed);
    p.x = detail::random_word(rng, p.n, 1, p.n - 1, 20);
    return p;
}

/// Published-scale parameters: n=45, blocks of 23 and 22 strands, public
/// word of 1450 letters, secrets of 360 letters. Expensive.
inline KlchkpParams paper_scale_klchkp_params(std::uint64_t seed) {
    KlchkpParams p;
    p.n = 45;
    p.l = 23;
    p.r = 22;
    p.secret_len = 360;
    p.seed = seed;
    SplitMix64 rng = detail::public_stream(seed);
    p.x = detail::random_word(rng, p.n, 1, p.n - 1, 1450);
    return p;
}

}  // namespace braidkit
