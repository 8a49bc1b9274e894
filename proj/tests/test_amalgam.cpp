#include <catch2/catch_amalgamated.hpp>

#include "braidkit/amalgam.hpp"
#include "braidkit/rng.hpp"
#include "support/test_support.hpp"

using namespace braidkit;

namespace {

const AmalgamPresentation kPres(3, 3, 1, 1, 2, 3);  // s_1^2 = t_1^3 over two copies of the 3-strand group

Syllable syl(Factor f, const std::string& text) { return Syllable{f, parse_word(text, kPres.strands(f))}; }

AmalgamWord word(std::vector<Syllable> sylls) {
    AmalgamWord w;
    w.syllables = std::move(sylls);
    return w;
}

AmalgamWord random_amalgam(SplitMix64& rng, int sylls) {
    AmalgamWord w;
    Factor f = rng.below(2) ? Factor::A : Factor::B;
    for (int t = 0; t < sylls; ++t) {
        w.syllables.push_back(
            Syllable{f, testsupport::random_word(rng, kPres.strands(f), 1 + static_cast<int>(rng.below(4)))});
        f = other_factor(f);
    }
    return w;
}

AmalgamWord relator() {
    return word({syl(Factor::A, "1 1"), syl(Factor::B, "-1 -1 -1")});
}

}  // namespace

TEST_CASE("presentation invariants are validated", "[amalgam]") {
    CHECK_THROWS_AS(AmalgamPresentation(1, 3, 1, 1, 1, 1), ParamError);
    CHECK_THROWS_AS(AmalgamPresentation(3, 3, 3, 1, 1, 1), ParamError);
    CHECK_THROWS_AS(AmalgamPresentation(3, 3, 1, 0, 1, 1), ParamError);
    CHECK_THROWS_AS(AmalgamPresentation(3, 3, 1, 1, 0, 1), ParamError);
    // degenerate but legal: same indices, same powers, same strand counts
    AmalgamPresentation degenerate(4, 4, 2, 2, 2, 2);
    CHECK(degenerate.strands(Factor::B) == 4);
}

TEST_CASE("normalize_syllables merges and drops", "[amalgam]") {
    CHECK(normalize_syllables(word({syl(Factor::A, "1"), syl(Factor::A, "-1")}), kPres).empty());

    AmalgamWord merged = normalize_syllables(word({syl(Factor::A, "1"), syl(Factor::B, "1"), syl(Factor::B, "2")}), kPres);
    REQUIRE(merged.length() == 2);
    CHECK(compare(merged.syllables[1].word, parse_word("1 2", 3)));

    AmalgamWord alternating =
        normalize_syllables(word({syl(Factor::A, "1 2 1"), syl(Factor::B, "1"), syl(Factor::A, "2 1 2")}), kPres);
    CHECK(alternating.length() == 3);

    // collapsing a middle syllable exposes a same-factor pair
    AmalgamWord collapse = normalize_syllables(
        word({syl(Factor::A, "1"), syl(Factor::B, "2"), syl(Factor::B, "-2"), syl(Factor::A, "2")}), kPres);
    REQUIRE(collapse.length() == 1);
    CHECK(compare(collapse.syllables[0].word, parse_word("1 2", 3)));

    CHECK_THROWS_AS(normalize_syllables(word({Syllable{Factor::A, BraidWord::identity(5)}}), kPres), StrandMismatch);
}

TEST_CASE("amalgam_reduce rewrites subgroup syllables", "[amalgam]") {
    AmalgamReduceResult r1 = amalgam_reduce(word({syl(Factor::A, "1 1"), syl(Factor::B, "-1 -1 -1")}), kPres);
    CHECK(r1.word.empty());
    REQUIRE(r1.h_power.has_value());
    CHECK(*r1.h_power == 0);

    AmalgamReduceResult r2 = amalgam_reduce(word({syl(Factor::A, "1 1 1 1"), syl(Factor::B, "-1 -1 -1")}), kPres);
    CHECK(r2.word.empty());
    REQUIRE(r2.h_power.has_value());
    CHECK(*r2.h_power == 1);

    AmalgamReduceResult r3 = amalgam_reduce(word({syl(Factor::A, "2"), syl(Factor::B, "2")}), kPres);
    CHECK_FALSE(r3.h_power.has_value());
    CHECK(r3.word.length() == 2);
}

TEST_CASE("word problem in the amalgam", "[amalgam]") {
    CHECK(amalgam_word_is_trivial(word({syl(Factor::A, "1 1"), syl(Factor::B, "-1 -1 -1")}), kPres));
    CHECK_FALSE(amalgam_word_is_trivial(word({syl(Factor::A, "1"), syl(Factor::B, "1")}), kPres));
    CHECK(amalgam_word_is_trivial(word({}), kPres));

    SplitMix64 rng(51);
    for (int t = 0; t < 60; ++t) {
        AmalgamWord w;
        int m = 1 + static_cast<int>(rng.below(3));
        for (int c = 0; c < m; ++c) {
            AmalgamWord g = random_amalgam(rng, 1 + static_cast<int>(rng.below(2)));
            AmalgamWord rel = rng.below(2) ? relator() : amalgam_invert(relator());
            w = amalgam_concat(w, amalgam_concat(amalgam_concat(g, rel), amalgam_invert(g)));
        }
        CHECK(amalgam_word_is_trivial(w, kPres));
    }
}

TEST_CASE("reduction is sound and leaves no subgroup syllable", "[amalgam]") {
    SplitMix64 rng(52);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 60; ++t) {
        AmalgamWord w = random_amalgam(rng, 2 + static_cast<int>(rng.below(5)));
        AmalgamReduceResult rr = amalgam_reduce(w, kPres);
        if (rr.word.length() < 2) continue;
        ++checked;
        CHECK_FALSE(amalgam_word_is_trivial(w, kPres));
        for (const Syllable& s : rr.word.syllables) CHECK_FALSE(gwp(kPres.h_word(s.factor), s.word).is_power());
        CHECK(amalgam_equal(w, rr.word, kPres));
        CHECK(amalgam_exp_invariant(w, kPres) == amalgam_exp_invariant(rr.word, kPres));
    }
    CHECK(checked == 60);
}

TEST_CASE("amalgam equality", "[amalgam]") {
    CHECK(amalgam_equal(word({syl(Factor::A, "1 1")}), word({syl(Factor::B, "1 1 1")}), kPres));
    CHECK_FALSE(amalgam_equal(word({syl(Factor::A, "2")}), word({syl(Factor::B, "2")}), kPres));

    SplitMix64 rng(53);
    for (int t = 0; t < 20; ++t) {
        AmalgamWord u = random_amalgam(rng, 1 + static_cast<int>(rng.below(4)));
        CHECK(amalgam_equal(u, u, kPres));
    }
}

TEST_CASE("cyclic reduction", "[amalgam]") {
    AmalgamWord w = word({syl(Factor::A, "1 2"), syl(Factor::B, "2"), syl(Factor::A, "2 -1")});
    AmalgamWord c = cyclically_reduce(w, kPres);
    REQUIRE(c.length() == 2);
    CHECK(c.syllables.front().factor != c.syllables.back().factor);
    CHECK(amalgam_exp_invariant(c, kPres) == amalgam_exp_invariant(w, kPres));

    AmalgamWord single = cyclically_reduce(word({syl(Factor::A, "1 2")}), kPres);
    CHECK(single.length() == 1);

    AmalgamWord pair = word({syl(Factor::A, "1")});
    pair.syllables.push_back(syl(Factor::B, "2"));
    CHECK(cyclically_reduce(pair, kPres).length() == 2);

    SplitMix64 rng(54);
    for (int t = 0; t < 40; ++t) {
        AmalgamWord u = random_amalgam(rng, 1 + static_cast<int>(rng.below(5)));
        AmalgamWord r = cyclically_reduce(u, kPres);
        CHECK(r.length() <= u.length());
        AmalgamWord again = cyclically_reduce(r, kPres);
        CHECK(again.length() == r.length());
        if (r.length() >= 2) CHECK(r.syllables.front().factor != r.syllables.back().factor);
        CHECK(amalgam_exp_invariant(r, kPres) == amalgam_exp_invariant(u, kPres));
    }
}

TEST_CASE("the amalgam exponent invariant", "[amalgam]") {
    CHECK(amalgam_exp_invariant(word({syl(Factor::A, "1 1")}), kPres) == 6);
    CHECK(amalgam_exp_invariant(word({syl(Factor::B, "1 1 1")}), kPres) == 6);
    CHECK(amalgam_exp_invariant(word({}), kPres) == 0);

    SplitMix64 rng(55);
    for (int t = 0; t < 30; ++t) {
        AmalgamWord u = random_amalgam(rng, 1 + static_cast<int>(rng.below(4)));
        AmalgamWord g = random_amalgam(rng, 1 + static_cast<int>(rng.below(2)));
        AmalgamWord conj = amalgam_concat(amalgam_concat(g, u), amalgam_invert(g));
        CHECK(amalgam_exp_invariant(conj, kPres) == amalgam_exp_invariant(u, kPres));
        CHECK(amalgam_exp_invariant(normalize_syllables(u, kPres), kPres) == amalgam_exp_invariant(u, kPres));
    }
}

TEST_CASE("conjugacy in the amalgam", "[amalgam]") {
    AmalgamConjugacyCertificate inH =
        amalgam_are_conjugate(word({syl(Factor::A, "1 1")}), word({syl(Factor::B, "1 1 1")}), kPres);
    CHECK(inH.verdict);
    REQUIRE(inH.witness.has_value());
    CHECK(inH.witness->second == 1);

    CHECK_FALSE(amalgam_are_conjugate(word({syl(Factor::A, "2")}), word({syl(Factor::B, "2")}), kPres).verdict);

    AmalgamWord u = word({syl(Factor::A, "1 2"), syl(Factor::B, "2 1")});
    AmalgamWord v = word({syl(Factor::B, "2 1"), syl(Factor::A, "1 2")});
    CHECK(amalgam_are_conjugate(u, v, kPres).verdict);

    SplitMix64 rng(56);
    for (int t = 0; t < 25; ++t) {
        AmalgamWord a = random_amalgam(rng, 1 + static_cast<int>(rng.below(4)));
        AmalgamWord g = random_amalgam(rng, 1 + static_cast<int>(rng.below(2)));
        AmalgamWord b = amalgam_concat(amalgam_concat(g, a), amalgam_invert(g));
        CHECK(amalgam_are_conjugate(a, b, kPres).verdict);
    }
    for (int t = 0; t < 25; ++t) {
        AmalgamWord a = random_amalgam(rng, 1 + static_cast<int>(rng.below(3)));
        AmalgamWord b = random_amalgam(rng, 1 + static_cast<int>(rng.below(3)));
        if (amalgam_exp_invariant(a, kPres) == amalgam_exp_invariant(b, kPres)) continue;
        CHECK_FALSE(amalgam_are_conjugate(a, b, kPres).verdict);
    }
}

TEST_CASE("amalgam word text format", "[amalgam]") {
    AmalgamWord w = parse_amalgam_word("A: 1 2 -1; B: 2 2", kPres);
    REQUIRE(w.length() == 2);
    CHECK(w.syllables[0].factor == Factor::A);
    CHECK(w.syllables[1].factor == Factor::B);
    CHECK(render_amalgam_word(w) == "A: 1 2 -1; B: 2 2");
    CHECK(parse_amalgam_word("   ", kPres).empty());

    CHECK_THROWS_AS(parse_amalgam_word("C: 1", kPres), ParseError);
    CHECK_THROWS_AS(parse_amalgam_word("A 1 2", kPres), ParseError);
    CHECK_THROWS_AS(parse_amalgam_word("A: 1;; B: 1", kPres), ParseError);
    CHECK_THROWS_AS(parse_amalgam_word("A: 7", kPres), IndexOutOfRange);
}
