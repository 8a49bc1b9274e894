#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidkit/amalgam.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/crypto.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/gwp.hpp"

namespace braidkit {

namespace cli_detail {

inline nlohmann::json transcript_json(const ProtocolTranscript& t) {
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& [label, nf] : t.public_messages)
        msgs.push_back({{"label", label}, {"nf", nf.render()}});
    return nlohmann::json{{"messages", msgs},
                          {"alice_key", t.alice_key.render()},
                          {"bob_key", t.bob_key.render()},
                          {"agree", t.agree()}};
}

}  // namespace cli_detail

/// Dispatch one CLI invocation. Exit codes: 0 computed and any predicate
/// holds, 1 computed with a false predicate, 2 usage or parse error,
/// 3 resource limit exceeded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision procedures and key-agreement simulations for braid groups"};
    app.require_subcommand(1);
    int result = 0;

    // shared option storage
    int n = 3;
    std::string word_text, word_text2, x_text, y_text, u_text, v_text;
    int gen_k = 1, gen_j = 1;
    std::int64_t pow_p = 1, pow_r = 1;
    int n1 = 3, n2 = 3;
    bool json_out = false;
    bool paper_scale = false;
    std::uint64_t seed = 0;
    std::size_t limit = SearchLimits{}.max_set;

    auto* nf_cmd = app.add_subcommand("nf", "left canonical form of a word");
    nf_cmd->add_option("-n", n, "strand count")->required();
    nf_cmd->add_option("word", word_text, "braid word")->required();
    nf_cmd->add_flag("--json", json_out, "emit JSON");
    nf_cmd->callback([&] {
        NormalForm nf = normal_form(parse_word(word_text, n));
        if (json_out) {
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& f : nf.factors) factors.push_back(f.one_based_images());
            out << nlohmann::json{{"n", nf.n}, {"r", nf.delta_power}, {"factors", factors}, {"text", nf.render()}}.dump()
                << "\n";
        } else {
            out << nf.render() << "\n";
        }
    });

    auto* eq_cmd = app.add_subcommand("eq", "decide equality of two words");
    eq_cmd->add_option("-n", n, "strand count")->required();
    eq_cmd->add_option("u", word_text, "first word")->required();
    eq_cmd->add_option("v", word_text2, "second word")->required();
    eq_cmd->add_flag("--json", json_out, "emit JSON");
    eq_cmd->callback([&] {
        bool equal = compare(parse_word(word_text, n), parse_word(word_text2, n));
        if (json_out)
            out << nlohmann::json{{"equal", equal}}.dump() << "\n";
        else
            out << (equal ? "equal" : "not equal") << "\n";
        result = equal ? 0 : 1;
    });

    auto* exp_cmd = app.add_subcommand("exp", "exponent sum of a word");
    exp_cmd->add_option("-n", n, "strand count")->required();
    exp_cmd->add_option("word", word_text, "braid word")->required();
    exp_cmd->add_flag("--json", json_out, "emit JSON");
    exp_cmd->callback([&] {
        std::int64_t e = exp_sum(parse_word(word_text, n));
        if (json_out)
            out << nlohmann::json{{"exp", e}}.dump() << "\n";
        else
            out << e << "\n";
    });

    auto* perm_cmd = app.add_subcommand("perm", "permutation image of a word");
    perm_cmd->add_option("-n", n, "strand count")->required();
    perm_cmd->add_option("word", word_text, "braid word")->required();
    perm_cmd->add_flag("--json", json_out, "emit JSON");
    perm_cmd->callback([&] {
        Permutation p = permutation_image(parse_word(word_text, n));
        if (json_out)
            out << nlohmann::json{{"images", p.one_based_images()}}.dump() << "\n";
        else
            out << p.to_string() << "\n";
    });

    auto* gwp_cmd = app.add_subcommand("gwp", "is Y a power of X (exp(X) != 0)");
    gwp_cmd->add_option("-n", n, "strand count")->required();
    gwp_cmd->add_option("--x", x_text, "cyclic subgroup generator")->required();
    gwp_cmd->add_option("--y", y_text, "candidate member")->required();
    gwp_cmd->add_flag("--json", json_out, "emit JSON");
    gwp_cmd->callback([&] {
        GwpResult r = gwp(parse_word(x_text, n), parse_word(y_text, n));
        if (json_out)
            out << nlohmann::json{{"power", r.power ? nlohmann::json(*r.power) : nlohmann::json(nullptr)}}.dump()
                << "\n";
        else if (r.power)
            out << "power c=" << *r.power << "\n";
        else
            out << "not a power\n";
        result = r.power ? 0 : 1;
    });

    auto* conj_cmd = app.add_subcommand("conj", "decide conjugacy of two words");
    conj_cmd->add_option("-n", n, "strand count")->required();
    conj_cmd->add_option("u", word_text, "first word")->required();
    conj_cmd->add_option("v", word_text2, "second word")->required();
    conj_cmd->add_option("--limit", limit, "search set cap");
    conj_cmd->add_flag("--json", json_out, "emit JSON");
    conj_cmd->callback([&] {
        bool c = are_conjugate(parse_word(word_text, n), parse_word(word_text2, n), SearchLimits{limit});
        if (json_out)
            out << nlohmann::json{{"conjugate", c}}.dump() << "\n";
        else
            out << (c ? "conjugate" : "not conjugate") << "\n";
        result = c ? 0 : 1;
    });

    auto* cp_cmd = app.add_subcommand("conj-power", "is the word conjugate to a power of s_k^p");
    cp_cmd->add_option("-n", n, "strand count")->required();
    cp_cmd->add_option("--k", gen_k, "generator index")->required();
    cp_cmd->add_option("--p", pow_p, "generator power")->required();
    cp_cmd->add_option("word", word_text, "braid word")->required();
    cp_cmd->add_option("--limit", limit, "search set cap");
    cp_cmd->add_flag("--json", json_out, "emit JSON");
    cp_cmd->callback([&] {
        auto c = conjugate_power_of_h_search(parse_word(word_text, n), gen_k, pow_p, SearchLimits{limit});
        if (json_out)
            out << nlohmann::json{{"c", c ? nlohmann::json(*c) : nlohmann::json(nullptr)}}.dump() << "\n";
        else if (c)
            out << "c=" << *c << "\n";
        else
            out << "none\n";
        result = c ? 0 : 1;
    });

    auto* dc_cmd = app.add_subcommand("double-coset", "find (m, n) with s_k^(pm) u s_k^(pn) = v");
    dc_cmd->add_option("-n", n, "strand count")->required();
    dc_cmd->add_option("--k", gen_k, "generator index")->required();
    dc_cmd->add_option("--p", pow_p, "generator power")->required();
    dc_cmd->add_option("--u", u_text, "left word")->required();
    dc_cmd->add_option("--v", v_text, "right word")->required();
    dc_cmd->add_option("--limit", limit, "search set cap");
    dc_cmd->add_flag("--json", json_out, "emit JSON");
    dc_cmd->callback([&] {
        auto r = double_coset_search(parse_word(u_text, n), parse_word(v_text, n), gen_k, pow_p, SearchLimits{limit});
        if (json_out) {
            if (r)
                out << nlohmann::json{{"m", r->first}, {"n", r->second}}.dump() << "\n";
            else
                out << nlohmann::json(nullptr).dump() << "\n";
        } else if (r) {
            out << "m=" << r->first << " n=" << r->second << "\n";
        } else {
            out << "none\n";
        }
        result = r ? 0 : 1;
    });

    auto* sss_cmd = app.add_subcommand("sss", "super summit set of a word");
    sss_cmd->add_option("-n", n, "strand count")->required();
    sss_cmd->add_option("word", word_text, "braid word")->required();
    sss_cmd->add_option("--limit", limit, "search set cap");
    sss_cmd->add_flag("--json", json_out, "emit JSON");
    sss_cmd->callback([&] {
        SummitSet s = super_summit_set(parse_word(word_text, n), SearchLimits{limit});
        if (json_out) {
            nlohmann::json elems = nlohmann::json::array();
            for (const auto& e : s.elements) elems.push_back(e.render());
            out << nlohmann::json{{"inf", s.achieved_inf}, {"sup", s.achieved_sup}, {"elements", elems}}.dump()
                << "\n";
        } else {
            out << "inf=" << s.achieved_inf << " sup=" << s.achieved_sup << " count=" << s.elements.size() << "\n";
            for (const auto& e : s.elements) out << e.render() << "\n";
        }
    });

    auto add_presentation_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n1", n1, "strand count of factor A")->required();
        cmd->add_option("--n2", n2, "strand count of factor B")->required();
        cmd->add_option("--k", gen_k, "A generator index")->required();
        cmd->add_option("--j", gen_j, "B generator index")->required();
        cmd->add_option("--p", pow_p, "A generator power")->required();
        cmd->add_option("--r", pow_r, "B generator power")->required();
    };

    auto* awp_cmd = app.add_subcommand("amalgam-wp", "word problem in the cyclic amalgamation");
    add_presentation_flags(awp_cmd);
    awp_cmd->add_option("word", word_text, "amalgam word, e.g. \"A: 1 2; B: -1\"")->required();
    awp_cmd->add_flag("--json", json_out, "emit JSON");
    awp_cmd->callback([&] {
        AmalgamPresentation pres(n1, n2, gen_k, gen_j, pow_p, pow_r);
        AmalgamWord w = parse_amalgam_word(word_text, pres);
        AmalgamReduceResult rr = amalgam_reduce(w, pres);
        bool trivial = rr.word.empty() && rr.h_power && *rr.h_power == 0;
        if (json_out) {
            nlohmann::json j{{"trivial", trivial}, {"reduced", render_amalgam_word(rr.word)}};
            j["h_power"] = rr.h_power ? nlohmann::json(*rr.h_power) : nlohmann::json(nullptr);
            out << j.dump() << "\n";
        } else if (trivial) {
            out << "trivial\n";
        } else if (rr.h_power) {
            out << "nontrivial (equals h^" << *rr.h_power << ")\n";
        } else {
            out << "nontrivial (reduced: " << render_amalgam_word(rr.word) << ")\n";
        }
        result = trivial ? 0 : 1;
    });

    auto* aconj_cmd = app.add_subcommand("amalgam-conj", "conjugacy in the cyclic amalgamation");
    add_presentation_flags(aconj_cmd);
    aconj_cmd->add_option("u", u_text, "first amalgam word")->required();
    aconj_cmd->add_option("v", v_text, "second amalgam word")->required();
    aconj_cmd->add_option("--limit", limit, "search set cap");
    aconj_cmd->add_flag("--json", json_out, "emit JSON");
    aconj_cmd->callback([&] {
        AmalgamPresentation pres(n1, n2, gen_k, gen_j, pow_p, pow_r);
        auto cert = amalgam_are_conjugate(parse_amalgam_word(u_text, pres), parse_amalgam_word(v_text, pres), pres,
                                          SearchLimits{limit});
        if (json_out) {
            nlohmann::json j{{"conjugate", cert.verdict}};
            if (cert.witness)
                j["witness"] = nlohmann::json{{"shift", cert.witness->first}, {"m", cert.witness->second}};
            else
                j["witness"] = nullptr;
            out << j.dump() << "\n";
        } else if (cert.verdict && cert.witness) {
            out << "conjugate (witness shift=" << cert.witness->first << " m=" << cert.witness->second << ")\n";
        } else {
            out << (cert.verdict ? "conjugate" : "not conjugate") << "\n";
        }
        result = cert.verdict ? 0 : 1;
    });

    auto* aag_cmd = app.add_subcommand("aag", "simulate the commutator key agreement");
    aag_cmd->add_option("--seed", seed, "run seed")->required();
    aag_cmd->add_flag("--paper-scale", paper_scale, "published parameter sizes (slow)");
    aag_cmd->callback([&] {
        AagParams p = paper_scale ? paper_scale_aag_params(seed) : desk_aag_params(seed);
        ProtocolTranscript t = aag_run(p);
        out << cli_detail::transcript_json(t).dump() << "\n";
        result = t.agree() ? 0 : 1;
    });

    auto* kl_cmd = app.add_subcommand("klchkp", "simulate the commuting-subgroups key agreement");
    kl_cmd->add_option("--seed", seed, "run seed")->required();
    kl_cmd->add_flag("--paper-scale", paper_scale, "published parameter sizes (slow)");
    kl_cmd->callback([&] {
        KlchkpParams p = paper_scale ? paper_scale_klchkp_params(seed) : desk_klchkp_params(seed);
        ProtocolTranscript t = klchkp_run(p);
        out << cli_detail::transcript_json(t).dump() << "\n";
        result = t.agree() ? 0 : 1;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return result;
}

}  // namespace braidkit
