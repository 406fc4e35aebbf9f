#include "owb/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "owb/cobuchi.hpp"
#include "owb/game.hpp"
#include "owb/hd.hpp"
#include "owb/io.hpp"
#include "owb/resolver.hpp"
#include "owb/threedfa.hpp"
#include "owb/zoo.hpp"

namespace owb {

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = schema;
    j["tool"] = tool;
    j["seed"] = seed;
    j["all_pass"] = all_pass();
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json x;
        x["id"] = e.id;
        x["verdict"] = e.pass ? "pass" : "fail";
        x["expected"] = e.expected;
        x["observed"] = e.observed;
        x["witnesses"] = e.witnesses;
        x["timing_ms"] = e.ms;
        j["results"].push_back(x);
    }
    return j.dump(2);
}

namespace {

struct Ctx {
    uint64_t seed;
    std::ostringstream obs;
    std::vector<std::string> witnesses;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            obs << "FAILED: " << what << "; ";
        } else {
            obs << what << "; ";
        }
    }
};

// ---- helpers shared by several drivers ----------------------------------

std::vector<Lasso> strong_case_witnesses(const Automaton& astrong, const std::string& target) {
    const Alphabet& s = astrong.alphabet;
    auto w = [&](const std::string& t) { return *parse_lasso(s, t); };
    if (target == "Y")
        return {w(":y")};
    if (target.rfind("p", 0) == 0) { // p_g or p'_g
        char g = target.back();
        std::string beta = g == 'a' ? "b" : "a";
        return {w(":y x" + beta + " x" + beta + " y")};
    }
    char g = target.back();
    return {w(std::string(":x") + g + " y")};
}

// Generates a lasso inside the main reference language; the caller re-checks
// membership before use.
Lasso sample_main_member(std::mt19937_64& rng) {
    Alphabet sigma = alphabet_main();
    auto letter = [&](const std::string& n) { return *sigma.index(n); };
    auto seg_word = [&](int j) {
        std::vector<int> w;
        switch (rng() % 3) {
        case 0:
            break;
        case 1:
            w.push_back(letter("y"));
            break;
        default:
            w.push_back(letter("b"));
            break;
        }
        if (j <= 3) {
            w.push_back(letter("c"));
            w.push_back(letter(std::to_string(j)));
        } else {
            w.push_back(letter("a"));
            if (rng() % 2)
                w.push_back(letter("a"));
            w.push_back(letter("b"));
            w.push_back(letter(std::to_string(j)));
        }
        return w;
    };
    auto junk = [&](int maxlen) {
        std::vector<int> w;
        int len = static_cast<int>(rng() % (maxlen + 1));
        for (int i = 0; i < len; ++i)
            w.push_back(static_cast<int>(rng() % sigma.size()));
        return w;
    };
    int alpha = 1 + static_cast<int>(rng() % 6);
    int beta = 1 + static_cast<int>(rng() % 6);
    while (beta == alpha)
        beta = 1 + static_cast<int>(rng() % 6);
    std::vector<int> v = junk(4);
    if (rng() % 3 == 0) {
        v.push_back(letter("r" + std::to_string(alpha)));
    } else {
        auto sa = seg_word(alpha);
        v.insert(v.end(), sa.begin(), sa.end());
    }
    for (int k = 0; k < 2; ++k) {
        auto sb = seg_word(beta);
        v.insert(v.end(), sb.begin(), sb.end());
    }
    auto j2 = junk(3);
    v.insert(v.end(), j2.begin(), j2.end());
    v.push_back(letter("y"));
    return Lasso(junk(5), v).canonical();
}

// ---- individual drivers ---------------------------------------------------

void drive_zoo_invariants(Ctx& c) {
    for (const auto& e : zoo_entries()) {
        Automaton a = e.build();
        c.require(validate(a).ok(), e.key + " validates");
        c.require(a.state_count() == e.expect.state_count,
                  e.key + " has " + std::to_string(e.expect.state_count) + " states");
        if (e.expect.deterministic)
            c.require(is_deterministic(a) == *e.expect.deterministic,
                      e.key + " determinism as expected");
        if (e.expect.normal && a.acceptance == Acceptance::Buchi)
            c.require(is_normal(a) == *e.expect.normal, e.key + " normality as expected");
        if (e.expect.nondet_slots) {
            std::set<std::pair<std::string, std::string>> expect(e.expect.nondet_slots->begin(),
                                                                 e.expect.nondet_slots->end());
            std::set<std::pair<std::string, std::string>> got;
            for (int s = 0; s < a.state_count(); ++s)
                for (int l = 0; l < a.alphabet.size(); ++l)
                    if (a.out(s, l).size() > 1)
                        got.insert({a.state_names[s], a.alphabet.name(l)});
            c.require(got == expect, e.key + " nondeterministic slots as expected");
        }
        // serialization round trips preserve structure
        Automaton via_json = automaton_from_json(to_json(a));
        c.require(isomorphic(a, via_json).isomorphic, e.key + " json round trip");
        Automaton via_hoa = automaton_from_hoa(to_hoa(a));
        c.require(isomorphic(a, via_hoa).isomorphic, e.key + " hoa round trip");
    }
}

void drive_bkks(Ctx& c) {
    Automaton a = zoo("abkks");
    TwoTokenResult t = decide_hd_two_token(a);
    c.require(t.hd.has_value() && *t.hd, "two-token verdict: history-deterministic");
    auto hints = covering_hints("abkks");
    CoveringResult cov = check_reach_covering(a, hints);
    c.require(cov.ok, "reach-covering exists");
    SimplifiedCertificate cert;
    cert.simplified = true;
    cert.good = good_states(a);
    cert.covering = cov.covering;
    Resolver r(a, cert);
    auto xaxa = *parse_lasso(a.alphabet, ":xaxa");
    auto xbxb = *parse_lasso(a.alphabet, ":xbxb");
    c.require(r.run_on_lasso(xaxa).accepting, "resolver accepts (:xaxa)");
    c.require(r.run_on_lasso(xbxb).accepting, "resolver accepts (:xbxb)");
    c.witnesses.push_back(xaxa.format(a.alphabet));
    c.witnesses.push_back(xbxb.format(a.alphabet));
}

void drive_fig2(Ctx& c) {
    TwoTokenResult t = decide_hd_two_token(zoo("fig2_nonhd"));
    c.require(t.hd.has_value() && !*t.hd, "two-token verdict: not history-deterministic");
}

void drive_astrong(Ctx& c) {
    Automaton a = zoo("astrong");
    ReferenceLanguage R = reference("lstrong");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("astrong"), covering_hints("astrong"));
    c.require(cert.simplified, "astrong is simplified (hence history-deterministic)");
    std::map<std::string, std::string> got;
    for (auto [p, q] : cert.covering)
        got[a.state_names[p]] = a.state_names[q];
    std::map<std::string, std::string> expect = covering_hints("astrong");
    c.require(got == expect, "covering is I->q_a, iota_g->q'_g");
    TwoTokenResult t = decide_hd_two_token(a);
    c.require(t.hd.has_value() && *t.hd, "two-token agrees");
}

void drive_conj_strong(Ctx& c) {
    Automaton a = zoo("astrong");
    ReferenceLanguage R = reference("lstrong");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("astrong"), covering_hints("astrong"));
    c.require(cert.simplified, "astrong simplified");
    int count = 0, refuted = 0, in_family = 0;
    enumerate_rewirings_single(a, cert, [&](Rewiring&& rw) {
        ++count;
        std::string target = rw.description.substr(rw.description.rfind(' ') + 1);
        std::vector<Lasso> battery = strong_case_witnesses(a, target);
        RefutationResult rr = refute_rewiring(rw.automaton, R, battery, 12, 20000, c.seed);
        if (rr.witness) {
            ++refuted;
            for (const Lasso& b : battery)
                if (b.canonical() == *rr.witness)
                    ++in_family;
            c.witnesses.push_back(rw.description + "  killed by  " +
                                  rr.witness->format(a.alphabet));
        }
        return true;
    });
    c.require(count == 13, "13 single-redirect rewirings enumerated");
    c.require(refuted == 13, "all 13 refuted");
    c.require(in_family == 13, "witnesses match the three case families exactly");
}

void drive_dstrong(Ctx& c) {
    Automaton d = zoo("dstrong");
    Automaton a = zoo("astrong");
    ReferenceLanguage R = reference("lstrong");
    c.require(is_deterministic(d), "dstrong deterministic");
    // structural rewiring shape: the non-significant parts over the good
    // states coincide, and significant slots match
    {
        std::vector<int> good = good_states(a);
        std::set<std::string> good_names;
        for (int g : good)
            good_names.insert(a.state_names[g]);
        std::set<std::tuple<std::string, std::string, std::string>> ns_a, ns_d;
        std::set<std::pair<std::string, std::string>> sig_a, sig_d;
        for (const Transition& t : a.transitions)
            if (good_names.count(a.state_names[t.src])) {
                if (!t.significant)
                    ns_a.insert({a.state_names[t.src], a.alphabet.name(t.letter),
                                 a.state_names[t.dst]});
                else
                    sig_a.insert({a.state_names[t.src], a.alphabet.name(t.letter)});
            }
        for (const Transition& t : d.transitions) {
            if (!t.significant)
                ns_d.insert(
                    {d.state_names[t.src], d.alphabet.name(t.letter), d.state_names[t.dst]});
            else {
                sig_d.insert({d.state_names[t.src], d.alphabet.name(t.letter)});
                c.ok = c.ok && good_names.count(d.state_names[t.dst]) > 0;
            }
        }
        c.require(ns_a == ns_d, "non-significant part equals the good part of astrong");
        c.require(sig_a == sig_d, "significant slots coincide");
    }
    ReachInclusion inc = verify_all_states_accept_reference(d, R);
    c.require(inc.all_pass, "reference language included from every state");
    CheckOutcome facts = verify_language_upper_bound(d, zoo_fact_suite("dstrong"));
    c.require(facts.ok, "fact suite passes");
    RefutationResult rr = refute_rewiring(d, R, {}, 12, 50000, c.seed);
    c.require(!rr.witness.has_value(),
              "not refuted against the reference at bound 12 over " +
                  std::to_string(rr.lassos_tried) + " enumerated lassos");
    // Known boundary of the displayed reference expression: the automata
    // absorb stray letters at their block-entry states, so both languages
    // strictly contain the expression; the two machines still agree with
    // each other. The gap is pinned here as a reproducible finding.
    {
        Lasso gap = *parse_lasso(d.alphabet, ":xaaxbxby");
        bool gap_holds = lasso_accepts(d, gap) && lasso_accepts(a, gap) && !R.member(gap);
        if (gap_holds)
            c.witnesses.push_back("expression gap: " + gap.format(d.alphabet));
        c.require(gap_holds,
                  "documented gap between the automata and the displayed expression");
    }
    // exact per-lasso agreement with astrong on the same enumeration
    {
        std::mt19937_64 rng(c.seed);
        long agree = 0, total = 0;
        bool all = true;
        std::set<Lasso> seen;
        auto try_one = [&](const Lasso& w) {
            ++total;
            bool same = lasso_accepts(d, w) == lasso_accepts(a, w);
            all = all && same;
            agree += same;
        };
        std::vector<int> word;
        std::function<void()> rec = [&]() {
            int n = static_cast<int>(word.size());
            if (n >= 1)
                for (int split = 0; split < n; ++split) {
                    Lasso w(std::vector<int>(word.begin(), word.begin() + split),
                            std::vector<int>(word.begin() + split, word.end()));
                    Lasso cc = w.canonical();
                    if (seen.insert(cc).second)
                        try_one(cc);
                }
            if (n == 5)
                return;
            for (int l = 0; l < d.alphabet.size(); ++l) {
                word.push_back(l);
                rec();
                word.pop_back();
            }
        };
        rec();
        while (total < 50000) {
            int len = 2 + static_cast<int>(rng() % 11);
            int split = static_cast<int>(rng() % len);
            std::vector<int> v(len);
            for (int& x : v)
                x = static_cast<int>(rng() % d.alphabet.size());
            Lasso w(std::vector<int>(v.begin(), v.begin() + split),
                    std::vector<int>(v.begin() + split, v.end()));
            Lasso cc = w.canonical();
            if (seen.insert(cc).second)
                try_one(cc);
        }
        c.require(all, "lasso-for-lasso agreement with astrong on " + std::to_string(total) +
                           " samples");
    }
}

void drive_conj_weak(Ctx& c) {
    Automaton a = zoo("aweak");
    ReferenceLanguage R = reference("lweak");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("aweak"), covering_hints("aweak"));
    c.require(cert.simplified, "aweak is simplified (hence history-deterministic)");
    const Alphabet& s = a.alphabet;
    auto mk = [&](const std::string& t) { return *parse_lasso(s, t); };
    long count = 0, refuted = 0;
    std::string first_unrefuted;
    enumerate_rewirings_full(a, cert, [&](Rewiring&& rw) {
        ++count;
        // read the four redirect targets off the rewiring
        std::map<std::pair<std::string, std::string>, std::string> target;
        const Automaton& b = rw.automaton;
        for (const Transition& t : b.transitions)
            if (t.significant)
                target[{b.state_names[t.src], b.alphabet.name(t.letter)}] =
                    b.state_names[t.dst];
        std::vector<Lasso> battery;
        const char* greek[3] = {"a", "b", "c"};
        for (int i = 0; i < 3; ++i) {
            std::string tq = target[{std::string("q'_") + greek[i], greek[i]}];
            if (tq != "Y")
                battery.push_back(mk(std::string(":ra x b x ") + greek[i] + " x " + greek[i]));
        }
        std::string ty = target[{"Y", "y"}];
        if (ty == "Y")
            battery.push_back(mk("xa:y"));
        else if (ty.rfind("p", 0) == 0) {
            std::string beta = ty.back() == 'a' ? "b" : "a";
            battery.push_back(mk("xa:y x" + beta + " x" + beta + " y"));
        } else if (ty.rfind("q", 0) == 0) {
            std::string g(1, ty.back());
            battery.push_back(mk("xa:x " + g + " y"));
        }
        RefutationResult rr = refute_rewiring(b, R, battery, 12, 4000, c.seed);
        if (rr.witness)
            ++refuted;
        else if (first_unrefuted.empty())
            first_unrefuted = rw.description;
        return true;
    });
    c.require(count == 28561, "28561 rewirings enumerated (13^4)");
    c.require(refuted == count, "every rewiring refuted" +
                                    (first_unrefuted.empty() ? std::string()
                                                             : " (first survivor: " +
                                                                   first_unrefuted + ")"));
    c.obs << count << " rewirings; ";
}

void drive_thm_main(Ctx& c) {
    Automaton a = zoo("amain");
    ReferenceLanguage R = reference("lmain");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("amain"), covering_hints("amain"));
    c.require(cert.simplified, "amain is simplified (hence history-deterministic)");
    std::map<std::string, std::string> got;
    for (auto [p, q] : cert.covering)
        got[a.state_names[p]] = a.state_names[q];
    c.require(got == covering_hints("amain"), "covering is I->p1, Ia->q1, Ib->r1, Ic->t1");
    c.require(cert.good.size() == 61, "61 good states");
}

void drive_cmain_complement(Ctx& c) {
    Automaton a = zoo("amain");
    Automaton cm = zoo("cmain");
    IntersectionResult inter = buchi_cobuchi_intersection_empty(a, cm);
    c.require(inter.empty, "L(amain) ∩ L(cmain) is empty (exact product check)");
    ReferenceLanguage R = reference("lmain");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("amain"), covering_hints("amain"));
    c.require(cert.simplified, "certificate available");
    Automaton comp = hd_complement(a, cert);
    c.require(comp.state_count() == 61, "complement has 61 states");
    c.require(isomorphic(comp, cm).isomorphic, "complement isomorphic to cmain");
    // removing the gate's significant exits breaks complement exactness
    Automaton broken = cm;
    broken.transitions.clear();
    int Y = *cm.state("Y");
    int yy = *cm.alphabet.index("y");
    for (const Transition& t : cm.transitions)
        if (!(t.significant && t.src == Y && t.letter == yy))
            broken.add_transition(t.src, t.letter, t.dst, t.significant);
    IntersectionResult broken_res = buchi_cobuchi_intersection_empty(a, broken);
    c.require(broken_res.empty,
              "deleting transitions only shrinks the complement: product still empty");
    c.require(!cobuchi_hd_sufficient(broken),
              "the deletion destroys the everywhere-pattern behind the resolver");
    c.require(cobuchi_hd_sufficient(cm), "cmain itself has the everywhere-pattern");
    // the gate's resolver on an in-complement lasso eventually stays safe
    Lasso probe = *parse_lasso(cm.alphabet, ":r1 c2 c2");
    c.require(!lasso_accepts(a, probe) && lasso_accepts(cm, probe),
              "probe lasso lies in the complement");
    c.require(run_suffix_resolver(cm, probe).accepting,
              "the longest-suffix resolver accepts the probe");
    c.witnesses.push_back(probe.format(cm.alphabet));
}

void drive_xor(Ctx& c) {
    Automaton a = zoo("amain");
    Automaton cm = zoo("cmain");
    ReferenceLanguage R = reference("lmain");
    std::vector<std::string> sub{"a", "c", "1", "4", "r1", "y"};
    std::vector<int> subidx;
    for (const auto& n : sub)
        subidx.push_back(*a.alphabet.index(n));
    std::set<Lasso> seen;
    long total = 0;
    bool xor_ok = true, ref_ok = true;
    auto try_one = [&](const Lasso& w) {
        ++total;
        bool in_a = lasso_accepts(a, w);
        bool in_c = lasso_accepts(cm, w);
        bool in_r = R.member(w);
        xor_ok = xor_ok && (in_a != in_c);
        ref_ok = ref_ok && (in_a == in_r);
    };
    std::vector<int> word;
    std::function<void()> rec = [&]() {
        int n = static_cast<int>(word.size());
        if (n >= 1)
            for (int split = 0; split < n; ++split) {
                Lasso w(std::vector<int>(word.begin(), word.begin() + split),
                        std::vector<int>(word.begin() + split, word.end()));
                Lasso cc = w.canonical();
                if (seen.insert(cc).second)
                    try_one(cc);
            }
        if (n == 5)
            return;
        for (int l : subidx) {
            word.push_back(l);
            rec();
            word.pop_back();
        }
    };
    rec();
    long exhaustive = total;
    std::mt19937_64 rng(c.seed);
    long wanted_random = 10000;
    while (total < exhaustive + wanted_random) {
        int len = 2 + static_cast<int>(rng() % 39);
        int split = static_cast<int>(rng() % len);
        std::vector<int> v(len);
        for (int& x : v)
            x = static_cast<int>(rng() % a.alphabet.size());
        Lasso w(std::vector<int>(v.begin(), v.begin() + split),
                std::vector<int>(v.begin() + split, v.end()));
        Lasso cc = w.canonical();
        if (seen.insert(cc).second)
            try_one(cc);
    }
    c.require(total >= 20000, "at least 20000 canonical lassos sampled (" +
                                  std::to_string(total) + ")");
    c.require(xor_ok, "exactly one of amain/cmain accepts each lasso");
    c.require(ref_ok, "the reference agrees with amain on all of them");
}

void drive_cmain_minimal(Ctx& c) {
    Automaton cm = zoo("cmain");
    CobuchiMinimalityReport r = cobuchi_minimality_verdict(cm);
    c.require(r.normal, "normal");
    c.require(r.safe_deterministic, "safe-deterministic");
    c.require(r.sd_structural, "semantic determinism via the everywhere-pattern");
    c.require(r.hd_sufficient, "history-determinism via the everywhere-pattern");
    c.require(r.safe_minimal, "safe-minimal");
    c.require(r.distinguishing_words == 1830, "1830 distinguishing words (61 choose 2)");
    c.require(r.safe_centralised, "safe-centralised");
    c.require(r.statewise_minimal(), "statewise minimal");
    // re-verify every distinguishing word by direct simulation on safe(cmain)
    SafeMinimalResult sm = is_safe_minimal(cm);
    FiniteAutomaton safe = build_safe(cm);
    auto alive = [&](int from, const std::vector<int>& w) {
        // survives iff a run exists that can still continue forever
        std::set<int> cur{from};
        for (int l : w) {
            std::set<int> nxt;
            for (int s : cur)
                for (int d : safe.delta[s][l])
                    nxt.insert(d);
            cur = std::move(nxt);
            if (cur.empty())
                return false;
        }
        return true;
    };
    bool all = true;
    for (auto& [p, q, w] : sm.distinguishing)
        all = all && (alive(p, w) != alive(q, w));
    c.require(all, "every distinguishing word re-verified by simulation");
}

void drive_compy(Ctx& c) {
    // restriction sizes
    std::vector<std::string> gamma{"a", "b", "c", "1", "4"};
    Automaton cm = zoo("cmain");
    {
        SafeComponentView view(cm);
        FiniteAutomaton safe = view.safe;
        safe.initial = *cm.state("p2");
        FiniteAutomaton restr = restrict_alphabet(safe, gamma);
        c.require(restr.state_count == 15, "restricted safe component from p2 has 15 states");
    }
    {
        FiniteAutomaton pre = prefix_closure_dfa(zoo_finite("theju"));
        c.require(pre.state_count == 6, "prefix automaton of theju has 6 states with its sink");
    }
    for (const std::string& key : separation_instance_keys()) {
        ThreeDfa listed = separation_instance(key);
        ThreeDfa generated = generated_separation_instance(key);
        c.require(listed.state_count == 16, key + ": 16 states as listed");
        c.require(threedfa_isomorphic(listed, generated), key + ": generated == listed");
        CnfInstance f5 = encode_exists_kdfa(listed, 5);
        SatResult r5 = sat_solve(f5);
        c.require(r5.status == SatResult::Status::Unsat, key + ": no 5-state separator");
        CnfInstance f6 = encode_exists_kdfa(listed, 6);
        SatResult r6 = sat_solve(f6);
        c.require(r6.status == SatResult::Status::Sat, key + ": 6-state separator exists");
        if (r6.status == SatResult::Status::Sat) {
            FiniteAutomaton b = decode_dfa(f6, r6, listed, 6);
            std::string state = key == "p2"    ? "p2"
                                : key == "p5"  ? "p5"
                                : key == "sq1" ? "P1"
                                               : "P4";
            FiniteAutomaton lower =
                prefix_closure_dfa(restrict_alphabet(zoo_finite("theju"), gamma));
            SafeComponentView view(cm);
            FiniteAutomaton safe = view.safe;
            safe.initial = *cm.state(state);
            FiniteAutomaton upper = prefix_closure_dfa(restrict_alphabet(safe, gamma));
            c.require(verify_separator(b, lower, upper), key + ": decoded separator verified");
        }
        MinSeparatorResult ms = min_separator_size(listed, 8);
        c.require(ms.size == 6, key + ": minimal consistent DFA has size 6");
    }
}

void drive_areplace(Ctx& c) {
    Automaton a = zoo("areplace");
    TwoTokenResult t = decide_hd_two_token(a);
    c.require(t.hd.has_value() && *t.hd, "two-token verdict: history-deterministic");
    // The guessing component cannot be replaced by fewer than five
    // deterministic scanning states. Any replacement must, from every
    // deployment, signal exactly the first segment completion it sees (a
    // false or missing signal changes the composed language); the completed
    // segment's index rides on the letter itself. The induced instance
    // therefore accepts exactly the first-completion moments of the
    // five-state block, rejects every earlier moment, and leaves later words
    // unconstrained. Like the packaged instances, the minimal consistent
    // DFA counts one extra flag state on top of the five scanning states.
    ThreeDfa t3;
    t3.alphabet = a.alphabet;
    t3.resize(7, a.alphabet.size());
    auto id = [&](const std::string& n) {
        return *a.state(n) - *a.state("p1");
    };
    for (const char* n : {"p1", "l1", "l2", "l3", "l4"}) {
        int s = *a.state(n);
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int ti : a.out(s, l)) {
                const Transition& tr = a.transitions[ti];
                if (tr.significant || a.state_names[tr.dst] == "p2")
                    t3.delta[id(n)][l] = 5; // a completion, of either kind
                else if (tr.dst >= *a.state("p1") && tr.dst <= *a.state("l4"))
                    t3.delta[id(n)][l] = id(a.state_names[tr.dst]);
            }
    }
    for (int l = 0; l < a.alphabet.size(); ++l) {
        t3.delta[5][l] = 6;
        t3.delta[6][l] = 6;
    }
    t3.initial = 0;
    for (int i = 0; i < 5; ++i)
        t3.labels[i] = ThreeDfa::Label::Reject;
    t3.labels[5] = ThreeDfa::Label::Accept;
    t3.labels[6] = ThreeDfa::Label::DontCare;
    MinSeparatorResult ms = min_separator_size(t3, 8);
    c.require(ms.size == 6,
              "first-completion classification needs 6 states with the flag state, "
              "i.e. five scanning states (got " +
                  std::to_string(ms.size) + ")");
}

void drive_resolver(Ctx& c) {
    Automaton a = zoo("amain");
    ReferenceLanguage R = reference("lmain");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("amain"), covering_hints("amain"));
    c.require(cert.simplified, "certificate available");
    Resolver r(a, cert);
    std::mt19937_64 rng(c.seed);
    int accepted = 0, total = 0;
    while (total < 1000) {
        Lasso w = sample_main_member(rng);
        if (!R.member(w))
            continue; // sampler aims inside the language; skip outliers
        ++total;
        if (r.run_on_lasso(w).accepting)
            ++accepted;
    }
    c.require(accepted == total, "resolver accepts all " + std::to_string(total) +
                                     " sampled in-language lassos");
}

} // namespace

std::vector<std::string> lemma_ids() {
    return {"zoo-invariants",       "ex-bkks-hd",          "fig2-not-hd",
            "lemma-astrong-simplified", "conj-strong-rewiring", "lemma-dstrong-rewiring",
            "conj-weak-rewiring",   "thm-main-hd",         "lemma-cmain-complement",
            "xor-coverage",         "lemma-cmain-minimal", "lemma-compy",
            "lemma-areplace",       "resolver-soundness"};
}

LemmaEntry reproduce(const std::string& id, uint64_t seed) {
    Ctx c{seed, {}, {}, true};
    auto t0 = std::chrono::steady_clock::now();
    LemmaEntry e;
    e.id = id;
    try {
        if (id == "zoo-invariants") {
            e.expected = "every zoo automaton matches its expectations and round-trips";
            drive_zoo_invariants(c);
        } else if (id == "ex-bkks-hd") {
            e.expected = "the 7-state example is HD; its resolver alternates correctly";
            drive_bkks(c);
        } else if (id == "fig2-not-hd") {
            e.expected = "the 3-state guessing example is not HD";
            drive_fig2(c);
        } else if (id == "lemma-astrong-simplified") {
            e.expected = "astrong is simplified with the blocky covering";
            drive_astrong(c);
        } else if (id == "conj-strong-rewiring") {
            e.expected = "all 13 single redirects of the gate are refuted";
            drive_conj_strong(c);
        } else if (id == "lemma-dstrong-rewiring") {
            e.expected = "dstrong is an equivalent rewiring: facts pass, no refutation found";
            drive_dstrong(c);
        } else if (id == "conj-weak-rewiring") {
            e.expected = "every full rewiring of aweak is refuted";
            drive_conj_weak(c);
        } else if (id == "thm-main-hd") {
            e.expected = "amain is simplified, hence HD, with the block-1 covering";
            drive_thm_main(c);
        } else if (id == "lemma-cmain-complement") {
            e.expected = "cmain complements amain exactly and matches the construction";
            drive_cmain_complement(c);
        } else if (id == "xor-coverage") {
            e.expected = "amain/cmain split every sampled lasso; reference agrees";
            drive_xor(c);
        } else if (id == "lemma-cmain-minimal") {
            e.expected = "cmain passes every canonical-minimality check";
            drive_cmain_minimal(c);
        } else if (id == "lemma-compy") {
            e.expected = "all four separation instances need exactly 6 states";
            drive_compy(c);
        } else if (id == "lemma-areplace") {
            e.expected = "areplace is HD and its guess component needs 5 states";
            drive_areplace(c);
        } else if (id == "resolver-soundness") {
            e.expected = "the resolver accepts 1000 sampled in-language lassos";
            drive_resolver(c);
        } else {
            throw std::invalid_argument("unknown lemma id: " + id);
        }
    } catch (const std::exception& ex) {
        c.ok = false;
        c.obs << "exception: " << ex.what();
    }
    e.pass = c.ok;
    e.observed = c.obs.str();
    e.witnesses = c.witnesses;
    e.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count();
    return e;
}

Report reproduce_all(uint64_t seed, bool parallel) {
    Report r;
    r.seed = seed;
    std::vector<std::string> ids = lemma_ids();
    if (parallel) {
        std::vector<std::future<LemmaEntry>> futs;
        for (const auto& id : ids)
            futs.push_back(std::async(std::launch::async,
                                      [id, seed] { return reproduce(id, seed); }));
        for (auto& f : futs)
            r.entries.push_back(f.get());
    } else {
        for (const auto& id : ids)
            r.entries.push_back(reproduce(id, seed));
    }
    return r;
}

} // namespace owb
