#include <doctest.h>

#include <random>

#include "owb/hd.hpp"
#include "owb/resolver.hpp"
#include "owb/zoo.hpp"

using namespace owb;

TEST_CASE("reference membership spot checks") {
    ReferenceLanguage lstrong = reference("lstrong");
    const Alphabet& s = lstrong.monitor.alphabet;
    CHECK(!lstrong.member(*parse_lasso(s, ":y")));
    CHECK(lstrong.member(*parse_lasso(s, ":xaxbxby")));
    CHECK(!lstrong.member(*parse_lasso(s, ":xay")));
    CHECK(!lstrong.member(*parse_lasso(s, ":yxbxby")));

    ReferenceLanguage lweak = reference("lweak");
    const Alphabet& w = lweak.monitor.alphabet;
    CHECK(!lweak.member(*parse_lasso(w, ":ra xb xa xa")));
    CHECK(lweak.member(*parse_lasso(w, ":ra xb xb y")));

    ReferenceLanguage lmain = reference("lmain");
    const Alphabet& m = lmain.monitor.alphabet;
    CHECK(lmain.member(*parse_lasso(m, ":c2 c1 c1 y")));
    CHECK(!lmain.member(*parse_lasso(m, ":c1 y")));
    CHECK(lmain.member(*parse_lasso(m, ":r3 ab5 ab5 y")));
}

TEST_CASE("references are prefix independent") {
    for (const std::string& key : reference_keys()) {
        ReferenceLanguage r = reference(key);
        const Alphabet& sigma = r.monitor.alphabet;
        std::mt19937_64 rng(41);
        for (int i = 0; i < 500; ++i) {
            int len = 1 + static_cast<int>(rng() % 10);
            int split = static_cast<int>(rng() % len);
            std::vector<int> w(len);
            for (int& x : w)
                x = static_cast<int>(rng() % sigma.size());
            Lasso l(std::vector<int>(w.begin(), w.begin() + split),
                    std::vector<int>(w.begin() + split, w.end()));
            bool base = r.member(l);
            for (int letter = 0; letter < sigma.size(); ++letter) {
                Lasso extended = l;
                extended.prefix.insert(extended.prefix.begin(), letter);
                REQUIRE(r.member(extended) == base);
            }
        }
    }
}

TEST_CASE("reach inclusion failure produces a re-checkable witness") {
    Automaton a = zoo("amain");
    // delete the gate's significant exit
    Automaton broken = a;
    broken.transitions.clear();
    int Y = *a.state("Y");
    int yy = *a.alphabet.index("y");
    for (const Transition& t : a.transitions)
        if (!(t.src == Y && t.letter == yy && t.significant))
            broken.add_transition(t.src, t.letter, t.dst, t.significant);
    ReferenceLanguage R = reference("lmain");
    ReachInclusion inc = verify_all_states_accept_reference(broken, R);
    CHECK(!inc.all_pass);
    bool y_fails = false;
    for (const auto& n : inc.failing_states)
        y_fails = y_fails || n == "Y";
    CHECK(y_fails);
    REQUIRE(inc.witness.has_value());
    CHECK(R.member(*inc.witness));
    CHECK(!lasso_accepts(broken, *inc.witness));
}

TEST_CASE("upper bound suite catches a wrong target") {
    Automaton d = zoo("dstrong");
    FactSuite s = zoo_fact_suite("dstrong");
    // corrupt one obligation's target: gate entries do not end with x a
    for (auto& ob : s.obligations)
        if (ob.src == "q_b" && ob.dst == "Y")
            ob.target = "strong:ends_xa";
    CheckOutcome out = verify_language_upper_bound(d, s);
    CHECK(!out.ok);
    CHECK(out.witness_word.has_value());
}

TEST_CASE("simplified pipeline on the collection") {
    ReferenceLanguage lstrong = reference("lstrong");
    SimplifiedCertificate cert = check_simplified(zoo("astrong"), lstrong,
                                                  zoo_fact_suite("astrong"),
                                                  covering_hints("astrong"));
    CHECK(cert.simplified);
    CHECK(cert.sd == SdVerdict::Confirmed);
    CHECK(cert.good.size() == 13);

    // the guessing example fails reach-covering at its initial state
    Automaton fig2 = zoo("fig2_nonhd");
    CoveringResult cov = check_reach_covering(fig2);
    CHECK(!cov.ok);
    CHECK(cov.failing_state == "q0");
}

TEST_CASE("resolver determinism and soundness on out-of-language input") {
    Automaton a = zoo("abkks");
    CoveringResult cov = check_reach_covering(a);
    REQUIRE(cov.ok);
    SimplifiedCertificate cert;
    cert.simplified = true;
    cert.good = good_states(a);
    cert.covering = cov.covering;
    Resolver r(a, cert);
    auto w = *parse_lasso(a.alphabet, ":xaxb");
    // identical letters yield identical transition sequences
    Resolver::State s1 = r.start(), s2 = r.start();
    for (int i = 0; i < 12; ++i) {
        int l = w.at(static_cast<size_t>(i));
        REQUIRE(r.step(s1, l) == r.step(s2, l));
    }
    // not in the language: the induced run must not accept
    CHECK(!r.run_on_lasso(w).accepting);
    CHECK(!lasso_accepts(a, w));
}

TEST_CASE("rewiring enumeration shapes") {
    Automaton a = zoo("astrong");
    ReferenceLanguage R = reference("lstrong");
    SimplifiedCertificate cert =
        check_simplified(a, R, zoo_fact_suite("astrong"), covering_hints("astrong"));
    REQUIRE(cert.simplified);
    int count = 0;
    enumerate_rewirings_single(a, cert, [&](Rewiring&& rw) {
        CHECK(is_deterministic(rw.automaton));
        CHECK(validate(rw.automaton).ok());
        ++count;
        return true;
    });
    CHECK(count == 13);
    // the bkks rewiring family contains the 4-state determinisation
    Automaton bkks = zoo("abkks");
    CoveringResult cov = check_reach_covering(bkks);
    REQUIRE(cov.ok);
    SimplifiedCertificate bc;
    bc.simplified = true;
    bc.good = good_states(bkks);
    bc.covering = cov.covering;
    bool found_four_state = false;
    enumerate_rewirings_full(bkks, bc, [&](Rewiring&& rw) {
        found_four_state = found_four_state || trim(rw.automaton).state_count() == 4;
        return true;
    });
    CHECK(found_four_state);
}
