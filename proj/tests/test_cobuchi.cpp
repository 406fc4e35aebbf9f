#include <doctest.h>

#include "owb/cobuchi.hpp"
#include "owb/zoo.hpp"

using namespace owb;

TEST_CASE("safe view of the complement") {
    Automaton cm = zoo("cmain");
    SafeComponentView view(cm);
    CHECK(view.safe.deterministic);
    CHECK(view.components.count() >= 2);
    int nontrivial = 0;
    for (int c = 0; c < view.components.count(); ++c)
        if (view.components.nontrivial[c])
            ++nontrivial;
    CHECK(nontrivial == 2); // the gate alone and the sixty-state component
    // the gate's safe language: everything avoiding its exit letter
    int y_state = *cm.state("Y");
    FiniteAutomaton pre = view.safe_prefix_dfa(y_state);
    const Alphabet& s = cm.alphabet;
    CHECK(pre.run_accepts(*s.tokenize("a b c r1 1 4")));
    CHECK(!pre.run_accepts(*s.tokenize("a y")));
}

TEST_CASE("structural verdicts on mutated complements") {
    Automaton cm = zoo("cmain");
    CHECK(is_safe_deterministic(cm));
    CHECK(is_normal_cobuchi(cm));
    CHECK(all_states_equivalent_structurally(cm));
    CHECK(cobuchi_hd_sufficient(cm));

    // flip one cross-component transition to non-significant: normality dies
    Automaton bad = cm;
    bad.transitions.clear();
    int Y = *cm.state("Y");
    bool flipped = false;
    for (Transition t : cm.transitions) {
        if (!flipped && t.significant && t.src == Y && t.dst != Y) {
            t.significant = false;
            flipped = true;
        }
        bad.add_transition(t.src, t.letter, t.dst, t.significant);
    }
    REQUIRE(flipped);
    CHECK(!is_normal_cobuchi(bad));

    // drop one significant transition: the everywhere-pattern dies
    Automaton dropped = cm;
    for (size_t i = 0; i < dropped.transitions.size(); ++i)
        if (dropped.transitions[i].significant) {
            dropped.transitions.erase(dropped.transitions.begin() + i);
            break;
        }
    CHECK(!cobuchi_hd_sufficient(dropped));
}

TEST_CASE("safe minimality on small examples") {
    // two states duplicating each other are not safe-minimal
    Automaton c;
    c.alphabet = Alphabet({"a"});
    c.acceptance = Acceptance::CoBuchi;
    int u = c.add_state("u");
    int v = c.add_state("v");
    c.initial = u;
    c.add_transition(u, 0, u);
    c.add_transition(u, 0, v, true);
    c.add_transition(v, 0, v);
    SafeMinimalResult r = is_safe_minimal(c);
    CHECK(!r.safe_minimal);

    // a single safety loop is trivially minimal and centralised
    Automaton one;
    one.alphabet = Alphabet({"a"});
    one.acceptance = Acceptance::CoBuchi;
    int s = one.add_state("s");
    one.initial = s;
    one.add_transition(s, 0, s);
    CHECK(is_safe_minimal(one).safe_minimal);
    CHECK(is_safe_centralised(one).safe_centralised);
    CobuchiMinimalityReport rep = cobuchi_minimality_verdict(one);
    CHECK(rep.normal);
    CHECK(rep.safe_deterministic);
    CHECK(rep.safe_minimal);
    CHECK(rep.safe_centralised);
}

TEST_CASE("index symmetry of the complement's safe languages") {
    // live-state counts of minimized per-state safe prefix automata agree
    // across the 1<->2<->3 and 4<->5<->6 block symmetry
    Automaton cm = zoo("cmain");
    SafeComponentView view(cm);
    auto live_count = [&](const std::string& name) {
        FiniteAutomaton d = minimize_dfa(view.safe_prefix_dfa(*cm.state(name)));
        int live = 0;
        for (int s = 0; s < d.state_count; ++s)
            live += d.accepting[s];
        return live;
    };
    for (std::string row : {"p", "q", "r", "s", "t"}) {
        CHECK(live_count(row + "1") == live_count(row + "2"));
        CHECK(live_count(row + "2") == live_count(row + "3"));
        CHECK(live_count(row + "4") == live_count(row + "5"));
        CHECK(live_count(row + "5") == live_count(row + "6"));
        std::string upper = row;
        upper[0] = static_cast<char>(toupper(upper[0]));
        CHECK(live_count(upper + "1") == live_count(upper + "2"));
        CHECK(live_count(upper + "4") == live_count(upper + "6"));
    }
}

TEST_CASE("alphabet restriction") {
    Automaton cm = zoo("cmain");
    Automaton same = restrict_alphabet(cm, cm.alphabet.letters());
    CHECK(isomorphic(cm, same).isomorphic);
    FiniteAutomaton theju = zoo_finite("theju");
    FiniteAutomaton ty = zoo_finite("theju_y");
    std::vector<std::string> no_y;
    for (const auto& l : theju.alphabet.letters())
        if (l != "y")
            no_y.push_back(l);
    FiniteAutomaton a = restrict_alphabet(theju, no_y);
    FiniteAutomaton b = restrict_alphabet(ty, no_y);
    // identical by construction once y is gone
    CHECK(a.state_count == b.state_count);
    CHECK(dfa_equivalent(prefix_closure_dfa(a), prefix_closure_dfa(b)).holds);
}

TEST_CASE("suffix resolver accepts complement members") {
    Automaton cm = zoo("cmain");
    const Alphabet& s = cm.alphabet;
    for (std::string lasso : {":r1 c2 c2", ":a", ":c1", "c1c1:b"}) {
        Lasso w = *parse_lasso(s, lasso);
        REQUIRE(lasso_accepts(cm, w));
        CHECK(run_suffix_resolver(cm, w).accepting);
    }
}
