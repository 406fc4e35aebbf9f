#include <doctest.h>

#include <random>

#include "owb/automaton.hpp"
#include "owb/hd.hpp"
#include "owb/finite_automaton.hpp"
#include "owb/references.hpp"
#include "owb/zoo.hpp"

#include "oracles.hpp"

using namespace owb;

namespace {

FiniteAutomaton random_nfa(std::mt19937_64& rng, int states, int letters) {
    FiniteAutomaton f;
    std::vector<std::string> ls;
    for (int l = 0; l < letters; ++l)
        ls.push_back(std::string(1, static_cast<char>('a' + l)));
    f.alphabet = Alphabet(ls);
    f.resize(states, letters);
    f.initial = 0;
    for (int s = 0; s < states; ++s) {
        f.accepting[s] = rng() % 3 == 0;
        for (int l = 0; l < letters; ++l) {
            int fan = static_cast<int>(rng() % 3);
            for (int k = 0; k < fan; ++k)
                f.add_edge(s, l, static_cast<int>(rng() % states));
        }
    }
    return f;
}

std::vector<std::vector<int>> all_words(int letters, int max_len) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (int n = 0; n < max_len; ++n) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int l = 0; l < letters; ++l) {
                auto w2 = w;
                w2.push_back(l);
                next.push_back(w2);
                out.push_back(w2);
            }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("determinize preserves membership") {
    std::mt19937_64 rng(3);
    auto words = all_words(2, 10);
    for (int round = 0; round < 40; ++round) {
        FiniteAutomaton n = random_nfa(rng, 1 + static_cast<int>(rng() % 6), 2);
        FiniteAutomaton d = determinize(n);
        CHECK(d.is_complete_dfa());
        for (const auto& w : words)
            REQUIRE(n.run_accepts(w) == d.run_accepts(w));
    }
}

TEST_CASE("hopcroft agrees with table-filling oracle") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 120; ++round) {
        int states = 1 + static_cast<int>(rng() % 6);
        int letters = 1 + static_cast<int>(rng() % 3);
        FiniteAutomaton d;
        std::vector<std::string> ls;
        for (int l = 0; l < letters; ++l)
            ls.push_back(std::string(1, static_cast<char>('a' + l)));
        d.alphabet = Alphabet(ls);
        d.resize(states, letters);
        d.initial = 0;
        d.deterministic = true;
        for (int s = 0; s < states; ++s) {
            d.accepting[s] = rng() % 2 == 0;
            for (int l = 0; l < letters; ++l)
                d.add_edge(s, l, static_cast<int>(rng() % states));
        }
        FiniteAutomaton m = minimize_dfa(d);
        CHECK(m.state_count == oracle::nerode_class_count(d));
        CHECK(dfa_equivalent(m, d).holds);
    }
}

TEST_CASE("dfa inclusion and equivalence witnesses") {
    FiniteAutomaton l1 = target_language("main:seg1");
    FiniteAutomaton l2 = target_language("main:seg2");
    CHECK(dfa_equivalent(l1, l1).holds);
    WordVerdict v = dfa_included(l1, l2);
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(l1.run_accepts(*v.witness));
    CHECK(!l2.run_accepts(*v.witness));

    // empty language is included in anything
    FiniteAutomaton empty = target_language("main:empty");
    CHECK(nfa_included_in_dfa(empty, l2).holds);
}

TEST_CASE("classifier runs") {
    ClassifierDfa c = zoo_classifier();
    const Alphabet& sigma = c.dfa.alphabet;
    auto word = [&](const std::string& t) { return *sigma.tokenize(t); };
    CHECK(c.classify(word("c1")) == 1);
    CHECK(c.classify(word("ab4")) == 4);
    CHECK(!c.classify(word("a1")).has_value());
    CHECK(c.classify(word("cac1")) == 1);
    CHECK(c.classify(word("cab4")) == 4);
    CHECK(!c.classify(word("c1b")).has_value());
    CHECK(!c.classify(word("r1c1")).has_value());

    // no proper prefix of a classified word reaches a final state
    std::vector<std::string> sub{"a", "b", "c", "1", "4"};
    std::vector<int> subidx;
    for (const auto& s : sub)
        subidx.push_back(*sigma.index(s));
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& w) {
        if (c.classify(w).has_value()) {
            for (size_t cut = 1; cut < w.size(); ++cut) {
                std::vector<int> prefix(w.begin(), w.begin() + cut);
                auto end = c.dfa.run_end(prefix);
                REQUIRE(end.has_value());
                REQUIRE(c.finals.find(*end) == c.finals.end());
            }
        }
        if (w.size() == 6)
            return;
        for (int l : subidx) {
            w.push_back(l);
            rec(w);
            w.pop_back();
        }
    };
    std::vector<int> w;
    rec(w);
}

TEST_CASE("path languages") {
    Automaton amain = zoo("amain");
    int src = *amain.state("p1");
    SUBCASE("empty word on src == dst") {
        FiniteAutomaton f = path_language(amain, src, src);
        CHECK(f.run_accepts({}));
    }
    SUBCASE("block hop stays within the segment language") {
        std::vector<std::string> delim{"I", "Y"};
        for (int i = 1; i <= 6; ++i) {
            delim.push_back("p" + std::to_string(i));
            delim.push_back("P" + std::to_string(i));
        }
        PathConstraints pc;
        for (const auto& d : delim)
            pc.forbidden_intermediate.push_back(*amain.state(d));
        FiniteAutomaton hop = path_language(amain, *amain.state("p1"), *amain.state("P2"), pc);
        FiniteAutomaton seg2 = target_language("main:seg2");
        WordVerdict v = nfa_included_in_dfa(hop, seg2);
        CHECK(v.holds);
        // witnessing paths avoid the forbidden set by construction: re-check
        // a couple of members by simulation
        auto wd = *amain.alphabet.tokenize("c2");
        CHECK(hop.run_accepts(wd));
    }
}

TEST_CASE("determinized reach of the main automaton stays small") {
    Automaton reach = build_reach(zoo("amain"));
    int sink = *reach.state("@sink");
    // co-safety view from I: count reachable sink-free subsets (regression)
    FiniteAutomaton n;
    n.alphabet = reach.alphabet;
    n.resize(reach.state_count(), reach.alphabet.size());
    n.initial = reach.initial;
    for (const Transition& t : reach.transitions)
        n.add_edge(t.src, t.letter, t.dst);
    for (int s = 0; s < n.state_count; ++s)
        n.accepting[s] = s == sink;
    FiniteAutomaton d = determinize(n);
    CHECK(d.state_count < 200);
    CHECK(d.state_count == 11); // regression value, pinned by construction
}

TEST_CASE("prefix closure") {
    FiniteAutomaton theju = prefix_closure_dfa(zoo_finite("theju"));
    CHECK(theju.state_count == 6);
    FiniteAutomaton ty = prefix_closure_dfa(zoo_finite("theju_y"));
    const Alphabet& sigma = ty.alphabet;
    auto w = *sigma.tokenize("a y");
    CHECK(!ty.run_accepts(w));
    CHECK(ty.run_accepts(*sigma.tokenize("a b c")));
    CHECK(theju.run_accepts(*sigma.tokenize("a y a")));
}

TEST_CASE("fact suite json round trip") {
    FactSuite s = zoo_fact_suite("amain");
    FactSuite t = fact_suite_from_json(fact_suite_to_json(s));
    CHECK(t.automaton_key == s.automaton_key);
    CHECK(t.anchors.size() == s.anchors.size());
    REQUIRE(t.obligations.size() == s.obligations.size());
    for (size_t i = 0; i < s.obligations.size(); ++i) {
        CHECK(t.obligations[i].src == s.obligations[i].src);
        CHECK(t.obligations[i].target == s.obligations[i].target);
        CHECK(t.obligations[i].final_anchor == s.obligations[i].final_anchor);
    }
}
