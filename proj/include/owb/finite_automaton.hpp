#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "owb/alphabet.hpp"

namespace owb {

struct Automaton;

// Finite-word automaton; NFA in general, flagged when deterministic.
// Transitions are adjacency lists per (state, letter).
struct FiniteAutomaton {
    std::string name;
    Alphabet alphabet;
    int state_count = 0;
    int initial = 0;
    std::vector<std::vector<std::vector<int>>> delta; // [state][letter] -> dsts
    std::vector<bool> accepting;
    bool deterministic = false;
    std::vector<std::string> state_names; // optional, may be empty

    void resize(int states, int letters) {
        state_count = states;
        delta.assign(states, std::vector<std::vector<int>>(letters));
        accepting.assign(states, false);
    }
    void add_edge(int s, int letter, int t) { delta[s][letter].push_back(t); }

    bool is_complete_dfa() const;
    bool run_accepts(const std::vector<int>& word) const; // direct simulation
    std::optional<int> run_end(const std::vector<int>& word) const; // DFA only
};

// Subset construction; output is deterministic and complete (explicit reject
// sink), language-equal to the input.
FiniteAutomaton determinize(const FiniteAutomaton& n);

// Adds a reject sink for missing edges of a deterministic automaton.
FiniteAutomaton complete_dfa(const FiniteAutomaton& d);

// Hopcroft minimization; input auto-completed. Output is the canonical
// minimal complete DFA (states numbered by BFS discovery order).
FiniteAutomaton minimize_dfa(const FiniteAutomaton& d);

struct WordVerdict {
    bool holds = false;
    std::optional<std::vector<int>> witness; // shortest counterexample
};

// Language equality / inclusion of deterministic automata (auto-completed),
// with a shortest distinguishing word on failure. Ties in the BFS are broken
// by alphabet order, so witnesses are deterministic.
WordVerdict dfa_equivalent(const FiniteAutomaton& d1, const FiniteAutomaton& d2);
WordVerdict dfa_included(const FiniteAutomaton& d1, const FiniteAutomaton& d2);

// L(n) ⊆ L(d) for deterministic d; shortest witness word on failure.
WordVerdict nfa_included_in_dfa(const FiniteAutomaton& n, const FiniteAutomaton& d);

// L(n) ⊆ L(m) for an arbitrary NFA m, via on-the-fly determinization of m
// inside the product. Used for large structured monitors.
WordVerdict nfa_included_in_nfa(const FiniteAutomaton& n, const FiniteAutomaton& m);

// Constraints for path_language: which finite words label a path src -> dst
// of an ω-automaton.
enum class SignificanceFilter { All, OnlyNonSignificant };
struct PathConstraints {
    std::vector<int> forbidden_intermediate; // states excluded strictly inside
    SignificanceFilter significance = SignificanceFilter::All;
    bool require_final_significant = false;
    // When nonempty, these transition ids are excluded except as final step;
    // the final step must be one of them iff require_final_from_set.
    std::vector<int> excluded_transitions;
    bool require_final_from_set = false;
};
FiniteAutomaton path_language(const Automaton& a, int src, int dst,
                              const PathConstraints& c = {});

// DFA with labelled final states 1..k and an implicit reject sink; every
// letter from a final state rejects, so "classified as α" means the run ends
// exactly at final state α with no earlier final visit.
struct ClassifierDfa {
    FiniteAutomaton dfa; // deterministic, complete
    std::map<int, int> finals; // state -> label index
    std::optional<int> classify(const std::vector<int>& word) const;
};

// DFA of finite prefixes of the safety language of a deterministic safety
// automaton (all states accepting, missing edges = reject). States that
// cannot continue forever are pruned.
FiniteAutomaton prefix_closure_dfa(const FiniteAutomaton& safety);

// Product-intersection of two automata over the same alphabet (accepting =
// both accepting). Reachable part only.
FiniteAutomaton product_intersection(const FiniteAutomaton& x, const FiniteAutomaton& y);

bool language_empty(const FiniteAutomaton& n);

} // namespace owb
