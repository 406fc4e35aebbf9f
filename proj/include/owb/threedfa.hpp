#pragma once

#include <optional>
#include <string>
#include <vector>

#include "owb/finite_automaton.hpp"
#include "owb/sat.hpp"

namespace owb {

// DFA-shaped structure whose states are labelled accept / reject / don't
// care; its minimization asks for the smallest complete DFA agreeing with
// the labels of all reachable words. Missing transitions mean the rejecting
// sink.
struct ThreeDfa {
    enum class Label { Accept, Reject, DontCare };
    std::string name;
    Alphabet alphabet;
    int state_count = 0;
    int initial = 0;
    std::vector<std::vector<int>> delta; // [state][letter] -> state or -1
    std::vector<Label> labels;

    void resize(int states, int letters) {
        state_count = states;
        delta.assign(states, std::vector<int>(letters, -1));
        labels.assign(states, Label::DontCare);
    }

    // Normal form: explicit absorbing reject sink for missing edges, no
    // outgoing edges from reject states.
    ThreeDfa normal_form() const;
};

// Text format: "N L" header, "i s" initial, "t s a s'" transitions,
// "a s" accepting, "r s" rejecting; "--" starts a comment.
ThreeDfa threedfa_from_text(const std::string& text);
std::string threedfa_to_text(const ThreeDfa& t);

// Label-preserving isomorphism of normal forms.
bool threedfa_isomorphic(const ThreeDfa& x, const ThreeDfa& y);

// Product of two prefix DFAs (complete, accepting = live): Accept where the
// lower side is alive, Reject where the upper side is dead, DontCare in
// between. Throws when lower ⊄ upper (an Accept/Reject conflict).
ThreeDfa build_separation_3dfa(const FiniteAutomaton& lower, const FiniteAutomaton& upper);

// CNF satisfiable iff a complete k-state DFA consistent with the 3-DFA
// exists: one-hot transition variables, acceptance bits, reachability
// closure, and "every state has an incoming edge from a smaller state" as
// symmetry breaking.
CnfInstance encode_exists_kdfa(const ThreeDfa& t, int k);

// Extracts the DFA from a model of encode_exists_kdfa(t, k).
FiniteAutomaton decode_dfa(const CnfInstance& f, const SatResult& model, const ThreeDfa& t,
                           int k);

// Exact end-to-end gate: lower ⊆ L(B) ⊆ upper as word languages.
bool verify_separator(const FiniteAutomaton& b, const FiniteAutomaton& lower,
                      const FiniteAutomaton& upper);

struct MinSeparatorResult {
    int size = -1; // smallest k with Sat, -1 if none ≤ k_max
    std::vector<SatResult::Status> ladder;
    FiniteAutomaton witness;
};
MinSeparatorResult min_separator_size(const ThreeDfa& t, int k_max,
                                      const SatBudget& budget = {});

// The four packaged separation instances (keys p2, p5, sq1, sq4): hand-typed
// 16-state 3-DFAs over {a,b,c,1,4}.
ThreeDfa separation_instance(const std::string& key);
std::vector<std::string> separation_instance_keys();

// The same instances generated from the collection: product of the
// no-segment prefix language with the safe-language prefixes of the
// complement automaton from the matching state, both restricted to
// {a,b,c,1,4}.
ThreeDfa generated_separation_instance(const std::string& key);

} // namespace owb
