#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "owb/alphabet.hpp"
#include "owb/lasso.hpp"

namespace owb {

struct FiniteAutomaton;

enum class Acceptance { Buchi, CoBuchi };

struct Transition {
    int src = 0;
    int letter = 0;
    int dst = 0;
    bool significant = false;

    bool operator==(const Transition& o) const {
        return src == o.src && letter == o.letter && dst == o.dst &&
               significant == o.significant;
    }
};

// Transition-based Büchi/coBüchi automaton. Immutable by convention once
// built: all operations return fresh automata.
struct Automaton {
    std::string name;
    Alphabet alphabet;
    std::vector<std::string> state_names;
    int initial = 0;
    Acceptance acceptance = Acceptance::Buchi;
    std::vector<Transition> transitions;

    int state_count() const { return static_cast<int>(state_names.size()); }

    int add_state(const std::string& n) {
        state_names.push_back(n);
        index_.clear();
        return state_count() - 1;
    }
    void add_transition(int src, int letter, int dst, bool significant) {
        transitions.push_back({src, letter, dst, significant});
    }
    void add_transition(int src, int letter, int dst) {
        add_transition(src, letter, dst, false);
    }

    std::optional<int> state(const std::string& n) const;

    // Indices of transitions leaving (state, letter); built lazily.
    const std::vector<int>& out(int state, int letter) const;
    // Indices of all transitions leaving state.
    std::vector<int> out_all(int state) const;

private:
    // state*|Σ|+letter -> transition ids; rebuilt when the transition count
    // changes (callers must not edit transitions in place)
    mutable std::vector<std::vector<int>> index_;
    mutable size_t indexed_count_ = 0;
    void build_index() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Reports every invariant violation: out-of-range ids, duplicate
// (src,letter,dst) triples, unreachable states. Never throws.
ValidationReport validate(const Automaton& a);

// Drops states unreachable from the initial state.
Automaton trim(const Automaton& a);

bool is_deterministic(const Automaton& a);

// Reachability automaton: one fresh sink with significant self-loops on
// every letter, every significant transition redirected to it.
Automaton build_reach(const Automaton& a);

// Safety NFA of a coBüchi automaton: the non-significant part over finite
// words, every state accepting.
FiniteAutomaton build_safe(const Automaton& a);

struct SccResult {
    std::vector<int> component;          // state -> component id
    std::vector<std::vector<int>> members; // topological order
    std::vector<bool> nontrivial;        // >1 state, or a self-loop
    std::vector<std::pair<int, int>> dag_edges;
    int count() const { return static_cast<int>(members.size()); }
};

using TransitionFilter = std::function<bool(const Transition&)>;

// Tarjan SCCs of the subgraph of transitions satisfying the predicate
// (default: all transitions). Components come out in topological order.
SccResult scc_decomposition(const Automaton& a, const TransitionFilter& filter = {});

// Makes significant every non-significant transition that changes SCC of the
// non-significant subgraph. Idempotent.
Automaton normalize(const Automaton& a);
bool is_normal(const Automaton& a);

// States whose accessible part of reach(a) is deterministic.
std::vector<int> good_states(const Automaton& a);

// Exact acceptance of u·v^ω; Büchi and coBüchi both handled.
bool lasso_accepts(const Automaton& a, const Lasso& w);

// Emptiness of L(a) ∩ L(c) for Büchi a and coBüchi c over the same alphabet.
// Returns true when empty; otherwise a witness lasso accepted by both.
struct IntersectionResult {
    bool empty = true;
    std::optional<Lasso> witness;
};
IntersectionResult buchi_cobuchi_intersection_empty(const Automaton& a, const Automaton& c);

// Replaces transition t by (t.src, t.letter, new_dst, new_significant).
// With rewire_mode, all other transitions on (t.src, t.letter) are dropped.
Automaton redirect_transition(const Automaton& a, const Transition& t, int new_dst,
                              bool new_significant, bool rewire_mode = false);

// Structural isomorphism (initial, letters, destinations, significance
// preserved). Backtracking over signature-compatible candidates.
struct IsomorphismResult {
    bool isomorphic = false;
    std::vector<int> mapping; // a-state -> b-state
};
IsomorphismResult isomorphic(const Automaton& a, const Automaton& b);

} // namespace owb
