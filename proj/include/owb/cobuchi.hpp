#pragma once

#include <optional>
#include <string>
#include <vector>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"
#include "owb/hd.hpp"

namespace owb {

// Safe-component view of a coBüchi automaton: SCC partition of the
// non-significant subgraph plus per-state safe-language machinery.
struct SafeComponentView {
    const Automaton* automaton = nullptr;
    FiniteAutomaton safe; // non-significant part, all states accepting
    SccResult components; // over the non-significant subgraph

    explicit SafeComponentView(const Automaton& c);
    // Prefix DFA of the safe language of state q (live prefixes only).
    FiniteAutomaton safe_prefix_dfa(int q) const;
};

// Complement of a simplified Büchi automaton: a coBüchi automaton on its
// good states whose non-significant part is the good states' original
// non-significant structure and whose significant transitions go from every
// state to every state on every letter (duplicates of existing triples are
// skipped); initial = cover of the original initial state.
Automaton hd_complement(const Automaton& a, const SimplifiedCertificate& cert);

bool is_safe_deterministic(const Automaton& c);
bool is_normal_cobuchi(const Automaton& c);

// Structural language-equivalence certificate: from every state there is a
// transition to every state on every letter, so all states are equivalent.
bool all_states_equivalent_structurally(const Automaton& c);

struct SafeMinimalResult {
    bool safe_minimal = false;
    // one shortest distinguishing word per unordered state pair
    std::vector<std::tuple<int, int, std::vector<int>>> distinguishing;
    std::optional<std::pair<int, int>> failing_pair;
};
SafeMinimalResult is_safe_minimal(const Automaton& c);

struct SafeCentralisedResult {
    bool safe_centralised = false;
    std::optional<std::pair<int, int>> failing_pair;
};
SafeCentralisedResult is_safe_centralised(const Automaton& c);

// True iff safe-deterministic and every (state, letter, state) triple has a
// significant transition; then the longest-safe-suffix resolver below is an
// HD-resolver.
bool cobuchi_hd_sufficient(const Automaton& c);

// The longest-suffix resolver: follows safe transitions while they exist;
// otherwise jumps (significantly) to the state with the longest safe run
// over a suffix of the input read so far.
struct SuffixResolverVerdict {
    bool accepting = false;
};
SuffixResolverVerdict run_suffix_resolver(const Automaton& c, const Lasso& w);

struct CobuchiMinimalityReport {
    bool hd_sufficient = false;
    bool normal = false;
    bool safe_deterministic = false;
    bool sd_structural = false;
    bool safe_minimal = false;
    bool safe_centralised = false;
    size_t distinguishing_words = 0;
    bool statewise_minimal() const {
        return hd_sufficient && normal && safe_deterministic && sd_structural && safe_minimal &&
               safe_centralised;
    }
};
CobuchiMinimalityReport cobuchi_minimality_verdict(const Automaton& c);

// Restriction of an automaton to a letter subset, trimmed.
Automaton restrict_alphabet(const Automaton& a, const std::vector<std::string>& letters);
FiniteAutomaton restrict_alphabet(const FiniteAutomaton& f, const std::vector<std::string>& letters);

} // namespace owb
