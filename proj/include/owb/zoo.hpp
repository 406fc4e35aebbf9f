#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"

namespace owb {

// Expectations a zoo automaton is checked against at load time.
struct ZooExpectations {
    int state_count = -1;
    std::optional<bool> deterministic;
    std::optional<bool> normal;
    // (state, letter) pairs carrying more than one outgoing transition.
    std::optional<std::vector<std::pair<std::string, std::string>>> nondet_slots;
};

struct ZooEntry {
    std::string key;
    std::string origin; // what the automaton is, in one line
    std::function<Automaton()> build;
    ZooExpectations expect;
};

// ω-automata of the collection, by key:
//   abkks, fig2_nonhd, astrong, dstrong, aweak, dweak, areplace, amain, cmain
const std::vector<ZooEntry>& zoo_entries();
Automaton zoo(const std::string& key);
const ZooEntry& zoo_entry(const std::string& key);

// Finite-word machines: theju, theju_y (safety DFAs over the 16-letter
// alphabet; all states accepting, missing edges reject).
FiniteAutomaton zoo_finite(const std::string& key);
std::vector<std::string> zoo_finite_keys();

// The classifier over the 16-letter alphabet defining the segment languages
// 1..6 (finals labelled by index).
ClassifierDfa zoo_classifier();

// Alphabets shared across the collection.
Alphabet alphabet_main();    // a b c 1..6 r1..r6 y
Alphabet alphabet_strong();  // a b c x y
Alphabet alphabet_weak();    // a b c x y ra rb rc
Alphabet alphabet_replace(); // a b c 1 2
Alphabet alphabet_bkks();    // x a b

// Good-state coverings asserted (and then game-verified) for the collection.
std::map<std::string, std::string> covering_hints(const std::string& key);

} // namespace owb
