#pragma once

#include <stdexcept>
#include <string>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"

namespace owb {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Native JSON: {name, alphabet:[...], states:[...], initial,
// acceptance:"buchi"|"cobuchi", transitions:[[src,letter,dst,significant]*]}.
// Finite automata use acceptance:"finite" with an accepting:[ids] field; a
// classifier adds finals:{state:index}.
std::string to_json(const Automaton& a);
Automaton automaton_from_json(const std::string& text);
std::string to_json(const FiniteAutomaton& f);
std::string to_json(const ClassifierDfa& c);
FiniteAutomaton finite_from_json(const std::string& text);

// HOA subset: v1 header, single Start, AP bits encoding letter indices as
// minterms, Acceptance "1 Inf(0)" (Büchi) or "1 Fin(0)" (coBüchi),
// significant transitions marked {0}, explicit labels only. Letter names
// ride along in an "x-letters:" header and round-trip. Anything outside the
// subset is rejected with a diagnostic.
std::string to_hoa(const Automaton& a);
Automaton automaton_from_hoa(const std::string& text);

// Dispatch on extension: .hoa / .json; "zoo:<key>" or a bare zoo key loads
// from the built-in collection.
Automaton load_automaton(const std::string& spec);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace owb
