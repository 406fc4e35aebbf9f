#pragma once

#include <string>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"

namespace owb {

// A reference ω-language carried by a Büchi monitor of the shape
// (Σ* · X · Σ* · y)^ω; the absorbing initial loop makes the language
// prefix-independent by construction.
struct ReferenceLanguage {
    std::string key;
    Automaton monitor;
    bool member(const Lasso& w) const { return lasso_accepts(monitor, w); }
};

// Known keys: "lmain", "lstrong", "lweak".
ReferenceLanguage reference(const std::string& key);
std::vector<std::string> reference_keys();

// Finite-word targets used by fact suites, by key. Deterministic and
// complete unless the name ends in "!nfa" (then inclusion checks use the
// on-the-fly subset product).
//
//   main:seg<j>           words classified into segment j
//   main:seg_or_reset<j>  segment j or anything ending with the j-th reset
//   main:reset_suffix<j>  Σ* r_j
//   main:ends_y           Σ* y
//   main:roundtrip!nfa    Σ* · X · Σ* · y over the 16-letter alphabet
//   strong:ends_x<g>      Σ* x g          (g in {a,b,c})
//   strong:ends_y         Σ* y
//   strong:infix_neq      Σ* (⋃_{g≠h} L_g L_h) Σ*
//   strong:infix_eq       Σ* (⋃_g L_g L_g) Σ*
//   strong:infix_y        Σ* y Σ*
//   weak:ends_x<g>        Σ* x g over the 8-letter alphabet
//   weak:ends_x_or_r<g>   Σ* x g  +  Σ* r_g
//   weak:reset_suffix<g>  Σ* r_g
//   weak:ends_y           Σ* y
//   *:empty               the empty language
FiniteAutomaton target_language(const std::string& key);

} // namespace owb
