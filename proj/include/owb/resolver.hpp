#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "owb/automaton.hpp"
#include "owb/game.hpp"
#include "owb/hd.hpp"

namespace owb {

// Deterministic transducer resolving the nondeterminism of a simplified
// Büchi automaton: alongside the actual run it follows an auxiliary
// deterministic run of reach(a) started at the covering good state, playing
// Eve's winning strategy of the corresponding reach-simulation game; each
// significant step restarts the auxiliary run at the new state's cover.
class Resolver {
public:
    Resolver(const Automaton& a, const SimplifiedCertificate& cert);

    struct State {
        int current;   // state of a
        int aux;       // state of reach(a) for the auxiliary run
        int pair;      // index of the active covering pair, -1 when copycat
    };
    State start() const;
    // Feeds one letter; returns the chosen transition id of a.
    int step(State& st, int letter) const;

    const Automaton& automaton() const { return a_; }

    // Exact acceptance of the induced run on u·v^ω (memory is finite, so the
    // run is eventually periodic; acceptance is read off the cycle).
    struct CycleVerdict {
        bool accepting = false;
        int cycle_start = 0;
        int cycle_len = 0;
    };
    CycleVerdict run_on_lasso(const Lasso& w) const;

private:
    const Automaton a_;
    Automaton reach_;
    int sink_ = -1;
    std::map<int, int> cover_; // every state -> covering good state (self if good)
    struct Pair {
        SimulationArena arena;
        Strategy strategy;
    };
    std::vector<Pair> pairs_;          // one per non-good state
    std::map<int, int> pair_of_state_; // non-good state -> index into pairs_

    int choose(const State& st, int letter, int* next_aux) const;
};

} // namespace owb
