#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "owb/automaton.hpp"

namespace owb {

// Max-parity game arena with priorities {0,1,2} on edges; even max wins for
// Eve. Every position has at least one outgoing edge (completion adds a
// losing self-loop for the stuck player).
struct GameArena {
    struct Edge {
        int dst;
        int priority;
    };
    std::vector<bool> eve_owned;
    std::vector<std::vector<Edge>> edges;
    std::vector<std::string> payload; // diagnostic labels
    int initial = 0;

    int size() const { return static_cast<int>(eve_owned.size()); }
    int add_position(bool eve, std::string label = {}) {
        eve_owned.push_back(eve);
        edges.emplace_back();
        payload.push_back(std::move(label));
        return size() - 1;
    }
    void add_edge(int src, int dst, int priority) { edges[src].push_back({dst, priority}); }
    void complete();
    std::string dump_json() const;
};

// Positional strategy: position -> chosen outgoing edge index (-1 unset).
using Strategy = std::vector<int>;

struct ParitySolution {
    std::vector<bool> eve_region;
    Strategy eve_strategy; // total on eve-owned positions in eve_region
};

// Zielonka attractor recursion specialized to priorities {0,1,2}.
ParitySolution solve_parity3(const GameArena& g);

// True iff every cycle of the strategy-restricted reachable subgraph has
// even maximal priority.
bool verify_strategy(const GameArena& g, const Strategy& s, int from);

// Simulation game of (spoiler, p) by (duplicator, q): Adam plays a letter
// and a spoiler transition, Eve answers with a duplicator transition.
// Priorities: Eve-significant 2, else Adam-significant 1, else 0.
struct SimulationArena {
    GameArena arena;
    // position lookup helpers for resolver construction
    int adam_states = 0, eve_states = 0, letters = 0;
    std::vector<int> p0;          // adam*eve -> position id (Adam to move)
    std::vector<int> p1;          // ((adam*eve)*letters + l)*2 + adam_sig -> id
    int p0_id(int adam, int eve) const { return p0[adam * eve_states + eve]; }
};
SimulationArena simulation_arena(const Automaton& spoiler, int p, const Automaton& duplicator,
                                 int q);

bool simulates(const Automaton& spoiler, int p, const Automaton& duplicator, int q);

// Two-token letter game characterizing history-determinism for Büchi
// automata: Adam feeds letters and maintains two tokens, Eve one; Eve must
// accept whenever either Adam token does. Used purely as an independent
// oracle.
struct TwoTokenResult {
    std::optional<bool> hd; // nullopt when skipped by the size bound
    std::string note;
    int64_t positions = 0;
};
TwoTokenResult decide_hd_two_token(const Automaton& a, int max_states = 40);

} // namespace owb
