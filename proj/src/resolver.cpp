#include "owb/resolver.hpp"

#include <stdexcept>

namespace owb {

Resolver::Resolver(const Automaton& a, const SimplifiedCertificate& cert) : a_(a) {
    if (!cert.simplified)
        throw std::invalid_argument("resolver needs a simplified certificate");
    reach_ = build_reach(a);
    sink_ = *reach_.state("@sink");
    for (int g : cert.good)
        cover_[g] = g;
    for (auto [p, q] : cert.covering)
        cover_[p] = q;
    for (int s = 0; s < a.state_count(); ++s)
        if (!cover_.count(s))
            throw std::invalid_argument("covering incomplete at " + a.state_names[s]);
    // One solved reach-simulation game per covered non-good state.
    for (auto [p, q] : cert.covering) {
        Pair pr{simulation_arena(reach_, q, reach_, p), {}};
        ParitySolution sol = solve_parity3(pr.arena.arena);
        if (!sol.eve_region[pr.arena.arena.initial])
            throw std::invalid_argument("covering pair is not won by Eve");
        pr.strategy = std::move(sol.eve_strategy);
        pair_of_state_[p] = static_cast<int>(pairs_.size());
        pairs_.push_back(std::move(pr));
    }
}

Resolver::State Resolver::start() const {
    State st;
    st.current = a_.initial;
    st.aux = cover_.at(a_.initial);
    auto it = pair_of_state_.find(a_.initial);
    st.pair = it == pair_of_state_.end() ? -1 : it->second;
    return st;
}

int Resolver::choose(const State& st, int letter, int* next_aux) const {
    // Advance the auxiliary deterministic run in reach(a).
    int aux_dst = -1;
    bool aux_sig = false;
    {
        const auto& ts = reach_.out(st.aux, letter);
        if (ts.empty())
            throw std::logic_error("auxiliary reach run is stuck");
        aux_dst = reach_.transitions[ts[0]].dst;
        aux_sig = reach_.transitions[ts[0]].significant;
        for (int t : ts)
            if (reach_.transitions[t].dst != aux_dst)
                throw std::logic_error("auxiliary reach run is not deterministic");
    }
    *next_aux = aux_dst;
    (void)aux_sig;
    if (st.pair < 0) {
        // Copycat mode: the current state is good, its reach behaviour is
        // deterministic; emit the unique transition (smallest target among
        // merged significant ones).
        const auto& ts = a_.out(st.current, letter);
        if (ts.empty())
            throw std::logic_error("resolver: no transition available");
        int best = ts[0];
        for (int t : ts)
            if (a_.transitions[t].dst < a_.transitions[best].dst)
                best = t;
        return best;
    }
    const Pair& pr = pairs_[st.pair];
    // Eve is at st.current (in reach), Adam's token just moved to aux_dst on
    // `letter`; look up Eve's strategy edge.
    int sig_flag = aux_sig ? 1 : 0;
    int pos = pr.arena.p1[((static_cast<size_t>(aux_dst) * pr.arena.eve_states + st.current) *
                               pr.arena.letters +
                           letter) *
                              2 +
                          sig_flag];
    if (pos < 0)
        throw std::logic_error("resolver: unexplored game position");
    int edge = pr.strategy[pos];
    if (edge < 0)
        throw std::logic_error("resolver: strategy undefined on a reachable position");
    // Decode Eve's move: find the duplicator transition this edge encodes.
    // Edges of a P1 position correspond to reach-transitions of Eve from
    // st.current on `letter`, in emission order.
    const auto& ts = reach_.out(st.current, letter);
    if (edge >= static_cast<int>(ts.size()))
        throw std::logic_error("resolver: strategy edge out of range");
    int reach_t = ts[edge];
    bool to_sink = reach_.transitions[reach_t].dst == sink_;
    if (!to_sink) {
        // Non-significant move: the same transition exists in a.
        for (int t : a_.out(st.current, letter))
            if (!a_.transitions[t].significant &&
                a_.transitions[t].dst == reach_.transitions[reach_t].dst)
                return t;
        throw std::logic_error("resolver: reach move has no counterpart");
    }
    // Significant move: pick the canonical significant transition of a.
    int best = -1;
    for (int t : a_.out(st.current, letter))
        if (a_.transitions[t].significant)
            if (best < 0 || a_.transitions[t].dst < a_.transitions[best].dst)
                best = t;
    if (best < 0)
        throw std::logic_error("resolver: significant move has no counterpart");
    return best;
}

int Resolver::step(State& st, int letter) const {
    int next_aux = -1;
    int t = choose(st, letter, &next_aux);
    const Transition& tr = a_.transitions[t];
    if (tr.significant) {
        // Restart the auxiliary run at the cover of the new state.
        st.current = tr.dst;
        st.aux = cover_.at(tr.dst);
        auto it = pair_of_state_.find(tr.dst);
        st.pair = it == pair_of_state_.end() ? -1 : it->second;
    } else {
        st.current = tr.dst;
        st.aux = next_aux;
    }
    return t;
}

Resolver::CycleVerdict Resolver::run_on_lasso(const Lasso& word) const {
    Lasso w = word.canonical();
    CycleVerdict v;
    State st = start();
    for (int l : w.prefix)
        step(st, l);
    // Iterate the period until the memory repeats at position 0 of the
    // period, recording significant steps per iteration.
    std::map<std::tuple<int, int, int>, int> seen; // memory -> iteration
    std::vector<bool> sig_in_iter;
    int iter = 0;
    while (true) {
        auto key = std::make_tuple(st.current, st.aux, st.pair);
        auto it = seen.find(key);
        if (it != seen.end()) {
            v.cycle_start = it->second;
            v.cycle_len = iter - it->second;
            for (int k = it->second; k < iter; ++k)
                v.accepting = v.accepting || sig_in_iter[k];
            return v;
        }
        seen.emplace(key, iter);
        bool sig = false;
        for (int l : w.period) {
            int t = step(st, l);
            sig = sig || a_.transitions[t].significant;
        }
        sig_in_iter.push_back(sig);
        ++iter;
    }
}

} // namespace owb
