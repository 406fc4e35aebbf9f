#pragma once

// Independent reference implementations used only by tests: they stay
// deliberately naive so they cannot share a bug with the library paths they
// check.

#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"

namespace oracle {

inline owb::Automaton random_automaton(std::mt19937_64& rng, int states, int letters,
                                       owb::Acceptance acc) {
    owb::Automaton a;
    std::vector<std::string> ls;
    for (int l = 0; l < letters; ++l)
        ls.push_back(std::string(1, static_cast<char>('a' + l)));
    a.alphabet = owb::Alphabet(ls);
    a.acceptance = acc;
    for (int s = 0; s < states; ++s)
        a.add_state("s" + std::to_string(s));
    a.initial = 0;
    for (int s = 0; s < states; ++s)
        for (int l = 0; l < letters; ++l) {
            int fan = 1 + static_cast<int>(rng() % 2);
            std::set<int> dsts;
            for (int k = 0; k < fan; ++k)
                dsts.insert(static_cast<int>(rng() % states));
            for (int d : dsts)
                a.add_transition(s, l, d, rng() % 3 == 0);
        }
    return a;
}

// Every canonical lasso with |u|+|v| <= max_len over `letters` letters.
inline std::vector<owb::Lasso> all_lassos(int letters, int max_len) {
    std::set<owb::Lasso> seen;
    std::vector<owb::Lasso> out;
    std::vector<int> word;
    // enumerate all words of length 1..max_len and all splits
    std::function<void()> rec = [&]() {
        int n = static_cast<int>(word.size());
        if (n >= 1) {
            for (int split = 0; split < n; ++split) {
                owb::Lasso l(std::vector<int>(word.begin(), word.begin() + split),
                             std::vector<int>(word.begin() + split, word.end()));
                owb::Lasso c = l.canonical();
                if (seen.insert(c).second)
                    out.push_back(c);
            }
        }
        if (n == max_len)
            return;
        for (int l = 0; l < letters; ++l) {
            word.push_back(l);
            rec();
            word.pop_back();
        }
    };
    rec();
    return out;
}

// First-principles acceptance of u·v^ω: explicit configuration graph
// (state, absolute position mod the lasso frame); for Büchi, search a
// reachable configuration that can reach itself through a significant
// transition; for coBüchi, a configuration that can reach a cycle using no
// significant transition.
inline bool lasso_accepts_bruteforce(const owb::Automaton& a, const owb::Lasso& w_in) {
    owb::Lasso w = w_in.canonical();
    int P = static_cast<int>(w.total_len());
    int wrap = static_cast<int>(w.prefix.size());
    auto next = [&](int pos) { return pos + 1 == P ? wrap : pos + 1; };
    auto letter = [&](int pos) { return w.at(static_cast<size_t>(pos)); };
    int N = a.state_count() * P;
    auto node = [&](int s, int pos) { return s * P + pos; };

    std::vector<bool> reach(N, false);
    std::deque<int> queue{node(a.initial, 0)};
    reach[queue.front()] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        int s = v / P, pos = v % P;
        for (int t : a.out(s, letter(pos))) {
            int nv = node(a.transitions[t].dst, next(pos));
            if (!reach[nv]) {
                reach[nv] = true;
                queue.push_back(nv);
            }
        }
    }

    if (a.acceptance == owb::Acceptance::Buchi) {
        // For each reachable config, BFS over (config, seen-significant) to
        // decide whether it can return to itself with a significant step.
        for (int anchor = 0; anchor < N; ++anchor) {
            if (!reach[anchor] || anchor % P < wrap)
                continue;
            std::vector<std::array<bool, 2>> seen(N, {false, false});
            std::deque<std::pair<int, bool>> q2{{anchor, false}};
            seen[anchor][0] = true;
            while (!q2.empty()) {
                auto [v, sig] = q2.front();
                q2.pop_front();
                int s = v / P, pos = v % P;
                for (int t : a.out(s, letter(pos))) {
                    bool nsig = sig || a.transitions[t].significant;
                    int nv = node(a.transitions[t].dst, next(pos));
                    if (nv == anchor && nsig)
                        return true;
                    if (!seen[nv][nsig]) {
                        seen[nv][nsig] = true;
                        q2.push_back({nv, nsig});
                    }
                }
            }
        }
        return false;
    }
    // coBüchi: a reachable config with a lasso of non-significant steps.
    for (int anchor = 0; anchor < N; ++anchor) {
        if (!reach[anchor] || anchor % P < wrap)
            continue;
        std::vector<bool> seen(N, false);
        std::deque<int> q2{anchor};
        seen[anchor] = true;
        while (!q2.empty()) {
            int v = q2.front();
            q2.pop_front();
            int s = v / P, pos = v % P;
            for (int t : a.out(s, letter(pos))) {
                if (a.transitions[t].significant)
                    continue;
                int nv = node(a.transitions[t].dst, next(pos));
                if (nv == anchor)
                    return true;
                if (!seen[nv]) {
                    seen[nv] = true;
                    q2.push_back(nv);
                }
            }
        }
    }
    return false;
}

// Myhill–Nerode style table-filling minimization: counts distinct classes of
// reachable states of a complete DFA.
inline int nerode_class_count(const owb::FiniteAutomaton& dfa) {
    const int n = dfa.state_count;
    const int L = dfa.alphabet.size();
    // reachable states
    std::vector<bool> reach(n, false);
    std::deque<int> queue{dfa.initial};
    reach[dfa.initial] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int l = 0; l < L; ++l)
            for (int t : dfa.delta[s][l])
                if (!reach[t]) {
                    reach[t] = true;
                    queue.push_back(t);
                }
    }
    std::vector<std::vector<bool>> diff(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dfa.accepting[i] != dfa.accepting[j])
                diff[i][j] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (diff[i][j])
                    continue;
                for (int l = 0; l < L; ++l) {
                    if (diff[dfa.delta[i][l][0]][dfa.delta[j][l][0]]) {
                        diff[i][j] = true;
                        changed = true;
                        break;
                    }
                }
            }
    }
    std::vector<int> cls(n, -1);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (!reach[i])
            continue;
        bool found = false;
        for (int j = 0; j < i && !found; ++j)
            if (reach[j] && !diff[i][j]) {
                cls[i] = cls[j];
                found = true;
            }
        if (!found)
            cls[i] = count++;
    }
    return count;
}

} // namespace oracle
