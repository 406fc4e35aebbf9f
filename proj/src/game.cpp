#include "owb/game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace owb {

void GameArena::complete() {
    for (int v = 0; v < size(); ++v)
        if (edges[v].empty())
            add_edge(v, v, eve_owned[v] ? 1 : 2); // stuck player loses
}

std::string GameArena::dump_json() const {
    std::ostringstream os;
    os << "{\"initial\":" << initial << ",\"positions\":[";
    for (int v = 0; v < size(); ++v) {
        if (v)
            os << ",";
        os << "{\"owner\":\"" << (eve_owned[v] ? "eve" : "adam") << "\",\"payload\":\""
           << payload[v] << "\",\"edges\":[";
        for (size_t e = 0; e < edges[v].size(); ++e) {
            if (e)
                os << ",";
            os << "{\"dst\":" << edges[v][e].dst << ",\"priority\":" << edges[v][e].priority
               << "}";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

namespace {

// Node-priority view of the arena: every edge of priority > 0 is split
// through a midpoint node carrying that priority. Zielonka's recursion then
// runs in its textbook node-based form.
struct SplitGame {
    int n = 0;                      // total nodes (originals first)
    int originals = 0;
    std::vector<bool> eve;          // owner (midpoints: Adam, irrelevant)
    std::vector<int> priority;      // node priority
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<int>> pred;
    // midpoint -> (original src, edge index); originals -> (-1,-1)
    std::vector<std::pair<int, int>> origin;

    explicit SplitGame(const GameArena& g) {
        originals = g.size();
        n = originals;
        eve.assign(originals, false);
        priority.assign(originals, 0);
        origin.assign(originals, {-1, -1});
        succ.assign(originals, {});
        for (int v = 0; v < originals; ++v)
            eve[v] = g.eve_owned[v];
        for (int v = 0; v < originals; ++v) {
            for (size_t e = 0; e < g.edges[v].size(); ++e) {
                const auto& ed = g.edges[v][e];
                if (ed.priority == 0) {
                    succ[v].push_back(ed.dst);
                } else {
                    int mid = n++;
                    eve.push_back(false);
                    priority.push_back(ed.priority);
                    succ.emplace_back();
                    origin.push_back({v, static_cast<int>(e)});
                    succ[v].push_back(mid);
                    succ[mid].push_back(ed.dst);
                }
            }
        }
        pred.assign(n, {});
        for (int v = 0; v < n; ++v)
            for (int u : succ[v])
                pred[u].push_back(v);
    }
};

struct ZSolver {
    const SplitGame& s;
    std::vector<int> eve_choice; // original eve node -> chosen successor (split id)

    explicit ZSolver(const SplitGame& s_) : s(s_) { eve_choice.assign(s.n, -1); }

    // Attractor of target (within alive) for `for_eve`; records choices for
    // the attracting player's nodes.
    std::vector<char> attract(const std::vector<char>& alive, const std::vector<char>& target,
                              bool for_eve, std::vector<int>* choice) {
        std::vector<char> in(s.n, 0);
        std::vector<int> out_count(s.n, 0);
        for (int v = 0; v < s.n; ++v) {
            if (!alive[v])
                continue;
            int c = 0;
            for (int u : s.succ[v])
                if (alive[u])
                    ++c;
            out_count[v] = c;
        }
        std::deque<int> queue;
        for (int v = 0; v < s.n; ++v)
            if (alive[v] && target[v]) {
                in[v] = 1;
                queue.push_back(v);
            }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : s.pred[v]) {
                if (!alive[u] || in[u])
                    continue;
                if (s.eve[u] == for_eve) {
                    in[u] = 1;
                    if (choice)
                        (*choice)[u] = v;
                    queue.push_back(u);
                } else if (--out_count[u] == 0) {
                    in[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        return in;
    }

    // Returns eve-winning region of the subgame `alive`; fills eve_choice on
    // Eve's winning nodes (as split-graph successor choices).
    std::vector<char> solve(std::vector<char> alive) {
        int p = -1;
        for (int v = 0; v < s.n; ++v)
            if (alive[v])
                p = std::max(p, s.priority[v]);
        std::vector<char> none(s.n, 0);
        if (p < 0)
            return none;
        if (p == 0) {
            // Only priority 0 remains: Eve wins everywhere; any live choice.
            for (int v = 0; v < s.n; ++v)
                if (alive[v] && s.eve[v])
                    for (int u : s.succ[v])
                        if (alive[u]) {
                            eve_choice[v] = u;
                            break;
                        }
            return alive;
        }
        bool sigma_eve = p % 2 == 0;
        std::vector<char> head(s.n, 0);
        for (int v = 0; v < s.n; ++v)
            if (alive[v] && s.priority[v] == p)
                head[v] = 1;
        std::vector<int> head_choice(s.n, -1);
        std::vector<char> a =
            attract(alive, head, sigma_eve, sigma_eve ? &head_choice : nullptr);
        std::vector<char> rest(s.n, 0);
        for (int v = 0; v < s.n; ++v)
            rest[v] = alive[v] && !a[v];
        std::vector<char> eve_rest = solve(rest);
        bool opp_empty = true;
        for (int v = 0; v < s.n; ++v)
            if (rest[v] && (sigma_eve ? !eve_rest[v] : eve_rest[v]))
                opp_empty = false;
        if (opp_empty) {
            if (sigma_eve) {
                // Eve wins all of `alive`: attractor choices on A \ head,
                // any live successor on her head/U nodes not yet set.
                for (int v = 0; v < s.n; ++v) {
                    if (!alive[v] || !s.eve[v])
                        continue;
                    if (a[v] && head_choice[v] >= 0)
                        eve_choice[v] = head_choice[v];
                    if (eve_choice[v] < 0 || !alive[eve_choice[v]])
                        for (int u : s.succ[v])
                            if (alive[u]) {
                                eve_choice[v] = u;
                                break;
                            }
                }
                return alive;
            }
            return none; // Adam wins everything
        }
        // Opponent of sigma wins their sub-region outright; peel its
        // attractor and re-solve.
        std::vector<char> opp_region(s.n, 0);
        for (int v = 0; v < s.n; ++v)
            if (rest[v] && (sigma_eve ? !eve_rest[v] : eve_rest[v]))
                opp_region[v] = 1;
        std::vector<char> b;
        if (!sigma_eve) {
            // The opponent here is Eve: record her attractor choices.
            std::vector<int> ch(s.n, -1);
            b = attract(alive, opp_region, true, &ch);
            for (int v = 0; v < s.n; ++v)
                if (b[v] && !opp_region[v] && s.eve[v] && ch[v] >= 0)
                    eve_choice[v] = ch[v];
        } else {
            b = attract(alive, opp_region, false, nullptr);
        }
        std::vector<char> remaining(s.n, 0);
        for (int v = 0; v < s.n; ++v)
            remaining[v] = alive[v] && !b[v];
        std::vector<char> eve_rem = solve(remaining);
        std::vector<char> result(s.n, 0);
        for (int v = 0; v < s.n; ++v) {
            if (sigma_eve)
                result[v] = eve_rem[v];
            else
                result[v] = eve_rem[v] || b[v];
        }
        return result;
    }
};

} // namespace

ParitySolution solve_parity3(const GameArena& g) {
    SplitGame s(g);
    ZSolver z(s);
    std::vector<char> alive(s.n, 1);
    std::vector<char> eve = z.solve(alive);

    ParitySolution out;
    out.eve_region.assign(g.size(), false);
    for (int v = 0; v < g.size(); ++v)
        out.eve_region[v] = eve[v];
    out.eve_strategy.assign(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (!eve[v] || !g.eve_owned[v])
            continue;
        int choice = z.eve_choice[v];
        int edge = -1;
        if (choice >= 0) {
            if (choice < s.originals) {
                // priority-0 edge straight to an original node
                for (size_t e = 0; e < g.edges[v].size(); ++e)
                    if (g.edges[v][e].priority == 0 && g.edges[v][e].dst == choice &&
                        eve[g.edges[v][e].dst]) {
                        edge = static_cast<int>(e);
                        break;
                    }
            } else {
                edge = s.origin[choice].second;
            }
        }
        if (edge < 0 || !eve[g.edges[v][edge].dst]) {
            for (size_t e = 0; e < g.edges[v].size(); ++e)
                if (eve[g.edges[v][e].dst]) {
                    edge = static_cast<int>(e);
                    break;
                }
        }
        out.eve_strategy[v] = edge;
    }
    return out;
}

namespace {

// Successors of a position when Eve follows s and Adam moves freely.
std::vector<GameArena::Edge> strategy_succs(const GameArena& g, const Strategy& s, int v) {
    std::vector<GameArena::Edge> out;
    if (g.eve_owned[v]) {
        if (s[v] >= 0 && s[v] < static_cast<int>(g.edges[v].size()))
            out.push_back(g.edges[v][s[v]]);
    } else {
        out = g.edges[v];
    }
    return out;
}

// Tarjan SCC ids over an explicit adjacency list; -1 for unvisited entries.
std::vector<int> scc_ids(int n, const std::vector<std::vector<int>>& adj,
                         const std::vector<char>& active, int* count_out) {
    std::vector<int> comp(n, -1), index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;
    for (int root = 0; root < n; ++root) {
        if (!active[root] || index[root] != -1)
            continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child < adj[v].size()) {
                int u = adj[v][child++];
                if (!active[u])
                    continue;
                if (index[u] == -1) {
                    index[u] = low[u] = next_index++;
                    stack.push_back(u);
                    on_stack[u] = true;
                    call.push_back({u, 0});
                } else if (on_stack[u]) {
                    low[v] = std::min(low[v], index[u]);
                }
            } else {
                if (low[v] == index[v]) {
                    int u;
                    do {
                        u = stack.back();
                        stack.pop_back();
                        on_stack[u] = false;
                        comp[u] = comp_count;
                    } while (u != v);
                    ++comp_count;
                }
                int vd = v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[vd]);
            }
        }
    }
    if (count_out)
        *count_out = comp_count;
    return comp;
}

} // namespace

bool verify_strategy(const GameArena& g, const Strategy& s, int from) {
    const int n = g.size();
    if (from < 0 || from >= n)
        return false;
    std::vector<char> reach(n, 0);
    std::deque<int> queue{from};
    reach[from] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (g.eve_owned[v] && (s[v] < 0 || s[v] >= static_cast<int>(g.edges[v].size())))
            return false; // Eve stuck
        for (const auto& e : strategy_succs(g, s, v))
            if (!reach[e.dst]) {
                reach[e.dst] = 1;
                queue.push_back(e.dst);
            }
    }
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        if (reach[v])
            for (const auto& e : strategy_succs(g, s, v))
                adj[v].push_back(e.dst);
    int comp_count = 0;
    std::vector<int> comp = scc_ids(n, adj, reach, &comp_count);
    // Within each SCC: after removing priority-2 edges, no cycle may contain
    // a priority-1 edge.
    std::vector<std::vector<int>> low_adj(n);
    for (int v = 0; v < n; ++v)
        if (reach[v])
            for (const auto& e : strategy_succs(g, s, v))
                if (comp[e.dst] == comp[v] && e.priority <= 1)
                    low_adj[v].push_back(e.dst);
    std::vector<int> low_comp = scc_ids(n, low_adj, reach, nullptr);
    for (int v = 0; v < n; ++v) {
        if (!reach[v])
            continue;
        for (const auto& e : strategy_succs(g, s, v))
            if (e.priority == 1 && comp[e.dst] == comp[v] && low_comp[e.dst] == low_comp[v])
                return false;
    }
    return true;
}

SimulationArena simulation_arena(const Automaton& spoiler, int p, const Automaton& duplicator,
                                 int q) {
    if (spoiler.alphabet != duplicator.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    SimulationArena out;
    const int ne = duplicator.state_count();
    const int L = spoiler.alphabet.size();
    out.adam_states = spoiler.state_count();
    out.eve_states = ne;
    out.letters = L;
    GameArena& g = out.arena;
    out.p0.assign(static_cast<size_t>(out.adam_states) * ne, -1);
    out.p1.assign(static_cast<size_t>(out.adam_states) * ne * L * 2, -1);
    auto p0_at = [&](int a, int e) -> int& { return out.p0[static_cast<size_t>(a) * ne + e]; };
    auto p1_at = [&](int a, int e, int l, int sig) -> int& {
        return out.p1[((static_cast<size_t>(a) * ne + e) * L + l) * 2 + sig];
    };
    std::deque<int> queue;
    std::vector<std::tuple<int, int, int>> meta; // (adam, eve, -1 | letter*2+sig)
    p0_at(p, q) = g.add_position(false, spoiler.state_names[p] + "|" + duplicator.state_names[q]);
    g.initial = p0_at(p, q);
    meta.push_back({p, q, -1});
    queue.push_back(g.initial);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        auto [a, e, info] = meta[v];
        if (info == -1) {
            for (int l = 0; l < L; ++l)
                for (int t : spoiler.out(a, l)) {
                    const Transition& tr = spoiler.transitions[t];
                    int sig = tr.significant ? 1 : 0;
                    int& slot = p1_at(tr.dst, e, l, sig);
                    if (slot < 0) {
                        slot = g.add_position(true, spoiler.state_names[tr.dst] + "|" +
                                                        duplicator.state_names[e] + "|" +
                                                        spoiler.alphabet.name(l) +
                                                        (sig ? "!" : ""));
                        meta.push_back({tr.dst, e, l * 2 + sig});
                        queue.push_back(slot);
                    }
                    g.add_edge(v, slot, 0);
                }
        } else {
            int l = info / 2;
            int adam_sig = info % 2;
            for (int t : duplicator.out(e, l)) {
                const Transition& tr = duplicator.transitions[t];
                int& slot = p0_at(a, tr.dst);
                if (slot < 0) {
                    slot = g.add_position(false, spoiler.state_names[a] + "|" +
                                                     duplicator.state_names[tr.dst]);
                    meta.push_back({a, tr.dst, -1});
                    queue.push_back(slot);
                }
                g.add_edge(v, slot, tr.significant ? 2 : (adam_sig ? 1 : 0));
            }
        }
    }
    g.complete();
    return out;
}

bool simulates(const Automaton& spoiler, int p, const Automaton& duplicator, int q) {
    SimulationArena sa = simulation_arena(spoiler, p, duplicator, q);
    ParitySolution sol = solve_parity3(sa.arena);
    return sol.eve_region[sa.arena.initial];
}

TwoTokenResult decide_hd_two_token(const Automaton& a_in, int max_states) {
    TwoTokenResult res;
    if (a_in.acceptance != Acceptance::Buchi)
        throw std::invalid_argument("two-token check expects a Buchi automaton");
    if (a_in.state_count() > max_states) {
        res.note = "skipped: state count " + std::to_string(a_in.state_count()) +
                   " exceeds bound " + std::to_string(max_states);
        return res;
    }
    // Letter-game semantics need a complete automaton; a rejecting sink
    // preserves the language and history-determinism.
    Automaton a = a_in;
    {
        bool complete = true;
        for (int s = 0; s < a.state_count() && complete; ++s)
            for (int l = 0; l < a.alphabet.size() && complete; ++l)
                complete = !a.out(s, l).empty();
        if (!complete) {
            int sink = a.add_state("@dead");
            for (int s = 0; s < a.state_count(); ++s)
                for (int l = 0; l < a.alphabet.size(); ++l)
                    if (a.out(s, l).empty())
                        a.add_transition(s, l, sink, false);
        }
    }
    const int L = a.alphabet.size();
    GameArena g;
    // Position kinds:
    //   0 (adam): (e, a1<=a2)           — Adam picks a letter
    //   1 (eve):  (e, a1, a2, letter)   — Eve moves her token
    //   2 (adam): (e', a1, a2, letter)  — Adam moves both tokens
    std::map<std::tuple<int, int, int, int, int>, int> ids;
    std::deque<std::tuple<int, int, int, int, int>> queue;
    auto intern = [&](int kind, int e, int a1, int a2, int l) {
        if (a1 > a2)
            std::swap(a1, a2);
        auto key = std::make_tuple(kind, e, a1, a2, l);
        auto it = ids.find(key);
        if (it != ids.end())
            return it->second;
        int id = g.add_position(kind == 1);
        ids.emplace(key, id);
        queue.push_back(key);
        return id;
    };
    g.initial = intern(0, a.initial, a.initial, a.initial, -1);
    while (!queue.empty()) {
        auto [kind, e, a1, a2, l] = queue.front();
        queue.pop_front();
        int v = ids[{kind, e, a1, a2, l}];
        if (kind == 0) {
            for (int letter = 0; letter < L; ++letter)
                g.add_edge(v, intern(1, e, a1, a2, letter), 0);
        } else if (kind == 1) {
            for (int t : a.out(e, l)) {
                const Transition& tr = a.transitions[t];
                g.add_edge(v, intern(2, tr.dst, a1, a2, l), tr.significant ? 2 : 0);
            }
        } else {
            for (int t1 : a.out(a1, l))
                for (int t2 : a.out(a2, l)) {
                    const Transition& x = a.transitions[t1];
                    const Transition& y = a.transitions[t2];
                    g.add_edge(v, intern(0, e, x.dst, y.dst, -1),
                               (x.significant || y.significant) ? 1 : 0);
                }
        }
    }
    g.complete();
    res.positions = g.size();
    ParitySolution sol = solve_parity3(g);
    res.hd = sol.eve_region[g.initial];
    return res;
}

} // namespace owb
