#include "owb/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "owb/finite_automaton.hpp"

namespace owb {

std::optional<int> Automaton::state(const std::string& n) const {
    for (int i = 0; i < state_count(); ++i)
        if (state_names[i] == n)
            return i;
    return std::nullopt;
}

void Automaton::build_index() const {
    indexed_count_ = transitions.size();
    index_.assign(static_cast<size_t>(state_count()) * alphabet.size(), {});
    for (int t = 0; t < static_cast<int>(transitions.size()); ++t) {
        const Transition& tr = transitions[t];
        if (tr.src < 0 || tr.src >= state_count())
            continue;
        if (tr.letter < 0 || tr.letter >= alphabet.size())
            continue;
        index_[static_cast<size_t>(tr.src) * alphabet.size() + tr.letter].push_back(t);
    }
}

const std::vector<int>& Automaton::out(int state, int letter) const {
    if (index_.empty() || indexed_count_ != transitions.size())
        build_index();
    return index_[static_cast<size_t>(state) * alphabet.size() + letter];
}

std::vector<int> Automaton::out_all(int state) const {
    std::vector<int> ids;
    for (int l = 0; l < alphabet.size(); ++l) {
        const auto& v = out(state, l);
        ids.insert(ids.end(), v.begin(), v.end());
    }
    return ids;
}

ValidationReport validate(const Automaton& a) {
    ValidationReport r;
    if (a.state_count() == 0) {
        r.violations.push_back("automaton has no states");
        return r;
    }
    if (a.alphabet.size() == 0)
        r.violations.push_back("empty alphabet");
    if (a.initial < 0 || a.initial >= a.state_count())
        r.violations.push_back("initial state out of range");

    std::set<std::tuple<int, int, int>> seen;
    for (const Transition& t : a.transitions) {
        if (t.src < 0 || t.src >= a.state_count())
            r.violations.push_back("dangling source in transition");
        if (t.dst < 0 || t.dst >= a.state_count())
            r.violations.push_back("dangling destination in transition");
        if (t.letter < 0 || t.letter >= a.alphabet.size())
            r.violations.push_back("letter out of range in transition");
        if (t.src >= 0 && t.src < a.state_count() && t.dst >= 0 && t.dst < a.state_count() &&
            t.letter >= 0 && t.letter < a.alphabet.size()) {
            if (!seen.insert({t.src, t.letter, t.dst}).second)
                r.violations.push_back("duplicate transition " + a.state_names[t.src] + " --" +
                                       a.alphabet.name(t.letter) + "--> " + a.state_names[t.dst]);
        }
    }
    if (!r.violations.empty())
        return r;

    std::vector<bool> reached(a.state_count(), false);
    std::deque<int> queue{a.initial};
    reached[a.initial] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int t : a.out_all(s))
            if (!reached[a.transitions[t].dst]) {
                reached[a.transitions[t].dst] = true;
                queue.push_back(a.transitions[t].dst);
            }
    }
    for (int s = 0; s < a.state_count(); ++s)
        if (!reached[s])
            r.violations.push_back("unreachable state " + a.state_names[s]);
    return r;
}

Automaton trim(const Automaton& a) {
    std::vector<bool> reached(a.state_count(), false);
    std::deque<int> queue{a.initial};
    if (a.initial >= 0 && a.initial < a.state_count())
        reached[a.initial] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int t : a.out_all(s))
            if (!reached[a.transitions[t].dst]) {
                reached[a.transitions[t].dst] = true;
                queue.push_back(a.transitions[t].dst);
            }
    }
    std::vector<int> remap(a.state_count(), -1);
    Automaton b;
    b.name = a.name;
    b.alphabet = a.alphabet;
    b.acceptance = a.acceptance;
    for (int s = 0; s < a.state_count(); ++s)
        if (reached[s])
            remap[s] = b.add_state(a.state_names[s]);
    b.initial = remap[a.initial];
    for (const Transition& t : a.transitions)
        if (remap[t.src] >= 0 && remap[t.dst] >= 0)
            b.add_transition(remap[t.src], t.letter, remap[t.dst], t.significant);
    return b;
}

bool is_deterministic(const Automaton& a) {
    for (int s = 0; s < a.state_count(); ++s)
        for (int l = 0; l < a.alphabet.size(); ++l)
            if (a.out(s, l).size() > 1)
                return false;
    return true;
}

Automaton build_reach(const Automaton& a) {
    if (a.acceptance != Acceptance::Buchi)
        throw std::invalid_argument("reach automaton is defined for Buchi input");
    Automaton r;
    r.name = a.name + "_reach";
    r.alphabet = a.alphabet;
    r.acceptance = Acceptance::Buchi;
    r.state_names = a.state_names;
    r.initial = a.initial;
    int sink = r.add_state("@sink");
    for (const Transition& t : a.transitions)
        r.add_transition(t.src, t.letter, t.significant ? sink : t.dst, t.significant);
    for (int l = 0; l < a.alphabet.size(); ++l)
        r.add_transition(sink, l, sink, true);
    // Multiple significant transitions on one (state,letter) collapse onto
    // the sink; keep one copy of each triple.
    std::set<std::tuple<int, int, int, bool>> seen;
    std::vector<Transition> dedup;
    for (const Transition& t : r.transitions)
        if (seen.insert({t.src, t.letter, t.dst, t.significant}).second)
            dedup.push_back(t);
    Automaton out;
    out.name = r.name;
    out.alphabet = r.alphabet;
    out.acceptance = r.acceptance;
    out.state_names = r.state_names;
    out.initial = r.initial;
    for (const Transition& t : dedup)
        out.add_transition(t.src, t.letter, t.dst, t.significant);
    return out;
}

FiniteAutomaton build_safe(const Automaton& a) {
    if (a.acceptance != Acceptance::CoBuchi)
        throw std::invalid_argument("safe automaton is defined for coBuchi input");
    FiniteAutomaton f;
    f.name = a.name + "_safe";
    f.alphabet = a.alphabet;
    f.resize(a.state_count(), a.alphabet.size());
    f.initial = a.initial;
    f.state_names = a.state_names;
    for (const Transition& t : a.transitions)
        if (!t.significant)
            f.add_edge(t.src, t.letter, t.dst);
    for (int s = 0; s < f.state_count; ++s)
        f.accepting[s] = true;
    bool det = true;
    for (int s = 0; s < f.state_count && det; ++s)
        for (int l = 0; l < f.alphabet.size() && det; ++l)
            det = f.delta[s][l].size() <= 1;
    f.deterministic = det;
    return f;
}

SccResult scc_decomposition(const Automaton& a, const TransitionFilter& filter) {
    const int n = a.state_count();
    SccResult res;
    res.component.assign(n, -1);

    // Filtered adjacency.
    std::vector<std::vector<int>> adj(n);
    std::vector<bool> self_loop(n, false);
    for (const Transition& t : a.transitions) {
        if (filter && !filter(t))
            continue;
        adj[t.src].push_back(t.dst);
        if (t.src == t.dst)
            self_loop[t.src] = true;
    }

    // Iterative Tarjan.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;
    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        res.component[w] = static_cast<int>(res.members.size());
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    res.members.push_back(std::move(comp));
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    // Tarjan emits components in reverse topological order.
    std::reverse(res.members.begin(), res.members.end());
    for (int c = 0; c < res.count(); ++c)
        for (int s : res.members[c])
            res.component[s] = c;

    res.nontrivial.assign(res.count(), false);
    for (int c = 0; c < res.count(); ++c)
        res.nontrivial[c] = res.members[c].size() > 1 ||
                            self_loop[res.members[c].front()];
    std::set<std::pair<int, int>> dag;
    for (const Transition& t : a.transitions) {
        if (filter && !filter(t))
            continue;
        int cs = res.component[t.src], cd = res.component[t.dst];
        if (cs != cd)
            dag.insert({cs, cd});
    }
    res.dag_edges.assign(dag.begin(), dag.end());
    return res;
}

namespace {
TransitionFilter non_significant_filter() {
    return [](const Transition& t) { return !t.significant; };
}
} // namespace

Automaton normalize(const Automaton& a) {
    if (a.acceptance != Acceptance::Buchi)
        throw std::invalid_argument("normalize is defined for Buchi input");
    SccResult scc = scc_decomposition(a, non_significant_filter());
    Automaton b = a;
    b.transitions.clear();
    for (Transition t : a.transitions) {
        if (!t.significant && scc.component[t.src] != scc.component[t.dst])
            t.significant = true;
        b.add_transition(t.src, t.letter, t.dst, t.significant);
    }
    return b;
}

bool is_normal(const Automaton& a) {
    SccResult scc = scc_decomposition(a, non_significant_filter());
    for (const Transition& t : a.transitions)
        if (!t.significant && scc.component[t.src] != scc.component[t.dst])
            return false;
    return true;
}

std::vector<int> good_states(const Automaton& a) {
    Automaton r = build_reach(a);
    const int n = a.state_count();
    std::vector<int> good;
    for (int q = 0; q < n; ++q) {
        std::vector<bool> seen(r.state_count(), false);
        std::deque<int> queue{q};
        seen[q] = true;
        bool det = true;
        while (!queue.empty() && det) {
            int s = queue.front();
            queue.pop_front();
            for (int l = 0; l < r.alphabet.size() && det; ++l) {
                std::set<int> dsts;
                for (int t : r.out(s, l))
                    dsts.insert(r.transitions[t].dst);
                if (dsts.size() > 1)
                    det = false;
                for (int d : dsts)
                    if (!seen[d]) {
                        seen[d] = true;
                        queue.push_back(d);
                    }
            }
        }
        if (det)
            good.push_back(q);
    }
    return good;
}

namespace {

// Product of an automaton with the position graph of a canonical lasso.
// Node = state * L + pos, pos < L = |u|+|v|; pos advances cyclically through
// the period.
struct LassoProduct {
    const Automaton& a;
    const Lasso& w;
    int positions;
    LassoProduct(const Automaton& a_, const Lasso& w_)
        : a(a_), w(w_), positions(static_cast<int>(w_.total_len())) {}
    int node(int state, int pos) const { return state * positions + pos; }
    int next_pos(int pos) const {
        ++pos;
        if (pos == positions)
            pos = static_cast<int>(w.prefix.size());
        return pos;
    }
    int letter(int pos) const { return w.at(static_cast<size_t>(pos)); }
};

} // namespace

bool lasso_accepts(const Automaton& a, const Lasso& word) {
    if (word.period.empty())
        throw std::invalid_argument("lasso period must be nonempty");
    for (int l : word.prefix)
        if (l < 0 || l >= a.alphabet.size())
            throw std::invalid_argument("lasso letter outside automaton alphabet");
    for (int l : word.period)
        if (l < 0 || l >= a.alphabet.size())
            throw std::invalid_argument("lasso letter outside automaton alphabet");
    Lasso w = word.canonical();
    LassoProduct p(a, w);
    const int N = a.state_count() * p.positions;

    // Reachable product nodes.
    std::vector<bool> reach(N, false);
    std::deque<int> queue;
    int start = p.node(a.initial, 0);
    reach[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        int s = v / p.positions, pos = v % p.positions;
        int l = p.letter(pos), np = p.next_pos(pos);
        for (int t : a.out(s, l)) {
            int nv = p.node(a.transitions[t].dst, np);
            if (!reach[nv]) {
                reach[nv] = true;
                queue.push_back(nv);
            }
        }
    }

    if (a.acceptance == Acceptance::CoBuchi) {
        // A reachable cycle using only non-significant transitions.
        // Find nontrivial SCCs of the non-significant product subgraph
        // restricted to reachable nodes.
        std::vector<int> comp(N, -1);
        // Tiny Tarjan over the implicit graph; reuse by materializing edges.
        std::vector<std::vector<int>> adj(N);
        std::vector<bool> self(N, false);
        for (int v = 0; v < N; ++v) {
            if (!reach[v])
                continue;
            int s = v / p.positions, pos = v % p.positions;
            int l = p.letter(pos), np = p.next_pos(pos);
            for (int t : a.out(s, l)) {
                if (a.transitions[t].significant)
                    continue;
                int nv = p.node(a.transitions[t].dst, np);
                adj[v].push_back(nv);
                if (nv == v)
                    self[v] = true;
            }
        }
        // Kosaraju-ish via iterative Tarjan on the materialized graph.
        std::vector<int> index(N, -1), low(N, 0);
        std::vector<bool> on_stack(N, false);
        std::vector<int> stack;
        int next_index = 0;
        for (int root = 0; root < N; ++root) {
            if (!reach[root] || index[root] != -1)
                continue;
            std::vector<std::pair<int, size_t>> call{{root, 0}};
            index[root] = low[root] = next_index++;
            stack.push_back(root);
            on_stack[root] = true;
            while (!call.empty()) {
                auto& [v, child] = call.back();
                if (child < adj[v].size()) {
                    int u = adj[v][child++];
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
                        std::vector<int> comp_members;
                        int u;
                        do {
                            u = stack.back();
                            stack.pop_back();
                            on_stack[u] = false;
                            comp_members.push_back(u);
                        } while (u != v);
                        if (comp_members.size() > 1 || self[comp_members.front()])
                            return true;
                    }
                    int v_done = v;
                    call.pop_back();
                    if (!call.empty())
                        low[call.back().first] = std::min(low[call.back().first], low[v_done]);
                }
            }
        }
        return false;
    }

    // Büchi: a reachable SCC containing a significant internal edge.
    std::vector<std::vector<int>> adj(N);
    std::vector<std::vector<std::pair<int, bool>>> edges(N); // (dst, significant)
    for (int v = 0; v < N; ++v) {
        if (!reach[v])
            continue;
        int s = v / p.positions, pos = v % p.positions;
        int l = p.letter(pos), np = p.next_pos(pos);
        for (int t : a.out(s, l)) {
            int nv = p.node(a.transitions[t].dst, np);
            adj[v].push_back(nv);
            edges[v].push_back({nv, a.transitions[t].significant});
        }
    }
    std::vector<int> comp(N, -1);
    std::vector<int> index(N, -1), low(N, 0);
    std::vector<bool> on_stack(N, false);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;
    for (int root = 0; root < N; ++root) {
        if (!reach[root] || index[root] != -1)
            continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child < adj[v].size()) {
                int u = adj[v][child++];
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
                int v_done = v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[v_done]);
            }
        }
    }
    for (int v = 0; v < N; ++v) {
        if (!reach[v])
            continue;
        for (auto [u, sig] : edges[v])
            if (sig && comp[v] == comp[u])
                return true;
    }
    return false;
}

namespace {

// Recovers a lasso witness from a product node known to lie on an accepting
// cycle structure; helper for the Rabin-pair emptiness check below.
std::vector<int> bfs_path_letters(const std::vector<std::vector<std::pair<int, int>>>& adj,
                                  int from, int to) {
    // adj[v] = (dst, letter). Returns letters of a shortest path from->to,
    // empty if from==to unreachable otherwise throws.
    if (from == to)
        return {};
    std::vector<int> pred(adj.size(), -1), pred_letter(adj.size(), -1);
    std::deque<int> queue{from};
    std::vector<bool> seen(adj.size(), false);
    seen[from] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [u, l] : adj[v]) {
            if (!seen[u]) {
                seen[u] = true;
                pred[u] = v;
                pred_letter[u] = l;
                if (u == to) {
                    std::vector<int> letters;
                    for (int w = to; w != from; w = pred[w])
                        letters.push_back(pred_letter[w]);
                    std::reverse(letters.begin(), letters.end());
                    return letters;
                }
                queue.push_back(u);
            }
        }
    }
    throw std::logic_error("bfs_path_letters: target unreachable");
}

} // namespace

IntersectionResult buchi_cobuchi_intersection_empty(const Automaton& a, const Automaton& c) {
    if (a.acceptance != Acceptance::Buchi || c.acceptance != Acceptance::CoBuchi)
        throw std::invalid_argument("expected a Buchi and a coBuchi automaton");
    if (a.alphabet != c.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    const int nc = c.state_count();
    const int L = a.alphabet.size();
    auto node = [&](int sa, int sc) { return sa * nc + sc; };
    const int N = a.state_count() * nc;

    // Reachability over the full product.
    std::vector<bool> reach(N, false);
    std::deque<int> queue;
    reach[node(a.initial, c.initial)] = true;
    queue.push_back(node(a.initial, c.initial));
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        int sa = v / nc, sc = v % nc;
        for (int l = 0; l < L; ++l)
            for (int ta : a.out(sa, l))
                for (int tc : c.out(sc, l)) {
                    int nv = node(a.transitions[ta].dst, c.transitions[tc].dst);
                    if (!reach[nv]) {
                        reach[nv] = true;
                        queue.push_back(nv);
                    }
                }
    }

    // Restriction to product edges whose c-component is non-significant;
    // within that graph, look for an SCC with an a-significant internal edge.
    struct Edge {
        int dst;
        int letter;
        bool a_sig;
    };
    std::vector<std::vector<Edge>> adj(N);
    for (int v = 0; v < N; ++v) {
        if (!reach[v])
            continue;
        int sa = v / nc, sc = v % nc;
        for (int l = 0; l < L; ++l)
            for (int ta : a.out(sa, l))
                for (int tc : c.out(sc, l)) {
                    if (c.transitions[tc].significant)
                        continue;
                    adj[v].push_back({node(a.transitions[ta].dst, c.transitions[tc].dst), l,
                                      a.transitions[ta].significant});
                }
    }
    // Tarjan on the restricted graph.
    std::vector<int> comp(N, -1), index(N, -1), low(N, 0);
    std::vector<bool> on_stack(N, false);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;
    for (int root = 0; root < N; ++root) {
        if (!reach[root] || index[root] != -1)
            continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child < adj[v].size()) {
                int u = adj[v][child++].dst;
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
                int v_done = v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[v_done]);
            }
        }
    }
    // An a-significant edge inside one restricted SCC witnesses nonemptiness.
    int anchor = -1, anchor_dst = -1, anchor_letter = -1;
    for (int v = 0; v < N && anchor < 0; ++v) {
        if (!reach[v])
            continue;
        for (const Edge& e : adj[v])
            if (e.a_sig && comp[v] >= 0 && comp[v] == comp[e.dst]) {
                anchor = v;
                anchor_dst = e.dst;
                anchor_letter = e.letter;
                break;
            }
    }
    if (anchor < 0)
        return {true, std::nullopt};

    // Witness lasso: full-product path to the anchor, then the significant
    // edge, then a restricted path closing the cycle.
    std::vector<std::vector<std::pair<int, int>>> full(N), restricted(N);
    for (int v = 0; v < N; ++v) {
        if (!reach[v])
            continue;
        int sa = v / nc, sc = v % nc;
        for (int l = 0; l < L; ++l)
            for (int ta : a.out(sa, l))
                for (int tc : c.out(sc, l)) {
                    int nv = node(a.transitions[ta].dst, c.transitions[tc].dst);
                    full[v].push_back({nv, l});
                    if (!c.transitions[tc].significant)
                        restricted[v].push_back({nv, l});
                }
    }
    std::vector<int> u = bfs_path_letters(full, node(a.initial, c.initial), anchor);
    std::vector<int> v_letters{anchor_letter};
    // Restrict the cycle to the anchor's SCC so it stays c-safe.
    std::vector<std::vector<std::pair<int, int>>> in_scc(N);
    for (int v = 0; v < N; ++v) {
        if (!reach[v] || comp[v] != comp[anchor])
            continue;
        for (const Edge& e : adj[v])
            if (comp[e.dst] == comp[anchor])
                in_scc[v].push_back({e.dst, e.letter});
    }
    std::vector<int> back = bfs_path_letters(in_scc, anchor_dst, anchor);
    v_letters.insert(v_letters.end(), back.begin(), back.end());
    return {false, Lasso(std::move(u), std::move(v_letters)).canonical()};
}

Automaton redirect_transition(const Automaton& a, const Transition& t, int new_dst,
                              bool new_significant, bool rewire_mode) {
    bool found = false;
    for (const Transition& u : a.transitions)
        if (u == t)
            found = true;
    if (!found)
        throw std::invalid_argument("transition to redirect is absent");
    Automaton b;
    b.name = a.name;
    b.alphabet = a.alphabet;
    b.acceptance = a.acceptance;
    b.state_names = a.state_names;
    b.initial = a.initial;
    bool replaced = false;
    for (const Transition& u : a.transitions) {
        if (!replaced && u == t) {
            b.add_transition(u.src, u.letter, new_dst, new_significant);
            replaced = true;
            continue;
        }
        if (rewire_mode && u.src == t.src && u.letter == t.letter)
            continue;
        b.add_transition(u.src, u.letter, u.dst, u.significant);
    }
    return b;
}

namespace {

// Per-state signature used to prune the isomorphism backtracking.
std::vector<std::string> iso_signatures(const Automaton& a) {
    std::vector<std::string> sig(a.state_count());
    for (int s = 0; s < a.state_count(); ++s) {
        std::string x;
        for (int l = 0; l < a.alphabet.size(); ++l) {
            int ns = 0, nn = 0;
            for (int t : a.out(s, l))
                (a.transitions[t].significant ? ns : nn)++;
            x += std::to_string(ns) + "." + std::to_string(nn) + ";";
        }
        sig[s] = x;
    }
    return sig;
}

} // namespace

IsomorphismResult isomorphic(const Automaton& a, const Automaton& b) {
    IsomorphismResult res;
    if (a.state_count() != b.state_count() || a.alphabet != b.alphabet ||
        a.acceptance != b.acceptance || a.transitions.size() != b.transitions.size())
        return res;
    const int n = a.state_count();
    auto sig_a = iso_signatures(a), sig_b = iso_signatures(b);
    std::vector<int> map(n, -1), rmap(n, -1);

    // Successor sets keyed by (letter, significant) for quick checks.
    auto succs = [](const Automaton& x, int s, int l, bool sig) {
        std::set<int> d;
        for (int t : x.out(s, l))
            if (x.transitions[t].significant == sig)
                d.insert(x.transitions[t].dst);
        return d;
    };

    struct Item {
        int sa, sb;
    };
    std::vector<Item> order;
    std::function<bool(size_t)> assign = [&](size_t k) -> bool {
        // Propagate forced pairs breadth-first from what is mapped so far.
        // Find the first unmapped a-state (BFS order from initial).
        int next = -1;
        for (int s = 0; s < n && next < 0; ++s)
            if (map[s] == -1)
                next = s;
        if (next == -1) {
            // Verify the bijection edge-for-edge.
            for (int s = 0; s < n; ++s)
                for (int l = 0; l < a.alphabet.size(); ++l)
                    for (bool sig : {false, true}) {
                        std::set<int> da = succs(a, s, l, sig);
                        std::set<int> db = succs(b, map[s], l, sig);
                        std::set<int> mapped;
                        for (int d : da)
                            mapped.insert(map[d]);
                        if (mapped != db)
                            return false;
                    }
            return true;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (rmap[cand] != -1 || sig_a[next] != sig_b[cand])
                continue;
            if ((next == a.initial) != (cand == b.initial))
                continue;
            // Local consistency against already-mapped neighbours.
            bool ok = true;
            for (int l = 0; l < a.alphabet.size() && ok; ++l)
                for (bool sig : {false, true}) {
                    std::set<int> da = succs(a, next, l, sig);
                    std::set<int> db = succs(b, cand, l, sig);
                    if (da.size() != db.size()) {
                        ok = false;
                        break;
                    }
                    for (int d : da)
                        if (map[d] != -1 && !db.count(map[d])) {
                            ok = false;
                            break;
                        }
                }
            if (!ok)
                continue;
            map[next] = cand;
            rmap[cand] = next;
            if (assign(k + 1))
                return true;
            map[next] = -1;
            rmap[cand] = -1;
        }
        return false;
    };
    if (a.initial >= 0 && n > 0) {
        if (assign(0)) {
            res.isomorphic = true;
            res.mapping = map;
        }
    }
    return res;
}

} // namespace owb
