#include "owb/finite_automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "owb/automaton.hpp"

namespace owb {

bool FiniteAutomaton::is_complete_dfa() const {
    if (!deterministic)
        return false;
    for (int s = 0; s < state_count; ++s)
        for (int l = 0; l < alphabet.size(); ++l)
            if (delta[s][l].size() != 1)
                return false;
    return true;
}

bool FiniteAutomaton::run_accepts(const std::vector<int>& word) const {
    std::set<int> cur{initial};
    for (int l : word) {
        std::set<int> next;
        for (int s : cur)
            for (int d : delta[s][l])
                next.insert(d);
        cur = std::move(next);
        if (cur.empty())
            return false;
    }
    for (int s : cur)
        if (accepting[s])
            return true;
    return false;
}

std::optional<int> FiniteAutomaton::run_end(const std::vector<int>& word) const {
    int cur = initial;
    for (int l : word) {
        const auto& d = delta[cur][l];
        if (d.size() != 1)
            return std::nullopt;
        cur = d[0];
    }
    return cur;
}

FiniteAutomaton determinize(const FiniteAutomaton& n) {
    FiniteAutomaton d;
    d.name = n.name + "_det";
    d.alphabet = n.alphabet;
    d.deterministic = true;

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> subset) {
        auto it = ids.find(subset);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(subsets.size());
        ids.emplace(subset, id);
        subsets.push_back(std::move(subset));
        return id;
    };
    intern({n.initial});
    std::vector<std::vector<int>> table; // [id][letter] -> id
    std::vector<bool> acc;
    for (size_t i = 0; i < subsets.size(); ++i) {
        table.emplace_back(n.alphabet.size(), -1);
        std::vector<int> cur = subsets[i];
        bool a = false;
        for (int s : cur)
            a = a || n.accepting[s];
        acc.push_back(a);
        for (int l = 0; l < n.alphabet.size(); ++l) {
            std::set<int> next;
            for (int s : cur)
                for (int t : n.delta[s][l])
                    next.insert(t);
            table[i][l] = intern(std::vector<int>(next.begin(), next.end()));
        }
    }
    d.resize(static_cast<int>(subsets.size()), n.alphabet.size());
    d.initial = 0;
    for (int s = 0; s < d.state_count; ++s) {
        d.accepting[s] = acc[s];
        for (int l = 0; l < n.alphabet.size(); ++l)
            d.add_edge(s, l, table[s][l]);
    }
    return d;
}

FiniteAutomaton complete_dfa(const FiniteAutomaton& d) {
    if (!d.deterministic)
        throw std::invalid_argument("complete_dfa expects a deterministic automaton");
    bool complete = true;
    for (int s = 0; s < d.state_count && complete; ++s)
        for (int l = 0; l < d.alphabet.size() && complete; ++l)
            complete = d.delta[s][l].size() == 1;
    if (complete)
        return d;
    FiniteAutomaton out = d;
    int sink = out.state_count;
    out.state_count += 1;
    out.delta.emplace_back(out.alphabet.size());
    out.accepting.push_back(false);
    if (!out.state_names.empty())
        out.state_names.push_back("@sink");
    for (int s = 0; s < out.state_count; ++s)
        for (int l = 0; l < out.alphabet.size(); ++l)
            if (out.delta[s][l].empty())
                out.add_edge(s, l, sink);
    return out;
}

FiniteAutomaton minimize_dfa(const FiniteAutomaton& d_in) {
    FiniteAutomaton d = complete_dfa(d_in);
    const int n = d.state_count;
    const int L = d.alphabet.size();

    // Restrict to reachable states first.
    std::vector<int> order;
    std::vector<int> remap(n, -1);
    std::deque<int> queue{d.initial};
    remap[d.initial] = 0;
    order.push_back(d.initial);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int l = 0; l < L; ++l) {
            int t = d.delta[s][l][0];
            if (remap[t] == -1) {
                remap[t] = static_cast<int>(order.size());
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }
    const int m = static_cast<int>(order.size());
    std::vector<std::vector<int>> delta(m, std::vector<int>(L));
    std::vector<bool> acc(m);
    for (int i = 0; i < m; ++i) {
        acc[i] = d.accepting[order[i]];
        for (int l = 0; l < L; ++l)
            delta[i][l] = remap[d.delta[order[i]][l][0]];
    }

    // Hopcroft partition refinement.
    std::vector<std::vector<std::vector<int>>> preimage(m, std::vector<std::vector<int>>(L));
    for (int s = 0; s < m; ++s)
        for (int l = 0; l < L; ++l)
            preimage[delta[s][l]][l].push_back(s);

    std::vector<int> block_of(m, 0);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> accs, rejs;
        for (int s = 0; s < m; ++s)
            (acc[s] ? accs : rejs).push_back(s);
        if (!accs.empty())
            blocks.push_back(accs);
        if (!rejs.empty())
            blocks.push_back(rejs);
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int s : blocks[b])
                block_of[s] = static_cast<int>(b);
    }
    std::deque<std::pair<int, int>> work; // (block, letter)
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int l = 0; l < L; ++l)
            work.push_back({static_cast<int>(b), l});
    while (!work.empty()) {
        auto [bi, l] = work.front();
        work.pop_front();
        // States with a transition on l into block bi.
        std::set<int> x;
        for (int s : blocks[bi])
            for (int p : preimage[s][l])
                x.insert(p);
        if (x.empty())
            continue;
        std::map<int, std::vector<int>> split; // block -> members in x
        for (int s : x)
            split[block_of[s]].push_back(s);
        for (auto& [b, members] : split) {
            if (members.size() == blocks[b].size())
                continue;
            // Split block b into members / rest.
            std::vector<int> rest;
            std::set<int> in_members(members.begin(), members.end());
            for (int s : blocks[b])
                if (!in_members.count(s))
                    rest.push_back(s);
            int nb = static_cast<int>(blocks.size());
            blocks[b] = members;
            blocks.push_back(rest);
            for (int s : rest)
                block_of[s] = nb;
            for (int ll = 0; ll < L; ++ll)
                work.push_back({nb, ll});
        }
    }

    // Quotient automaton, states renumbered in BFS order from the initial
    // block for a canonical result.
    int nb = static_cast<int>(blocks.size());
    std::vector<int> bfs_id(nb, -1);
    std::vector<int> bfs_order;
    std::deque<int> bq{block_of[0]};
    bfs_id[block_of[0]] = 0;
    bfs_order.push_back(block_of[0]);
    while (!bq.empty()) {
        int b = bq.front();
        bq.pop_front();
        int rep = blocks[b].front();
        for (int l = 0; l < L; ++l) {
            int tb = block_of[delta[rep][l]];
            if (bfs_id[tb] == -1) {
                bfs_id[tb] = static_cast<int>(bfs_order.size());
                bfs_order.push_back(tb);
                bq.push_back(tb);
            }
        }
    }
    FiniteAutomaton out;
    out.name = d_in.name + "_min";
    out.alphabet = d.alphabet;
    out.deterministic = true;
    out.resize(static_cast<int>(bfs_order.size()), L);
    out.initial = 0;
    for (size_t i = 0; i < bfs_order.size(); ++i) {
        int rep = blocks[bfs_order[i]].front();
        out.accepting[i] = acc[rep];
        for (int l = 0; l < L; ++l)
            out.add_edge(static_cast<int>(i), l, bfs_id[block_of[delta[rep][l]]]);
    }
    return out;
}

namespace {

// Shortest word distinguishing the two complete DFAs under `bad`, by BFS in
// letter order.
std::optional<std::vector<int>> product_search(const FiniteAutomaton& x, const FiniteAutomaton& y,
                                               const std::function<bool(bool, bool)>& bad) {
    const int L = x.alphabet.size();
    auto node = [&](int a, int b) { return a * y.state_count + b; };
    std::vector<int> pred(static_cast<size_t>(x.state_count) * y.state_count, -2);
    std::vector<int> pred_letter(pred.size(), -1);
    std::deque<int> queue;
    int start = node(x.initial, y.initial);
    pred[start] = -1;
    queue.push_back(start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        int a = v / y.state_count, b = v % y.state_count;
        if (bad(x.accepting[a], y.accepting[b])) {
            std::vector<int> word;
            for (int w = v; pred[w] != -1; w = pred[w])
                word.push_back(pred_letter[w]);
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (int l = 0; l < L; ++l) {
            int nv = node(x.delta[a][l][0], y.delta[b][l][0]);
            if (pred[nv] == -2) {
                pred[nv] = v;
                pred_letter[nv] = l;
                queue.push_back(nv);
            }
        }
    }
    return std::nullopt;
}

} // namespace

WordVerdict dfa_equivalent(const FiniteAutomaton& d1, const FiniteAutomaton& d2) {
    if (d1.alphabet != d2.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    FiniteAutomaton x = complete_dfa(d1), y = complete_dfa(d2);
    auto w = product_search(x, y, [](bool a, bool b) { return a != b; });
    if (w)
        return {false, std::move(w)};
    return {true, std::nullopt};
}

WordVerdict dfa_included(const FiniteAutomaton& d1, const FiniteAutomaton& d2) {
    if (d1.alphabet != d2.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    FiniteAutomaton x = complete_dfa(d1), y = complete_dfa(d2);
    auto w = product_search(x, y, [](bool a, bool b) { return a && !b; });
    if (w)
        return {false, std::move(w)};
    return {true, std::nullopt};
}

WordVerdict nfa_included_in_dfa(const FiniteAutomaton& n, const FiniteAutomaton& d) {
    if (!d.deterministic)
        throw std::invalid_argument("inclusion target must be deterministic");
    if (n.alphabet != d.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    FiniteAutomaton y = complete_dfa(d);
    const int L = n.alphabet.size();
    auto node = [&](int a, int b) { return a * y.state_count + b; };
    std::vector<int> pred(static_cast<size_t>(n.state_count) * y.state_count, -2);
    std::vector<int> pred_letter(pred.size(), -1);
    std::deque<int> queue;
    int start = node(n.initial, y.initial);
    pred[start] = -1;
    queue.push_back(start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        int a = v / y.state_count, b = v % y.state_count;
        if (n.accepting[a] && !y.accepting[b]) {
            std::vector<int> word;
            for (int w = v; pred[w] != -1; w = pred[w])
                word.push_back(pred_letter[w]);
            std::reverse(word.begin(), word.end());
            return {false, std::move(word)};
        }
        for (int l = 0; l < L; ++l) {
            int tb = y.delta[b][l][0];
            for (int ta : n.delta[a][l]) {
                int nv = node(ta, tb);
                if (pred[nv] == -2) {
                    pred[nv] = v;
                    pred_letter[nv] = l;
                    queue.push_back(nv);
                }
            }
        }
    }
    return {true, std::nullopt};
}

WordVerdict nfa_included_in_nfa(const FiniteAutomaton& n, const FiniteAutomaton& m) {
    if (n.alphabet != m.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    const int L = n.alphabet.size();
    // Product of n with subsets of m, determinized on the fly.
    std::map<std::vector<int>, int> subset_ids;
    std::vector<std::vector<int>> subsets;
    std::vector<bool> subset_acc;
    auto intern = [&](std::vector<int> subset) {
        auto it = subset_ids.find(subset);
        if (it != subset_ids.end())
            return it->second;
        int id = static_cast<int>(subsets.size());
        bool acc = false;
        for (int s : subset)
            acc = acc || m.accepting[s];
        subset_acc.push_back(acc);
        subset_ids.emplace(subset, id);
        subsets.push_back(std::move(subset));
        return id;
    };
    int s0 = intern({m.initial});
    struct Node {
        int a;
        int subset;
    };
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> pred; // node -> (pred, letter)
    std::deque<Node> queue{{n.initial, s0}};
    pred[{n.initial, s0}] = {{-1, -1}, -1};
    while (!queue.empty()) {
        Node v = queue.front();
        queue.pop_front();
        if (n.accepting[v.a] && !subset_acc[v.subset]) {
            std::vector<int> word;
            std::pair<int, int> cur{v.a, v.subset};
            while (pred[cur].second != -1) {
                word.push_back(pred[cur].second);
                cur = pred[cur].first;
            }
            std::reverse(word.begin(), word.end());
            return {false, std::move(word)};
        }
        for (int l = 0; l < L; ++l) {
            std::set<int> next;
            for (int s : subsets[v.subset])
                for (int t : m.delta[s][l])
                    next.insert(t);
            int ns = intern(std::vector<int>(next.begin(), next.end()));
            for (int ta : n.delta[v.a][l]) {
                std::pair<int, int> nv{ta, ns};
                if (!pred.count(nv)) {
                    pred[nv] = {{v.a, v.subset}, l};
                    queue.push_back({ta, ns});
                }
            }
        }
    }
    return {true, std::nullopt};
}

FiniteAutomaton path_language(const Automaton& a, int src, int dst, const PathConstraints& c) {
    if (src < 0 || src >= a.state_count() || dst < 0 || dst >= a.state_count())
        throw std::invalid_argument("path_language endpoint out of range");
    const int L = a.alphabet.size();
    std::vector<bool> forbidden(a.state_count(), false);
    for (int s : c.forbidden_intermediate)
        forbidden[s] = true;
    std::vector<bool> excluded(a.transitions.size(), false);
    for (int t : c.excluded_transitions)
        excluded[t] = true;

    auto allowed = [&](int t) {
        const Transition& tr = a.transitions[t];
        if (c.significance == SignificanceFilter::OnlyNonSignificant && tr.significant)
            return false;
        return true;
    };
    auto final_ok = [&](int t) {
        const Transition& tr = a.transitions[t];
        if (tr.dst != dst)
            return false;
        if (c.require_final_significant && !tr.significant)
            return false;
        if (c.require_final_from_set && !excluded[t])
            return false;
        return allowed(t);
    };
    auto mid_ok = [&](int t) { return allowed(t) && !excluded[t]; };

    // NFA states: fresh start, one middle per non-forbidden automaton state,
    // fresh final. The final transition is handled separately so endpoint
    // states can still be forbidden as intermediates.
    FiniteAutomaton f;
    f.name = "paths_" + a.state_names[src] + "_to_" + a.state_names[dst];
    f.alphabet = a.alphabet;
    std::vector<int> mid(a.state_count(), -1);
    int count = 0;
    int start = count++;
    for (int s = 0; s < a.state_count(); ++s)
        if (!forbidden[s])
            mid[s] = count++;
    int fin = count++;
    f.resize(count, L);
    f.initial = start;
    f.accepting[fin] = true;
    if (src == dst && !c.require_final_significant && !c.require_final_from_set)
        f.accepting[start] = true; // the empty path

    for (int t = 0; t < static_cast<int>(a.transitions.size()); ++t) {
        const Transition& tr = a.transitions[t];
        // As first step of a path.
        if (tr.src == src) {
            if (final_ok(t))
                f.add_edge(start, tr.letter, fin);
            if (mid_ok(t) && mid[tr.dst] >= 0)
                f.add_edge(start, tr.letter, mid[tr.dst]);
        }
        // As inner or final step.
        if (mid[tr.src] >= 0) {
            if (final_ok(t))
                f.add_edge(mid[tr.src], tr.letter, fin);
            if (mid_ok(t) && mid[tr.dst] >= 0)
                f.add_edge(mid[tr.src], tr.letter, mid[tr.dst]);
        }
    }
    return f;
}

std::optional<int> ClassifierDfa::classify(const std::vector<int>& word) const {
    auto end = dfa.run_end(word);
    if (!end)
        return std::nullopt;
    auto it = finals.find(*end);
    if (it == finals.end())
        return std::nullopt;
    return it->second;
}

FiniteAutomaton prefix_closure_dfa(const FiniteAutomaton& safety) {
    if (!safety.deterministic)
        throw std::invalid_argument("prefix_closure_dfa expects a deterministic safety automaton");
    // Live states = accepting states from which some infinite run through
    // accepting states exists: states that reach a cycle in the live graph.
    const int n = safety.state_count;
    const int L = safety.alphabet.size();
    std::vector<std::vector<int>> adj(n);
    for (int s = 0; s < n; ++s) {
        if (!safety.accepting[s])
            continue;
        for (int l = 0; l < L; ++l)
            for (int t : safety.delta[s][l])
                if (safety.accepting[t])
                    adj[s].push_back(t);
    }
    // States with an infinite continuation: iteratively remove states with no
    // remaining successor.
    std::vector<bool> live(n, false);
    for (int s = 0; s < n; ++s)
        live[s] = safety.accepting[s];
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < n; ++s) {
            if (!live[s])
                continue;
            bool has = false;
            for (int t : adj[s])
                if (live[t])
                    has = true;
            if (!has) {
                live[s] = false;
                changed = true;
            }
        }
    }
    FiniteAutomaton out;
    out.name = safety.name + "_prefixes";
    out.alphabet = safety.alphabet;
    std::vector<int> remap(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s)
        if (live[s])
            remap[s] = count++;
    int sink = count++;
    out.resize(count, L);
    out.deterministic = true;
    if (!live[safety.initial]) {
        out.initial = sink;
    } else {
        out.initial = remap[safety.initial];
    }
    for (int s = 0; s < n; ++s) {
        if (!live[s])
            continue;
        out.accepting[remap[s]] = true;
        for (int l = 0; l < L; ++l) {
            int target = sink;
            for (int t : safety.delta[s][l])
                if (live[t])
                    target = remap[t];
            out.add_edge(remap[s], l, target);
        }
    }
    for (int l = 0; l < L; ++l)
        out.add_edge(sink, l, sink);
    return out;
}

FiniteAutomaton product_intersection(const FiniteAutomaton& x, const FiniteAutomaton& y) {
    if (x.alphabet != y.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    const int L = x.alphabet.size();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> nodes;
    auto intern = [&](std::pair<int, int> p) {
        auto it = ids.find(p);
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(nodes.size());
        ids.emplace(p, id);
        nodes.push_back(p);
        return id;
    };
    intern({x.initial, y.initial});
    std::vector<std::vector<std::pair<int, int>>> edges; // per node: (letter, dst)
    for (size_t i = 0; i < nodes.size(); ++i) {
        edges.emplace_back();
        auto [a, b] = nodes[i];
        for (int l = 0; l < L; ++l)
            for (int ta : x.delta[a][l])
                for (int tb : y.delta[b][l])
                    edges[i].push_back({l, intern({ta, tb})});
    }
    FiniteAutomaton out;
    out.name = x.name + "_x_" + y.name;
    out.alphabet = x.alphabet;
    out.resize(static_cast<int>(nodes.size()), L);
    out.initial = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        out.accepting[i] = x.accepting[nodes[i].first] && y.accepting[nodes[i].second];
        for (auto [l, d] : edges[i])
            out.add_edge(static_cast<int>(i), l, d);
    }
    out.deterministic = x.deterministic && y.deterministic;
    return out;
}

bool language_empty(const FiniteAutomaton& n) {
    std::vector<bool> seen(n.state_count, false);
    std::deque<int> queue{n.initial};
    seen[n.initial] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (n.accepting[s])
            return false;
        for (int l = 0; l < n.alphabet.size(); ++l)
            for (int t : n.delta[s][l])
                if (!seen[t]) {
                    seen[t] = true;
                    queue.push_back(t);
                }
    }
    return true;
}

} // namespace owb
