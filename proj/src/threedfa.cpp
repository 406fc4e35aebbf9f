#include "owb/threedfa.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "owb/cobuchi.hpp"
#include "owb/zoo.hpp"

namespace owb {

ThreeDfa ThreeDfa::normal_form() const {
    ThreeDfa n = *this;
    // Reject states whose edges (if any) only loop on themselves are
    // terminal: drop their edges so partial listings and generated products
    // coincide. Reject states with real continuations keep them.
    std::vector<bool> terminal(n.state_count, false);
    for (int s = 0; s < n.state_count; ++s) {
        if (n.labels[s] != Label::Reject)
            continue;
        bool self_only = true;
        for (int l = 0; l < n.alphabet.size(); ++l)
            if (n.delta[s][l] >= 0 && n.delta[s][l] != s)
                self_only = false;
        if (self_only) {
            terminal[s] = true;
            n.delta[s].assign(n.alphabet.size(), -1);
        }
    }
    // canonical terminal reject for missing edges elsewhere
    int sink = -1;
    for (int s = 0; s < n.state_count; ++s)
        if (terminal[s]) {
            sink = s;
            break;
        }
    bool missing = false;
    for (int s = 0; s < n.state_count; ++s)
        if (!terminal[s])
            for (int l = 0; l < n.alphabet.size(); ++l)
                missing = missing || n.delta[s][l] < 0;
    if (missing && sink < 0) {
        sink = n.state_count++;
        n.delta.emplace_back(n.alphabet.size(), -1);
        n.labels.push_back(Label::Reject);
    }
    for (int s = 0; s < n.state_count; ++s)
        if (!terminal[s])
            for (int l = 0; l < n.alphabet.size(); ++l)
                if (n.delta[s][l] < 0)
                    n.delta[s][l] = sink;
    // trim unreachable
    std::vector<int> remap(n.state_count, -1);
    std::deque<int> queue{n.initial};
    remap[n.initial] = 0;
    int count = 1;
    std::vector<int> order{n.initial};
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int l = 0; l < n.alphabet.size(); ++l) {
            int d = n.delta[s][l];
            if (d >= 0 && remap[d] < 0) {
                remap[d] = count++;
                order.push_back(d);
                queue.push_back(d);
            }
        }
    }
    ThreeDfa out;
    out.name = n.name;
    out.alphabet = n.alphabet;
    out.resize(count, n.alphabet.size());
    out.initial = 0;
    for (int i = 0; i < count; ++i) {
        int s = order[i];
        out.labels[i] = n.labels[s];
        for (int l = 0; l < n.alphabet.size(); ++l)
            out.delta[i][l] = n.delta[s][l] < 0 ? -1 : remap[n.delta[s][l]];
    }
    return out;
}

ThreeDfa threedfa_from_text(const std::string& text) {
    ThreeDfa t;
    std::istringstream is(text);
    std::string line;
    bool have_header = false;
    int letters = 0;
    auto strip = [](std::string s) {
        auto c = s.find("--");
        if (c != std::string::npos)
            s = s.substr(0, c);
        return s;
    };
    while (std::getline(is, line)) {
        line = strip(line);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (!have_header) {
            int states = std::stoi(tok);
            if (!(ls >> letters))
                throw std::runtime_error("3dfa: header needs state and letter counts");
            std::vector<std::string> names;
            for (int l = 0; l < letters; ++l)
                names.push_back("g" + std::to_string(l));
            t.alphabet = Alphabet(names);
            t.resize(states, letters);
            have_header = true;
            continue;
        }
        if (tok == "i") {
            ls >> t.initial;
        } else if (tok == "t") {
            int s, a, d;
            ls >> s >> a >> d;
            if (s < 0 || s >= t.state_count || a < 0 || a >= letters || d < 0 ||
                d >= t.state_count)
                throw std::runtime_error("3dfa: transition out of range");
            t.delta[s][a] = d;
        } else if (tok == "a") {
            int s;
            ls >> s;
            t.labels.at(s) = ThreeDfa::Label::Accept;
        } else if (tok == "r") {
            int s;
            ls >> s;
            t.labels.at(s) = ThreeDfa::Label::Reject;
        } else {
            throw std::runtime_error("3dfa: unknown directive " + tok);
        }
    }
    if (!have_header)
        throw std::runtime_error("3dfa: missing header");
    return t;
}

std::string threedfa_to_text(const ThreeDfa& t) {
    std::ostringstream os;
    os << t.state_count << " " << t.alphabet.size() << " -- number of states, letters\n";
    os << "i " << t.initial << " -- initial state\n";
    for (int s = 0; s < t.state_count; ++s)
        for (int l = 0; l < t.alphabet.size(); ++l)
            if (t.delta[s][l] >= 0)
                os << "t " << s << " " << l << " " << t.delta[s][l] << "\n";
    for (int s = 0; s < t.state_count; ++s)
        if (t.labels[s] == ThreeDfa::Label::Accept)
            os << "a " << s << "\n";
    for (int s = 0; s < t.state_count; ++s)
        if (t.labels[s] == ThreeDfa::Label::Reject)
            os << "r " << s << "\n";
    return os.str();
}

bool threedfa_isomorphic(const ThreeDfa& x_in, const ThreeDfa& y_in) {
    ThreeDfa x = x_in.normal_form(), y = y_in.normal_form();
    if (x.state_count != y.state_count || x.alphabet.size() != y.alphabet.size())
        return false;
    // Normal forms of these deterministic structures are BFS-canonical, so a
    // direct comparison decides isomorphism.
    for (int s = 0; s < x.state_count; ++s) {
        if (x.labels[s] != y.labels[s])
            return false;
        for (int l = 0; l < x.alphabet.size(); ++l)
            if (x.delta[s][l] != y.delta[s][l])
                return false;
    }
    return true;
}

ThreeDfa build_separation_3dfa(const FiniteAutomaton& lower_in, const FiniteAutomaton& upper_in) {
    FiniteAutomaton lower = complete_dfa(lower_in), upper = complete_dfa(upper_in);
    if (lower.alphabet != upper.alphabet)
        throw std::invalid_argument("alphabet mismatch");
    const int L = lower.alphabet.size();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> nodes;
    auto intern = [&](int a, int b) {
        auto it = ids.find({a, b});
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(nodes.size());
        ids.emplace(std::make_pair(a, b), id);
        nodes.push_back({a, b});
        return id;
    };
    intern(lower.initial, upper.initial);
    std::vector<std::vector<int>> table;
    for (size_t i = 0; i < nodes.size(); ++i) {
        table.emplace_back(L, -1);
        auto [a, b] = nodes[i];
        for (int l = 0; l < L; ++l)
            table[i][l] = intern(lower.delta[a][l][0], upper.delta[b][l][0]);
    }
    ThreeDfa t;
    t.name = "sep_" + lower_in.name + "_" + upper_in.name;
    t.alphabet = lower.alphabet;
    t.resize(static_cast<int>(nodes.size()), L);
    t.initial = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        auto [a, b] = nodes[i];
        bool l_live = lower.accepting[a];
        bool u_live = upper.accepting[b];
        if (l_live && !u_live)
            throw std::invalid_argument("separation inputs violate lower ⊆ upper");
        t.labels[i] = l_live ? ThreeDfa::Label::Accept
                             : (!u_live ? ThreeDfa::Label::Reject : ThreeDfa::Label::DontCare);
        t.delta[i] = table[i];
    }
    return t;
}

CnfInstance encode_exists_kdfa(const ThreeDfa& t_in, int k) {
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    ThreeDfa t = t_in.normal_form();
    // complete the 3-DFA (reject states absorb)
    for (int s = 0; s < t.state_count; ++s)
        for (int l = 0; l < t.alphabet.size(); ++l)
            if (t.delta[s][l] < 0)
                t.delta[s][l] = s;
    const int L = t.alphabet.size();
    CnfInstance f;
    // transition vars
    std::vector<std::vector<std::vector<int>>> tv(k, std::vector<std::vector<int>>(L,
                                                      std::vector<int>(k, 0)));
    for (int q = 0; q < k; ++q)
        for (int a = 0; a < L; ++a)
            for (int q2 = 0; q2 < k; ++q2)
                tv[q][a][q2] = f.new_var("t(" + std::to_string(q) + "," + t.alphabet.name(a) +
                                         "," + std::to_string(q2) + ")");
    std::vector<int> fv(k);
    for (int q = 0; q < k; ++q)
        fv[q] = f.new_var("f(" + std::to_string(q) + ")");
    std::vector<std::vector<int>> rv(t.state_count, std::vector<int>(k));
    for (int s = 0; s < t.state_count; ++s)
        for (int q = 0; q < k; ++q)
            rv[s][q] = f.new_var("R(" + std::to_string(s) + "," + std::to_string(q) + ")");

    // one-hot transitions
    for (int q = 0; q < k; ++q)
        for (int a = 0; a < L; ++a) {
            std::vector<int> any;
            for (int q2 = 0; q2 < k; ++q2)
                any.push_back(tv[q][a][q2]);
            f.add_clause(any);
            for (int x = 0; x < k; ++x)
                for (int y = x + 1; y < k; ++y)
                    f.add_clause({-tv[q][a][x], -tv[q][a][y]});
        }
    // reachability closure
    f.add_clause({rv[t.initial][0]});
    for (int s = 0; s < t.state_count; ++s)
        for (int q = 0; q < k; ++q)
            for (int a = 0; a < L; ++a)
                for (int q2 = 0; q2 < k; ++q2)
                    f.add_clause({-rv[s][q], -tv[q][a][q2], rv[t.delta[s][a]][q2]});
    // labels
    for (int s = 0; s < t.state_count; ++s)
        for (int q = 0; q < k; ++q) {
            if (t.labels[s] == ThreeDfa::Label::Accept)
                f.add_clause({-rv[s][q], fv[q]});
            else if (t.labels[s] == ThreeDfa::Label::Reject)
                f.add_clause({-rv[s][q], -fv[q]});
        }
    // symmetry breaking: every state j >= 1 has an incoming edge from a
    // smaller state
    for (int j = 1; j < k; ++j) {
        std::vector<int> any;
        for (int i = 0; i < j; ++i) {
            int c = f.new_var("conn(" + std::to_string(i) + "," + std::to_string(j) + ")");
            any.push_back(c);
            std::vector<int> imp{-c};
            for (int a = 0; a < L; ++a)
                imp.push_back(tv[i][a][j]);
            f.add_clause(imp);
        }
        f.add_clause(any);
    }
    return f;
}

FiniteAutomaton decode_dfa(const CnfInstance& f, const SatResult& model, const ThreeDfa& t,
                           int k) {
    if (model.status != SatResult::Status::Sat)
        throw std::invalid_argument("decode needs a Sat result");
    const int L = t.alphabet.size();
    FiniteAutomaton b;
    b.name = t.name + "_separator";
    b.alphabet = t.alphabet;
    b.resize(k, L);
    b.initial = 0;
    b.deterministic = true;
    int var = 1;
    for (int q = 0; q < k; ++q)
        for (int a = 0; a < L; ++a) {
            int dst = -1;
            for (int q2 = 0; q2 < k; ++q2, ++var)
                if (model.model.at(var)) {
                    if (dst != -1)
                        throw std::logic_error("one-hot violated in model");
                    dst = q2;
                }
            if (dst == -1)
                throw std::logic_error("one-hot violated in model");
            b.add_edge(q, a, dst);
        }
    for (int q = 0; q < k; ++q, ++var)
        b.accepting[q] = model.model.at(var);
    (void)f;
    return b;
}

bool verify_separator(const FiniteAutomaton& b, const FiniteAutomaton& lower,
                      const FiniteAutomaton& upper) {
    return dfa_included(lower, b).holds && dfa_included(b, upper).holds;
}

MinSeparatorResult min_separator_size(const ThreeDfa& t, int k_max, const SatBudget& budget) {
    MinSeparatorResult res;
    for (int k = 1; k <= k_max; ++k) {
        CnfInstance f = encode_exists_kdfa(t, k);
        SatResult r = sat_solve(f, budget);
        res.ladder.push_back(r.status);
        if (r.status == SatResult::Status::Sat) {
            res.size = k;
            res.witness = decode_dfa(f, r, t, k);
            return res;
        }
        if (r.status == SatResult::Status::Timeout)
            return res;
    }
    return res;
}

namespace {

// Shared 15-state frame of the four packaged instances: three five-state
// tracker copies over {a,b,c,1,4} (letters 0..4).
std::string instance_common() {
    return R"(16 5 -- number of states, letters
-- alphabet: 0 a, 1 b, 2 c, 3 1, 4 4
i 0 -- initial state
t 0 0 1
t 0 1 0
t 0 2 2
t 0 3 0
t 0 4 0
t 1 0 1
t 1 1 4
t 1 2 3
t 1 3 0
t 1 4 0
t 2 0 1
t 2 1 0
t 2 2 2
t 2 4 0
t 3 0 1
t 3 1 4
t 3 2 3
t 3 4 0
t 4 0 1
t 4 1 4
t 4 2 3
t 4 3 0
t 5 0 6
t 5 1 5
t 5 2 7
t 5 3 5
t 5 4 5
t 6 0 6
t 6 1 9
t 6 2 8
t 6 3 5
t 6 4 5
t 7 0 6
t 7 1 5
t 7 2 7
t 7 4 5
t 8 0 6
t 8 1 9
t 8 2 8
t 8 4 5
t 9 0 6
t 9 1 9
t 9 2 8
t 9 3 5
t 10 0 11
t 10 1 10
t 10 2 12
t 10 3 10
t 10 4 10
t 11 0 11
t 11 1 14
t 11 2 13
t 11 3 10
t 11 4 10
t 12 0 11
t 12 1 10
t 12 2 12
t 12 4 10
t 13 0 11
t 13 1 14
t 13 2 13
t 13 4 10
t 14 0 11
t 14 1 14
t 14 2 13
t 14 3 10
a 0
a 1
a 2
a 3
a 4
r 15
)";
}

std::string instance_variant(const std::string& key) {
    if (key == "p2" || key == "p5")
        return "t 2 3 5\nt 3 3 5\nt 4 4 10\nt 7 3 15\nt 8 3 15\nt 9 4 10\n"
               "t 12 3 5\nt 13 3 5\nt 14 4 15\n";
    if (key == "sq1")
        return "t 2 3 15\nt 3 3 15\nt 4 4 10\nt 7 3 15\nt 8 3 15\nt 9 4 10\n"
               "t 12 3 5\nt 13 3 5\nt 14 4 15\n";
    if (key == "sq4")
        return "t 2 3 5\nt 3 3 5\nt 4 4 15\nt 7 3 15\nt 8 3 15\nt 9 4 10\n"
               "t 12 3 5\nt 13 3 5\nt 14 4 15\n";
    throw std::invalid_argument("unknown separation instance: " + key);
}

} // namespace

ThreeDfa separation_instance(const std::string& key) {
    ThreeDfa t = threedfa_from_text(instance_common() + instance_variant(key));
    t.name = "instance_" + key;
    t.alphabet = Alphabet({"a", "b", "c", "1", "4"});
    return t;
}

std::vector<std::string> separation_instance_keys() { return {"p2", "p5", "sq1", "sq4"}; }

ThreeDfa generated_separation_instance(const std::string& key) {
    std::string state = key == "p2"    ? "p2"
                        : key == "p5"  ? "p5"
                        : key == "sq1" ? "P1"
                        : key == "sq4" ? "P4"
                                       : throw std::invalid_argument("unknown instance " + key);
    std::vector<std::string> gamma{"a", "b", "c", "1", "4"};
    FiniteAutomaton lower = prefix_closure_dfa(restrict_alphabet(zoo_finite("theju"), gamma));
    Automaton cmain = zoo("cmain");
    SafeComponentView view(cmain);
    FiniteAutomaton safe = view.safe;
    safe.initial = *cmain.state(state);
    FiniteAutomaton upper = prefix_closure_dfa(restrict_alphabet(safe, gamma));
    ThreeDfa t = build_separation_3dfa(lower, upper);
    t.name = "generated_" + key;
    return t;
}

} // namespace owb
