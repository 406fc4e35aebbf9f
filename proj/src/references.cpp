#include "owb/references.hpp"

#include <functional>
#include <stdexcept>

#include "owb/zoo.hpp"

namespace owb {

namespace {

// Step outcome of a segment tracker: continue in-state, complete segment j,
// or die.
struct TrackStep {
    int next = -1; // -1 when not staying
    int exit = 0;  // completed segment index, 0 when none
};

// Segment tracker interface: a small DFA fragment whose exits mark the
// completion of one of `segments` segment languages.
struct Tracker {
    int states = 0;
    int start = 0;
    int segments = 0;
    std::function<TrackStep(int, int)> step; // (state, letter) -> outcome
};

// Tracker over the 16-letter alphabet: the classifier frame; completing
// segment j means the classifier would enter final state j.
Tracker classifier_tracker() {
    ClassifierDfa c = zoo_classifier();
    FiniteAutomaton dfa = c.dfa;
    std::map<int, int> finals = c.finals;
    Tracker t;
    t.states = 5; // p q t s r
    t.start = 0;
    t.segments = 6;
    t.step = [dfa, finals](int s, int l) -> TrackStep {
        int d = dfa.delta[s][l][0];
        auto f = finals.find(d);
        if (f != finals.end())
            return {-1, f->second};
        if (d >= 5)
            return {-1, 0}; // sink
        return {d, 0};
    };
    return t;
}

// Tracker over {a,b,c,x,y,...}: segments are (x*y*)* x g for g = a,b,c
// (exits 1..3); anything else kills the attempt.
Tracker xword_tracker(const Alphabet& sigma) {
    int xi = *sigma.index("x");
    int yi = *sigma.index("y");
    int ai = *sigma.index("a"), bi = *sigma.index("b"), ci = *sigma.index("c");
    Tracker t;
    t.states = 2; // 0: last letter not x, 1: last letter x
    t.start = 0;
    t.segments = 3;
    t.step = [=](int s, int l) -> TrackStep {
        if (l == xi)
            return {1, 0};
        if (l == yi)
            return {0, 0};
        if (s == 1) {
            if (l == ai)
                return {-1, 1};
            if (l == bi)
                return {-1, 2};
            if (l == ci)
                return {-1, 3};
        }
        return {-1, 0};
    };
    return t;
}

// Monitor skeleton for (Σ* · X · Σ* · y)^ω / Σ* · X · Σ* · y with
// X = ⋃_{α≠β} (L_α + r_α) L_β L_β over the tracker's segment languages.
// reset_letter(j) < 0 disables the reset alternative.
struct MonitorSpec {
    Alphabet sigma;
    Tracker tracker;
    std::function<int(int)> reset_letter; // segment -> letter index or -1
    int y_letter;
};

// Builds the Büchi monitor; `finite` instead produces the finite-word NFA
// accepting Σ*·X·Σ*·y exactly.
void build_monitor_into(const MonitorSpec& spec, Automaton* omega, FiniteAutomaton* fin) {
    const Tracker& tk = spec.tracker;
    const int L = spec.sigma.size();
    const int segs = tk.segments;
    // state ids
    int S0 = 0;
    auto P1 = [&](int s) { return 1 + s; };
    auto P2 = [&](int seg, int s) { return 1 + tk.states + (seg - 1) * tk.states + s; };
    auto P3 = [&](int seg, int s) {
        return 1 + tk.states * (1 + segs) + (seg - 1) * tk.states + s;
    };
    int W = 1 + tk.states * (1 + 2 * segs);
    int ACC = W + 1; // finite variant only
    int total = fin ? ACC + 1 : W + 1;

    std::vector<std::string> names(total);
    names[S0] = "scan";
    for (int s = 0; s < tk.states; ++s)
        names[P1(s)] = "first." + std::to_string(s);
    for (int seg = 1; seg <= segs; ++seg)
        for (int s = 0; s < tk.states; ++s) {
            names[P2(seg, s)] = "second" + std::to_string(seg) + "." + std::to_string(s);
            names[P3(seg, s)] = "third" + std::to_string(seg) + "." + std::to_string(s);
        }
    names[W] = "wait_y";
    if (fin)
        names[ACC] = "done";

    struct E {
        int src, letter, dst;
        bool sig;
    };
    std::vector<E> edges;
    for (int l = 0; l < L; ++l) {
        edges.push_back({S0, l, S0, false});
        // an X-infix may start here
        TrackStep st = tk.step(tk.start, l);
        if (st.next >= 0)
            edges.push_back({S0, l, P1(st.next), false});
        else if (st.exit > 0)
            edges.push_back({S0, l, P2(st.exit, tk.start), false});
        edges.push_back({W, l, W, false});
    }
    for (int seg = 1; seg <= segs; ++seg) {
        int rl = spec.reset_letter(seg);
        if (rl >= 0)
            edges.push_back({S0, rl, P2(seg, tk.start), false});
    }
    for (int s = 0; s < tk.states; ++s)
        for (int l = 0; l < L; ++l) {
            TrackStep st = tk.step(s, l);
            if (st.next >= 0) {
                edges.push_back({P1(s), l, P1(st.next), false});
                for (int seg = 1; seg <= segs; ++seg) {
                    edges.push_back({P2(seg, s), l, P2(seg, st.next), false});
                    edges.push_back({P3(seg, s), l, P3(seg, st.next), false});
                }
            } else if (st.exit > 0) {
                int alpha = st.exit;
                edges.push_back({P1(s), l, P2(alpha, tk.start), false});
                for (int seg = 1; seg <= segs; ++seg) {
                    if (alpha != seg)
                        edges.push_back({P2(seg, s), l, P3(alpha, tk.start), false});
                    if (alpha == seg)
                        edges.push_back({P3(seg, s), l, W, false});
                }
            }
        }
    if (omega) {
        omega->alphabet = spec.sigma;
        omega->acceptance = Acceptance::Buchi;
        for (int i = 0; i < W + 1; ++i)
            omega->add_state(names[i]);
        omega->initial = S0;
        for (const E& e : edges)
            omega->add_transition(e.src, e.letter, e.dst, false);
        omega->add_transition(W, spec.y_letter, S0, true);
    }
    if (fin) {
        fin->alphabet = spec.sigma;
        fin->resize(total, L);
        fin->state_names = names;
        fin->initial = S0;
        for (const E& e : edges)
            fin->add_edge(e.src, e.letter, e.dst);
        fin->add_edge(W, spec.y_letter, ACC);
        fin->accepting[ACC] = true;
        fin->deterministic = false;
    }
}

MonitorSpec spec_main() {
    MonitorSpec s{alphabet_main(), classifier_tracker(), {}, 0};
    int r1 = *s.sigma.index("r1");
    s.reset_letter = [r1](int seg) { return r1 + seg - 1; };
    s.y_letter = *s.sigma.index("y");
    return s;
}

MonitorSpec spec_strong() {
    MonitorSpec s{alphabet_strong(), xword_tracker(alphabet_strong()), {}, 0};
    s.reset_letter = [](int) { return -1; };
    s.y_letter = *s.sigma.index("y");
    return s;
}

MonitorSpec spec_weak() {
    MonitorSpec s{alphabet_weak(), xword_tracker(alphabet_weak()), {}, 0};
    int ra = *s.sigma.index("ra");
    s.reset_letter = [ra](int seg) { return ra + seg - 1; };
    s.y_letter = *s.sigma.index("y");
    return s;
}

} // namespace

ReferenceLanguage reference(const std::string& key) {
    ReferenceLanguage r;
    r.key = key;
    MonitorSpec spec = key == "lmain"     ? spec_main()
                       : key == "lstrong" ? spec_strong()
                       : key == "lweak"   ? spec_weak()
                                          : throw std::invalid_argument("unknown reference: " + key);
    build_monitor_into(spec, &r.monitor, nullptr);
    r.monitor.name = key;
    return r;
}

std::vector<std::string> reference_keys() { return {"lmain", "lstrong", "lweak"}; }

namespace {

FiniteAutomaton ends_with(const Alphabet& sigma, const std::vector<int>& suffix) {
    // DFA over sigma accepting Σ*·suffix: track the longest suffix of the
    // input that is a prefix of `suffix` (KMP-style, sizes here are tiny).
    const int m = static_cast<int>(suffix.size());
    FiniteAutomaton f;
    f.alphabet = sigma;
    f.resize(m + 1, sigma.size());
    f.initial = 0;
    f.accepting[m] = true;
    auto advance = [&](int state, int letter) {
        // longest k such that suffix[0..k) is a suffix of suffix[0..state)+letter
        std::vector<int> word(suffix.begin(), suffix.begin() + state);
        word.push_back(letter);
        for (int k = std::min<int>(m, static_cast<int>(word.size())); k >= 0; --k) {
            bool match = true;
            for (int i = 0; i < k; ++i)
                if (word[word.size() - k + i] != suffix[i])
                    match = false;
            if (match)
                return k;
        }
        return 0;
    };
    for (int s = 0; s <= m; ++s)
        for (int l = 0; l < sigma.size(); ++l)
            f.add_edge(s, l, advance(s == m ? m : s, l));
    f.deterministic = true;
    return f;
}

FiniteAutomaton union_dfa(const FiniteAutomaton& a, const FiniteAutomaton& b) {
    FiniteAutomaton x = complete_dfa(a), y = complete_dfa(b);
    const int L = x.alphabet.size();
    FiniteAutomaton out;
    out.alphabet = x.alphabet;
    out.resize(x.state_count * y.state_count, L);
    out.initial = x.initial * y.state_count + y.initial;
    for (int i = 0; i < x.state_count; ++i)
        for (int j = 0; j < y.state_count; ++j) {
            int v = i * y.state_count + j;
            out.accepting[v] = x.accepting[i] || y.accepting[j];
            for (int l = 0; l < L; ++l)
                out.add_edge(v, l, x.delta[i][l][0] * y.state_count + y.delta[j][l][0]);
        }
    out.deterministic = true;
    return minimize_dfa(out);
}

FiniteAutomaton empty_language(const Alphabet& sigma) {
    FiniteAutomaton f;
    f.alphabet = sigma;
    f.resize(1, sigma.size());
    f.initial = 0;
    for (int l = 0; l < sigma.size(); ++l)
        f.add_edge(0, l, 0);
    f.deterministic = true;
    return f;
}

// Σ* (⋃ pairs L_g L_h) Σ* over the strong alphabet; `equal` selects g = h.
FiniteAutomaton strong_infix_pairs(bool equal) {
    Alphabet sigma = alphabet_strong();
    Tracker tk = xword_tracker(sigma);
    FiniteAutomaton f;
    f.alphabet = sigma;
    // states: 0 scan-loop, first-phase trackers, second-phase trackers per
    // first-exit, accept-loop
    auto P1 = [&](int s) { return 1 + s; };
    auto P2 = [&](int g, int s) { return 1 + tk.states + (g - 1) * tk.states + s; };
    int ACC = 1 + tk.states * 4;
    f.resize(ACC + 1, sigma.size());
    f.initial = 0;
    f.accepting[ACC] = true;
    for (int l = 0; l < sigma.size(); ++l) {
        f.add_edge(0, l, 0);
        f.add_edge(ACC, l, ACC);
        TrackStep st = tk.step(tk.start, l);
        if (st.next >= 0)
            f.add_edge(0, l, P1(st.next));
    }
    for (int s = 0; s < tk.states; ++s)
        for (int l = 0; l < sigma.size(); ++l) {
            TrackStep st = tk.step(s, l);
            if (st.next >= 0) {
                f.add_edge(P1(s), l, P1(st.next));
                for (int g = 1; g <= 3; ++g)
                    f.add_edge(P2(g, s), l, P2(g, st.next));
            } else if (st.exit > 0) {
                f.add_edge(P1(s), l, P2(st.exit, tk.start));
                for (int g = 1; g <= 3; ++g)
                    if (equal ? st.exit == g : st.exit != g)
                        f.add_edge(P2(g, s), l, ACC);
            }
        }
    return minimize_dfa(determinize(f));
}

FiniteAutomaton infix_word(const Alphabet& sigma, const std::vector<int>& infix) {
    // Σ* infix Σ*
    FiniteAutomaton f = ends_with(sigma, infix);
    // make the accepting state absorbing
    for (int s = 0; s < f.state_count; ++s)
        if (f.accepting[s])
            for (int l = 0; l < sigma.size(); ++l)
                f.delta[s][l] = {s};
    return f;
}

} // namespace

FiniteAutomaton target_language(const std::string& key) {
    auto starts = [&](const std::string& p) { return key.rfind(p, 0) == 0; };
    if (key == "main:empty" || key == "strong:empty" || key == "weak:empty") {
        Alphabet s = starts("main") ? alphabet_main()
                     : starts("strong") ? alphabet_strong()
                                        : alphabet_weak();
        FiniteAutomaton f = empty_language(s);
        f.name = key;
        return f;
    }
    if (starts("main:seg_or_reset")) {
        int j = std::stoi(key.substr(std::string("main:seg_or_reset").size()));
        FiniteAutomaton seg = target_language("main:seg" + std::to_string(j));
        Alphabet sigma = alphabet_main();
        FiniteAutomaton rst = ends_with(sigma, {*sigma.index("r" + std::to_string(j))});
        FiniteAutomaton f = union_dfa(seg, rst);
        f.name = key;
        return f;
    }
    if (starts("main:seg")) {
        int j = std::stoi(key.substr(std::string("main:seg").size()));
        ClassifierDfa c = zoo_classifier();
        FiniteAutomaton f = c.dfa;
        for (int s = 0; s < f.state_count; ++s)
            f.accepting[s] = false;
        for (auto [st, idx] : c.finals)
            if (idx == j)
                f.accepting[st] = true;
        f = minimize_dfa(f);
        f.name = key;
        return f;
    }
    if (starts("main:reset_suffix")) {
        int j = std::stoi(key.substr(std::string("main:reset_suffix").size()));
        Alphabet sigma = alphabet_main();
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("r" + std::to_string(j))});
        f.name = key;
        return f;
    }
    if (key == "main:ends_y") {
        Alphabet sigma = alphabet_main();
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("y")});
        f.name = key;
        return f;
    }
    if (key == "main:roundtrip!nfa") {
        FiniteAutomaton f;
        build_monitor_into(spec_main(), nullptr, &f);
        f.name = key;
        return f;
    }
    if (starts("strong:ends_x_in:")) {
        Alphabet sigma = alphabet_strong();
        std::string chars = key.substr(std::string("strong:ends_x_in:").size());
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("x"), *sigma.index(chars.substr(0, 1))});
        for (size_t i = 1; i < chars.size(); ++i)
            f = union_dfa(f, ends_with(sigma, {*sigma.index("x"), *sigma.index(chars.substr(i, 1))}));
        f.name = key;
        return f;
    }
    if (starts("strong:ends_x")) {
        Alphabet sigma = alphabet_strong();
        std::string g = key.substr(std::string("strong:ends_x").size());
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("x"), *sigma.index(g)});
        f.name = key;
        return f;
    }
    if (key == "strong:ends_y") {
        Alphabet sigma = alphabet_strong();
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("y")});
        f.name = key;
        return f;
    }
    if (key == "strong:infix_neq") {
        FiniteAutomaton f = strong_infix_pairs(false);
        f.name = key;
        return f;
    }
    if (key == "strong:infix_eq") {
        FiniteAutomaton f = strong_infix_pairs(true);
        f.name = key;
        return f;
    }
    if (key == "strong:infix_y") {
        Alphabet sigma = alphabet_strong();
        FiniteAutomaton f = infix_word(sigma, {*sigma.index("y")});
        f.name = key;
        return f;
    }
    if (starts("weak:ends_x_or_r")) {
        std::string g = key.substr(std::string("weak:ends_x_or_r").size());
        Alphabet sigma = alphabet_weak();
        FiniteAutomaton xs = ends_with(sigma, {*sigma.index("x"), *sigma.index(g)});
        FiniteAutomaton rs = ends_with(sigma, {*sigma.index("r" + g)});
        FiniteAutomaton f = union_dfa(xs, rs);
        f.name = key;
        return f;
    }
    if (starts("weak:ends_x")) {
        std::string g = key.substr(std::string("weak:ends_x").size());
        Alphabet sigma = alphabet_weak();
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("x"), *sigma.index(g)});
        f.name = key;
        return f;
    }
    if (starts("weak:reset_suffix")) {
        std::string g = key.substr(std::string("weak:reset_suffix").size());
        Alphabet sigma = alphabet_weak();
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("r" + g)});
        f.name = key;
        return f;
    }
    if (key == "weak:ends_y") {
        Alphabet sigma = alphabet_weak();
        FiniteAutomaton f = ends_with(sigma, {*sigma.index("y")});
        f.name = key;
        return f;
    }
    throw std::invalid_argument("unknown target language: " + key);
}

} // namespace owb
