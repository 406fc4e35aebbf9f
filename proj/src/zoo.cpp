#include "owb/zoo.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <tuple>

namespace owb {

Alphabet alphabet_main() {
    return Alphabet({"a", "b", "c", "1", "2", "3", "4", "5", "6", "r1", "r2", "r3", "r4", "r5",
                     "r6", "y"});
}
Alphabet alphabet_strong() { return Alphabet({"a", "b", "c", "x", "y"}); }
Alphabet alphabet_weak() { return Alphabet({"a", "b", "c", "x", "y", "ra", "rb", "rc"}); }
Alphabet alphabet_replace() { return Alphabet({"a", "b", "c", "1", "2"}); }
Alphabet alphabet_bkks() { return Alphabet({"x", "a", "b"}); }

namespace {

// Letter indices in alphabet_main.
constexpr int A = 0, B = 1, C = 2;
constexpr int E1 = 3, E2 = 4, E3 = 5, F4 = 6, F5 = 7, F6 = 8;
constexpr int R1 = 9; // r-letter for segment index i is R1 + (i-1)
constexpr int YY = 15;
inline int seg_letter(int i) { return E1 + (i - 1); } // i in 1..6
inline bool seg_in_e(int i) { return i <= 3; }

Automaton build_abkks() {
    Automaton a;
    a.name = "abkks";
    a.alphabet = alphabet_bkks();
    a.acceptance = Acceptance::Buchi;
    int I = a.add_state("I");
    int ia = a.add_state("iota_a");
    int ib = a.add_state("iota_b");
    int pa = a.add_state("p_a");
    int pb = a.add_state("p_b");
    int sa = a.add_state("s_a");
    int sb = a.add_state("s_b");
    a.initial = I;
    int x = 0, la = 1, lb = 2;
    a.add_transition(I, x, ia);
    a.add_transition(I, x, ib);
    a.add_transition(ia, lb, I);
    a.add_transition(ia, la, pa, true);
    a.add_transition(ib, la, I);
    a.add_transition(ib, lb, pb, true);
    a.add_transition(pa, x, sa);
    a.add_transition(pb, x, sb);
    a.add_transition(sa, lb, pb);
    a.add_transition(sa, la, I, true);
    a.add_transition(sb, la, pa);
    a.add_transition(sb, lb, I, true);
    return a;
}

Automaton build_fig2_nonhd() {
    Automaton a;
    a.name = "fig2_nonhd";
    a.alphabet = Alphabet({"a", "b"});
    a.acceptance = Acceptance::Buchi;
    int q0 = a.add_state("q0");
    int q1 = a.add_state("q1");
    int q2 = a.add_state("q2");
    a.initial = q0;
    a.add_transition(q0, 0, q0);
    a.add_transition(q0, 1, q0);
    a.add_transition(q0, 0, q1);
    a.add_transition(q1, 0, q1, true);
    a.add_transition(q1, 1, q2);
    a.add_transition(q2, 0, q2);
    a.add_transition(q2, 1, q2);
    return a;
}

// Shared layout of the strong/weak 17-state family. alphabet letters:
// a=0 b=1 c=2 x=3 y=4 (+ra,rb,rc = 5,6,7 in the weak variant).
struct StrongStates {
    int I, iota[3], p[3], pp[3], q[3], qq[3], Y;
};

StrongStates add_strong_states(Automaton& a, bool with_pink) {
    StrongStates s{};
    const char* g[3] = {"a", "b", "c"};
    if (with_pink) {
        s.I = a.add_state("I");
        for (int i = 0; i < 3; ++i)
            s.iota[i] = a.add_state(std::string("iota_") + g[i]);
    } else {
        s.I = -1;
        s.iota[0] = s.iota[1] = s.iota[2] = -1;
    }
    for (int i = 0; i < 3; ++i)
        s.p[i] = a.add_state(std::string("p_") + g[i]);
    for (int i = 0; i < 3; ++i)
        s.pp[i] = a.add_state(std::string("p'_") + g[i]);
    for (int i = 0; i < 3; ++i)
        s.q[i] = a.add_state(std::string("q_") + g[i]);
    for (int i = 0; i < 3; ++i)
        s.qq[i] = a.add_state(std::string("q'_") + g[i]);
    s.Y = a.add_state("Y");
    return s;
}

constexpr int SA = 0, SB = 1, SC = 2, SX = 3, SY = 4;

Automaton build_astrong() {
    Automaton a;
    a.name = "astrong";
    a.alphabet = alphabet_strong();
    a.acceptance = Acceptance::Buchi;
    StrongStates s = add_strong_states(a, true);
    a.initial = s.I;
    for (int l : {SA, SB, SC, SY})
        a.add_transition(s.I, l, s.I);
    for (int i = 0; i < 3; ++i) {
        a.add_transition(s.I, SX, s.iota[i]);
        a.add_transition(s.iota[i], SX, s.iota[i]);
        // return to I on the other two letters and on y
        for (int l : {SA, SB, SC})
            if (l != i)
                a.add_transition(s.iota[i], l, s.I);
        a.add_transition(s.iota[i], SY, s.I);
        a.add_transition(s.iota[i], i, s.p[i], true);
        // p / p' column
        for (int l : {SA, SB, SC, SY})
            a.add_transition(s.p[i], l, s.p[i]);
        a.add_transition(s.p[i], SX, s.pp[i]);
        a.add_transition(s.pp[i], SX, s.pp[i]);
        a.add_transition(s.pp[i], i, s.p[i]);
        a.add_transition(s.pp[i], SY, s.p[i]);
        for (int l : {SA, SB, SC})
            if (l != i)
                a.add_transition(s.pp[i], l, s.q[l], true);
        // q / q' column
        for (int l : {SA, SB, SC, SY})
            a.add_transition(s.q[i], l, s.q[i]);
        a.add_transition(s.q[i], SX, s.qq[i]);
        a.add_transition(s.qq[i], SX, s.qq[i]);
        a.add_transition(s.qq[i], SY, s.q[i]);
        a.add_transition(s.qq[i], i, s.Y, true);
        for (int l : {SA, SB, SC})
            if (l != i)
                a.add_transition(s.qq[i], l, s.q[l]);
    }
    for (int l : {SA, SB, SC, SX})
        a.add_transition(s.Y, l, s.Y);
    a.add_transition(s.Y, SY, s.I, true);
    return a;
}

Automaton build_dstrong() {
    Automaton a;
    a.name = "dstrong";
    a.alphabet = alphabet_strong();
    a.acceptance = Acceptance::Buchi;
    StrongStates s = add_strong_states(a, false);
    a.initial = s.p[0];
    for (int i = 0; i < 3; ++i) {
        for (int l : {SA, SB, SC, SY})
            a.add_transition(s.p[i], l, s.p[i]);
        a.add_transition(s.p[i], SX, s.pp[i]);
        a.add_transition(s.pp[i], SX, s.pp[i]);
        a.add_transition(s.pp[i], i, s.p[i]);
        a.add_transition(s.pp[i], SY, s.p[i]);
        for (int l : {SA, SB, SC, SY})
            a.add_transition(s.q[i], l, s.q[i]);
        a.add_transition(s.q[i], SX, s.qq[i]);
        a.add_transition(s.qq[i], SX, s.qq[i]);
        a.add_transition(s.qq[i], SY, s.q[i]);
        a.add_transition(s.qq[i], i, s.Y, true);
        for (int l : {SA, SB, SC})
            if (l != i)
                a.add_transition(s.qq[i], l, s.q[l]);
    }
    // Rewired significant transitions.
    a.add_transition(s.pp[0], SB, s.p[1], true);
    a.add_transition(s.pp[0], SC, s.p[1], true);
    a.add_transition(s.pp[1], SA, s.p[2], true);
    a.add_transition(s.pp[1], SC, s.p[2], true);
    a.add_transition(s.pp[2], SA, s.q[0], true);
    a.add_transition(s.pp[2], SB, s.q[1], true);
    for (int l : {SA, SB, SC, SX})
        a.add_transition(s.Y, l, s.Y);
    a.add_transition(s.Y, SY, s.p[0], true);
    return a;
}

constexpr int WA = 0, WB = 1, WC = 2, WX = 3, WY = 4, WRA = 5;

Automaton build_aweak() {
    Automaton a;
    a.name = "aweak";
    a.alphabet = alphabet_weak();
    a.acceptance = Acceptance::Buchi;
    StrongStates s = add_strong_states(a, true);
    a.initial = s.I;
    for (int l : {WA, WB, WC, WY})
        a.add_transition(s.I, l, s.I);
    for (int j = 0; j < 3; ++j)
        a.add_transition(s.I, WRA + j, s.p[j], true);
    for (int i = 0; i < 3; ++i) {
        a.add_transition(s.I, WX, s.iota[i]);
        a.add_transition(s.iota[i], WX, s.iota[i]);
        for (int l : {WA, WB, WC})
            if (l != i)
                a.add_transition(s.iota[i], l, s.I);
        a.add_transition(s.iota[i], WY, s.I);
        a.add_transition(s.iota[i], i, s.p[i], true);
        for (int j = 0; j < 3; ++j)
            a.add_transition(s.iota[i], WRA + j, s.p[j], true);

        for (int l : {WA, WB, WC, WY})
            a.add_transition(s.p[i], l, s.p[i]);
        a.add_transition(s.p[i], WX, s.pp[i]);
        a.add_transition(s.pp[i], WX, s.pp[i]);
        a.add_transition(s.pp[i], i, s.p[i]);
        a.add_transition(s.pp[i], WY, s.p[i]);
        for (int l : {WA, WB, WC})
            if (l != i)
                a.add_transition(s.pp[i], l, s.q[l]); // non-significant here

        for (int l : {WA, WB, WC, WY})
            a.add_transition(s.q[i], l, s.q[i]);
        a.add_transition(s.q[i], WX, s.qq[i]);
        a.add_transition(s.qq[i], WX, s.qq[i]);
        a.add_transition(s.qq[i], WY, s.q[i]);
        a.add_transition(s.qq[i], i, s.Y, true);
        for (int l : {WA, WB, WC})
            if (l != i)
                a.add_transition(s.qq[i], l, s.q[l]);
        // blue-box resets
        for (int j = 0; j < 3; ++j) {
            a.add_transition(s.p[i], WRA + j, s.p[j]);
            a.add_transition(s.pp[i], WRA + j, s.p[j]);
            a.add_transition(s.q[i], WRA + j, s.p[j]);
            a.add_transition(s.qq[i], WRA + j, s.p[j]);
        }
    }
    for (int l : {WA, WB, WC, WX, WRA, WRA + 1, WRA + 2})
        a.add_transition(s.Y, l, s.Y);
    a.add_transition(s.Y, WY, s.I, true);
    return a;
}

Automaton build_dweak() {
    Automaton a;
    a.name = "dweak";
    a.alphabet = alphabet_weak();
    a.acceptance = Acceptance::Buchi;
    StrongStates s = add_strong_states(a, false);
    // The shared layout's single Y becomes the first of three indexed copies.
    int Yc[3];
    Yc[0] = s.Y;
    a.state_names[s.Y] = "Y_a";
    Yc[1] = a.add_state("Y_b");
    Yc[2] = a.add_state("Y_c");
    a.initial = s.p[0];
    for (int i = 0; i < 3; ++i) {
        for (int l : {WA, WB, WC, WY})
            a.add_transition(s.p[i], l, s.p[i]);
        a.add_transition(s.p[i], WX, s.pp[i]);
        a.add_transition(s.pp[i], WX, s.pp[i]);
        a.add_transition(s.pp[i], i, s.p[i]);
        a.add_transition(s.pp[i], WY, s.p[i]);
        for (int l : {WA, WB, WC})
            if (l != i)
                a.add_transition(s.pp[i], l, s.q[l]);
        for (int l : {WA, WB, WC, WY})
            a.add_transition(s.q[i], l, s.q[i]);
        a.add_transition(s.q[i], WX, s.qq[i]);
        a.add_transition(s.qq[i], WX, s.qq[i]);
        a.add_transition(s.qq[i], WY, s.q[i]);
        a.add_transition(s.qq[i], i, Yc[i], true);
        for (int l : {WA, WB, WC})
            if (l != i)
                a.add_transition(s.qq[i], l, s.q[l]);
        for (int j = 0; j < 3; ++j) {
            a.add_transition(s.p[i], WRA + j, s.p[j]);
            a.add_transition(s.pp[i], WRA + j, s.p[j]);
            a.add_transition(s.q[i], WRA + j, s.p[j]);
            a.add_transition(s.qq[i], WRA + j, s.p[j]);
        }
        for (int l : {WA, WB, WC, WX, WRA, WRA + 1, WRA + 2})
            a.add_transition(Yc[i], l, Yc[i]);
        a.add_transition(Yc[i], WY, s.p[i], true);
    }
    return a;
}

Automaton build_areplace() {
    Automaton a;
    a.name = "areplace";
    a.alphabet = alphabet_replace();
    a.acceptance = Acceptance::Buchi;
    int I = a.add_state("I");
    int ia = a.add_state("iota_a");
    int ib = a.add_state("iota_b");
    int ic = a.add_state("iota_c");
    int p1 = a.add_state("p1");
    int l1 = a.add_state("l1");
    int l2 = a.add_state("l2");
    int l3 = a.add_state("l3");
    int l4 = a.add_state("l4");
    int p2 = a.add_state("p2");
    int r1 = a.add_state("r1");
    int r2 = a.add_state("r2");
    int r3 = a.add_state("r3");
    int r4 = a.add_state("r4");
    a.initial = I;
    int la = 0, lb = 1, lc = 2, l_1 = 3, l_2 = 4;
    // guessing component
    a.add_transition(I, la, I);
    a.add_transition(I, la, ia);
    a.add_transition(I, lb, I);
    a.add_transition(I, l_1, I);
    a.add_transition(I, l_2, I);
    a.add_transition(I, lc, ic);
    a.add_transition(ia, la, ia);
    a.add_transition(ia, lc, ia);
    a.add_transition(ia, lb, ib);
    a.add_transition(ia, l_1, I);
    a.add_transition(ia, l_2, I);
    a.add_transition(ib, lb, ib);
    a.add_transition(ib, la, ia);
    a.add_transition(ib, lc, ia);
    a.add_transition(ib, l_1, I); // non-completing reset, like the blocks' r-states
    a.add_transition(ib, l_2, p2);
    a.add_transition(ic, lc, ic);
    a.add_transition(ic, la, I);
    a.add_transition(ic, la, ia); // second half of the E-versus-F guess
    a.add_transition(ic, lb, I);
    a.add_transition(ic, l_2, I);
    a.add_transition(ic, l_1, p1);
    // left 5-state block (rooted at p1)
    a.add_transition(p1, lb, p1);
    a.add_transition(p1, l_1, p1);
    a.add_transition(p1, l_2, p1);
    a.add_transition(p1, la, l3);
    a.add_transition(p1, lc, l1);
    a.add_transition(l1, lc, l1);
    a.add_transition(l1, la, l3);
    a.add_transition(l1, lb, p1);
    a.add_transition(l1, l_1, I, true);
    a.add_transition(l1, l_2, p1);
    a.add_transition(l2, lc, l2);
    a.add_transition(l2, la, l3);
    a.add_transition(l2, lb, l4);
    a.add_transition(l2, l_1, I, true);
    a.add_transition(l2, l_2, p1);
    a.add_transition(l3, la, l3);
    a.add_transition(l3, lb, l4);
    a.add_transition(l3, lc, l2);
    a.add_transition(l3, l_1, p1);
    a.add_transition(l3, l_2, p1);
    a.add_transition(l4, lb, l4);
    a.add_transition(l4, la, l3);
    a.add_transition(l4, lc, l2);
    a.add_transition(l4, l_1, p1);
    a.add_transition(l4, l_2, p2);
    // right 5-state block (rooted at p2)
    a.add_transition(p2, lb, p2);
    a.add_transition(p2, l_1, p2);
    a.add_transition(p2, l_2, p2);
    a.add_transition(p2, la, r3);
    a.add_transition(p2, lc, r1);
    a.add_transition(r1, lc, r1);
    a.add_transition(r1, la, r3);
    a.add_transition(r1, lb, p2);
    a.add_transition(r1, l_1, p1);
    a.add_transition(r1, l_2, p2);
    a.add_transition(r2, lc, r2);
    a.add_transition(r2, la, r3);
    a.add_transition(r2, lb, r4);
    a.add_transition(r2, l_1, p1);
    a.add_transition(r2, l_2, p2);
    a.add_transition(r3, la, r3);
    a.add_transition(r3, lb, r4);
    a.add_transition(r3, lc, r2);
    a.add_transition(r3, l_1, p2);
    a.add_transition(r3, l_2, p2);
    a.add_transition(r4, lb, r4);
    a.add_transition(r4, la, r3);
    a.add_transition(r4, lc, r2);
    a.add_transition(r4, l_1, p1);
    a.add_transition(r4, l_2, I, true);
    return a;
}

// The 30 "letter-segment" block states for index i (1..6), circle row
// (tracking toward a reset) or square row (tracking toward the Y gate).
struct BlockIds {
    int p, q, t, s, r;
};

void block_abc_y(Automaton& a, const BlockIds& b) {
    a.add_transition(b.p, A, b.q);
    a.add_transition(b.p, B, b.p);
    a.add_transition(b.p, C, b.t);
    a.add_transition(b.p, YY, b.p);
    a.add_transition(b.q, A, b.q);
    a.add_transition(b.q, B, b.r);
    a.add_transition(b.q, C, b.s);
    a.add_transition(b.q, YY, b.p);
    a.add_transition(b.t, A, b.q);
    a.add_transition(b.t, B, b.p);
    a.add_transition(b.t, C, b.t);
    a.add_transition(b.t, YY, b.p);
    a.add_transition(b.s, A, b.q);
    a.add_transition(b.s, B, b.r);
    a.add_transition(b.s, C, b.s);
    a.add_transition(b.s, YY, b.p);
    a.add_transition(b.r, A, b.q);
    a.add_transition(b.r, B, b.r);
    a.add_transition(b.r, C, b.s);
    a.add_transition(b.r, YY, b.p);
}

// Segment-letter behaviour of a block; `exit` receives (src, letter) for the
// block's own index completion (circle: reset handled internally; square:
// the caller wires the gate).
void block_segments(Automaton& a, const BlockIds& b, int i,
                    const std::array<int, 7>& square_p,
                    const std::function<void(int, int)>& own_exit) {
    for (int j = 1; j <= 6; ++j) {
        int l = seg_letter(j);
        a.add_transition(b.p, l, b.p);
        a.add_transition(b.q, l, b.p);
    }
    for (int j = 1; j <= 3; ++j) { // letters in E from t,s
        int l = seg_letter(j);
        if (j == i) {
            own_exit(b.t, l);
            own_exit(b.s, l);
        } else {
            a.add_transition(b.t, l, square_p[j]);
            a.add_transition(b.s, l, square_p[j]);
        }
    }
    for (int j = 4; j <= 6; ++j) { // letters in F from t,s reset
        int l = seg_letter(j);
        a.add_transition(b.t, l, b.p);
        a.add_transition(b.s, l, b.p);
    }
    for (int j = 1; j <= 3; ++j) { // letters in E from r reset
        a.add_transition(b.r, seg_letter(j), b.p);
    }
    for (int j = 4; j <= 6; ++j) { // letters in F from r
        int l = seg_letter(j);
        if (j == i) {
            own_exit(b.r, l);
        } else {
            a.add_transition(b.r, l, square_p[j]);
        }
    }
}

struct MainLayout {
    int I, Ia, Ib, Ic;
    std::array<BlockIds, 7> circle; // 1..6
    std::array<BlockIds, 7> square;
    int Y;
};

// Adds the 60 block states + Y + (optionally) the 4-state guessing
// component; shared by the main Büchi automaton and its coBüchi complement.
MainLayout add_main_states(Automaton& a, bool with_pink) {
    MainLayout m{};
    if (with_pink) {
        m.I = a.add_state("I");
        m.Ia = a.add_state("Ia");
        m.Ib = a.add_state("Ib");
        m.Ic = a.add_state("Ic");
    } else {
        m.I = m.Ia = m.Ib = m.Ic = -1;
    }
    auto add_block = [&](const char* fmt, int i) {
        BlockIds b;
        std::string suffix = std::to_string(i);
        bool upper = fmt[0] == 'U';
        auto nm = [&](char c) {
            std::string s(1, upper ? static_cast<char>(c - 'a' + 'A') : c);
            return s + suffix;
        };
        b.p = a.add_state(nm('p'));
        b.q = a.add_state(nm('q'));
        b.r = a.add_state(nm('r'));
        b.s = a.add_state(nm('s'));
        b.t = a.add_state(nm('t'));
        return b;
    };
    for (int i = 1; i <= 6; ++i)
        m.circle[i] = add_block("l", i);
    for (int i = 1; i <= 6; ++i)
        m.square[i] = add_block("U", i);
    m.Y = a.add_state("Y");
    return m;
}

// Non-significant block structure shared by amain (blue part) and cmain.
void add_main_blue(Automaton& a, MainLayout& m) {
    std::array<int, 7> sq_p{};
    for (int i = 1; i <= 6; ++i)
        sq_p[i] = m.square[i].p;
    for (int i = 1; i <= 6; ++i) {
        block_abc_y(a, m.circle[i]);
        block_segments(a, m.circle[i], i, sq_p, [&](int src, int l) {
            a.add_transition(src, l, m.circle[i].p); // own-index reset
        });
        block_abc_y(a, m.square[i]);
        block_segments(a, m.square[i], i, sq_p, [&](int src, int l) {
            a.add_transition(src, l, m.Y, true); // gate to Y
        });
    }
    // reset letters from every block state to the circle row
    for (int i = 1; i <= 6; ++i)
        for (int row = 0; row < 2; ++row) {
            const BlockIds& b = row == 0 ? m.circle[i] : m.square[i];
            for (int j = 1; j <= 6; ++j)
                for (int st : {b.p, b.q, b.t, b.s, b.r})
                    a.add_transition(st, R1 + (j - 1), m.circle[j].p);
        }
    // Y keeps everything but y
    for (int l = 0; l < a.alphabet.size(); ++l)
        if (l != YY)
            a.add_transition(m.Y, l, m.Y);
}

Automaton build_amain() {
    Automaton a;
    a.name = "amain";
    a.alphabet = alphabet_main();
    a.acceptance = Acceptance::Buchi;
    MainLayout m = add_main_states(a, true);
    a.initial = m.I;
    // The guessing component. Reading a, the automaton guesses whether the
    // pending segment index lies in E (keep scanning on the left, where Ic
    // marks "last letter c" and catches E-completions) or in F (move right,
    // where Ia/Ib track the after-a zone exactly and Ib catches
    // F-completions). The guess is offered wherever a letter a is read on
    // the left, i.e. from I and from Ic; a single guess slot at I provably
    // cannot cover both completion shapes.
    a.add_transition(m.I, A, m.I);
    a.add_transition(m.I, A, m.Ia);
    a.add_transition(m.I, B, m.I);
    a.add_transition(m.I, C, m.Ic);
    a.add_transition(m.I, YY, m.I);
    a.add_transition(m.Ia, A, m.Ia);
    a.add_transition(m.Ia, C, m.Ia);
    a.add_transition(m.Ia, B, m.Ib);
    a.add_transition(m.Ia, YY, m.I);
    a.add_transition(m.Ib, B, m.Ib);
    a.add_transition(m.Ib, A, m.Ia);
    a.add_transition(m.Ib, C, m.Ia);
    a.add_transition(m.Ib, YY, m.I);
    a.add_transition(m.Ic, C, m.Ic);
    a.add_transition(m.Ic, B, m.I);
    a.add_transition(m.Ic, A, m.I);
    a.add_transition(m.Ic, A, m.Ia);
    a.add_transition(m.Ic, YY, m.I);
    for (int j = 1; j <= 6; ++j) {
        int l = seg_letter(j);
        a.add_transition(m.I, l, m.I);
        a.add_transition(m.Ia, l, m.I);
        if (seg_in_e(j)) {
            a.add_transition(m.Ib, l, m.I);
            a.add_transition(m.Ic, l, m.circle[j].p, true);
        } else {
            a.add_transition(m.Ib, l, m.circle[j].p, true);
            a.add_transition(m.Ic, l, m.I);
        }
        for (int st : {m.I, m.Ia, m.Ib, m.Ic})
            a.add_transition(st, R1 + (j - 1), m.circle[j].p, true);
    }
    add_main_blue(a, m);
    a.add_transition(m.Y, YY, m.I, true);
    return a;
}

Automaton build_cmain() {
    Automaton a;
    a.name = "cmain";
    a.alphabet = alphabet_main();
    a.acceptance = Acceptance::CoBuchi;
    MainLayout m = add_main_states(a, false);
    a.initial = m.circle[1].p;
    add_main_blue(a, m);
    // Significant transitions go from every state to every state on every
    // letter, except where the same triple already exists non-significantly.
    std::set<std::tuple<int, int, int>> present;
    for (const Transition& t : a.transitions)
        present.insert({t.src, t.letter, t.dst});
    const int n = a.state_count();
    for (int s = 0; s < n; ++s)
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int d = 0; d < n; ++d)
                if (!present.count({s, l, d}))
                    a.add_transition(s, l, d, true);
    return a;
}

FiniteAutomaton build_theju(bool with_y) {
    // Safety view of the words that never complete a segment: the classifier
    // frame with the completion edges removed.
    FiniteAutomaton f;
    f.name = with_y ? "theju" : "theju_y";
    f.alphabet = alphabet_main();
    f.resize(5, f.alphabet.size());
    f.state_names = {"p", "q", "t", "s", "r"};
    int P = 0, Q = 1, T = 2, S = 3, R = 4;
    f.initial = P;
    for (int s = 0; s < 5; ++s)
        f.accepting[s] = true;
    auto frame = [&](int st, int on_a, int on_b, int on_c) {
        f.add_edge(st, A, on_a);
        f.add_edge(st, B, on_b);
        f.add_edge(st, C, on_c);
        if (with_y)
            f.add_edge(st, YY, P);
    };
    frame(P, Q, P, T);
    frame(Q, Q, R, S);
    frame(T, Q, P, T);
    frame(S, Q, R, S);
    frame(R, Q, R, S);
    for (int j = 1; j <= 6; ++j) {
        int l = seg_letter(j);
        f.add_edge(P, l, P);
        f.add_edge(Q, l, P);
        if (seg_in_e(j)) {
            // t,s would complete the segment: dead
            f.add_edge(R, l, P);
        } else {
            f.add_edge(T, l, P);
            f.add_edge(S, l, P);
        }
    }
    f.deterministic = true;
    return f;
}

} // namespace

ClassifierDfa zoo_classifier() {
    ClassifierDfa c;
    FiniteAutomaton& f = c.dfa;
    f.name = "classifier";
    f.alphabet = alphabet_main();
    f.resize(12, f.alphabet.size());
    f.state_names = {"p", "q", "t", "s", "r", "l1", "l2", "l3", "l4", "l5", "l6", "@sink"};
    int P = 0, Q = 1, T = 2, S = 3, R = 4, L0 = 5, SINK = 11;
    f.initial = P;
    auto frame = [&](int st, int on_a, int on_b, int on_c) {
        f.add_edge(st, A, on_a);
        f.add_edge(st, B, on_b);
        f.add_edge(st, C, on_c);
        f.add_edge(st, YY, P);
        for (int j = 0; j < 6; ++j)
            f.add_edge(st, R1 + j, SINK);
    };
    frame(P, Q, P, T);
    frame(Q, Q, R, S);
    frame(T, Q, P, T);
    frame(S, Q, R, S);
    frame(R, Q, R, S);
    for (int j = 1; j <= 6; ++j) {
        int l = seg_letter(j);
        f.add_edge(P, l, P);
        f.add_edge(Q, l, P);
        if (seg_in_e(j)) {
            f.add_edge(T, l, L0 + j - 1);
            f.add_edge(S, l, L0 + j - 1);
            f.add_edge(R, l, P);
        } else {
            f.add_edge(T, l, P);
            f.add_edge(S, l, P);
            f.add_edge(R, l, L0 + j - 1);
        }
    }
    for (int j = 0; j < 6; ++j) {
        c.finals[L0 + j] = j + 1;
        f.accepting[L0 + j] = true;
        for (int l = 0; l < f.alphabet.size(); ++l)
            f.add_edge(L0 + j, l, SINK);
    }
    for (int l = 0; l < f.alphabet.size(); ++l)
        f.add_edge(SINK, l, SINK);
    f.deterministic = true;
    return c;
}

const std::vector<ZooEntry>& zoo_entries() {
    static const std::vector<ZooEntry> entries = [] {
        std::vector<ZooEntry> v;
        auto nd = [](std::initializer_list<std::pair<std::string, std::string>> xs) {
            return std::vector<std::pair<std::string, std::string>>(xs);
        };
        v.push_back({"abkks",
                     "seven-state history-deterministic example that is not determinisable "
                     "by pruning",
                     build_abkks,
                     {7, false, std::nullopt, nd({{"I", "x"}})}});
        v.push_back({"fig2_nonhd",
                     "three-state automaton whose nondeterminism needs future knowledge",
                     build_fig2_nonhd,
                     {3, false, std::nullopt, nd({{"q0", "a"}})}});
        v.push_back({"astrong",
                     "17-state HD automaton refuting one-at-a-time rewiring",
                     build_astrong,
                     {17, false, true, nd({{"I", "x"}})}});
        v.push_back({"dstrong",
                     "13-state deterministic rewiring of astrong",
                     build_dstrong,
                     {13, true, true, nd({})}});
        v.push_back({"aweak",
                     "17-state HD automaton with reset letters refuting all rewirings",
                     build_aweak,
                     {17, false, true, nd({{"I", "x"}})}});
        v.push_back({"dweak",
                     "15-state determinisation of aweak via indexed copies of the gate state",
                     build_dweak,
                     {15, true, true, nd({})}});
        v.push_back({"areplace",
                     "14-state HD automaton whose guessing component cannot be replaced "
                     "by fewer deterministic states",
                     build_areplace,
                     {14, false, std::nullopt, nd({{"I", "a"}, {"iota_c", "a"}})}});
        v.push_back({"amain",
                     "65-state HD witness with 12 segment blocks, reset letters and an "
                     "E-versus-F guess on reading a",
                     build_amain,
                     {65, false, true, nd({{"I", "a"}, {"Ic", "a"}})}});
        v.push_back({"cmain",
                     "61-state deterministic-safety coBuchi complement of amain on its "
                     "good states",
                     build_cmain,
                     {61, false, std::nullopt, std::nullopt}});
        return v;
    }();
    return entries;
}

const ZooEntry& zoo_entry(const std::string& key) {
    for (const auto& e : zoo_entries())
        if (e.key == key)
            return e;
    throw std::invalid_argument("unknown zoo key: " + key);
}

Automaton zoo(const std::string& key) { return zoo_entry(key).build(); }

FiniteAutomaton zoo_finite(const std::string& key) {
    if (key == "theju")
        return build_theju(true);
    if (key == "theju_y")
        return build_theju(false);
    throw std::invalid_argument("unknown finite zoo key: " + key);
}

std::vector<std::string> zoo_finite_keys() { return {"theju", "theju_y"}; }

std::map<std::string, std::string> covering_hints(const std::string& key) {
    if (key == "amain")
        return {{"I", "p1"}, {"Ia", "q1"}, {"Ib", "r1"}, {"Ic", "t1"}};
    if (key == "astrong" || key == "aweak")
        return {{"I", "q_a"}, {"iota_a", "q'_a"}, {"iota_b", "q'_b"}, {"iota_c", "q'_c"}};
    return {};
}

} // namespace owb
