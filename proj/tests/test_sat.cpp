#include <doctest.h>

#include <random>

#include "owb/sat.hpp"
#include "owb/threedfa.hpp"

using namespace owb;

namespace {

// Brute force: smallest k such that some complete k-state DFA (enumerated in
// a BFS-canonical fashion by plain enumeration + consistency check) agrees
// with the 3-DFA.
bool consistent(const ThreeDfa& t, const std::vector<std::vector<int>>& delta,
                const std::vector<bool>& acc) {
    // BFS over the product of the completed 3-DFA and the candidate
    ThreeDfa n = t.normal_form();
    for (int s = 0; s < n.state_count; ++s)
        for (int l = 0; l < n.alphabet.size(); ++l)
            if (n.delta[s][l] < 0)
                n.delta[s][l] = s;
    std::vector<std::vector<bool>> seen(n.state_count,
                                        std::vector<bool>(delta.size(), false));
    std::vector<std::pair<int, int>> queue{{n.initial, 0}};
    seen[n.initial][0] = true;
    while (!queue.empty()) {
        auto [s, q] = queue.back();
        queue.pop_back();
        if (n.labels[s] == ThreeDfa::Label::Accept && !acc[q])
            return false;
        if (n.labels[s] == ThreeDfa::Label::Reject && acc[q])
            return false;
        for (int l = 0; l < n.alphabet.size(); ++l) {
            int ns = n.delta[s][l], nq = delta[q][l];
            if (!seen[ns][nq]) {
                seen[ns][nq] = true;
                queue.push_back({ns, nq});
            }
        }
    }
    return true;
}

int brute_min_dfa(const ThreeDfa& t, int k_max) {
    const int L = t.alphabet.size();
    for (int k = 1; k <= k_max; ++k) {
        // enumerate all transition tables and acceptance sets
        std::vector<std::vector<int>> delta(k, std::vector<int>(L, 0));
        long long tables = 1;
        for (int i = 0; i < k * L; ++i)
            tables *= k;
        for (long long code = 0; code < tables; ++code) {
            long long c = code;
            for (int q = 0; q < k; ++q)
                for (int l = 0; l < L; ++l) {
                    delta[q][l] = static_cast<int>(c % k);
                    c /= k;
                }
            for (int accs = 0; accs < (1 << k); ++accs) {
                std::vector<bool> acc(k);
                for (int q = 0; q < k; ++q)
                    acc[q] = accs & (1 << q);
                if (consistent(t, delta, acc))
                    return k;
            }
        }
    }
    return -1;
}

ThreeDfa random_3dfa(std::mt19937_64& rng, int states) {
    ThreeDfa t;
    t.alphabet = Alphabet({"a", "b"});
    t.resize(states, 2);
    t.initial = 0;
    for (int s = 0; s < states; ++s) {
        for (int l = 0; l < 2; ++l)
            if (rng() % 5 != 0)
                t.delta[s][l] = static_cast<int>(rng() % states);
        int lab = static_cast<int>(rng() % 3);
        t.labels[s] = lab == 0   ? ThreeDfa::Label::Accept
                      : lab == 1 ? ThreeDfa::Label::Reject
                                 : ThreeDfa::Label::DontCare;
    }
    return t;
}

} // namespace

TEST_CASE("solver basics") {
    CnfInstance empty;
    CHECK(sat_solve(empty).status == SatResult::Status::Sat);

    CnfInstance contradiction;
    int x = contradiction.new_var("x");
    contradiction.add_clause({x});
    contradiction.add_clause({-x});
    CHECK(sat_solve(contradiction).status == SatResult::Status::Unsat);

    CnfInstance pigeon; // 3 pigeons, 2 holes
    int p[3][2];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            p[i][j] = pigeon.new_var();
    for (int i = 0; i < 3; ++i)
        pigeon.add_clause({p[i][0], p[i][1]});
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k)
                pigeon.add_clause({-p[i][j], -p[k][j]});
    CHECK(sat_solve(pigeon).status == SatResult::Status::Unsat);
}

TEST_CASE("solver determinism") {
    CnfInstance f;
    std::mt19937_64 rng(9);
    for (int v = 0; v < 30; ++v)
        f.new_var();
    for (int c = 0; c < 120; ++c) {
        std::vector<int> cl;
        for (int k = 0; k < 3; ++k) {
            int v = 1 + static_cast<int>(rng() % 30);
            cl.push_back(rng() % 2 ? v : -v);
        }
        f.add_clause(cl);
    }
    SatResult a = sat_solve(f), b = sat_solve(f);
    CHECK(a.status == b.status);
    CHECK(a.decisions == b.decisions);
    if (a.status == SatResult::Status::Sat)
        CHECK(a.model == b.model);
}

TEST_CASE("dimacs round trip") {
    ThreeDfa t = separation_instance("p2");
    CnfInstance f = encode_exists_kdfa(t, 5);
    CnfInstance g = cnf_from_dimacs(f.to_dimacs());
    CHECK(g.var_count == f.var_count);
    CHECK(g.clauses.size() == f.clauses.size());
    CHECK(sat_solve(g).status == sat_solve(f).status);
}

TEST_CASE("encoder agrees with brute-force search on toy instances") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 30; ++round) {
        ThreeDfa t = random_3dfa(rng, 2 + static_cast<int>(rng() % 4));
        int brute = brute_min_dfa(t, 3);
        MinSeparatorResult ms = min_separator_size(t, 3);
        INFO("round ", round);
        CHECK(ms.size == brute);
    }
}

TEST_CASE("monotonicity: satisfiable stays satisfiable with more states") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 10; ++round) {
        ThreeDfa t = random_3dfa(rng, 3 + static_cast<int>(rng() % 3));
        std::optional<int> first_sat;
        for (int k = 1; k <= 5; ++k) {
            SatResult r = sat_solve(encode_exists_kdfa(t, k));
            REQUIRE(r.status != SatResult::Status::Timeout);
            bool sat = r.status == SatResult::Status::Sat;
            if (first_sat)
                CHECK(sat);
            if (sat && !first_sat)
                first_sat = k;
        }
    }
}

TEST_CASE("3dfa text format round trip") {
    ThreeDfa t = separation_instance("sq4");
    ThreeDfa u = threedfa_from_text(threedfa_to_text(t));
    u.alphabet = t.alphabet;
    CHECK(threedfa_isomorphic(t, u));
    CHECK(t.state_count == u.state_count);
}

TEST_CASE("separation product shapes") {
    // lower == upper: no don't-care states survive
    FiniteAutomaton d;
    d.alphabet = Alphabet({"a", "b"});
    d.resize(2, 2);
    d.initial = 0;
    d.accepting = {true, false};
    d.add_edge(0, 0, 0);
    d.add_edge(0, 1, 1);
    d.add_edge(1, 0, 1);
    d.add_edge(1, 1, 1);
    d.deterministic = true;
    ThreeDfa t = build_separation_3dfa(d, d);
    for (int s = 0; s < t.state_count; ++s)
        CHECK(t.labels[s] != ThreeDfa::Label::DontCare);
    // the trivial all-accepting instance needs one state
    CHECK(min_separator_size(t, 4).size >= 1);
}
