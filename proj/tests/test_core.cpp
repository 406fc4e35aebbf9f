#include <doctest.h>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"
#include "owb/zoo.hpp"

#include "oracles.hpp"

using namespace owb;

namespace {

Automaton one_state_complete(Acceptance acc, bool significant) {
    Automaton a;
    a.name = "loop";
    a.alphabet = Alphabet({"a", "b"});
    a.acceptance = acc;
    int s = a.add_state("s");
    a.initial = s;
    a.add_transition(s, 0, s, significant);
    a.add_transition(s, 1, s, significant);
    return a;
}

} // namespace

TEST_CASE("validate basics") {
    Automaton a = one_state_complete(Acceptance::Buchi, true);
    CHECK(validate(a).ok());

    Automaton bad = a;
    bad.add_transition(0, 0, 1); // dangling destination
    auto rep = validate(bad);
    CHECK(!rep.ok());
    bool has_dangling = false;
    for (const auto& v : rep.violations)
        has_dangling = has_dangling || v.find("dangling destination") != std::string::npos;
    CHECK(has_dangling);

    CHECK(validate(zoo("amain")).ok());
    CHECK(zoo("amain").state_count() == 65);
}

TEST_CASE("determinism checks") {
    CHECK(is_deterministic(zoo("dstrong")));
    CHECK(!is_deterministic(zoo("amain")));
    CHECK(is_deterministic(one_state_complete(Acceptance::Buchi, false)));
}

TEST_CASE("reach construction") {
    Automaton abkks = zoo("abkks");
    Automaton r = build_reach(abkks);
    CHECK(r.state_count() == 8);
    int redirected = 0;
    int sink = *r.state("@sink");
    for (const Transition& t : r.transitions)
        if (t.significant && t.src != sink) {
            CHECK(t.dst == sink);
            ++redirected;
        }
    CHECK(redirected == 4);
    // non-significant transition multiset preserved
    int ns_in = 0, ns_out = 0;
    for (const Transition& t : abkks.transitions)
        if (!t.significant)
            ++ns_in;
    for (const Transition& t : r.transitions)
        if (!t.significant)
            ++ns_out;
    CHECK(ns_in == ns_out);

    CHECK(build_reach(zoo("amain")).state_count() == 66);

    // no significant transitions: the sink is unreachable and trim drops it
    Automaton plain = one_state_complete(Acceptance::Buchi, false);
    Automaton rp = trim(build_reach(plain));
    CHECK(rp.state_count() == 1);
}

TEST_CASE("scc decomposition and normal form") {
    Automaton amain = zoo("amain");
    auto nonsig = [](const Transition& t) { return !t.significant; };
    SccResult scc = scc_decomposition(amain, nonsig);
    int nontrivial = 0;
    for (int c = 0; c < scc.count(); ++c)
        if (scc.nontrivial[c])
            ++nontrivial;
    CHECK(nontrivial == 3);
    CHECK(is_normal(amain));
    CHECK(is_normal(zoo("astrong")));

    // strongly connected automaton: one component
    Automaton plain = one_state_complete(Acceptance::Buchi, false);
    CHECK(scc_decomposition(plain).count() == 1);

    // chain of two loops joined by a non-significant edge gets normalized
    Automaton chain;
    chain.alphabet = Alphabet({"a"});
    chain.acceptance = Acceptance::Buchi;
    int u = chain.add_state("u");
    int v = chain.add_state("v");
    chain.initial = u;
    chain.add_transition(u, 0, u);
    chain.add_transition(u, 0, v);
    chain.add_transition(v, 0, v);
    CHECK(!is_normal(chain));
    Automaton norm = normalize(chain);
    CHECK(is_normal(norm));
    CHECK(normalize(norm).transitions == norm.transitions);
    int made_sig = 0;
    for (const Transition& t : norm.transitions)
        if (t.significant)
            ++made_sig;
    CHECK(made_sig == 1);
}

TEST_CASE("good states") {
    Automaton abkks = zoo("abkks");
    std::vector<int> good = good_states(abkks);
    std::vector<std::string> names;
    for (int s : good)
        names.push_back(abkks.state_names[s]);
    CHECK(names == std::vector<std::string>{"p_a", "p_b", "s_a", "s_b"});

    Automaton amain = zoo("amain");
    std::vector<int> g = good_states(amain);
    CHECK(g.size() == 61);
    for (int s : g) {
        CHECK(amain.state_names[s] != "I");
        CHECK(amain.state_names[s] != "Ia");
        CHECK(amain.state_names[s] != "Ib");
        CHECK(amain.state_names[s] != "Ic");
    }

    Automaton det = zoo("dstrong");
    CHECK(good_states(det).size() == static_cast<size_t>(det.state_count()));
}

TEST_CASE("lasso canonicalization") {
    Alphabet s({"a", "b"});
    Lasso l({0, 1}, {0, 1, 0, 1});
    Lasso c = l.canonical();
    CHECK(c.period == std::vector<int>{0, 1});
    CHECK(c.prefix == std::vector<int>{});
    CHECK(parse_lasso(s, ":ab").has_value());
    CHECK(parse_lasso(s, "ab:").has_value() == false);
}

TEST_CASE("lasso acceptance on zoo automata") {
    Automaton abkks = zoo("abkks");
    const Alphabet& sig = abkks.alphabet;
    auto w = [&](const std::string& t) { return *parse_lasso(sig, t); };
    CHECK(lasso_accepts(abkks, w(":xaxa")));
    CHECK(!lasso_accepts(abkks, w(":xaxb")));

    Automaton fig2 = zoo("fig2_nonhd");
    auto w2 = [&](const std::string& t) { return *parse_lasso(fig2.alphabet, t); };
    CHECK(lasso_accepts(fig2, w2("b:a")));
    CHECK(!lasso_accepts(fig2, w2(":ab")));
}

TEST_CASE("lasso acceptance agrees with brute-force oracle") {
    // exhaustive small automata would be too many; randomized ≤8-state
    // automata over 2 letters, exhaustive short lassos
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
        Automaton a = oracle::random_automaton(rng, 1 + static_cast<int>(rng() % 8), 2,
                                               round % 2 == 0 ? Acceptance::Buchi
                                                              : Acceptance::CoBuchi);
        for (const Lasso& w : oracle::all_lassos(2, 6)) {
            bool fast = lasso_accepts(a, w);
            bool slow = oracle::lasso_accepts_bruteforce(a, w);
            if (fast != slow) {
                CAPTURE(round);
                CAPTURE(w.format(a.alphabet));
            }
            REQUIRE(fast == slow);
        }
    }
}

TEST_CASE("redirect transition") {
    Automaton astrong = zoo("astrong");
    int Y = *astrong.state("Y");
    int I = *astrong.state("I");
    int yy = *astrong.alphabet.index("y");
    Transition t{Y, yy, I, true};
    Automaton same = redirect_transition(astrong, t, I, true);
    CHECK(isomorphic(astrong, same).isomorphic);

    int pa = *astrong.state("p_a");
    Automaton rew = redirect_transition(astrong, t, pa, true, true);
    rew.initial = Y;
    rew = trim(rew);
    auto w = *parse_lasso(astrong.alphabet, ":yxbxby");
    CHECK(lasso_accepts(rew, w));
}

TEST_CASE("isomorphism") {
    Automaton a = zoo("astrong");
    auto id = isomorphic(a, a);
    CHECK(id.isomorphic);
    // permuted copy
    Automaton b;
    b.name = a.name;
    b.alphabet = a.alphabet;
    b.acceptance = a.acceptance;
    std::vector<int> perm(a.state_count());
    for (int i = 0; i < a.state_count(); ++i)
        perm[i] = (i + 5) % a.state_count();
    b.state_names.resize(a.state_count());
    for (int i = 0; i < a.state_count(); ++i)
        b.state_names[perm[i]] = a.state_names[i];
    b.initial = perm[a.initial];
    for (const Transition& t : a.transitions)
        b.add_transition(perm[t.src], t.letter, perm[t.dst], t.significant);
    CHECK(isomorphic(a, b).isomorphic);

    Automaton c = a;
    c.transitions.pop_back();
    CHECK(!isomorphic(a, c).isomorphic);
}

TEST_CASE("buchi/cobuchi intersection emptiness") {
    Automaton all = one_state_complete(Acceptance::Buchi, true);
    Automaton none;
    none.alphabet = all.alphabet;
    none.acceptance = Acceptance::CoBuchi;
    int s = none.add_state("s");
    none.initial = s;
    none.add_transition(s, 0, s);
    none.add_transition(s, 1, s);
    auto res = buchi_cobuchi_intersection_empty(all, none);
    CHECK(!res.empty);
    REQUIRE(res.witness.has_value());
    CHECK(lasso_accepts(all, *res.witness));
    CHECK(lasso_accepts(none, *res.witness));
}
