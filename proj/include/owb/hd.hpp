#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owb/automaton.hpp"
#include "owb/finite_automaton.hpp"
#include "owb/game.hpp"
#include "owb/references.hpp"

namespace owb {

// One path-language obligation: the words labelling constrained paths
// src -> dst must lie inside (mode Subset) the named target language, or the
// language must be empty (mode Empty).
struct FactObligation {
    std::string src;
    std::string dst;
    std::vector<std::string> forbidden; // states excluded strictly inside
    bool final_significant = false;
    bool final_anchor = false; // final step must be one of the suite anchors
    bool exclude_anchors_inside = false;
    std::string target; // target_language key; empty for mode Empty
    enum class Mode { Subset, Empty } mode = Mode::Subset;
};

// A fact suite: the anchor transitions whose removal must leave no cycle
// through a significant transition, plus the per-segment obligations.
struct FactSuite {
    std::string automaton_key;
    struct Anchor {
        std::string src, letter, dst;
    };
    std::vector<Anchor> anchors;
    std::vector<FactObligation> obligations;
};

// Built-in suites: amain, astrong, aweak, dstrong.
FactSuite zoo_fact_suite(const std::string& key);
FactSuite fact_suite_from_json(const std::string& text);
std::string fact_suite_to_json(const FactSuite& s);

struct CheckOutcome {
    bool ok = false;
    std::string detail;
    std::optional<Lasso> witness_lasso;
    std::optional<std::vector<int>> witness_word;
};

// Exact check that L(R) ⊆ L(reach(a), s) for EVERY state s: the co-safety
// automaton reach(a, s) is determinized into a safety view ("no run reached
// the sink yet") and the Büchi product with R must have no reachable cycle
// through an R-significant transition. All-pass certifies that every state
// accepts all of L(R).
struct ReachInclusion {
    bool all_pass = false;
    std::vector<std::string> failing_states;
    std::optional<Lasso> witness; // in L(R), missed by reach(a, failing state)
};
ReachInclusion verify_all_states_accept_reference(const Automaton& a, const ReferenceLanguage& R);

// Checks every obligation of the suite and the structural anchor condition
// (every significant transition is an anchor or lies on no cycle once the
// anchors are removed).
CheckOutcome verify_language_upper_bound(const Automaton& a, const FactSuite& facts);

enum class SdVerdict { Confirmed, Undecided };
struct SdResult {
    SdVerdict verdict = SdVerdict::Undecided;
    std::string detail;
};
SdResult check_semantic_determinism(const Automaton& a, const ReferenceLanguage& R,
                                    const FactSuite& facts);

// Searches, for every non-good state p, a good state q such that (1) p and
// q are language-equivalent and (2) Eve wins the reach-simulation game
// (Adam runs the deterministic reach automaton from q, Eve replies in reach
// from p). With `states_equivalent` (e.g. after the semantic-determinism
// certificate), condition (1) is vacuous; otherwise mutual fair simulation
// on the original automaton stands in as a sufficient check. Hints are
// tried first and verified like any other candidate.
struct CoveringResult {
    bool ok = false;
    std::map<int, int> covering; // non-good state -> good state
    std::string failing_state;
};
CoveringResult check_reach_covering(const Automaton& a,
                                    const std::map<std::string, std::string>& hints = {},
                                    bool states_equivalent = false);

struct SimplifiedCertificate {
    bool simplified = false;
    std::string detail;
    std::vector<int> good;
    std::map<int, int> covering; // covering for non-good states
    bool normal = false;
    SdVerdict sd = SdVerdict::Undecided;
};
SimplifiedCertificate check_simplified(const Automaton& a, const ReferenceLanguage& R,
                                       const FactSuite& facts,
                                       const std::map<std::string, std::string>& hints = {});

// Rewiring enumeration. Single mode: for each significant transition from a
// good state into a non-good state, redirect it (dropping parallel
// transitions on the same slot) to each good state in turn; the redirect
// source becomes the initial state and unreachable states are trimmed.
// Full mode: deterministic automata on the good states; every significant
// slot (good state, letter) ranges over all good targets.
struct Rewiring {
    Automaton automaton;
    std::string description;
};
void enumerate_rewirings_single(const Automaton& a, const SimplifiedCertificate& cert,
                                const std::function<bool(Rewiring&&)>& consume);
void enumerate_rewirings_full(const Automaton& a, const SimplifiedCertificate& cert,
                              const std::function<bool(Rewiring&&)>& consume);

// Tries the supplied witnesses first, then enumerated lassos (exhaustive
// short plus seeded random up to `bound`). A witness is a lasso accepted by
// b and rejected by R.
struct RefutationResult {
    std::optional<Lasso> witness;
    long lassos_tried = 0;
};
RefutationResult refute_rewiring(const Automaton& b, const ReferenceLanguage& R,
                                 const std::vector<Lasso>& witnesses, int bound = 12,
                                 long budget = 50000, uint64_t seed = 1);

} // namespace owb
