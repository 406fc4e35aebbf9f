// Command-line workbench around the library: the automata collection,
// history-determinism checks, complements, rewiring refutations, separation
// instances, lasso membership and the batch reproduction drivers.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "owb/cobuchi.hpp"
#include "owb/game.hpp"
#include "owb/hd.hpp"
#include "owb/io.hpp"
#include "owb/reproduce.hpp"
#include "owb/resolver.hpp"
#include "owb/threedfa.hpp"
#include "owb/zoo.hpp"

using namespace owb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiverged = 1;
constexpr int kExitUsage = 2;

FactSuite load_suite(const std::string& spec) {
    try {
        return zoo_fact_suite(spec);
    } catch (const std::exception&) {
        return fact_suite_from_json(read_file(spec));
    }
}

SatBudget budget_from_env() {
    SatBudget b;
    if (const char* ms = std::getenv("OWB_SAT_BUDGET_MS"))
        b.max_millis = std::atoll(ms);
    return b;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for transition-based Buchi/coBuchi automata"};
    app.require_subcommand(1);
    uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for sampled checks");

    auto* zoo_cmd = app.add_subcommand("zoo", "list or dump the built-in automata");
    auto* zoo_list = zoo_cmd->add_subcommand("list", "list collection keys");
    auto* zoo_dump = zoo_cmd->add_subcommand("dump", "print one automaton");
    std::string dump_name, dump_format = "json", dump_out;
    zoo_dump->add_option("--name", dump_name, "collection key")->required();
    zoo_dump->add_option("--format", dump_format, "json|hoa|tdfa");
    zoo_dump->add_option("--out", dump_out, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "verification verdicts");
    auto* check_hd = check->add_subcommand("hd", "two-token history-determinism check");
    std::string hd_input, hd_arena_dump;
    int hd_max_states = 40;
    check_hd->add_option("--input", hd_input)->required();
    check_hd->add_option("--max-states", hd_max_states, "size bound for the token game");
    check_hd->add_option("--dump-arena", hd_arena_dump, "write a game arena as JSON");

    auto* check_simpl = check->add_subcommand("simplified", "simplified-pipeline certificate");
    std::string si_input, si_reference, si_facts, si_arena_dump;
    check_simpl->add_option("--input", si_input)->required();
    check_simpl->add_option("--reference", si_reference, "lmain|lstrong|lweak")->required();
    check_simpl->add_option("--facts", si_facts, "built-in suite key or JSON file")->required();
    check_simpl->add_option("--dump-arena", si_arena_dump,
                            "write the first covering game arena as JSON");

    auto* check_min = check->add_subcommand("cobuchi-minimal", "canonical-form verdicts");
    std::string cm_input, cm_report;
    check_min->add_option("--input", cm_input)->required();
    check_min->add_option("--report", cm_report, "write a JSON report");

    auto* comp = app.add_subcommand("complement-hd", "complement a simplified automaton");
    std::string comp_input, comp_reference, comp_facts, comp_out;
    comp->add_option("--input", comp_input)->required();
    comp->add_option("--reference", comp_reference)->required();
    comp->add_option("--facts", comp_facts)->required();
    comp->add_option("--out", comp_out, "output file (.hoa or .json)");

    auto* rewire = app.add_subcommand("rewire", "rewiring enumeration and refutation");
    auto* rew_enum = rewire->add_subcommand("enumerate", "count/print rewirings");
    std::string re_input, re_reference, re_facts, re_mode = "single";
    long re_limit = 20;
    rew_enum->add_option("--input", re_input)->required();
    rew_enum->add_option("--reference", re_reference)->required();
    rew_enum->add_option("--facts", re_facts)->required();
    rew_enum->add_option("--mode", re_mode, "single|full");
    rew_enum->add_option("--limit", re_limit, "print at most this many");
    auto* rew_ref = rewire->add_subcommand("refute", "search witnesses against the reference");
    std::string rr_input, rr_reference, rr_facts, rr_mode = "single";
    int rr_bound = 12;
    long rr_budget = 50000;
    rew_ref->add_option("--input", rr_input)->required();
    rew_ref->add_option("--reference", rr_reference)->required();
    rew_ref->add_option("--facts", rr_facts)->required();
    rew_ref->add_option("--mode", rr_mode, "single|full");
    rew_ref->add_option("--bound", rr_bound, "lasso length bound");
    rew_ref->add_option("--budget", rr_budget, "lassos per rewiring");

    auto* sep = app.add_subcommand("sep-sat", "separation instances and SAT runs");
    std::string sep_instance, sep_dimacs, sep_decode;
    int sep_k = 0;
    sep->add_option("--instance", sep_instance, "p2|p5|sq1|sq4")->required();
    sep->add_option("--k", sep_k, "candidate DFA size (0 = search minimum)");
    sep->add_option("--dimacs", sep_dimacs, "export the CNF");
    sep->add_option("--decode", sep_decode, "write the decoded DFA as JSON");

    auto* member = app.add_subcommand("member", "lasso membership in a reference language");
    std::string mem_language, mem_lasso;
    member->add_option("--language", mem_language, "lmain|lstrong|lweak")->required();
    member->add_option("--lasso", mem_lasso, "prefix:period, compact letters")->required();

    auto* rep = app.add_subcommand("reproduce", "run the packaged result drivers");
    bool rep_all = false;
    std::string rep_lemma, rep_report;
    bool rep_serial = false;
    rep->add_flag("--all", rep_all, "run every driver");
    rep->add_option("--lemma", rep_lemma, "run one driver by id");
    rep->add_option("--report", rep_report, "write the JSON report");
    rep->add_flag("--serial", rep_serial, "disable driver parallelism");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*zoo_list) {
            for (const auto& e : zoo_entries())
                std::cout << e.key << "  (" << e.expect.state_count << " states)  " << e.origin
                          << "\n";
            for (const auto& k : zoo_finite_keys())
                std::cout << k << "  (finite-word safety view)\n";
            std::cout << "classifier  (finite-word segment classifier)\n";
            return kExitOk;
        }
        if (*zoo_dump) {
            if (dump_format == "tdfa") {
                ThreeDfa t = separation_instance(dump_name);
                emit(dump_out, threedfa_to_text(t));
                return kExitOk;
            }
            for (const auto& k : zoo_finite_keys())
                if (k == dump_name) {
                    emit(dump_out, to_json(zoo_finite(k)) + "\n");
                    return kExitOk;
                }
            if (dump_name == "classifier") {
                emit(dump_out, to_json(zoo_classifier()) + "\n");
                return kExitOk;
            }
            Automaton a = load_automaton(dump_name);
            emit(dump_out, dump_format == "hoa" ? to_hoa(a) : to_json(a) + "\n");
            return kExitOk;
        }
        if (*check_hd) {
            Automaton a = load_automaton(hd_input);
            TwoTokenResult t = decide_hd_two_token(a, hd_max_states);
            if (!hd_arena_dump.empty()) {
                SimulationArena sa = simulation_arena(a, a.initial, a, a.initial);
                write_file(hd_arena_dump, sa.arena.dump_json());
            }
            if (!t.hd.has_value()) {
                std::cerr << "undecided: " << t.note << "\n";
                return kExitDiverged;
            }
            std::cout << (*t.hd ? "history-deterministic" : "not history-deterministic")
                      << "\n";
            return kExitOk;
        }
        if (*check_simpl) {
            Automaton a = load_automaton(si_input);
            ReferenceLanguage R = reference(si_reference);
            FactSuite suite = load_suite(si_facts);
            SimplifiedCertificate cert =
                check_simplified(a, R, suite, covering_hints(suite.automaton_key));
            std::cout << (cert.simplified ? "simplified: history-deterministic"
                                          : "not certified")
                      << "\n" << cert.detail << "\n";
            if (cert.simplified)
                for (auto [p, q] : cert.covering)
                    std::cout << "covering " << a.state_names[p] << " -> " << a.state_names[q]
                              << "\n";
            if (!si_arena_dump.empty() && !cert.covering.empty()) {
                Automaton reach = build_reach(a);
                auto [p, q] = *cert.covering.begin();
                SimulationArena sa = simulation_arena(reach, q, reach, p);
                write_file(si_arena_dump, sa.arena.dump_json());
            }
            return cert.simplified ? kExitOk : kExitDiverged;
        }
        if (*check_min) {
            Automaton a = load_automaton(cm_input);
            CobuchiMinimalityReport r = cobuchi_minimality_verdict(a);
            std::ostringstream os;
            os << "{\n  \"hd_sufficient\": " << (r.hd_sufficient ? "true" : "false")
               << ",\n  \"normal\": " << (r.normal ? "true" : "false")
               << ",\n  \"safe_deterministic\": " << (r.safe_deterministic ? "true" : "false")
               << ",\n  \"sd_structural\": " << (r.sd_structural ? "true" : "false")
               << ",\n  \"safe_minimal\": " << (r.safe_minimal ? "true" : "false")
               << ",\n  \"distinguishing_words\": " << r.distinguishing_words
               << ",\n  \"safe_centralised\": " << (r.safe_centralised ? "true" : "false")
               << ",\n  \"statewise_minimal\": " << (r.statewise_minimal() ? "true" : "false")
               << "\n}\n";
            std::cout << os.str();
            if (!cm_report.empty())
                write_file(cm_report, os.str());
            return r.statewise_minimal() ? kExitOk : kExitDiverged;
        }
        if (*comp) {
            Automaton a = load_automaton(comp_input);
            ReferenceLanguage R = reference(comp_reference);
            FactSuite suite = load_suite(comp_facts);
            SimplifiedCertificate cert =
                check_simplified(a, R, suite, covering_hints(suite.automaton_key));
            if (!cert.simplified) {
                std::cerr << "input is not certified simplified: " << cert.detail << "\n";
                return kExitDiverged;
            }
            Automaton cc = hd_complement(a, cert);
            bool hoa = comp_out.size() >= 4 && comp_out.substr(comp_out.size() - 4) == ".hoa";
            emit(comp_out, hoa ? to_hoa(cc) : to_json(cc) + "\n");
            return kExitOk;
        }
        if (*rew_enum || *rew_ref) {
            bool refuting = rew_ref->parsed();
            std::string in = refuting ? rr_input : re_input;
            std::string ref_key = refuting ? rr_reference : re_reference;
            std::string facts = refuting ? rr_facts : re_facts;
            std::string mode = refuting ? rr_mode : re_mode;
            Automaton a = load_automaton(in);
            ReferenceLanguage R = reference(ref_key);
            FactSuite suite = load_suite(facts);
            SimplifiedCertificate cert =
                check_simplified(a, R, suite, covering_hints(suite.automaton_key));
            if (!cert.simplified) {
                std::cerr << "input is not certified simplified: " << cert.detail << "\n";
                return kExitDiverged;
            }
            long count = 0, refuted = 0, survivors = 0;
            auto consume = [&](Rewiring&& rw) {
                ++count;
                if (!refuting) {
                    if (count <= re_limit)
                        std::cout << rw.description << "\n";
                    return true;
                }
                RefutationResult rr =
                    refute_rewiring(rw.automaton, R, {}, rr_bound, rr_budget, seed);
                if (rr.witness) {
                    ++refuted;
                    if (refuted <= 20)
                        std::cout << rw.description << "  refuted by  "
                                  << rr.witness->format(a.alphabet) << "\n";
                } else {
                    ++survivors;
                    std::cout << rw.description << "  NOT refuted at bound " << rr_bound
                              << "\n";
                }
                return true;
            };
            if (mode == "full")
                enumerate_rewirings_full(a, cert, consume);
            else
                enumerate_rewirings_single(a, cert, consume);
            std::cout << count << " rewirings";
            if (refuting)
                std::cout << ", " << refuted << " refuted, " << survivors << " not refuted";
            std::cout << "\n";
            return kExitOk;
        }
        if (*sep) {
            ThreeDfa t = separation_instance(sep_instance);
            SatBudget budget = budget_from_env();
            if (sep_k <= 0) {
                MinSeparatorResult ms = min_separator_size(t, 10, budget);
                std::cout << "minimal consistent DFA size: " << ms.size << "\n";
                return ms.size > 0 ? kExitOk : kExitDiverged;
            }
            CnfInstance f = encode_exists_kdfa(t, sep_k);
            if (!sep_dimacs.empty())
                write_file(sep_dimacs, f.to_dimacs());
            SatResult r = sat_solve(f, budget, seed);
            std::cout << (r.status == SatResult::Status::Sat     ? "sat"
                          : r.status == SatResult::Status::Unsat ? "unsat"
                                                                 : "timeout")
                      << "  (decisions " << r.decisions << ", conflicts " << r.conflicts
                      << ")\n";
            if (r.status == SatResult::Status::Sat && !sep_decode.empty())
                write_file(sep_decode, to_json(decode_dfa(f, r, t, sep_k)) + "\n");
            return r.status == SatResult::Status::Timeout ? kExitDiverged : kExitOk;
        }
        if (*member) {
            ReferenceLanguage R = reference(mem_language);
            auto w = parse_lasso(R.monitor.alphabet, mem_lasso);
            if (!w) {
                std::cerr << "cannot parse lasso over the language's alphabet\n";
                return kExitUsage;
            }
            std::cout << (R.member(*w) ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (*rep) {
            if (!rep_all && rep_lemma.empty()) {
                std::cerr << "reproduce needs --all or --lemma <id>; known ids:\n";
                for (const auto& id : lemma_ids())
                    std::cerr << "  " << id << "\n";
                return kExitUsage;
            }
            Report report;
            report.seed = seed;
            if (rep_all) {
                report = reproduce_all(seed, !rep_serial);
            } else {
                report.entries.push_back(reproduce(rep_lemma, seed));
            }
            for (const auto& e : report.entries)
                std::cout << (e.pass ? "pass" : "FAIL") << "  " << e.id << "  (" << e.ms
                          << " ms)\n";
            if (!rep_report.empty())
                write_file(rep_report, report.to_json() + "\n");
            return report.all_pass() ? kExitOk : kExitDiverged;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
