#include "owb/sat.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace owb {

std::string CnfInstance::to_dimacs() const {
    std::ostringstream os;
    for (const auto& [v, meaning] : legend)
        os << "c var " << v << " : " << meaning << "\n";
    os << "p cnf " << var_count << " " << clauses.size() << "\n";
    for (const auto& cl : clauses) {
        for (int l : cl)
            os << l << " ";
        os << "0\n";
    }
    return os.str();
}

CnfInstance cnf_from_dimacs(const std::string& text) {
    CnfInstance f;
    std::istringstream is(text);
    std::string line;
    bool header = false;
    std::vector<int> cur;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            int vars, clauses;
            hs >> p >> cnf >> vars >> clauses;
            if (cnf != "cnf")
                throw std::runtime_error("dimacs: expected 'p cnf'");
            f.var_count = vars;
            header = true;
            continue;
        }
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.add_clause(cur);
                cur.clear();
            } else {
                cur.push_back(lit);
            }
        }
    }
    if (!cur.empty())
        f.add_clause(cur);
    if (!header)
        throw std::runtime_error("dimacs: missing header");
    return f;
}

namespace {

// Literal index: variable v (1-based), sign s -> 2v or 2v+1.
inline int lit_index(int lit) { return lit > 0 ? 2 * lit : -2 * lit + 1; }
inline int neg(int lit) { return -lit; }

struct Clause {
    std::vector<int> lits;
    bool learned = false;
    double activity = 0.0;
};

struct Solver {
    int nvars;
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> watches; // lit index -> clause ids
    std::vector<int8_t> value;             // var -> 0 unset, 1 true, -1 false
    std::vector<int> level;
    std::vector<int> reason; // clause id or -1
    std::vector<int> trail;
    std::vector<int> trail_lim;
    size_t qhead = 0;
    std::vector<double> var_act;
    double var_inc = 1.0;
    double cla_inc = 1.0;
    int64_t decisions = 0, conflicts = 0;
    std::vector<char> seen;
    uint64_t rng_state;

    explicit Solver(const CnfInstance& f, uint64_t seed)
        : nvars(f.var_count), rng_state(seed * 0x9E3779B97F4A7C15ull + 1) {
        watches.assign(2 * (nvars + 1), {});
        value.assign(nvars + 1, 0);
        level.assign(nvars + 1, 0);
        reason.assign(nvars + 1, -1);
        var_act.assign(nvars + 1, 0.0);
        seen.assign(nvars + 1, 0);
        (void)rng_state;
        for (const auto& cl : f.clauses)
            add_clause(cl, false);
    }

    bool bad = false; // empty clause on input or at level 0

    int8_t lit_value(int lit) const {
        int8_t v = value[std::abs(lit)];
        return lit > 0 ? v : static_cast<int8_t>(-v);
    }

    void enqueue(int lit, int why) {
        int v = std::abs(lit);
        value[v] = lit > 0 ? 1 : -1;
        level[v] = static_cast<int>(trail_lim.size());
        reason[v] = why;
        trail.push_back(lit);
    }

    void add_clause(std::vector<int> lits, bool learned) {
        // basic normalization: dedup, detect tautology
        std::sort(lits.begin(), lits.end(),
                  [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b)
                                                                        : a < b; });
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == -lits[i + 1])
                return; // tautology
        if (lits.empty()) {
            bad = true;
            return;
        }
        if (lits.size() == 1) {
            if (lit_value(lits[0]) == -1)
                bad = true;
            else if (lit_value(lits[0]) == 0)
                enqueue(lits[0], -1);
            return;
        }
        int id = static_cast<int>(clauses.size());
        clauses.push_back({std::move(lits), learned, 0.0});
        watches[lit_index(clauses[id].lits[0])].push_back(id);
        watches[lit_index(clauses[id].lits[1])].push_back(id);
    }

    // Returns conflicting clause id or -1.
    int propagate() {
        while (qhead < trail.size()) {
            int lit = trail[qhead++];
            int fl = neg(lit); // literal that became false
            std::vector<int>& ws = watches[lit_index(fl)];
            std::vector<int> keep;
            keep.reserve(ws.size());
            int confl = -1;
            for (size_t wi = 0; wi < ws.size(); ++wi) {
                int ci = ws[wi];
                if (confl != -1) {
                    keep.push_back(ci);
                    continue;
                }
                Clause& c = clauses[ci];
                if (c.lits[0] == fl)
                    std::swap(c.lits[0], c.lits[1]);
                // c.lits[1] == fl now
                if (lit_value(c.lits[0]) == 1) {
                    keep.push_back(ci);
                    continue;
                }
                bool moved = false;
                for (size_t k = 2; k < c.lits.size(); ++k) {
                    if (lit_value(c.lits[k]) != -1) {
                        std::swap(c.lits[1], c.lits[k]);
                        watches[lit_index(c.lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved)
                    continue;
                keep.push_back(ci);
                if (lit_value(c.lits[0]) == -1) {
                    confl = ci;
                } else {
                    enqueue(c.lits[0], ci);
                }
            }
            if (confl != -1) {
                // keep the remaining watchers
                ws = std::move(keep);
                return confl;
            }
            ws = std::move(keep);
        }
        return -1;
    }

    void bump_var(int v) {
        var_act[v] += var_inc;
        if (var_act[v] > 1e100) {
            for (double& a : var_act)
                a *= 1e-100;
            var_inc *= 1e-100;
        }
    }

    void analyze(int confl, std::vector<int>* learnt, int* backtrack) {
        int path = 0;
        int lit = 0;
        size_t idx = trail.size();
        learnt->push_back(0); // placeholder for the asserting literal
        int cur_level = static_cast<int>(trail_lim.size());
        int ci = confl;
        std::vector<int> touched;
        do {
            Clause& c = clauses[ci];
            if (c.learned)
                c.activity += cla_inc;
            for (int q : c.lits) {
                if (q == lit)
                    continue;
                int v = std::abs(q);
                if (!seen[v] && level[v] > 0) {
                    seen[v] = 1;
                    touched.push_back(v);
                    bump_var(v);
                    if (level[v] >= cur_level)
                        ++path;
                    else
                        learnt->push_back(q);
                }
            }
            // next marked literal on the trail
            while (!seen[std::abs(trail[--idx])])
                ;
            lit = trail[idx];
            seen[std::abs(lit)] = 0;
            ci = reason[std::abs(lit)];
            --path;
        } while (path > 0);
        (*learnt)[0] = -lit;
        for (int v : touched)
            seen[v] = 0;
        std::vector<int>& out = *learnt;
        *backtrack = 0;
        if (out.size() > 1) {
            size_t maxi = 1;
            for (size_t i = 2; i < out.size(); ++i)
                if (level[std::abs(out[i])] > level[std::abs(out[maxi])])
                    maxi = i;
            std::swap(out[1], out[maxi]);
            *backtrack = level[std::abs(out[1])];
        }
    }

    void cancel_until(int lvl) {
        if (static_cast<int>(trail_lim.size()) <= lvl)
            return;
        for (size_t i = trail.size(); i > static_cast<size_t>(trail_lim[lvl]);) {
            --i;
            int v = std::abs(trail[i]);
            value[v] = 0;
            reason[v] = -1;
        }
        trail.resize(trail_lim[lvl]);
        trail_lim.resize(lvl);
        qhead = trail.size();
    }

    int pick_branch() {
        int best = 0;
        double best_act = -1.0;
        for (int v = 1; v <= nvars; ++v)
            if (value[v] == 0 && var_act[v] > best_act) {
                best_act = var_act[v];
                best = v;
            }
        return best;
    }
};

int64_t luby(int64_t x) {
    // Luby sequence, 0-based index.
    int64_t size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) / 2;
        --seq;
        x = x % size;
    }
    return 1ll << seq;
}

} // namespace

SatResult sat_solve(const CnfInstance& f, const SatBudget& budget, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    SatResult res;
    Solver s(f, seed);
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };
    auto finish = [&](SatResult::Status st) {
        res.status = st;
        res.decisions = s.decisions;
        res.conflicts = s.conflicts;
        res.millis = elapsed();
        return res;
    };
    if (s.bad)
        return finish(SatResult::Status::Unsat);
    if (s.propagate() != -1)
        return finish(SatResult::Status::Unsat);

    int64_t restart = 0;
    int64_t conflicts_until_restart = 64 * luby(restart++);
    while (true) {
        if (s.conflicts >= budget.max_conflicts || elapsed() >= budget.max_millis)
            return finish(SatResult::Status::Timeout);
        int confl = s.propagate();
        if (confl != -1) {
            ++s.conflicts;
            if (s.trail_lim.empty())
                return finish(SatResult::Status::Unsat);
            std::vector<int> learnt;
            int back = 0;
            s.analyze(confl, &learnt, &back);
            s.cancel_until(back);
            if (learnt.size() == 1) {
                s.enqueue(learnt[0], -1);
            } else {
                int id = static_cast<int>(s.clauses.size());
                s.clauses.push_back({learnt, true, s.cla_inc});
                s.watches[lit_index(learnt[0])].push_back(id);
                s.watches[lit_index(learnt[1])].push_back(id);
                s.enqueue(learnt[0], id);
            }
            s.var_inc /= 0.95;
            if (--conflicts_until_restart <= 0) {
                conflicts_until_restart = 64 * luby(restart++);
                s.cancel_until(0);
            }
        } else {
            int v = s.pick_branch();
            if (v == 0) {
                // full assignment: re-check against every clause
                for (const auto& cl : f.clauses) {
                    bool sat = false;
                    for (int l : cl)
                        sat = sat || s.lit_value(l) == 1;
                    if (!sat)
                        throw std::logic_error("model fails re-check; solver bug");
                }
                res.model.assign(f.var_count + 1, false);
                for (int x = 1; x <= f.var_count; ++x)
                    res.model[x] = s.value[x] == 1;
                return finish(SatResult::Status::Sat);
            }
            ++s.decisions;
            s.trail_lim.push_back(static_cast<int>(s.trail.size()));
            s.enqueue(-v, -1); // negative-first polarity, deterministic
        }
    }
}

} // namespace owb
