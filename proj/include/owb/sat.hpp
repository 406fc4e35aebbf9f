#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace owb {

// CNF with DIMACS-style signed literals (variables 1..var_count).
struct CnfInstance {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;
    std::map<int, std::string> legend; // variable -> meaning

    int new_var(const std::string& meaning = {}) {
        ++var_count;
        if (!meaning.empty())
            legend[var_count] = meaning;
        return var_count;
    }
    void add_clause(std::vector<int> lits) { clauses.push_back(std::move(lits)); }

    std::string to_dimacs() const;
};

CnfInstance cnf_from_dimacs(const std::string& text);

struct SatBudget {
    int64_t max_conflicts = 4'000'000;
    int64_t max_millis = 60'000;
};

struct SatResult {
    enum class Status { Sat, Unsat, Timeout } status = Status::Timeout;
    std::vector<bool> model; // 1-indexed when Sat
    int64_t decisions = 0;
    int64_t conflicts = 0;
    int64_t millis = 0;
};

// Conflict-driven clause-learning solver: two watched literals, first-UIP
// learning, activity-based decisions, Luby restarts. Deterministic for a
// fixed seed. Sat models are re-checked against every clause.
SatResult sat_solve(const CnfInstance& f, const SatBudget& budget = {}, uint64_t seed = 1);

} // namespace owb
