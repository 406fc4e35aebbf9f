#pragma once

#include <string>
#include <vector>

#include "owb/alphabet.hpp"

namespace owb {

// Ultimately periodic word u·v^ω, stored as (prefix u, period v).
struct Lasso {
    std::vector<int> prefix;
    std::vector<int> period;

    Lasso() = default;
    Lasso(std::vector<int> u, std::vector<int> v)
        : prefix(std::move(u)), period(std::move(v)) {}

    // Letter at absolute position i of u·v^ω.
    int at(size_t i) const {
        if (i < prefix.size())
            return prefix[i];
        return period[(i - prefix.size()) % period.size()];
    }

    size_t total_len() const { return prefix.size() + period.size(); }

    // Unique representative: period replaced by its primitive root, then the
    // prefix shortened as far as rotation allows. Two lassos denote the same
    // ω-word iff their canonical forms are equal.
    Lasso canonical() const;

    bool operator==(const Lasso& o) const {
        return prefix == o.prefix && period == o.period;
    }
    bool operator<(const Lasso& o) const {
        if (prefix != o.prefix)
            return prefix < o.prefix;
        return period < o.period;
    }

    std::string format(const Alphabet& sigma) const;
};

// Parses "u:v" with compact or separated letters, e.g. ":y" or "xa:xbxb".
std::optional<Lasso> parse_lasso(const Alphabet& sigma, const std::string& text);

} // namespace owb
