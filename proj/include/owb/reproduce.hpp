#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace owb {

struct LemmaEntry {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string observed;
    std::vector<std::string> witnesses;
    int64_t ms = 0;
};

struct Report {
    std::string tool = "owb";
    std::string schema = "owb-report-1";
    uint64_t seed = 1;
    std::vector<LemmaEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass)
                return false;
        return !entries.empty();
    }
    std::string to_json() const;
};

std::vector<std::string> lemma_ids();
LemmaEntry reproduce(const std::string& id, uint64_t seed = 1);
Report reproduce_all(uint64_t seed = 1, bool parallel = true);

} // namespace owb
