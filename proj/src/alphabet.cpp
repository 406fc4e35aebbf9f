#include "owb/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace owb {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
        if (letters_[i].empty())
            throw std::invalid_argument("alphabet letter must be nonempty");
        if (!index_.emplace(letters_[i], i).second)
            throw std::invalid_argument("duplicate alphabet letter: " + letters_[i]);
    }
    if (letters_.empty())
        throw std::invalid_argument("alphabet must be nonempty");
}

std::optional<int> Alphabet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::vector<int>> Alphabet::tokenize(const std::string& text) const {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ' || c == ',' || c == '.' || c == '\t') {
            ++pos;
            continue;
        }
        // Greedy longest match; alphabets here never make this ambiguous.
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < size(); ++i) {
            const std::string& l = letters_[i];
            if (l.size() > best_len && text.compare(pos, l.size(), l) == 0) {
                best = i;
                best_len = l.size();
            }
        }
        if (best < 0)
            return std::nullopt;
        out.push_back(best);
        pos += best_len;
    }
    return out;
}

std::string Alphabet::format(const std::vector<int>& word) const {
    std::string out;
    for (int l : word) {
        if (!out.empty())
            out += ' ';
        out += letters_[l];
    }
    return out;
}

} // namespace owb
