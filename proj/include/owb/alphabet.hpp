#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace owb {

// Finite ordered alphabet of printable letter tokens ("a", "r1", "y", ...).
// Letters are addressed by index everywhere else; the names only matter for
// parsing, printing and serialization.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& name(int letter) const { return letters_.at(letter); }
    const std::vector<std::string>& letters() const { return letters_; }

    std::optional<int> index(const std::string& name) const;

    // Splits a compact word like "r1xbxa" (or "r1 x b,x.a") into letter
    // indices using greedy longest-match. Returns nullopt on any unmatched
    // residue.
    std::optional<std::vector<int>> tokenize(const std::string& text) const;

    std::string format(const std::vector<int>& word) const;

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> letters_;
    std::unordered_map<std::string, int> index_;
};

} // namespace owb
