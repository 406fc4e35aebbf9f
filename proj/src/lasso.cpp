#include "owb/lasso.hpp"

#include <algorithm>
#include <stdexcept>

namespace owb {

Lasso Lasso::canonical() const {
    if (period.empty())
        throw std::invalid_argument("lasso period must be nonempty");
    std::vector<int> u = prefix;
    std::vector<int> v = period;

    // Primitive root of the period.
    int n = static_cast<int>(v.size());
    for (int d = 1; d <= n / 2; ++d) {
        if (n % d != 0)
            continue;
        bool repeats = true;
        for (int i = d; i < n && repeats; ++i)
            repeats = v[i] == v[i - d];
        if (repeats) {
            v.resize(d);
            break;
        }
    }

    // Shift the period left through the prefix: u·(wv')^ω with u ending in w
    // equals u'·(v'w)^ω. Iterating one letter at a time reaches the shortest
    // prefix.
    while (!u.empty() && u.back() == v.back()) {
        u.pop_back();
        v.insert(v.begin(), v.back());
        v.pop_back();
    }
    return Lasso(std::move(u), std::move(v));
}

std::string Lasso::format(const Alphabet& sigma) const {
    return sigma.format(prefix) + ":" + sigma.format(period);
}

std::optional<Lasso> parse_lasso(const Alphabet& sigma, const std::string& text) {
    auto colon = text.find(':');
    std::string u_text = colon == std::string::npos ? "" : text.substr(0, colon);
    std::string v_text = colon == std::string::npos ? text : text.substr(colon + 1);
    auto u = sigma.tokenize(u_text);
    auto v = sigma.tokenize(v_text);
    if (!u || !v || v->empty())
        return std::nullopt;
    return Lasso(std::move(*u), std::move(*v));
}

} // namespace owb
