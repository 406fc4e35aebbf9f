#include "owb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "owb/zoo.hpp"

namespace owb {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_json(const Automaton& a) {
    ordered_json j;
    j["name"] = a.name;
    j["alphabet"] = a.alphabet.letters();
    j["states"] = a.state_names;
    j["initial"] = a.initial;
    j["acceptance"] = a.acceptance == Acceptance::Buchi ? "buchi" : "cobuchi";
    j["transitions"] = ordered_json::array();
    for (const Transition& t : a.transitions)
        j["transitions"].push_back({t.src, t.letter, t.dst, t.significant});
    return j.dump(1);
}

Automaton automaton_from_json(const std::string& text) {
    json j = json::parse(text);
    Automaton a;
    a.name = j.value("name", "");
    a.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    for (const auto& s : j.at("states"))
        a.add_state(s.get<std::string>());
    a.initial = j.at("initial").get<int>();
    std::string acc = j.at("acceptance").get<std::string>();
    if (acc == "buchi")
        a.acceptance = Acceptance::Buchi;
    else if (acc == "cobuchi")
        a.acceptance = Acceptance::CoBuchi;
    else
        throw ParseError("unsupported acceptance: " + acc);
    for (const auto& t : j.at("transitions")) {
        if (!t.is_array() || t.size() != 4)
            throw ParseError("transition must be [src,letter,dst,significant]");
        a.add_transition(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<bool>());
    }
    return a;
}

std::string to_json(const FiniteAutomaton& f) {
    ordered_json j;
    j["name"] = f.name;
    j["alphabet"] = f.alphabet.letters();
    if (!f.state_names.empty())
        j["states"] = f.state_names;
    else {
        std::vector<std::string> names;
        for (int i = 0; i < f.state_count; ++i)
            names.push_back("s" + std::to_string(i));
        j["states"] = names;
    }
    j["initial"] = f.initial;
    j["acceptance"] = "finite";
    j["deterministic"] = f.deterministic;
    ordered_json acc = ordered_json::array();
    for (int s = 0; s < f.state_count; ++s)
        if (f.accepting[s])
            acc.push_back(s);
    j["accepting"] = acc;
    j["transitions"] = ordered_json::array();
    for (int s = 0; s < f.state_count; ++s)
        for (int l = 0; l < f.alphabet.size(); ++l)
            for (int d : f.delta[s][l])
                j["transitions"].push_back({s, l, d, false});
    return j.dump(1);
}

std::string to_json(const ClassifierDfa& c) {
    ordered_json j = ordered_json::parse(to_json(c.dfa));
    ordered_json finals;
    for (auto [s, idx] : c.finals)
        finals[std::to_string(s)] = idx;
    j["finals"] = finals;
    return j.dump(1);
}

FiniteAutomaton finite_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("acceptance").get<std::string>() != "finite")
        throw ParseError("expected finite acceptance");
    FiniteAutomaton f;
    f.name = j.value("name", "");
    f.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    std::vector<std::string> names = j.at("states").get<std::vector<std::string>>();
    f.resize(static_cast<int>(names.size()), f.alphabet.size());
    f.state_names = names;
    f.initial = j.at("initial").get<int>();
    for (const auto& s : j.at("accepting"))
        f.accepting.at(s.get<int>()) = true;
    for (const auto& t : j.at("transitions"))
        f.add_edge(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
    f.deterministic = j.value("deterministic", false);
    return f;
}

namespace {

int ap_count_for(int letters) {
    int bits = 0;
    while ((1 << bits) < letters)
        ++bits;
    return bits;
}

std::string minterm(int letter, int bits) {
    if (bits == 0)
        return "t";
    std::string s;
    for (int b = 0; b < bits; ++b) {
        if (b)
            s += "&";
        if (!(letter & (1 << b)))
            s += "!";
        s += std::to_string(b);
    }
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

std::string to_hoa(const Automaton& a) {
    std::ostringstream os;
    int bits = ap_count_for(a.alphabet.size());
    os << "HOA: v1\n";
    os << "name: \"" << a.name << "\"\n";
    os << "States: " << a.state_count() << "\n";
    os << "Start: " << a.initial << "\n";
    os << "AP: " << bits;
    for (int b = 0; b < bits; ++b)
        os << " \"b" << b << "\"";
    os << "\n";
    os << "x-letters:";
    for (const std::string& l : a.alphabet.letters())
        os << " \"" << l << "\"";
    os << "\n";
    if (a.acceptance == Acceptance::Buchi) {
        os << "acc-name: Buchi\n";
        os << "Acceptance: 1 Inf(0)\n";
    } else {
        os << "acc-name: co-Buchi\n";
        os << "Acceptance: 1 Fin(0)\n";
    }
    os << "properties: trans-labels explicit-labels trans-acc\n";
    os << "--BODY--\n";
    for (int s = 0; s < a.state_count(); ++s) {
        os << "State: " << s << " \"" << a.state_names[s] << "\"\n";
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int t : a.out(s, l)) {
                os << "[" << minterm(l, bits) << "] " << a.transitions[t].dst;
                if (a.transitions[t].significant)
                    os << " {0}";
                os << "\n";
            }
    }
    os << "--END--\n";
    return os.str();
}

Automaton automaton_from_hoa(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Automaton a;
    std::vector<std::string> letters;
    int states = -1, start = -1, bits = -1;
    bool buchi = false, cobuchi = false;
    bool in_body = false;
    int current_state = -1;
    auto fail = [](const std::string& m) { throw ParseError("hoa: " + m); };

    // Collect quoted tokens of a header line tail.
    auto quoted_list = [&](const std::string& tail) {
        std::vector<std::string> out;
        size_t i = 0;
        while (i < tail.size()) {
            if (tail[i] == '"') {
                size_t j = tail.find('"', i + 1);
                if (j == std::string::npos)
                    fail("unterminated quote");
                out.push_back(tail.substr(i + 1, j - i - 1));
                i = j + 1;
            } else {
                ++i;
            }
        }
        return out;
    };

    std::string name;
    while (std::getline(is, line)) {
        // strip comments
        auto c = line.find("/*");
        if (c != std::string::npos)
            fail("block comments are outside the supported subset");
        if (line.empty())
            continue;
        if (!in_body) {
            if (line == "--BODY--") {
                in_body = true;
                if (states < 0 || start < 0 || bits < 0 || (!buchi && !cobuchi))
                    fail("missing mandatory headers");
                if (letters.empty())
                    for (int l = 0; l < (1 << bits); ++l)
                        letters.push_back("l" + std::to_string(l));
                a.alphabet = Alphabet(letters);
                a.acceptance = buchi ? Acceptance::Buchi : Acceptance::CoBuchi;
                for (int s = 0; s < states; ++s)
                    a.add_state("s" + std::to_string(s));
                a.initial = start;
                a.name = name;
                continue;
            }
            auto colon = line.find(':');
            if (colon == std::string::npos)
                fail("malformed header line: " + line);
            std::string key = line.substr(0, colon);
            std::string tail = line.substr(colon + 1);
            if (key == "HOA") {
                if (split_ws(tail) != std::vector<std::string>{"v1"})
                    fail("only HOA v1 is supported");
            } else if (key == "States") {
                states = std::stoi(tail);
            } else if (key == "Start") {
                if (start != -1)
                    fail("multiple Start headers are outside the subset");
                start = std::stoi(tail);
            } else if (key == "AP") {
                auto toks = split_ws(tail);
                if (toks.empty())
                    fail("AP needs a count");
                bits = std::stoi(toks[0]);
            } else if (key == "x-letters") {
                letters = quoted_list(tail);
            } else if (key == "Acceptance") {
                auto toks = split_ws(tail);
                if (toks.size() == 2 && toks[0] == "1" && toks[1] == "Inf(0)")
                    buchi = true;
                else if (toks.size() == 2 && toks[0] == "1" && toks[1] == "Fin(0)")
                    cobuchi = true;
                else
                    fail("acceptance outside subset: " + tail);
            } else if (key == "acc-name" || key == "name" || key == "properties" ||
                       key == "tool") {
                if (key == "name") {
                    auto q = quoted_list(tail);
                    if (!q.empty())
                        name = q[0];
                }
            } else {
                fail("header outside supported subset: " + key);
            }
            continue;
        }
        if (line == "--END--")
            break;
        if (line.rfind("State:", 0) == 0) {
            auto toks = split_ws(line.substr(6));
            if (toks.empty())
                fail("State: needs an id");
            current_state = std::stoi(toks[0]);
            if (current_state < 0 || current_state >= states)
                fail("state id out of range");
            if (toks.size() >= 2 && toks[1].front() == '"') {
                // recover the quoted name (may contain spaces)
                auto q = quoted_list(line);
                if (!q.empty())
                    a.state_names[current_state] = q[0];
            }
            continue;
        }
        // transition: [label] dst {0}?
        if (line.size() < 3 || line[0] != '[')
            fail("expected a labelled transition: " + line);
        auto close = line.find(']');
        if (close == std::string::npos)
            fail("unterminated label");
        std::string label = line.substr(1, close - 1);
        auto rest = split_ws(line.substr(close + 1));
        if (rest.empty())
            fail("transition needs a destination");
        int dst = std::stoi(rest[0]);
        bool significant = false;
        if (rest.size() >= 2) {
            if (rest[1] == "{0}")
                significant = true;
            else
                fail("unsupported acceptance mark: " + rest[1]);
        }
        // decode the conjunction of literals into a letter index
        int letter = 0;
        if (bits == 0) {
            if (label != "t")
                fail("expected [t] for a single-letter alphabet");
        } else {
            std::vector<int> seen_bits;
            std::istringstream ls(label);
            std::string lit;
            while (std::getline(ls, lit, '&')) {
                bool neg = !lit.empty() && lit[0] == '!';
                std::string num = neg ? lit.substr(1) : lit;
                int b = std::stoi(num);
                if (b < 0 || b >= bits)
                    fail("AP index out of range in label");
                seen_bits.push_back(b);
                if (!neg)
                    letter |= 1 << b;
            }
            if (static_cast<int>(seen_bits.size()) != bits)
                fail("labels must be full minterms in this subset");
        }
        if (letter >= static_cast<int>(a.alphabet.size()))
            fail("letter index outside declared alphabet");
        if (current_state < 0)
            fail("transition before any State:");
        a.add_transition(current_state, letter, dst, significant);
    }
    if (!in_body)
        fail("missing --BODY--");
    return a;
}

Automaton load_automaton(const std::string& spec) {
    std::string key = spec;
    if (key.rfind("zoo:", 0) == 0)
        key = key.substr(4);
    for (const auto& e : zoo_entries())
        if (e.key == key)
            return e.build();
    std::string text = read_file(spec);
    if (spec.size() >= 4 && spec.substr(spec.size() - 4) == ".hoa")
        return automaton_from_hoa(text);
    if (!text.empty() && (text[0] == '{' || text[0] == '['))
        return automaton_from_json(text);
    return automaton_from_hoa(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << content;
}

} // namespace owb
