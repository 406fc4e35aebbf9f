#include <json.hpp>

#include "owb/hd.hpp"

namespace owb {

namespace {

using nlohmann::ordered_json;

// Delimiter states of the main automaton: the guess component's base, the
// twelve block entry states and the gate.
std::vector<std::string> main_delimiters() {
    std::vector<std::string> d{"I", "Y"};
    for (int i = 1; i <= 6; ++i) {
        d.push_back("p" + std::to_string(i));
        d.push_back("P" + std::to_string(i));
    }
    return d;
}

FactSuite suite_amain() {
    FactSuite s;
    s.automaton_key = "amain";
    s.anchors.push_back({"Y", "y", "I"});
    std::vector<std::string> D = main_delimiters();
    auto ob = [&](std::string src, std::string dst, bool final_sig, std::string target,
                  FactObligation::Mode mode = FactObligation::Mode::Subset) {
        FactObligation o;
        o.src = std::move(src);
        o.dst = std::move(dst);
        o.forbidden = D;
        o.final_significant = final_sig;
        o.target = std::move(target);
        o.mode = mode;
        s.obligations.push_back(std::move(o));
    };
    auto num = [](int i) { return std::to_string(i); };
    for (int j = 1; j <= 6; ++j) {
        // entering a block from the guess component fixes its segment
        ob("I", "p" + num(j), true, "main:seg_or_reset" + num(j));
        // gate entries carry the block's own segment
        ob("P" + num(j), "Y", true, "main:seg" + num(j));
        for (int i = 1; i <= 6; ++i) {
            if (i == j) {
                // same-index square entries are impossible from the circle
                // row; square-to-own-square returns exist (resets) and are
                // not constrained here
                ob("p" + num(i), "P" + num(j), false, "", FactObligation::Mode::Empty);
            } else {
                ob("p" + num(i), "P" + num(j), false, "main:seg" + num(j));
                ob("P" + num(i), "P" + num(j), false, "main:seg" + num(j));
                ob("p" + num(i), "p" + num(j), false, "main:reset_suffix" + num(j));
            }
            ob("P" + num(i), "p" + num(j), false, "main:reset_suffix" + num(j));
        }
        ob("p" + num(j), "Y", true, "", FactObligation::Mode::Empty);
        ob("I", "P" + num(j), false, "", FactObligation::Mode::Empty);
    }
    {
        FactObligation yi;
        yi.src = "Y";
        yi.dst = "I";
        yi.final_anchor = true;
        yi.exclude_anchors_inside = true;
        yi.target = "main:ends_y";
        s.obligations.push_back(yi);
    }
    // anchor round trip: between two gate crossings the word carries a full
    // segment-pair infix and a trailing y
    FactObligation rt;
    rt.src = "I";
    rt.dst = "I";
    rt.final_anchor = true;
    rt.exclude_anchors_inside = true;
    rt.target = "main:roundtrip!nfa";
    s.obligations.push_back(rt);
    return s;
}

FactSuite suite_astrong() {
    FactSuite s;
    s.automaton_key = "astrong";
    s.anchors.push_back({"Y", "y", "I"});
    std::vector<std::string> D{"I", "p_a", "p_b", "p_c", "q_a", "q_b", "q_c", "Y"};
    auto ob = [&](std::string src, std::string dst, bool final_sig, std::string target) {
        FactObligation o;
        o.src = std::move(src);
        o.dst = std::move(dst);
        o.forbidden = D;
        o.final_significant = final_sig;
        o.target = std::move(target);
        s.obligations.push_back(std::move(o));
    };
    const char* g[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
        std::string gi = g[i];
        ob("I", "p_" + gi, true, "strong:ends_x" + gi);
        ob("q_" + gi, "Y", true, "strong:ends_x" + gi);
        for (int j = 0; j < 3; ++j) {
            std::string gj = g[j];
            if (i != j) {
                ob("p_" + gi, "q_" + gj, false, "strong:ends_x" + gj);
                ob("q_" + gi, "q_" + gj, false, "strong:ends_x" + gj);
            }
        }
    }
    FactObligation yi;
    yi.src = "Y";
    yi.dst = "I";
    yi.final_anchor = true;
    yi.exclude_anchors_inside = true;
    yi.target = "strong:ends_y";
    s.obligations.push_back(yi);
    return s;
}

FactSuite suite_aweak() {
    FactSuite s;
    s.automaton_key = "aweak";
    s.anchors.push_back({"Y", "y", "I"});
    std::vector<std::string> D{"I", "p_a", "p_b", "p_c", "q_a", "q_b", "q_c", "Y"};
    auto ob = [&](std::string src, std::string dst, bool final_sig, std::string target) {
        FactObligation o;
        o.src = std::move(src);
        o.dst = std::move(dst);
        o.forbidden = D;
        o.final_significant = final_sig;
        o.target = std::move(target);
        s.obligations.push_back(std::move(o));
    };
    const char* g[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
        std::string gi = g[i];
        ob("I", "p_" + gi, true, "weak:ends_x_or_r" + gi);
        ob("q_" + gi, "Y", true, "weak:ends_x" + gi);
        for (int j = 0; j < 3; ++j) {
            std::string gj = g[j];
            if (i != j) {
                ob("p_" + gi, "q_" + gj, false, "weak:ends_x" + gj);
                ob("q_" + gi, "q_" + gj, false, "weak:ends_x" + gj);
            }
            // resets re-enter the top row
            ob("q_" + gi, "p_" + gj, false, "weak:reset_suffix" + gj);
            if (i != j)
                ob("p_" + gi, "p_" + gj, false, "weak:reset_suffix" + gj);
        }
    }
    FactObligation yi;
    yi.src = "Y";
    yi.dst = "I";
    yi.final_anchor = true;
    yi.exclude_anchors_inside = true;
    yi.target = "weak:ends_y";
    s.obligations.push_back(yi);
    return s;
}

FactSuite suite_dstrong() {
    // Consecutive-segment facts pinning the rewired wiring: reaching the
    // second row needs two distinct-index hops, gate entries repeat the
    // index of the entering hop, and the gate exits on y.
    FactSuite s;
    s.automaton_key = "dstrong";
    s.anchors.push_back({"Y", "y", "p_a"});
    std::vector<std::string> D{"p_a", "p_b", "p_c", "q_a", "q_b", "q_c", "Y"};
    auto ob = [&](std::string src, std::string dst, bool final_sig, std::string target,
                  FactObligation::Mode mode = FactObligation::Mode::Subset) {
        FactObligation o;
        o.src = std::move(src);
        o.dst = std::move(dst);
        o.forbidden = D;
        o.final_significant = final_sig;
        o.target = std::move(target);
        o.mode = mode;
        s.obligations.push_back(std::move(o));
    };
    auto empty = FactObligation::Mode::Empty;
    ob("p_a", "p_b", true, "strong:ends_x_in:bc");
    ob("p_b", "p_c", true, "strong:ends_x_in:ac");
    ob("p_c", "q_a", true, "strong:ends_xa");
    ob("p_c", "q_b", true, "strong:ends_xb");
    ob("p_a", "p_c", false, "", empty);
    ob("p_b", "p_a", false, "", empty);
    ob("p_c", "p_a", false, "", empty);
    ob("p_a", "q_a", false, "", empty); // q-row needs the p_b, p_c hops first
    ob("p_c", "q_c", false, "", empty);
    const char* g[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
        ob(std::string("q_") + g[i], "Y", true, std::string("strong:ends_x") + g[i]);
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                continue;
            ob(std::string("q_") + g[i], std::string("q_") + g[j], false,
               std::string("strong:ends_x") + g[j]);
            ob(std::string("q_") + g[i], std::string("p_") + g[j], false, "", empty);
        }
    }
    FactObligation yi;
    yi.src = "Y";
    yi.dst = "p_a";
    yi.final_anchor = true;
    yi.exclude_anchors_inside = true;
    yi.target = "strong:ends_y";
    s.obligations.push_back(yi);
    return s;
}

} // namespace

FactSuite zoo_fact_suite(const std::string& key) {
    if (key == "amain")
        return suite_amain();
    if (key == "astrong")
        return suite_astrong();
    if (key == "aweak")
        return suite_aweak();
    if (key == "dstrong")
        return suite_dstrong();
    throw std::invalid_argument("no fact suite for: " + key);
}

std::string fact_suite_to_json(const FactSuite& s) {
    ordered_json j;
    j["automaton"] = s.automaton_key;
    j["anchors"] = ordered_json::array();
    for (const auto& a : s.anchors)
        j["anchors"].push_back({{"src", a.src}, {"letter", a.letter}, {"dst", a.dst}});
    j["obligations"] = ordered_json::array();
    for (const auto& o : s.obligations) {
        ordered_json e;
        e["src"] = o.src;
        e["dst"] = o.dst;
        e["forbidden"] = o.forbidden;
        e["final_significant"] = o.final_significant;
        e["final_anchor"] = o.final_anchor;
        e["exclude_anchors_inside"] = o.exclude_anchors_inside;
        e["mode"] = o.mode == FactObligation::Mode::Subset ? "subset" : "empty";
        e["target_language"] = o.target;
        j["obligations"].push_back(e);
    }
    return j.dump(2);
}

FactSuite fact_suite_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    FactSuite s;
    s.automaton_key = j.value("automaton", "");
    for (const auto& a : j.at("anchors"))
        s.anchors.push_back({a.at("src"), a.at("letter"), a.at("dst")});
    for (const auto& e : j.at("obligations")) {
        FactObligation o;
        o.src = e.at("src");
        o.dst = e.at("dst");
        if (e.contains("forbidden"))
            o.forbidden = e.at("forbidden").get<std::vector<std::string>>();
        o.final_significant = e.value("final_significant", false);
        o.final_anchor = e.value("final_anchor", false);
        o.exclude_anchors_inside = e.value("exclude_anchors_inside", false);
        o.mode = e.value("mode", "subset") == std::string("empty")
                     ? FactObligation::Mode::Empty
                     : FactObligation::Mode::Subset;
        o.target = e.value("target_language", "");
        s.obligations.push_back(std::move(o));
    }
    return s;
}

} // namespace owb
