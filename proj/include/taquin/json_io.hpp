#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "taquin/poset.hpp"
#include "taquin/sliding.hpp"

namespace taquin {

// Poset interchange format: {"n": <int>, "covers": [[lo,hi],...]} with lo
// covered by hi; covers are sorted lexicographically on write.

inline nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["n"] = p.n;
    auto covers = nlohmann::json::array();
    for (auto [lo, hi] : p.covers) covers.push_back({lo, hi});
    j["covers"] = covers;
    return j;
}

inline Poset poset_from_json(const nlohmann::json& j, cover_mode mode = cover_mode::strict) {
    require(j.is_object() && j.contains("n") && j.contains("covers"), errc::bad_input,
            "poset json needs fields n and covers");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : j.at("covers")) {
        require(e.is_array() && e.size() == 2, errc::bad_input, "cover entries are [lo,hi] pairs");
        covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return from_covers(n, std::move(covers), mode);
}

inline void write_poset_file(const std::string& path, const Poset& p) {
    std::ofstream out(path);
    require(out.good(), errc::bad_input, "cannot write " + path);
    out << poset_to_json(p).dump(2) << "\n";
}

inline Poset read_poset_file(const std::string& path, cover_mode mode = cover_mode::strict) {
    std::ifstream in(path);
    require(in.good(), errc::bad_input, "cannot read " + path);
    nlohmann::json j;
    in >> j;
    return poset_from_json(j, mode);
}

// Bi-numbering format: {"green": {"<elem>": "A"|"B"|<int>}, "red": {"<elem>": <int>}}.
// The test form is detected by the presence of "A"/"B" bubbles.

inline BiNumbering binumbering_from_json(const Poset& p, const nlohmann::json& j) {
    require(j.is_object() && j.contains("green") && j.contains("red"), errc::bad_input,
            "bi-numbering json needs fields green and red");
    std::vector<std::pair<int, BubbleId>> green;
    bool test_form = false;
    for (auto it = j.at("green").begin(); it != j.at("green").end(); ++it) {
        int e = std::stoi(it.key());
        if (it.value().is_string()) {
            std::string s = it.value().get<std::string>();
            require(s == "A" || s == "B", errc::bad_input, "green bubble must be A, B or an index");
            green.emplace_back(e, s == "A" ? BubbleId::test_a() : BubbleId::test_b());
            test_form = true;
        } else {
            green.emplace_back(e, BubbleId::indexed(it.value().get<int>()));
        }
    }
    std::vector<std::pair<int, int>> red;
    for (auto it = j.at("red").begin(); it != j.at("red").end(); ++it)
        red.emplace_back(std::stoi(it.key()), it.value().get<int>());
    Numbering rho = make_numbering(p, red);
    return test_form ? make_test_binumbering(p, green, rho)
                     : make_plain_binumbering(p, green, rho);
}

inline nlohmann::json numbering_to_json(const Numbering& nb) {
    nlohmann::json j = nlohmann::json::object();
    for (int e = 0; e < (int)nb.rank.size(); ++e)
        if (nb.rank[e]) j[std::to_string(e)] = nb.rank[e];
    return j;
}

inline BiNumbering read_binumbering_file(const std::string& path, const Poset& p) {
    std::ifstream in(path);
    require(in.good(), errc::bad_input, "cannot read " + path);
    nlohmann::json j;
    in >> j;
    return binumbering_from_json(p, j);
}

}  // namespace taquin
