#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "taquin/numbering.hpp"
#include "taquin/poset.hpp"
#include "taquin/sliding.hpp"

namespace taquin {

struct CrucialPair {
    int x, y;  // x < y
};

// Incomparable x, y whose upper cover sets coincide and which share some
// strict lower bound.
inline std::vector<CrucialPair> crucial_pairs(const Poset& p) {
    std::vector<CrucialPair> out;
    for (int x = 0; x < p.n; ++x)
        for (int y = x + 1; y < p.n; ++y) {
            if (!p.incomparable(x, y)) continue;
            if (p.up_cov[x] != p.up_cov[y]) continue;
            ElemSet common_below =
                (ElemSet(p.down[x]) - ElemSet::single(x)) & (ElemSet(p.down[y]) - ElemSet::single(y));
            if (common_below.empty()) continue;
            out.push_back({x, y});
        }
    return out;
}

// A challenge: ideal I with a red numbering rho and a pair of distinct
// minimal elements of P - I.
struct Challenge {
    ElemSet ideal;
    Numbering rho;
    int x, y;
};

inline Challenge make_challenge(const Poset& p, ElemSet ideal, const Numbering& rho, int x, int y) {
    require(is_ideal(p, ideal), errc::bad_input, "challenge needs an ideal");
    require(rho.domain == ideal, errc::bad_input, "rho must number exactly the ideal");
    ElemSet mins = p.minimal_in(p.all() - ideal);
    require(x != y && mins.has(x) && mins.has(y), errc::bad_input,
            "challenge pair must be distinct minimal elements of the filter");
    return Challenge{ideal, rho, x, y};
}

// xy-test numbering of an ideal J of P - I: A at x, B at y, and the repair
// bubbles G_1..G_m on g[0..m-1] (an extension of J - {x,y}).
struct TestNumbering {
    int x, y;
    std::vector<int> g;

    ElemSet domain() const {
        ElemSet s = ElemSet::single(x) | ElemSet::single(y);
        for (int e : g) s.add(e);
        return s;
    }
};

inline BiNumbering to_binumbering(const Poset& p, const Challenge& c, const TestNumbering& t) {
    std::vector<std::pair<int, BubbleId>> green;
    green.emplace_back(t.x, BubbleId::test_a());
    green.emplace_back(t.y, BubbleId::test_b());
    for (int i = 0; i < (int)t.g.size(); ++i) green.emplace_back(t.g[i], BubbleId::indexed(i + 1));
    return make_test_binumbering(p, green, c.rho);
}

namespace detail {

// Path a test bubble would take if slid out from the given snapshot first.
inline std::vector<int> probe_path(const Snapshot& s, int code) {
    Snapshot c = s;
    int start = c.bubble_pos(code);
    require(start >= 0, errc::unknown_bubble, "probe: bubble not in snapshot");
    std::vector<int> out{start};
    while (c.move_once_inplace(code)) out.push_back(c.bubble_pos(code));
    return out;
}

inline bool paths_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (u == v) return false;
    return true;
}

// ideals of the filter P - I that contain both x and y, smallest first
inline std::vector<ElemSet> solution_ideals(const Poset& p, ElemSet filter, int x, int y) {
    std::vector<ElemSet> out;
    ElemSet seed = ElemSet::single(x) | ElemSet::single(y);
    std::vector<uint64_t> seen{seed.bits};
    out.push_back(seed);
    for (size_t h = 0; h < out.size(); ++h) {
        ElemSet j = out[h];
        for (ElemSet it = filter - j; !it.empty();) {
            int e = it.pop();
            if (!((ElemSet(p.down[e]) & filter) - ElemSet::single(e)).subset_of(j)) continue;
            ElemSet next = j | ElemSet::single(e);
            if (!std::binary_search(seen.begin(), seen.end(), next.bits)) {
                seen.insert(std::lower_bound(seen.begin(), seen.end(), next.bits), next.bits);
                out.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](ElemSet a, ElemSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits < b.bits;
    });
    return out;
}

}  // namespace detail

inline bool is_solution(const Poset& p, const Challenge& c, const TestNumbering& t) {
    BiNumbering bn = to_binumbering(p, c, t);
    return red_part(test_empty(p, bn, test_order::BA)) ==
           red_part(test_empty(p, bn, test_order::AB));
}

// Searches ideals J of P - I containing x and y by increasing size, and the
// xy-test numberings of each J in lexicographic order; returns the first
// solution. The J = {x,y} case goes through the disjoint-paths shortcut.
inline std::optional<TestNumbering> has_solution(const Poset& p, const Challenge& c) {
    ElemSet filter = p.all() - c.ideal;
    for (ElemSet j : detail::solution_ideals(p, filter, c.x, c.y)) {
        ElemSet rest = j - ElemSet::single(c.x) - ElemSet::single(c.y);
        if (rest.empty()) {
            TestNumbering t{c.x, c.y, {}};
            Snapshot s = make_snapshot(p, to_binumbering(p, c, t));
            auto ta = detail::probe_path(s, BubbleId::test_a().code);
            auto tb = detail::probe_path(s, BubbleId::test_b().code);
            if (detail::paths_disjoint(ta, tb)) return t;
            if (is_solution(p, c, t)) return t;
            continue;
        }
        std::optional<TestNumbering> found;
        for_each_extension(p, rest, [&](const std::vector<int>& seq) {
            TestNumbering t{c.x, c.y, seq};
            if (is_solution(p, c, t)) {
                found = t;
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    // an unsolvable challenge forces a common lower bound under the pair
    ElemSet common =
        (ElemSet(p.down[c.x]) - ElemSet::single(c.x)) & (ElemSet(p.down[c.y]) - ElemSet::single(c.y));
    require(!common.empty(), errc::engine_invariant,
            "challenge without solution but x and y have no common lower bound");
    return std::nullopt;
}

// Tier 1, the definition: every (I, rho) forces one red outcome across all
// numberings of P - I. Exponential; guarded by a size bound.
inline bool is_jdt_definition(const Poset& p, int max_n = 8) {
    require(p.n <= max_n, errc::size_limit_exceeded, "is_jdt_definition size bound exceeded");
    for (ElemSet i : ideals(p)) {
        ElemSet filter = p.all() - i;
        if (filter.count() <= 1) continue;
        bool ok = for_each_numbering(p, i, [&](const Numbering& rho) {
            bool first = true;
            Numbering ref;
            return for_each_numbering(p, filter, [&](const Numbering& gamma) {
                std::vector<std::pair<int, BubbleId>> green;
                for (ElemSet it = filter; !it.empty();) {
                    int e = it.pop();
                    green.emplace_back(e, BubbleId::indexed(gamma.rank[e]));
                }
                Numbering red = red_part(empty(p, make_plain_binumbering(p, green, rho)));
                if (first) {
                    ref = red;
                    first = false;
                    return true;
                }
                return red == ref;
            });
        });
        if (!ok) return false;
    }
    return true;
}

// Tier 2: every challenge has a solution.
inline bool is_jdt_challenges(const Poset& p, int max_n = 8) {
    require(p.n <= max_n, errc::size_limit_exceeded, "is_jdt_challenges size bound exceeded");
    for (ElemSet i : ideals(p)) {
        ElemSet mins = p.minimal_in(p.all() - i);
        if (mins.count() < 2) continue;
        bool ok = for_each_numbering(p, i, [&](const Numbering& rho) {
            for (ElemSet xt = mins; !xt.empty();) {
                int x = xt.pop();
                for (ElemSet yt = xt; !yt.empty();) {
                    int y = yt.pop();
                    if (!has_solution(p, Challenge{i, rho, x, y})) return false;
                }
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

// Tier 3, the production checker: every crucial challenge has a solution.
// The counterexample form reports the first unsolvable crucial challenge.
inline std::optional<Challenge> find_jdt_counterexample(const Poset& p) {
    std::optional<Challenge> bad;
    for (auto [x, y] : crucial_pairs(p)) {
        ElemSet ixy = p.all() - ElemSet(p.up[x] | p.up[y]);
        for_each_numbering(p, ixy, [&](const Numbering& rho) {
            Challenge c{ixy, rho, x, y};
            if (!has_solution(p, c)) {
                bad = c;
                return false;
            }
            return true;
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

inline bool is_jdt(const Poset& p) { return !find_jdt_counterexample(p).has_value(); }

// Organizational-chart formulation. `ext` assigns seniorities 1..n
// (an order extension); F is the upper echelon that departs. Returns the
// final seniority per element, 0 where a position ended vacant.
inline std::vector<int> simulate_departure(const Poset& p, const Numbering& ext, ElemSet f) {
    require(ext.domain == p.all(), errc::not_an_extension,
            "simulate_departure needs a numbering of the whole poset");
    require(is_filter(p, f), errc::not_a_filter, "departed set must be a filter");
    std::vector<int> val(p.n, 0);
    for (int e = 0; e < p.n; ++e)
        if (!f.has(e)) val[e] = ext.rank[e];
    std::vector<int> departed;
    for (ElemSet it = f; !it.empty();) departed.push_back(it.pop());
    std::sort(departed.begin(), departed.end(),
              [&](int a, int b) { return ext.rank[a] < ext.rank[b]; });
    for (int pos : departed) {
        // the position vacated by this employee is still vacant
        require(val[pos] == 0, errc::engine_invariant, "departed position was refilled");
        for (;;) {
            int best = -1, best_val = 0;
            for (ElemSet it = p.covered_by(pos); !it.empty();) {
                int d = it.pop();
                if (val[d] > best_val) {
                    best_val = val[d];
                    best = d;
                }
            }
            if (best < 0) break;
            val[pos] = best_val;
            val[best] = 0;
            pos = best;
        }
    }
    return val;
}

// Fair chart: for every upper echelon, extensions that agree on the survivors
// produce the same final survivor pattern.
inline bool is_fair_chart(const Poset& p, int max_n = 8) {
    require(p.n <= max_n, errc::size_limit_exceeded, "is_fair_chart size bound exceeded");
    for (ElemSet f : filters(p)) {
        if (f.empty()) continue;
        std::map<std::vector<int>, std::vector<int>> outcome;  // survivor pattern -> final
        bool ok = for_each_numbering(p, p.all(), [&](const Numbering& ext) {
            std::vector<int> survivors;
            for (int e = 0; e < p.n; ++e) survivors.push_back(f.has(e) ? 0 : ext.rank[e]);
            std::vector<int> fin = simulate_departure(p, ext, f);
            auto [it, fresh] = outcome.try_emplace(std::move(survivors), fin);
            return fresh || it->second == fin;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace taquin
