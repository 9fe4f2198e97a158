#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "taquin/numbering.hpp"
#include "taquin/poset.hpp"

namespace taquin {

// Bubble identities. Test bubbles A and B come from the two-sided test
// numberings; indexed bubbles are the ordinary green chain G_1 -> G_2 -> ...;
// leader bubbles only appear inside the simultaneity engine.
struct BubbleId {
    int code = 0;  // 1 = A, 2 = B, 2+i = G_i, 1000+m = L_m

    static BubbleId test_a() { return {1}; }
    static BubbleId test_b() { return {2}; }
    static BubbleId indexed(int i) { return {2 + i}; }
    static BubbleId leader(int m) { return {1000 + m}; }

    bool is_test_a() const { return code == 1; }
    bool is_test_b() const { return code == 2; }
    bool is_indexed() const { return code > 2 && code < 1000; }
    bool is_leader() const { return code >= 1000; }
    int index() const { return is_indexed() ? code - 2 : (is_leader() ? code - 1000 : 0); }

    std::string name() const {
        if (is_test_a()) return "A";
        if (is_test_b()) return "B";
        if (is_leader()) return "L" + std::to_string(index());
        return "G" + std::to_string(index());
    }
    friend bool operator==(BubbleId a, BubbleId b) { return a.code == b.code; }
};

// Bi-numbering of a poset: green bubbles plus red labels on disjoint domains.
// Plain form (whole poset covered, indexed bubbles only) feeds the emptying
// operator; test form (domain an ideal, bubbles A and B present) feeds the
// test emptyings.
struct BiNumbering {
    std::vector<int> green;  // bubble code per element, 0 = none
    Numbering red;
    bool test_form = false;

    ElemSet green_domain() const {
        ElemSet s;
        for (int e = 0; e < (int)green.size(); ++e)
            if (green[e]) s.add(e);
        return s;
    }
    int bubble_count() const {
        int c = 0;
        for (int g : green)
            if (g) ++c;
        return c;
    }
    int indexed_count() const {
        int c = 0;
        for (int g : green)
            if (g > 2) ++c;
        return c;
    }
};

namespace detail {

inline void check_green_order(const Poset& p, const BiNumbering& bn) {
    // quasi-order on bubbles: A ~ B below every G_i, G_i < G_j for i < j
    auto level = [](int code) { return code <= 2 ? 0 : code - 2; };
    for (int a = 0; a < p.n; ++a) {
        if (!bn.green[a]) continue;
        for (ElemSet it = ElemSet(p.up[a]) - ElemSet::single(a); !it.empty();) {
            int b = it.pop();
            if (!bn.green[b]) continue;
            bool ok;
            if (bn.green[a] <= 2 && bn.green[b] <= 2)
                ok = true;  // A and B are mutually comparable both ways
            else
                ok = level(bn.green[a]) < level(bn.green[b]) ||
                     (bn.green[a] <= 2 && bn.green[b] > 2);
            require(ok, errc::malformed_binumbering,
                    "green numbering is not order-preserving at " + std::to_string(a) + " < " +
                        std::to_string(b));
        }
    }
}

}  // namespace detail

// green maps element -> bubble; indexed bubbles must be 1..g contiguous.
inline BiNumbering make_plain_binumbering(const Poset& p,
                                          const std::vector<std::pair<int, BubbleId>>& green,
                                          const Numbering& red) {
    BiNumbering bn;
    bn.green.assign(p.n, 0);
    bn.red = red;
    bn.test_form = false;
    for (auto [e, b] : green) {
        require(e >= 0 && e < p.n && bn.green[e] == 0, errc::malformed_binumbering,
                "bad or repeated green element");
        require(b.is_indexed(), errc::malformed_binumbering,
                "plain bi-numbering takes indexed bubbles only");
        bn.green[e] = b.code;
    }
    ElemSet gd = bn.green_domain();
    require((gd & red.domain).empty(), errc::malformed_binumbering,
            "green and red domains overlap");
    require((gd | red.domain) == p.all(), errc::malformed_binumbering,
            "plain bi-numbering must cover the whole poset");
    // indexed bubbles contiguous from 1
    std::vector<int> seen;
    for (int g : bn.green)
        if (g) seen.push_back(g - 2);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < (int)seen.size(); ++i)
        require(seen[i] == i + 1, errc::malformed_binumbering,
                "indexed bubbles must be numbered 1..g");
    detail::check_green_order(p, bn);
    return bn;
}

inline BiNumbering make_test_binumbering(const Poset& p,
                                         const std::vector<std::pair<int, BubbleId>>& green,
                                         const Numbering& red) {
    BiNumbering bn;
    bn.green.assign(p.n, 0);
    bn.red = red;
    bn.test_form = true;
    bool has_a = false, has_b = false;
    for (auto [e, b] : green) {
        require(e >= 0 && e < p.n && bn.green[e] == 0, errc::malformed_binumbering,
                "bad or repeated green element");
        require(!b.is_leader(), errc::malformed_binumbering, "leader bubbles are engine-internal");
        if (b.is_test_a()) has_a = true;
        if (b.is_test_b()) has_b = true;
        bn.green[e] = b.code;
    }
    require(has_a && has_b, errc::malformed_binumbering,
            "test bi-numbering needs both test bubbles");
    ElemSet gd = bn.green_domain();
    require((gd & red.domain).empty(), errc::malformed_binumbering,
            "green and red domains overlap");
    require(is_ideal(p, gd | red.domain), errc::malformed_binumbering,
            "green and red domains must union to an ideal");
    std::vector<int> seen;
    for (int g : bn.green)
        if (g > 2) seen.push_back(g - 2);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < (int)seen.size(); ++i)
        require(seen[i] == i + 1, errc::malformed_binumbering,
                "indexed bubbles must be numbered 1..n");
    detail::check_green_order(p, bn);
    return bn;
}

struct SwapRec {
    int bubble;  // bubble code
    int from, to;
    int label;  // rank that moved up from `to` to `from`
};

// Mid-emptying placement of bubbles and labels with per-bubble path
// bookkeeping. Snapshots are plain values; cloning one to probe a
// hypothetical slide is cheap.
struct Snapshot {
    const Poset* p = nullptr;
    std::vector<int> cell;        // >0 label rank, <0 -bubble code, 0 empty
    std::vector<int> watermark;   // last label seen per element; labels must shrink
    std::vector<std::pair<int, std::vector<int>>> trails;  // bubble code -> occupied cells
    std::vector<SwapRec> history;

    int bubble_pos(int code) const {
        for (int e = 0; e < p->n; ++e)
            if (cell[e] == -code) return e;
        return -1;
    }
    int label_at(int e) const { return cell[e] > 0 ? cell[e] : 0; }

    std::vector<int>* trail(int code) {
        for (auto& t : trails)
            if (t.first == code) return &t.second;
        return nullptr;
    }
    const std::vector<int>* trail(int code) const {
        for (auto& t : trails)
            if (t.first == code) return &t.second;
        return nullptr;
    }
    std::vector<int>& trail_or_start(int code, int start) {
        if (auto* t = trail(code)) return *t;
        trails.emplace_back(code, std::vector<int>{start});
        return trails.back().second;
    }

    // One move of the named bubble: swap with the largest label it covers.
    // Returns false when the bubble covers no label (a fixpoint).
    bool move_once_inplace(int code) {
        int e = bubble_pos(code);
        require(e >= 0, errc::unknown_bubble, "bubble not present in snapshot");
        int best = -1, best_label = 0;
        for (ElemSet it = p->covered_by(e); !it.empty();) {
            int d = it.pop();
            if (cell[d] > best_label) {
                best_label = cell[d];
                best = d;
            }
        }
        if (best < 0) return false;
        cell[e] = best_label;
        cell[best] = -code;
        require(best_label < watermark[e], errc::engine_invariant,
                "label increased at a fixed location");
        watermark[e] = best_label;
        trail_or_start(code, e).push_back(best);
        history.push_back({code, e, best, best_label});
        return true;
    }

    void slide_out_inplace(int code) {
        trail_or_start(code, bubble_pos(code));
        while (move_once_inplace(code)) {
        }
    }

    // label ranks present, as a sorted list (for conservation checks)
    std::vector<int> label_multiset() const {
        std::vector<int> out;
        for (int v : cell)
            if (v > 0) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline Snapshot make_snapshot(const Poset& p, const BiNumbering& bn) {
    Snapshot s;
    s.p = &p;
    s.cell.assign(p.n, 0);
    s.watermark.assign(p.n, INT_MAX);
    for (int e = 0; e < p.n; ++e) {
        if (bn.green[e]) s.cell[e] = -bn.green[e];
        if (bn.red.rank[e]) {
            s.cell[e] = bn.red.rank[e];
            s.watermark[e] = bn.red.rank[e];
        }
    }
    return s;
}

// Value-style operators per the public contract; the engine uses the
// *_inplace members directly.

inline Snapshot move_once(Snapshot s, BubbleId b) {
    int e = s.bubble_pos(b.code);
    require(e >= 0, errc::unknown_bubble, "bubble not present in snapshot");
    s.move_once_inplace(b.code);
    return s;
}

inline Snapshot slide_out(Snapshot s, BubbleId b) {
    require(s.bubble_pos(b.code) >= 0, errc::unknown_bubble, "bubble not present in snapshot");
    s.slide_out_inplace(b.code);
    return s;
}

inline std::vector<int> path(const Snapshot& s, BubbleId b) {
    const auto* t = s.trail(b.code);
    require(t != nullptr, errc::unknown_bubble, "bubble was never slid in this snapshot");
    return *t;
}

inline Numbering red_part(const Snapshot& s) {
    Numbering nb;
    nb.rank.assign(s.p->n, 0);
    for (int e = 0; e < s.p->n; ++e)
        if (s.cell[e] > 0) {
            nb.domain.add(e);
            nb.rank[e] = s.cell[e];
        }
    return nb;
}

namespace detail {

inline void check_conserved(const Snapshot& s, const std::vector<int>& before) {
    require(s.label_multiset() == before, errc::engine_invariant,
            "red label multiset was not conserved");
}

}  // namespace detail

// Emptying operator: slide the indexed bubbles in increasing order.
inline Snapshot empty(const Poset& p, const BiNumbering& bn) {
    require(!bn.test_form, errc::malformed_binumbering, "empty() takes the plain form");
    Snapshot s = make_snapshot(p, bn);
    auto before = s.label_multiset();
    int g = bn.bubble_count();
    for (int i = 1; i <= g; ++i) s.slide_out_inplace(BubbleId::indexed(i).code);
    detail::check_conserved(s, before);
    return s;
}

enum class test_order { BA, AB };

// Test emptyings J_BA = S_n ... S_1 S_B S_A and J_AB = S_n ... S_1 S_A S_B.
// Composition applies rightmost first, so BA slides test bubble A out first.
inline Snapshot test_empty(const Poset& p, const BiNumbering& bn, test_order order) {
    require(bn.test_form, errc::malformed_binumbering, "test_empty() takes the test form");
    Snapshot s = make_snapshot(p, bn);
    auto before = s.label_multiset();
    if (order == test_order::BA) {
        s.slide_out_inplace(BubbleId::test_a().code);
        s.slide_out_inplace(BubbleId::test_b().code);
    } else {
        s.slide_out_inplace(BubbleId::test_b().code);
        s.slide_out_inplace(BubbleId::test_a().code);
    }
    int g = bn.indexed_count();
    for (int i = 1; i <= g; ++i) s.slide_out_inplace(BubbleId::indexed(i).code);
    detail::check_conserved(s, before);
    return s;
}

}  // namespace taquin
