#include <doctest.h>

#include "taquin/dcomplete.hpp"
#include "taquin/enumeration.hpp"
#include "taquin/families.hpp"

using namespace taquin;

namespace {

// diamond {w,x,y,z} with t above z and a pendant q below z only
Poset diamond_t_pendant() {
    return from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {5, 3}});
}

}  // namespace

TEST_CASE("interval detectors on the small fixtures") {
    Poset d = delta(1, 1);
    auto d3 = find_dk_intervals(d, 3);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].bottom == 0);
    CHECK(d3[0].top == 3);
    auto d3m = find_dk_minus_intervals(d, 3);
    REQUIRE(d3m.size() == 1);
    CHECK(d3m[0].bottom == 0);

    // delta(2,2) is its own d4 interval and carries one inner diamond
    auto d4 = find_dk_intervals(delta(2, 2), 4);
    REQUIRE(d4.size() == 1);
    CHECK(d4[0].members == ElemSet::full(6));
    CHECK(find_dk_intervals(delta(2, 2), 3).size() == 1);

    // delta(2,1) is a d4^- interval and completes nowhere
    Poset d21 = delta(2, 1);
    CHECK(find_dk_minus_intervals(d21, 4).size() == 1);
    CHECK(find_dk_intervals(d21, 4).empty());
}

TEST_CASE("axiom D2 catches the pendant fixture") {
    Poset p = diamond_t_pendant();
    Verdict v = check_axiom(p, axiom::D2);
    CHECK_FALSE(v.pass);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].k == 3);
    CHECK(v.witnesses[0].involved.has(5));
    CHECK_FALSE(is_dcomplete(p));
    CHECK_FALSE(is_d3_complete(p));
}

TEST_CASE("axiom D1 fails for delta(3,2) exactly at k=5") {
    Poset p = delta(3, 2);
    Verdict v = check_axiom(p, axiom::D1);
    CHECK_FALSE(v.pass);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].k == 5);
    CHECK(is_d3_complete(p));  // the failure is above k=3
}

TEST_CASE("axiom D3 catches overlapping intervals") {
    // x and y both cover two distinct bottoms w and w'
    Poset bow = from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Verdict v = check_axiom(bow, axiom::D3);
    CHECK_FALSE(v.pass);
    CHECK_FALSE(is_nonoverlapping(bow));
    CHECK(is_nonoverlapping(delta(1, 1)));
}

TEST_CASE("d-complete verdicts on the named families") {
    CHECK(is_dcomplete(shape({4, 2, 1})));
    CHECK(is_dcomplete(shape({3, 3})));
    CHECK(is_dcomplete(shifted_shape({4, 2, 1})));
    CHECK(is_dcomplete(rooted_tree({-1, 0, 0, 1, 1, 2})));
    for (int b = 0; b <= 4; ++b)
        for (int n = 0; n <= 4; ++n) CHECK(is_dcomplete(delta(b, n)) == (b <= n));
}

TEST_CASE("every filter of a d-complete poset is d-complete, n <= 7") {
    int dcomplete_seen = 0, filters_checked = 0;
    auto levels = enumerate_levels(7);
    for (int n = 1; n <= 7; ++n)
        for (const Poset& p : levels[n]) {
            if (!is_dcomplete(p)) continue;
            ++dcomplete_seen;
            for (ElemSet f : filters(p)) {
                if (f.empty()) continue;
                CHECK(is_dcomplete(restrict(p, f)));
                ++filters_checked;
            }
        }
    CHECK(dcomplete_seen > 100);
    CHECK(filters_checked > 1000);
}

TEST_CASE("shapes and shifted shapes with at most ten boxes are d-complete") {
    // all partitions with <= 10 boxes
    std::vector<std::vector<int>> parts;
    auto rec = [&](auto&& self, std::vector<int>& cur, int left, int maxpart) -> void {
        if (!cur.empty()) parts.push_back(cur);
        for (int next = std::min(left, maxpart); next >= 1; --next) {
            cur.push_back(next);
            self(self, cur, left - next, next);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(rec, cur, 10, 10);
    int shapes = 0, shifted = 0;
    for (const auto& lam : parts) {
        CHECK(is_dcomplete(shape(lam)));
        ++shapes;
        bool strict = true;
        for (size_t i = 1; i < lam.size(); ++i)
            if (lam[i] >= lam[i - 1]) strict = false;
        if (strict) {
            CHECK(is_dcomplete(shifted_shape(lam)));
            ++shifted;
        }
    }
    CHECK(shapes > 100);
    CHECK(shifted > 20);
}
