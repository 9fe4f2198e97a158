#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "taquin/families.hpp"
#include "taquin/sliding.hpp"

using namespace taquin;

namespace {

// diamond 0 < {1,2} < 3
Poset diamond() { return delta(1, 1); }

Numbering reds(const Poset& p, std::vector<std::pair<int, int>> er) {
    return make_numbering(p, er);
}

}  // namespace

TEST_CASE("move_once follows the largest covered label") {
    Poset d = diamond();
    // bubbles at bottom and top, labels on the middles
    BiNumbering bn = make_plain_binumbering(
        d, {{0, BubbleId::indexed(1)}, {3, BubbleId::indexed(2)}},
        reds(d, {{1, 1}, {2, 2}}));
    Snapshot s = make_snapshot(d, bn);
    Snapshot t = move_once(s, BubbleId::indexed(2));
    CHECK(t.bubble_pos(BubbleId::indexed(2).code) == 2);  // swapped with R2
    CHECK(t.label_at(3) == 2);

    // a bubble covering only bubbles stays put
    Snapshot u = move_once(t, BubbleId::indexed(2));
    CHECK(u.bubble_pos(BubbleId::indexed(2).code) == 2);  // 0 holds a bubble

    // a bubble at a minimal element stays put
    Snapshot v = move_once(s, BubbleId::indexed(1));
    CHECK(v.bubble_pos(BubbleId::indexed(1).code) == 0);

    CHECK_THROWS_AS(move_once(s, BubbleId::indexed(9)), error);
}

TEST_CASE("slide_out records the path; frozen diamond run") {
    Poset d = diamond();
    // labels w=R1, x=R2, y=R3; bubble G1 at the top z
    BiNumbering bn = make_plain_binumbering(d, {{3, BubbleId::indexed(1)}},
                                            reds(d, {{0, 1}, {1, 2}, {2, 3}}));
    Snapshot s = slide_out(make_snapshot(d, bn), BubbleId::indexed(1));
    CHECK(path(s, BubbleId::indexed(1)) == std::vector<int>{3, 2, 0});
    CHECK(s.label_at(3) == 3);
    CHECK(s.label_at(2) == 1);
    CHECK(s.label_at(1) == 2);

    // a bubble with nothing below it has a one-element path
    BiNumbering bn2 = make_plain_binumbering(
        d,
        {{0, BubbleId::indexed(1)}, {1, BubbleId::indexed(2)}, {2, BubbleId::indexed(3)},
         {3, BubbleId::indexed(4)}},
        reds(d, {}));
    Snapshot s2 = slide_out(make_snapshot(d, bn2), BubbleId::indexed(1));
    CHECK(path(s2, BubbleId::indexed(1)) == std::vector<int>{0});

    // test bubble from x0 of delta(3,3) walks the whole lower chain
    Poset d33 = delta(3, 3);
    BiNumbering t = make_test_binumbering(
        d33, {{3, BubbleId::test_a()}, {4, BubbleId::test_b()}},
        reds(d33, {{0, 1}, {1, 2}, {2, 3}}));
    Snapshot s3 = slide_out(make_snapshot(d33, t), BubbleId::test_a());
    CHECK(path(s3, BubbleId::test_a()) == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("empty slides bubbles in index order") {
    Poset d = diamond();
    BiNumbering bn = make_plain_binumbering(d, {{3, BubbleId::indexed(1)}},
                                            reds(d, {{0, 1}, {1, 2}, {2, 3}}));
    Snapshot s = empty(d, bn);
    Numbering r = red_part(s);
    CHECK(r.at(3) == 3);
    CHECK(r.at(2) == 1);
    CHECK(r.at(1) == 2);
    CHECK(r.at(0) == 0);

    // no bubbles: the reds stay put
    BiNumbering none = make_plain_binumbering(
        d, {}, reds(d, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK(red_part(empty(d, none)).rank == std::vector<int>{1, 2, 3, 4});

    // chain with the top half green: reds shift up
    Poset c4 = from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
    BiNumbering half = make_plain_binumbering(
        c4, {{2, BubbleId::indexed(1)}, {3, BubbleId::indexed(2)}}, reds(c4, {{0, 1}, {1, 2}}));
    Numbering r2 = red_part(empty(c4, half));
    CHECK(r2.at(2) == 1);
    CHECK(r2.at(3) == 2);
}

TEST_CASE("test emptyings: the diamond mini-challenge") {
    Poset d = diamond();
    // red R1 at the bottom w, testers on the middles, no repair bubble:
    // J_BA (A slid first) leaves R1 on A's side, J_AB on B's side
    BiNumbering bn = make_test_binumbering(
        d, {{1, BubbleId::test_a()}, {2, BubbleId::test_b()}}, reds(d, {{0, 1}}));
    Numbering ba = red_part(test_empty(d, bn, test_order::BA));
    Numbering ab = red_part(test_empty(d, bn, test_order::AB));
    CHECK(ba.at(1) == 1);
    CHECK(ab.at(2) == 1);
    CHECK_FALSE(ba == ab);

    // adding the repair bubble at the top makes the two orders agree
    BiNumbering full = make_test_binumbering(
        d,
        {{1, BubbleId::test_a()}, {2, BubbleId::test_b()}, {3, BubbleId::indexed(1)}},
        reds(d, {{0, 1}}));
    Numbering ba2 = red_part(test_empty(d, full, test_order::BA));
    Numbering ab2 = red_part(test_empty(d, full, test_order::AB));
    CHECK(ba2 == ab2);
    CHECK(ba2.at(3) == 1);
}

TEST_CASE("test emptyings disagree on delta(3,2)") {
    Poset p = delta(3, 2);
    // rho forced on the lower chain a3,a2,a1 = 0,1,2
    BiNumbering bn = make_test_binumbering(
        p,
        {{3, BubbleId::test_a()},
         {4, BubbleId::test_b()},
         {5, BubbleId::indexed(1)},
         {6, BubbleId::indexed(2)}},
        reds(p, {{0, 1}, {1, 2}, {2, 3}}));
    Numbering ba = red_part(test_empty(p, bn, test_order::BA));
    Numbering ab = red_part(test_empty(p, bn, test_order::AB));
    CHECK(ba.at(6) == 3);
    CHECK(ba.at(5) == 2);
    CHECK(ba.at(3) == 1);  // R1 ends at x0 when A slides first
    CHECK(ab.at(6) == 3);
    CHECK(ab.at(5) == 2);
    CHECK(ab.at(4) == 1);  // and at y0 when B slides first
    CHECK_FALSE(ba == ab);
}

TEST_CASE("red_part basics") {
    Poset d = diamond();
    BiNumbering none = make_plain_binumbering(
        d,
        {{0, BubbleId::indexed(1)}, {1, BubbleId::indexed(2)}, {2, BubbleId::indexed(3)},
         {3, BubbleId::indexed(4)}},
        reds(d, {}));
    CHECK(red_part(empty(d, none)).domain.empty());
}

TEST_CASE("bi-numbering validation") {
    Poset d = diamond();
    // plain form must cover the poset
    CHECK_THROWS_AS(
        make_plain_binumbering(d, {{3, BubbleId::indexed(1)}}, reds(d, {{0, 1}})), error);
    // indexed bubbles contiguous from 1
    CHECK_THROWS_AS(make_plain_binumbering(d, {{3, BubbleId::indexed(2)}},
                                           reds(d, {{0, 1}, {1, 2}, {2, 3}})),
                    error);
    // test form: green and red must union to an ideal
    CHECK_THROWS_AS(make_test_binumbering(
                        d, {{1, BubbleId::test_a()}, {3, BubbleId::test_b()}}, reds(d, {})),
                    error);
    // test form: an indexed bubble below a test bubble is not order-preserving
    CHECK_THROWS_AS(
        make_test_binumbering(
            d,
            {{0, BubbleId::indexed(1)}, {1, BubbleId::test_a()}, {2, BubbleId::test_b()}},
            reds(d, {})),
        error);
    // but a test bubble above another test bubble is fine on a chain
    Poset c2 = from_covers(2, {{0, 1}});
    CHECK_NOTHROW(
        make_test_binumbering(c2, {{0, BubbleId::test_a()}, {1, BubbleId::test_b()}},
                              reds(c2, {})));
}

TEST_CASE("random emptyings agree with the brute-force simulator") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        Poset p = oracle::random_poset(3 + trial % 6, 0.4, rng);
        // random ideal as red domain, rest green
        auto ids = ideals(p);
        ElemSet i = ids[rng() % ids.size()];
        ElemSet f = p.all() - i;
        // random numbering of each part: take a random extension
        std::vector<std::vector<int>> iexts, fexts;
        for_each_extension(p, i, [&](const std::vector<int>& s) {
            iexts.push_back(s);
            return iexts.size() < 50;
        });
        for_each_extension(p, f, [&](const std::vector<int>& s) {
            fexts.push_back(s);
            return fexts.size() < 50;
        });
        std::vector<std::pair<int, int>> er;
        if (!iexts.empty()) {
            auto& seq = iexts[rng() % iexts.size()];
            for (int r = 0; r < (int)seq.size(); ++r) er.emplace_back(seq[r], r + 1);
        }
        std::vector<std::pair<int, BubbleId>> green;
        std::vector<int> cells(p.n, 0);
        for (auto [e, r] : er) cells[e] = r;
        if (!fexts.empty()) {
            auto& seq = fexts[rng() % fexts.size()];
            for (int g = 0; g < (int)seq.size(); ++g) {
                green.emplace_back(seq[g], BubbleId::indexed(g + 1));
                cells[seq[g]] = -(g + 1);
            }
        }
        BiNumbering bn = make_plain_binumbering(p, green, make_numbering(p, er));
        Snapshot s = empty(p, bn);
        // oracle: same slides on the plain array
        for (int g = 1; g <= (int)green.size(); ++g) oracle::slideout_brute(p, cells, g);
        for (int e = 0; e < p.n; ++e) {
            int lib = s.cell[e] > 0 ? s.cell[e] : 0;
            int orc = cells[e] > 0 ? cells[e] : 0;
            CHECK(lib == orc);
        }
    }
}

TEST_CASE("determinism: identical inputs give identical histories") {
    Poset p = delta(2, 2);
    BiNumbering bn = make_test_binumbering(
        p,
        {{2, BubbleId::test_a()}, {3, BubbleId::test_b()}, {4, BubbleId::indexed(1)}},
        make_numbering(p, {{0, 1}, {1, 2}}));
    Snapshot a = test_empty(p, bn, test_order::BA);
    Snapshot b = test_empty(p, bn, test_order::BA);
    REQUIRE(a.history.size() == b.history.size());
    for (size_t i = 0; i < a.history.size(); ++i) {
        CHECK(a.history[i].bubble == b.history[i].bubble);
        CHECK(a.history[i].from == b.history[i].from);
        CHECK(a.history[i].to == b.history[i].to);
        CHECK(a.history[i].label == b.history[i].label);
    }
}
