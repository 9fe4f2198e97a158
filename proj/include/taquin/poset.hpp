#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "taquin/elem_set.hpp"
#include "taquin/errors.hpp"

namespace taquin {

constexpr int kMaxElements = 64;

enum class cover_mode {
    strict,   // reject redundant cover pairs
    lenient,  // drop them and remember that we did
};

// Finite poset on elements 0..n-1. `covers` holds pairs (lo, hi) meaning
// lo is covered by hi; it is always a transitive reduction. `up[e]` / `down[e]`
// are the reflexive up-set and down-set of e as bit masks.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;  // sorted lexicographically
    std::vector<uint64_t> up_cov, down_cov;   // cover adjacency
    std::vector<uint64_t> up, down;           // reflexive transitive closure
    bool input_was_reduced = false;           // lenient mode dropped edges

    bool leq(int a, int b) const { return up[a] >> b & 1; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }

    ElemSet up_set(int e) const { return ElemSet(up[e]); }
    ElemSet down_set(int e) const { return ElemSet(down[e]); }
    ElemSet covers_of(int e) const { return ElemSet(up_cov[e]); }    // elements covering e
    ElemSet covered_by(int e) const { return ElemSet(down_cov[e]); } // elements e covers

    ElemSet all() const { return ElemSet::full(n); }

    ElemSet maximal_elements() const {
        ElemSet m;
        for (int e = 0; e < n; ++e)
            if (up[e] == (uint64_t(1) << e)) m.add(e);
        return m;
    }
    ElemSet minimal_elements() const {
        ElemSet m;
        for (int e = 0; e < n; ++e)
            if (down[e] == (uint64_t(1) << e)) m.add(e);
        return m;
    }
    // minimal elements of a subset under the induced order
    ElemSet minimal_in(ElemSet s) const {
        ElemSet m;
        for (ElemSet it = s; !it.empty();) {
            int e = it.pop();
            if (((ElemSet(down[e]) & s) - ElemSet::single(e)).empty()) m.add(e);
        }
        return m;
    }
    ElemSet maximal_in(ElemSet s) const {
        ElemSet m;
        for (ElemSet it = s; !it.empty();) {
            int e = it.pop();
            if (((ElemSet(up[e]) & s) - ElemSet::single(e)).empty()) m.add(e);
        }
        return m;
    }
};

namespace detail {

inline void compute_closure(Poset& p) {
    // topological order by repeatedly taking cover-minimal elements
    std::vector<int> indeg(p.n, 0);
    for (int e = 0; e < p.n; ++e) indeg[e] = std::popcount(p.down_cov[e]);
    std::vector<int> order;
    order.reserve(p.n);
    ElemSet ready;
    for (int e = 0; e < p.n; ++e)
        if (indeg[e] == 0) ready.add(e);
    while (!ready.empty()) {
        int e = ready.pop();
        order.push_back(e);
        for (ElemSet it = ElemSet(p.up_cov[e]); !it.empty();)
            if (int f = it.pop(); --indeg[f] == 0) ready.add(f);
    }
    require((int)order.size() == p.n, errc::cycle_detected, "cover relation contains a cycle");

    p.up.assign(p.n, 0);
    p.down.assign(p.n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int e = *it;
        p.up[e] = uint64_t(1) << e;
        for (ElemSet c = ElemSet(p.up_cov[e]); !c.empty();) p.up[e] |= p.up[c.pop()];
    }
    for (int e : order) {
        p.down[e] = uint64_t(1) << e;
        for (ElemSet c = ElemSet(p.down_cov[e]); !c.empty();) p.down[e] |= p.down[c.pop()];
    }
}

}  // namespace detail

inline Poset from_covers(int n, std::vector<std::pair<int, int>> covers,
                         cover_mode mode = cover_mode::strict) {
    require(n >= 0 && n <= kMaxElements, errc::size_limit_exceeded,
            "element count must be in 0..64, got " + std::to_string(n));
    Poset p;
    p.n = n;
    p.up_cov.assign(n, 0);
    p.down_cov.assign(n, 0);

    std::sort(covers.begin(), covers.end());
    for (size_t i = 0; i < covers.size(); ++i) {
        auto [lo, hi] = covers[i];
        require(lo >= 0 && lo < n && hi >= 0 && hi < n, errc::bad_input,
                "cover pair references element outside 0..n-1");
        require(lo != hi, errc::cycle_detected, "self-loop in cover list");
        if (i > 0 && covers[i] == covers[i - 1]) {
            require(mode == cover_mode::lenient, errc::redundant_cover,
                    "duplicate cover pair");
            p.input_was_reduced = true;
            continue;
        }
        p.up_cov[lo] |= uint64_t(1) << hi;
        p.down_cov[hi] |= uint64_t(1) << lo;
    }
    detail::compute_closure(p);

    // a cover pair (a,b) is redundant when some c lies strictly between
    for (auto [lo, hi] : covers) {
        uint64_t between = p.up[lo] & p.down[hi] & ~(uint64_t(1) << lo) & ~(uint64_t(1) << hi);
        if (between != 0) {
            require(mode == cover_mode::lenient, errc::redundant_cover,
                    "cover pair (" + std::to_string(lo) + "," + std::to_string(hi) +
                        ") is implied by transitivity");
            p.input_was_reduced = true;
            p.up_cov[lo] &= ~(uint64_t(1) << hi);
            p.down_cov[hi] &= ~(uint64_t(1) << lo);
        }
    }
    p.covers.clear();
    for (int lo = 0; lo < n; ++lo)
        for (ElemSet it = ElemSet(p.up_cov[lo]); !it.empty();) p.covers.emplace_back(lo, it.pop());
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

inline bool is_connected(const Poset& p) {
    if (p.n <= 1) return true;
    ElemSet seen = ElemSet::single(0);
    ElemSet fringe = seen;
    while (!fringe.empty()) {
        int e = fringe.pop();
        ElemSet nb = (p.covers_of(e) | p.covered_by(e)) - seen;
        seen |= nb;
        fringe |= nb;
    }
    return seen == p.all();
}

inline bool has_unique_max(const Poset& p) { return p.maximal_elements().count() == 1; }

inline int unique_max(const Poset& p) {
    ElemSet m = p.maximal_elements();
    require(m.count() == 1, errc::no_unique_max, "poset has no unique maximal element");
    return m.first();
}

inline bool is_ideal(const Poset& p, ElemSet s) {
    for (ElemSet it = s; !it.empty();) {
        int e = it.pop();
        if (!(ElemSet(p.down[e]).subset_of(s))) return false;
    }
    return true;
}

inline bool is_filter(const Poset& p, ElemSet s) {
    for (ElemSet it = s; !it.empty();) {
        int e = it.pop();
        if (!(ElemSet(p.up[e]).subset_of(s))) return false;
    }
    return true;
}

// All ideals, ordered by (size, bit pattern). Includes the empty set and P.
inline std::vector<ElemSet> ideals(const Poset& p) {
    std::vector<ElemSet> out{ElemSet::none()};
    // grow ideals one addable element at a time; dedup with a sorted probe set
    std::vector<uint64_t> seen;
    seen.reserve(64);
    seen.push_back(0);
    auto known = [&](uint64_t b) {
        return std::binary_search(seen.begin(), seen.end(), b);
    };
    for (size_t h = 0; h < out.size(); ++h) {
        ElemSet i = out[h];
        for (int e = 0; e < p.n; ++e) {
            if (i.has(e)) continue;
            if (!((ElemSet(p.down[e]) - ElemSet::single(e)).subset_of(i))) continue;
            ElemSet j = i | ElemSet::single(e);
            if (!known(j.bits)) {
                seen.insert(std::lower_bound(seen.begin(), seen.end(), j.bits), j.bits);
                out.push_back(j);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](ElemSet a, ElemSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits < b.bits;
    });
    return out;
}

inline std::vector<ElemSet> filters(const Poset& p) {
    auto ids = ideals(p);
    std::vector<ElemSet> out;
    out.reserve(ids.size());
    for (ElemSet i : ids) out.push_back(p.all() - i);
    std::sort(out.begin(), out.end(), [](ElemSet a, ElemSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits < b.bits;
    });
    return out;
}

inline ElemSet interval(const Poset& p, int x, int y) {
    require(p.leq(x, y), errc::not_comparable,
            "interval(" + std::to_string(x) + "," + std::to_string(y) + "): x is not <= y");
    return ElemSet(p.up[x] & p.down[y]);
}

inline Poset order_dual(const Poset& p) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(p.covers.size());
    for (auto [lo, hi] : p.covers) rev.emplace_back(hi, lo);
    return from_covers(p.n, std::move(rev));
}

// Induced subposet on s; new elements are 0..|s|-1 in increasing order of the
// old indices. old_ids, when given, receives the old index of each new element.
inline Poset restrict(const Poset& p, ElemSet s, std::vector<int>* old_ids = nullptr) {
    std::vector<int> olds;
    for (ElemSet it = s; !it.empty();) olds.push_back(it.pop());
    int m = (int)olds.size();
    std::vector<std::pair<int, int>> cov;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !p.lt(olds[a], olds[b])) continue;
            uint64_t between = p.up[olds[a]] & p.down[olds[b]] & s.bits &
                               ~(uint64_t(1) << olds[a]) & ~(uint64_t(1) << olds[b]);
            if (between == 0) cov.emplace_back(a, b);
        }
    if (old_ids) *old_ids = olds;
    return from_covers(m, std::move(cov));
}

}  // namespace taquin
