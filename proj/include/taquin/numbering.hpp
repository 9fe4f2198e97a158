#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <string>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

// Order-preserving bijection from a subset of P onto ranks 1..|domain|.
struct Numbering {
    ElemSet domain;
    std::vector<int> rank;  // size n; 0 outside the domain

    int size() const { return domain.count(); }
    int at(int e) const { return rank[e]; }

    friend bool operator==(const Numbering& a, const Numbering& b) {
        return a.domain == b.domain && a.rank == b.rank;
    }
};

inline Numbering make_numbering(const Poset& p, const std::vector<std::pair<int, int>>& elem_rank) {
    Numbering nb;
    nb.rank.assign(p.n, 0);
    int d = (int)elem_rank.size();
    std::vector<bool> used(d + 1, false);
    for (auto [e, r] : elem_rank) {
        require(e >= 0 && e < p.n, errc::bad_input, "numbering references unknown element");
        require(r >= 1 && r <= d && !used[r], errc::bad_input,
                "numbering ranks must be a bijection onto 1..|domain|");
        require(!nb.domain.has(e), errc::bad_input, "element numbered twice");
        used[r] = true;
        nb.domain.add(e);
        nb.rank[e] = r;
    }
    for (ElemSet it = nb.domain; !it.empty();) {
        int a = it.pop();
        for (ElemSet jt = ElemSet(p.up[a]) & nb.domain; !jt.empty();) {
            int b = jt.pop();
            require(nb.rank[a] <= nb.rank[b], errc::bad_input,
                    "numbering is not order-preserving at elements " + std::to_string(a) +
                        "," + std::to_string(b));
        }
    }
    return nb;
}

// Enumerates the linear extensions of the subposet induced on `domain`,
// lexicographic on the sequence of chosen minimal elements. The callback gets
// the elements in rank order (position i holds rank i+1) and returns false to
// stop early. Returns false if the walk was stopped.
template <class F>
bool for_each_extension(const Poset& p, ElemSet domain, F&& visit) {
    std::vector<int> seq;
    seq.reserve(domain.count());
    ElemSet rest = domain;
    auto rec = [&](auto&& self) -> bool {
        if (rest.empty()) return visit(std::as_const(seq));
        for (ElemSet it = p.minimal_in(rest); !it.empty();) {
            int e = it.pop();
            rest.remove(e);
            seq.push_back(e);
            bool go = self(self);
            seq.pop_back();
            rest.add(e);
            if (!go) return false;
        }
        return true;
    };
    return rec(rec);
}

template <class F>
bool for_each_numbering(const Poset& p, ElemSet domain, F&& visit) {
    return for_each_extension(p, domain, [&](const std::vector<int>& seq) {
        Numbering nb;
        nb.domain = domain;
        nb.rank.assign(p.n, 0);
        for (int i = 0; i < (int)seq.size(); ++i) nb.rank[seq[i]] = i + 1;
        return visit(std::as_const(nb));
    });
}

// Linear extension count over the lattice of ideals. Accumulates in 128 bits
// and reports overflow past the 64-bit range.
inline uint64_t linear_extensions_count(const Poset& p) {
    auto ids = ideals(p);  // sorted by size, so predecessors come first
    std::map<uint64_t, unsigned __int128> f;
    f[0] = 1;
    for (ElemSet i : ids) {
        if (i.empty()) continue;
        unsigned __int128 s = 0;
        for (ElemSet it = p.maximal_in(i); !it.empty();) {
            int e = it.pop();
            s += f[(i - ElemSet::single(e)).bits];
        }
        require(s <= (unsigned __int128)UINT64_MAX, errc::overflow,
                "linear extension count exceeds 64 bits");
        f[i.bits] = s;
    }
    return (uint64_t)f[p.all().bits];
}

}  // namespace taquin
