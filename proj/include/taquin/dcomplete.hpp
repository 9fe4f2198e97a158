#pragma once

#include <string>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

// Interval isomorphic to Delta_{k-2,k-2}; k = 3 is the diamond.
struct DkInterval {
    int k;
    int bottom, top;
    ElemSet members;
};

// For k = 3 a triple [w; x, y] with x, y covering w; for k >= 4 an interval
// [w, y] isomorphic to Delta_{k-2,k-3}.
struct DkMinusInterval {
    int k;
    int bottom;    // w
    int x = -1, y = -1;  // the k = 3 cover pair
    int top = -1;        // y, for k >= 4
    ElemSet members;
};

namespace detail {

// Structural test: does the interval `s` carry the double-tailed diamond
// order with a lower chain of `b` and an upper chain of `t` elements?
inline bool is_delta_interval(const Poset& p, ElemSet s, int b, int t) {
    if (s.count() != b + t + 2) return false;
    int x = -1, y = -1;
    for (ElemSet it = s; !it.empty();) {
        int e = it.pop();
        for (ElemSet jt = s; !jt.empty();) {
            int f = jt.pop();
            if (f <= e) continue;
            if (p.incomparable(e, f)) {
                if (x >= 0) return false;  // more than one incomparable pair
                x = e;
                y = f;
            }
        }
    }
    if (x < 0) return false;
    ElemSet below = ElemSet(p.down[x]) & s;
    below.remove(x);
    ElemSet below_y = ElemSet(p.down[y]) & s;
    below_y.remove(y);
    if (below != below_y || below.count() != b) return false;
    ElemSet above = ElemSet(p.up[x]) & s;
    above.remove(x);
    ElemSet above_y = ElemSet(p.up[y]) & s;
    above_y.remove(y);
    if (above != above_y || above.count() != t) return false;
    return (below | above | ElemSet::single(x) | ElemSet::single(y)) == s;
}

}  // namespace detail

inline std::vector<DkInterval> find_dk_intervals(const Poset& p, int k) {
    require(k >= 3, errc::bad_input, "d_k intervals need k >= 3");
    std::vector<DkInterval> out;
    for (int w = 0; w < p.n; ++w)
        for (ElemSet it = ElemSet(p.up[w]) - ElemSet::single(w); !it.empty();) {
            int z = it.pop();
            ElemSet s = ElemSet(p.up[w] & p.down[z]);
            if (detail::is_delta_interval(p, s, k - 2, k - 2))
                out.push_back({k, w, z, s});
        }
    return out;
}

inline std::vector<DkMinusInterval> find_dk_minus_intervals(const Poset& p, int k) {
    require(k >= 3, errc::bad_input, "d_k minus intervals need k >= 3");
    std::vector<DkMinusInterval> out;
    if (k == 3) {
        for (int w = 0; w < p.n; ++w) {
            ElemSet ups = p.covers_of(w);
            for (ElemSet it = ups; !it.empty();) {
                int x = it.pop();
                for (ElemSet jt = it; !jt.empty();) {
                    int y = jt.pop();
                    DkMinusInterval d;
                    d.k = 3;
                    d.bottom = w;
                    d.x = x;
                    d.y = y;
                    d.members = ElemSet::single(w) | ElemSet::single(x) | ElemSet::single(y);
                    out.push_back(d);
                }
            }
        }
        return out;
    }
    for (int w = 0; w < p.n; ++w)
        for (ElemSet it = ElemSet(p.up[w]) - ElemSet::single(w); !it.empty();) {
            int y = it.pop();
            ElemSet s = ElemSet(p.up[w] & p.down[y]);
            if (detail::is_delta_interval(p, s, k - 2, k - 3)) {
                DkMinusInterval d;
                d.k = k;
                d.bottom = w;
                d.top = y;
                d.members = s;
                out.push_back(d);
            }
        }
    return out;
}

enum class axiom { D1, D2, D3 };

struct AxiomWitness {
    int k;
    std::string what;  // human-readable description of the violation
    ElemSet involved;
};

struct Verdict {
    bool pass = true;
    std::vector<AxiomWitness> witnesses;
};

namespace detail {

// d_k and d_k^- intervals only exist while 2k-3 <= n
inline int max_k(const Poset& p) { return (p.n + 3) / 2; }

inline std::string set_str(ElemSet s) {
    std::string out = "{";
    bool first = true;
    for (ElemSet it = s; !it.empty();) {
        if (!first) out += ",";
        out += std::to_string(it.pop());
        first = false;
    }
    return out + "}";
}

inline void check_d1(const Poset& p, int k, Verdict& v) {
    // [w;x,y] resp. [w,y] is completed by z when [w,z] is a d_k interval
    // containing it; for k = 3 that makes {x,y} exactly the diamond's middle.
    for (const auto& d : find_dk_minus_intervals(p, k)) {
        bool completed = false;
        for (ElemSet it = ElemSet(p.up[d.bottom]) - ElemSet::single(d.bottom);
             !it.empty() && !completed;) {
            int z = it.pop();
            ElemSet s = ElemSet(p.up[d.bottom] & p.down[z]);
            if (d.members.subset_of(s) && is_delta_interval(p, s, k - 2, k - 2))
                completed = true;
        }
        if (!completed) {
            v.pass = false;
            v.witnesses.push_back(
                {k, "uncompleted d" + std::to_string(k) + "^- interval " + set_str(d.members),
                 d.members});
        }
    }
}

inline void check_d2(const Poset& p, int k, Verdict& v) {
    for (const auto& d : find_dk_intervals(p, k)) {
        ElemSet outside = p.covered_by(d.top) - d.members;
        if (!outside.empty()) {
            v.pass = false;
            v.witnesses.push_back({k, "top of d" + std::to_string(k) + " interval " +
                                          set_str(d.members) + " also covers " + set_str(outside),
                                   d.members | outside});
        }
    }
}

inline void check_d3(const Poset& p, int k, Verdict& v) {
    if (k == 3) {
        auto ds = find_dk_minus_intervals(p, 3);
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = i + 1; j < ds.size(); ++j) {
                if (ds[i].x == ds[j].x && ds[i].y == ds[j].y && ds[i].bottom != ds[j].bottom) {
                    v.pass = false;
                    v.witnesses.push_back({3, "overlapping d3^- intervals " +
                                                  set_str(ds[i].members) + " and " +
                                                  set_str(ds[j].members),
                                           ds[i].members | ds[j].members});
                }
            }
        return;
    }
    // overlap at k >= 4: [x,y] a d_{k-1} interval, x covering w != w' with
    // [w,y] and [w',y] both d_k^- intervals
    for (const auto& mid : find_dk_intervals(p, k - 1)) {
        int x = mid.bottom, y = mid.top;
        std::vector<int> hits;
        for (ElemSet it = p.covered_by(x); !it.empty();) {
            int w = it.pop();
            if (!p.leq(w, y)) continue;
            ElemSet s = ElemSet(p.up[w] & p.down[y]);
            if (is_delta_interval(p, s, k - 2, k - 3)) hits.push_back(w);
        }
        for (size_t i = 0; i < hits.size(); ++i)
            for (size_t j = i + 1; j < hits.size(); ++j) {
                v.pass = false;
                v.witnesses.push_back(
                    {k, "overlapping d" + std::to_string(k) + "^- intervals below " +
                            set_str(mid.members) + " at bottoms " + std::to_string(hits[i]) +
                            "," + std::to_string(hits[j]),
                     mid.members | ElemSet::single(hits[i]) | ElemSet::single(hits[j])});
            }
    }
}

}  // namespace detail

inline Verdict check_axiom(const Poset& p, axiom which) {
    Verdict v;
    for (int k = 3; k <= detail::max_k(p); ++k) {
        switch (which) {
            case axiom::D1: detail::check_d1(p, k, v); break;
            case axiom::D2: detail::check_d2(p, k, v); break;
            case axiom::D3: detail::check_d3(p, k, v); break;
        }
    }
    return v;
}

inline bool is_d3_complete(const Poset& p) {
    Verdict v;
    detail::check_d1(p, 3, v);
    detail::check_d2(p, 3, v);
    detail::check_d3(p, 3, v);
    return v.pass;
}

inline bool is_nonoverlapping(const Poset& p) { return check_axiom(p, axiom::D3).pass; }

inline bool is_dcomplete(const Poset& p) {
    for (int k = 3; k <= detail::max_k(p); ++k) {
        Verdict v;
        detail::check_d1(p, k, v);
        if (!v.pass) return false;
        detail::check_d2(p, k, v);
        if (!v.pass) return false;
        detail::check_d3(p, k, v);
        if (!v.pass) return false;
    }
    return true;
}

}  // namespace taquin
