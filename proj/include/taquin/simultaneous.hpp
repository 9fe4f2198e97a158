#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "taquin/dcomplete.hpp"
#include "taquin/jdt.hpp"
#include "taquin/poset.hpp"
#include "taquin/sliding.hpp"

namespace taquin {

// --- structural helpers (top tree, acyclic elements, slant decomposition) ---

// Elements x whose interval up to the unique maximum is a chain.
inline ElemSet top_tree(const Poset& p) {
    unique_max(p);  // throws no_unique_max otherwise
    ElemSet t;
    for (int e = 0; e < p.n; ++e) {
        ElemSet ups = ElemSet(p.up[e]);
        bool chain = true;
        for (ElemSet it = ups; chain && !it.empty();) {
            int a = it.pop();
            for (ElemSet jt = it; chain && !jt.empty();)
                if (p.incomparable(a, jt.pop())) chain = false;
        }
        if (chain) t.add(e);
    }
    return t;
}

// Top-tree elements that sit in no d_k interval's upper chain (the part of
// the interval strictly above both of its incomparable middles).
inline ElemSet acyclic_elements(const Poset& p) {
    ElemSet t = top_tree(p);
    ElemSet blocked;
    for (int k = 3; k <= detail::max_k(p); ++k)
        for (const auto& d : find_dk_intervals(p, k)) {
            int x = -1, y = -1;
            for (ElemSet it = d.members; !it.empty();) {
                int e = it.pop();
                for (ElemSet jt = d.members; !jt.empty();) {
                    int f = jt.pop();
                    if (e != f && p.incomparable(e, f)) {
                        x = e;
                        y = f;
                    }
                }
            }
            blocked |= d.members & ElemSet(p.up[x]) & ElemSet(p.up[y]);
        }
    return t - blocked;
}

// Cover edges with both ends in the top tree and an acyclic upper end.
inline std::vector<std::pair<int, int>> slant_edges(const Poset& p) {
    ElemSet t = top_tree(p);
    ElemSet ac = acyclic_elements(p);
    std::vector<std::pair<int, int>> out;
    for (auto [lo, hi] : p.covers)
        if (t.has(lo) && t.has(hi) && ac.has(hi)) out.push_back({lo, hi});
    return out;
}

// The decomposition theorem speaks about connected d-complete posets; for
// anything else the result is advisory (theorem_scope reports which).
struct SlantDecomposition {
    std::vector<std::pair<int, int>> edges;
    std::vector<Poset> components;
    std::vector<std::vector<int>> component_elems;  // old element ids per component
    bool theorem_scope = true;
};

inline SlantDecomposition slant_components(const Poset& p) {
    SlantDecomposition d;
    d.theorem_scope = is_connected(p) && is_dcomplete(p);
    d.edges = slant_edges(p);
    std::vector<uint64_t> adj(p.n, 0);
    for (auto [lo, hi] : p.covers) {
        if (std::find(d.edges.begin(), d.edges.end(), std::make_pair(lo, hi)) != d.edges.end())
            continue;
        adj[lo] |= uint64_t(1) << hi;
        adj[hi] |= uint64_t(1) << lo;
    }
    ElemSet left = p.all();
    while (!left.empty()) {
        ElemSet comp = ElemSet::single(left.first());
        ElemSet fringe = comp;
        while (!fringe.empty()) {
            int e = fringe.pop();
            ElemSet nb = ElemSet(adj[e]) - comp;
            comp |= nb;
            fringe |= nb;
        }
        std::vector<int> olds;
        d.components.push_back(restrict(p, comp, &olds));
        d.component_elems.push_back(olds);
        left = left - comp;
    }
    return d;
}

// --- the collision / repair engine -----------------------------------------

struct CollisionRecord {
    int m;            // 1-based collision index
    int site_w;       // collision site
    int x, y;         // tester positions one move short of w
    int z;            // repair site
    int sigma;        // colliding label
    int v_start;      // where the repair bubble started
    std::vector<int> leader_path;  // from w down
    std::vector<int> fixer_path;   // from v_start to z
};

enum class sim_fail { none, cond_i, cond_ii, cond_iii, cond_iv, w_ambiguous };

struct SimOutcome {
    bool solved = false;
    int m = 0;          // repaired collisions on success
    bool strong = false;
    sim_fail fail = sim_fail::none;
    int fail_at = 0;    // collision index that could not be handled
    std::vector<CollisionRecord> trace;
};

// Per-poset facts the engine consults on every challenge.
struct SimContext {
    const Poset* p;
    bool d3;            // d3-complete: repair sites are unique, (iv) vacuous
    bool has_acyclic;   // poset has a unique max
    ElemSet acyclic;
};

inline SimContext make_sim_context(const Poset& p) {
    SimContext ctx;
    ctx.p = &p;
    ctx.d3 = is_d3_complete(p);
    ctx.has_acyclic = has_unique_max(p);
    ctx.acyclic = ctx.has_acyclic ? acyclic_elements(p) : ElemSet::none();
    return ctx;
}

namespace detail {

struct SimEngine {
    const SimContext* ctx;
    const Challenge* chal;
    Snapshot snap;
    int a_code, b_code;
    int next_fixer = 0;  // fixers consumed so far
    bool strong = true;
    std::vector<CollisionRecord> trace;

    struct ProbeResult {
        bool disjoint = false;
        bool ambiguous = false;
        std::vector<int> ta, tb;
        int w = -1;
        int iw = -1, jw = -1;  // index of w within ta / tb
    };

    ProbeResult probe() const {
        ProbeResult r;
        r.ta = probe_path(snap, a_code);
        r.tb = probe_path(snap, b_code);
        for (int i = 0; i < (int)r.ta.size() && r.w < 0; ++i)
            for (int j = 0; j < (int)r.tb.size(); ++j)
                if (r.ta[i] == r.tb[j]) {
                    r.w = r.ta[i];
                    r.iw = i;
                    r.jw = j;
                    break;
                }
        if (r.w < 0) {
            r.disjoint = true;
            return r;
        }
        // the earliest common element must be earliest along both paths
        for (int j = 0; j < r.jw; ++j)
            for (int i = 0; i < (int)r.ta.size(); ++i)
                if (r.tb[j] == r.ta[i]) {
                    r.ambiguous = true;
                    return r;
                }
        return r;
    }

    // Moves both testers one short of w along their probed prefixes; every
    // realized step must reproduce the probe: a tester keeps preferring its
    // probed path because other bubbles only ever shrink labels along it.
    void advance(const ProbeResult& r) {
        const Poset& p = *ctx->p;
        (void)p;
        for (int t = 1; t < r.iw; ++t)
            require(snap.move_once_inplace(a_code) && snap.bubble_pos(a_code) == r.ta[t],
                    errc::engine_invariant, "tester A left its probed path");
        for (int t = 1; t < r.jw; ++t)
            require(snap.move_once_inplace(b_code) && snap.bubble_pos(b_code) == r.tb[t],
                    errc::engine_invariant, "tester B left its probed path");
    }

    // Repairs the next collision with a fixer placed at v. Returns the failure
    // kind, or sim_fail::none on success.
    sim_fail repair(const ProbeResult& r, int v) {
        const Poset& p = *ctx->p;
        int m = next_fixer + 1;
        int x1 = r.ta[r.iw - 1], y1 = r.tb[r.jw - 1];
        int w = r.w;
        int sigma = snap.label_at(w);
        require(sigma > 0, errc::engine_invariant, "collision site holds no label");

        int fixer = BubbleId::indexed(m).code;
        require(snap.cell[v] == 0, errc::engine_invariant, "fixer start cell is occupied");
        snap.cell[v] = -fixer;

        ElemSet cands = p.covers_of(x1) & p.covers_of(y1);
        if (ctx->d3)
            require(cands.count() == 1, errc::engine_invariant,
                    "d3-complete poset must offer exactly one repair site");

        // slide the fixer until it occupies a candidate site
        snap.trail_or_start(fixer, v);
        int z = -1;
        for (;;) {
            int cur = snap.bubble_pos(fixer);
            if (cands.has(cur)) {
                z = cur;
                break;
            }
            if (!snap.move_once_inplace(fixer)) break;
        }
        if (z < 0) return cands.empty() ? sim_fail::cond_ii : sim_fail::cond_iii;
        std::vector<int> fixer_path = *snap.trail(fixer);  // v .. z

        // (iv): sigma must exceed every label under z besides the testers'
        for (ElemSet it = p.covered_by(z) - ElemSet::single(x1) - ElemSet::single(y1);
             !it.empty();) {
            int lab = snap.label_at(it.pop());
            if (lab > 0 && lab >= sigma) {
                if (ctx->d3)
                    fail(errc::engine_invariant, "condition (iv) failed on a d3-complete poset");
                return sim_fail::cond_iv;
            }
        }

        // choreography: A captures sigma at w, the fixer departs to A's old
        // cell, A is renamed leader, the fixer becomes the next tester A
        require(snap.move_once_inplace(a_code) && snap.bubble_pos(a_code) == w,
                errc::engine_invariant, "tester A did not capture the colliding label");
        require(snap.move_once_inplace(fixer) && snap.bubble_pos(fixer) == x1,
                errc::engine_invariant, "fixer did not step to the vacated tester cell");

        int leader = a_code;
        a_code = fixer;
        snap.slide_out_inplace(leader);
        const std::vector<int>& ltrail = *snap.trail(leader);
        auto wpos = std::find(ltrail.begin(), ltrail.end(), w);
        std::vector<int> leader_path(wpos, ltrail.end());

        if (ctx->has_acyclic) {
            for (int e : fixer_path)
                if (ctx->acyclic.has(e)) strong = false;
            for (int e : leader_path)
                if (ctx->acyclic.has(e)) strong = false;
        }
        trace.push_back({m, w, x1, y1, z, sigma, v, leader_path, fixer_path});
        ++next_fixer;
        return sim_fail::none;
    }

    // Solved cross-check: replay the used prefix through the raw test
    // emptyings both ways; they must extract equal red numberings.
    void crosscheck_solved() const {
        const Poset& p = *ctx->p;
        TestNumbering gm{chal->x, chal->y, {}};
        for (const auto& rec : trace) gm.g.push_back(rec.v_start);
        require(is_ideal(p, gm.domain() | chal->ideal), errc::engine_invariant,
                "solved prefix does not span an ideal");
        BiNumbering bn = to_binumbering(p, *chal, gm);
        require(red_part(test_empty(p, bn, test_order::BA)) ==
                    red_part(test_empty(p, bn, test_order::AB)),
                errc::engine_invariant,
                "simultaneous engine disagreed with the raw test emptyings");
    }
};

inline SimEngine start_engine(const SimContext& ctx, const Challenge& c) {
    SimEngine eng;
    eng.ctx = &ctx;
    eng.chal = &c;
    TestNumbering t0{c.x, c.y, {}};
    eng.snap = make_snapshot(*ctx.p, to_binumbering(*ctx.p, c, t0));
    eng.a_code = BubbleId::test_a().code;
    eng.b_code = BubbleId::test_b().code;
    return eng;
}

// Searches for a (strong) m-simultaneous solution to the challenge by growing
// the fixer prefix one addable element at a time. Outcomes through collision
// m depend only on the prefix — bubbles not yet slid block swaps exactly like
// empty cells — so this walks the distinct gamma prefixes, smallest first.
inline std::optional<SimOutcome> solve_crucial(const SimContext& ctx, const Challenge& c,
                                               bool need_strong) {
    const Poset& p = *ctx.p;
    ElemSet scope = (p.all() - c.ideal) - ElemSet::single(c.x) - ElemSet::single(c.y);

    auto rec = [&](auto&& self, SimEngine& eng, ElemSet used) -> std::optional<SimOutcome> {
        auto r = eng.probe();
        if (r.disjoint) {
            eng.crosscheck_solved();
            return SimOutcome{true, eng.next_fixer, eng.strong, sim_fail::none, 0, eng.trace};
        }
        if (r.ambiguous) return std::nullopt;
        eng.advance(r);
        for (ElemSet it = scope - used; !it.empty();) {
            int v = it.pop();
            if (!((ElemSet(p.down[v]) & scope) - ElemSet::single(v)).subset_of(used)) continue;
            SimEngine child = eng;
            if (child.repair(r, v) != sim_fail::none) continue;
            if (need_strong && !child.strong) continue;
            auto got = self(self, child, used | ElemSet::single(v));
            if (got) return got;
        }
        return std::nullopt;
    };

    SimEngine eng = start_engine(ctx, c);
    return rec(rec, eng, ElemSet::none());
}

}  // namespace detail

// Searches for an m-simultaneous solution to a crucial challenge; the strong
// variant also requires the repair and leader bubbles to avoid the acyclic
// elements. Returns the outcome of the first solution found, if any.
inline std::optional<SimOutcome> solve_crucial_challenge(const SimContext& ctx,
                                                         const Challenge& c, bool need_strong) {
    return detail::solve_crucial(ctx, c, need_strong);
}

// Runs the collision/repair recursion for one explicit test numbering gamma.
// Every Solved outcome is cross-checked against the raw test emptyings.
inline SimOutcome run_simultaneous(const Poset& p, const Challenge& c, const TestNumbering& gamma) {
    to_binumbering(p, c, gamma);  // validate gamma against the challenge
    SimContext ctx = make_sim_context(p);
    detail::SimEngine eng = detail::start_engine(ctx, c);
    for (;;) {
        auto r = eng.probe();
        if (r.disjoint) {
            eng.crosscheck_solved();
            return {true, eng.next_fixer, eng.strong, sim_fail::none, 0, eng.trace};
        }
        if (r.ambiguous)
            return {false, eng.next_fixer, eng.strong, sim_fail::w_ambiguous,
                    eng.next_fixer + 1, eng.trace};
        if (eng.next_fixer >= (int)gamma.g.size())
            return {false, eng.next_fixer, eng.strong, sim_fail::cond_i, eng.next_fixer + 1,
                    eng.trace};
        eng.advance(r);
        sim_fail f = eng.repair(r, gamma.g[eng.next_fixer]);
        if (f != sim_fail::none)
            return {false, eng.next_fixer, eng.strong, f, eng.next_fixer + 1, eng.trace};
    }
}

// A poset is simultaneous when every crucial challenge has an m-simultaneous
// solution for some m >= 0.
inline bool is_simultaneous(const Poset& p) {
    SimContext ctx = make_sim_context(p);
    for (auto [x, y] : crucial_pairs(p)) {
        ElemSet ixy = p.all() - ElemSet(p.up[x] | p.up[y]);
        bool ok = for_each_numbering(p, ixy, [&](const Numbering& rho) {
            return solve_crucial_challenge(ctx, Challenge{ixy, rho, x, y}, false).has_value();
        });
        if (!ok) return false;
    }
    return true;
}

// Strong variant: the solution's repair and leader bubbles must avoid the
// acyclic elements.
inline bool is_strongly_simultaneous(const Poset& p) {
    unique_max(p);  // the acyclic set needs a unique maximum
    SimContext ctx = make_sim_context(p);
    for (auto [x, y] : crucial_pairs(p)) {
        ElemSet ixy = p.all() - ElemSet(p.up[x] | p.up[y]);
        bool ok = for_each_numbering(p, ixy, [&](const Numbering& rho) {
            return solve_crucial_challenge(ctx, Challenge{ixy, rho, x, y}, true).has_value();
        });
        if (!ok) return false;
    }
    return true;
}

// Empirical check of the composition principle: a connected d-complete poset
// whose multi-element slant irreducible components are all strongly
// simultaneous must itself be simultaneous.
struct CompositionReport {
    bool ok = false;
    bool whole_simultaneous = false;
    std::vector<bool> component_strong;  // multi-element components only
    int component_count = 0;
};

inline CompositionReport check_composition(const Poset& p) {
    require(is_connected(p) && is_dcomplete(p), errc::not_dcomplete,
            "composition check is stated for connected d-complete posets");
    CompositionReport rep;
    SlantDecomposition d = slant_components(p);
    rep.component_count = (int)d.components.size();
    bool all_strong = true;
    for (const auto& comp : d.components) {
        if (comp.n < 2) continue;
        bool s = is_strongly_simultaneous(comp);
        rep.component_strong.push_back(s);
        all_strong = all_strong && s;
    }
    rep.whole_simultaneous = is_simultaneous(p);
    rep.ok = all_strong && rep.whole_simultaneous;
    return rep;
}

}  // namespace taquin
