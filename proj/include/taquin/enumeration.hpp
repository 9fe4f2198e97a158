#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "taquin/canonical.hpp"
#include "taquin/dcomplete.hpp"
#include "taquin/families.hpp"
#include "taquin/jdt.hpp"
#include "taquin/numbering.hpp"
#include "taquin/poset.hpp"
#include "taquin/simultaneous.hpp"

namespace taquin {

// Isomorphism-free generation, level by level: every poset on k+1 elements
// arises from one on k elements by attaching a new maximal element whose
// strict down-set is an ideal (walk any linear extension backwards), so
// attaching over all (class, ideal) pairs and deduplicating by canonical form
// visits every class exactly once. Intermediate levels keep disconnected
// classes; removing a maximal element can disconnect a connected poset.
inline std::vector<std::vector<Poset>> enumerate_levels(int n_max, int limit = 9) {
    require(n_max >= 1 && n_max <= limit, errc::size_limit_exceeded,
            "enumeration limited to " + std::to_string(limit) + " elements");
    std::vector<std::vector<Poset>> levels(n_max + 1);
    levels[1].push_back(from_covers(1, {}));
    for (int k = 1; k < n_max; ++k) {
        std::set<CanonicalForm> seen;
        for (const Poset& q : levels[k]) {
            for (ElemSet ideal : ideals(q)) {
                std::vector<std::pair<int, int>> cov = q.covers;
                for (ElemSet it = q.maximal_in(ideal); !it.empty();)
                    cov.emplace_back(it.pop(), k);
                seen.insert(canonical_form(from_covers(k + 1, std::move(cov))));
            }
        }
        levels[k + 1].reserve(seen.size());
        for (const CanonicalForm& f : seen) levels[k + 1].push_back(from_covers(f.n, f.covers));
    }
    return levels;
}

// Connected classes on exactly n elements, canonically labeled, in canonical
// form order.
inline std::vector<Poset> enumerate_connected(int n, int limit = 9) {
    auto levels = enumerate_levels(n, limit);
    std::vector<Poset> out;
    for (const Poset& p : levels[n])
        if (is_connected(p)) out.push_back(p);
    return out;
}

// Per-poset classification flags plus informational counts.
struct SurveyRecord {
    std::string id;  // canonical form id
    int n = 0;
    bool connected = false;
    bool unique_max = false;
    bool jdt = false;
    bool dcomplete = false;
    bool d3complete = false;
    bool nonoverlapping = false;
    bool simultaneous = false;
    bool dual_jdt = false;
    bool dual_dcomplete = false;
    bool doubly_jdt = false;
    int neck_like = 0;  // non-maximum elements comparable to everything
    int crucial_pairs = 0;
    uint64_t extensions = 0;
};

struct SurveyAggregate {
    int n = 0;
    int total = 0;
    int jdt = 0;
    int dcomplete = 0;
    int jdt_and_dcomplete = 0;
    int jdt_not_dcomplete = 0;
    int simultaneous = 0;
    int nonoverlapping = 0;
    int doubly_jdt = 0;
    int doubly_jdt_not_dcomplete = 0;
    int unique_max_violations = 0;  // connected jdt posets without a unique max
};

struct SurveyResult {
    std::vector<SurveyRecord> records;   // canonical order
    std::vector<CanonicalForm> forms;    // aligned with records
    SurveyAggregate aggregate;
};

namespace detail {

inline int neck_like_count(const Poset& p) {
    ElemSet maxes = p.maximal_elements();
    int c = 0;
    for (int e = 0; e < p.n; ++e) {
        if (maxes.has(e) && maxes.count() == 1) continue;
        if ((ElemSet(p.up[e]) | ElemSet(p.down[e])) == p.all()) ++c;
    }
    return c;
}

}  // namespace detail

// Classifies every connected class on n elements. Classification fans out
// over `threads` workers; records land in canonical order regardless. The
// implication chain d-complete => simultaneous => jdt is asserted on every
// record and aborts the survey when violated.
inline SurveyResult survey(int n, int threads = 0, int limit = 9) {
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Poset> posets = enumerate_connected(n, limit);
    std::vector<SurveyRecord> recs(posets.size());
    std::vector<CanonicalForm> forms(posets.size());

    std::atomic<size_t> next{0};
    std::atomic<bool> violated{false};
    std::string violation_msg;
    std::mutex viol_mu;

    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= posets.size()) return;
            const Poset& p = posets[i];
            SurveyRecord r;
            CanonicalForm f = canonical_form(p);
            r.id = f.id();
            r.n = p.n;
            r.connected = true;
            r.unique_max = has_unique_max(p);
            r.jdt = is_jdt(p);
            r.dcomplete = is_dcomplete(p);
            r.d3complete = is_d3_complete(p);
            r.nonoverlapping = is_nonoverlapping(p);
            r.simultaneous = is_simultaneous(p);
            r.neck_like = detail::neck_like_count(p);
            r.crucial_pairs = (int)crucial_pairs(p).size();
            r.extensions = linear_extensions_count(p);
            if ((r.dcomplete && !r.simultaneous) || (r.simultaneous && !r.jdt)) {
                std::lock_guard<std::mutex> lk(viol_mu);
                violated = true;
                violation_msg = "classification implication violated at " + r.id;
            }
            recs[i] = std::move(r);
            forms[i] = std::move(f);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    require(!violated, errc::engine_invariant, violation_msg);

    // second pass: duals are classified by canonical lookup, not re-run
    std::map<CanonicalForm, size_t> index;
    for (size_t i = 0; i < posets.size(); ++i) index[forms[i]] = i;
    for (size_t i = 0; i < posets.size(); ++i) {
        CanonicalForm df = canonical_form(order_dual(posets[i]));
        auto it = index.find(df);
        require(it != index.end(), errc::engine_invariant,
                "dual of a connected poset missing from the census");
        recs[i].dual_jdt = recs[it->second].jdt;
        recs[i].dual_dcomplete = recs[it->second].dcomplete;
        recs[i].doubly_jdt = recs[i].jdt && recs[i].dual_jdt;
    }

    SurveyResult out;
    out.aggregate.n = n;
    out.aggregate.total = (int)recs.size();
    for (const auto& r : recs) {
        out.aggregate.jdt += r.jdt;
        out.aggregate.dcomplete += r.dcomplete;
        out.aggregate.jdt_and_dcomplete += r.jdt && r.dcomplete;
        out.aggregate.jdt_not_dcomplete += r.jdt && !r.dcomplete;
        out.aggregate.simultaneous += r.simultaneous;
        out.aggregate.nonoverlapping += r.nonoverlapping;
        out.aggregate.doubly_jdt += r.doubly_jdt;
        out.aggregate.doubly_jdt_not_dcomplete += r.doubly_jdt && !r.dcomplete;
        out.aggregate.unique_max_violations += r.jdt && !r.unique_max;
    }
    out.records = std::move(recs);
    out.forms = std::move(forms);
    return out;
}

// --- Conjecture 5.3 evidence ------------------------------------------------

struct ConjectureEntry {
    std::string id;
    int n;
    bool minuscule_match;
    std::string family;  // which catalog member it matched
};

struct ConjectureReport {
    std::vector<ConjectureEntry> doubly_jdt;  // all connected doubly-jdt classes
    std::vector<ConjectureEntry> outliers;    // those matching no minuscule poset
    int doubly_jdt_not_doubly_dcomplete = 0;
};

// Minuscule posets with exactly n elements, as (canonical form, name) pairs.
inline std::vector<std::pair<CanonicalForm, std::string>> minuscule_catalog(int n) {
    std::vector<std::pair<CanonicalForm, std::string>> out;
    auto push = [&](const Poset& p, const std::string& name) {
        CanonicalForm f = canonical_form(p);
        for (auto& [g, other] : out)
            if (g == f) return;
        out.emplace_back(f, name);
    };
    for (int rows = 1; rows * rows <= n; ++rows)
        if (n % rows == 0)
            push(shape(std::vector<int>(rows, n / rows)),
                 "a(" + std::to_string(rows + n / rows - 1) + "," + std::to_string(rows) + ")");
    for (int m = 2; m * (m - 1) / 2 <= n; ++m)
        if (m * (m - 1) / 2 == n)
            push(minuscule("d(" + std::to_string(m) + "," + std::to_string(m) + ")"),
                 "d(" + std::to_string(m) + "," + std::to_string(m) + ")");
    for (int k = 1; 2 * k + 2 <= n; ++k)
        if (2 * k + 2 == n) push(delta(k, k), "d(" + std::to_string(k + 2) + ",1)");
    if (n == 16) push(minuscule("e6_1"), "e6_1");
    if (n == 27) push(minuscule("e7_1"), "e7_1");
    return out;
}

// Lists the connected doubly-jdt classes up to n_max and matches each against
// the minuscule catalog. `top`, when given, supplies a precomputed survey for
// the largest level so the census is not classified twice.
inline ConjectureReport conjecture_scan(int n_max, int threads = 0, int limit = 9,
                                        const SurveyResult* top = nullptr) {
    ConjectureReport rep;
    for (int n = 1; n <= n_max; ++n) {
        SurveyResult local;
        const SurveyResult* sr;
        if (top && top->aggregate.n == n) {
            sr = top;
        } else {
            local = survey(n, threads, limit);
            sr = &local;
        }
        auto catalog = minuscule_catalog(n);
        for (size_t i = 0; i < sr->records.size(); ++i) {
            const auto& r = sr->records[i];
            if (!r.doubly_jdt) continue;
            ConjectureEntry e{r.id, r.n, false, ""};
            for (auto& [g, name] : catalog)
                if (g == sr->forms[i]) {
                    e.minuscule_match = true;
                    e.family = name;
                    break;
                }
            if (!(r.dcomplete && r.dual_dcomplete)) ++rep.doubly_jdt_not_doubly_dcomplete;
            rep.doubly_jdt.push_back(e);
            if (!e.minuscule_match) rep.outliers.push_back(e);
        }
    }
    return rep;
}

}  // namespace taquin
