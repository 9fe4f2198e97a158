#pragma once

#include <algorithm>
#include <array>
#include <cstring>
#include <string>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

// Relabeling-invariant form of a poset: n plus the cover list under the
// canonical labeling. Two posets are isomorphic iff their forms are equal.
struct CanonicalForm {
    int n = 0;
    std::vector<std::pair<int, int>> covers;
    uint64_t hash = 0;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.covers == b.covers;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.covers < b.covers;
    }
    std::string id() const {
        static const char* digits = "0123456789abcdef";
        std::string s = "p" + std::to_string(n) + "-";
        for (int i = 60; i >= 0; i -= 4) s += digits[hash >> i & 15];
        return s;
    }
};

namespace detail {

// FNV-1a over explicit byte values so ids do not depend on host endianness
inline uint64_t fnv1a_int(int v, uint64_t h) {
    for (int shift = 0; shift < 32; shift += 8) {
        h ^= (uint64_t(v) >> shift) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

// Iterated invariant refinement. Returns a color per element; colors are
// ordered consistently across isomorphic posets.
inline std::vector<int> refine_colors(const Poset& p) {
    int n = p.n;
    std::vector<int> color(n, 0);
    {
        std::vector<std::array<int, 4>> key(n);
        for (int e = 0; e < n; ++e)
            key[e] = {ElemSet(p.down[e]).count(), ElemSet(p.up[e]).count(),
                      p.covered_by(e).count(), p.covers_of(e).count()};
        std::vector<std::array<int, 4>> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int e = 0; e < n; ++e)
            color[e] = int(std::lower_bound(sorted.begin(), sorted.end(), key[e]) - sorted.begin());
    }
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    for (;;) {
        std::vector<std::vector<int>> key(n);
        for (int e = 0; e < n; ++e) {
            std::vector<int> lo, hi;
            for (ElemSet it = p.covered_by(e); !it.empty();) lo.push_back(color[it.pop()]);
            for (ElemSet it = p.covers_of(e); !it.empty();) hi.push_back(color[it.pop()]);
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            key[e].push_back(color[e]);
            key[e].push_back(-1);
            key[e].insert(key[e].end(), lo.begin(), lo.end());
            key[e].push_back(-1);
            key[e].insert(key[e].end(), hi.begin(), hi.end());
        }
        std::vector<std::vector<int>> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int e = 0; e < n; ++e)
            next[e] = int(std::lower_bound(sorted.begin(), sorted.end(), key[e]) - sorted.begin());
        int next_classes = (int)sorted.size();
        if (next_classes == classes) return next;
        color = std::move(next);
        classes = next_classes;
    }
}

}  // namespace detail

// Canonical labeling by exhaustive search over color-respecting permutations.
// Colors come from iterated refinement of degree / order profiles, which fixes
// the position block each element may occupy; the search then minimizes the
// relabeled cover matrix lexicographically.
inline CanonicalForm canonical_form(const Poset& p, int max_n = 12) {
    require(p.n <= max_n, errc::size_limit_exceeded,
            "canonical_form limited to " + std::to_string(max_n) + " elements");
    int n = p.n;
    std::vector<int> color = detail::refine_colors(p);

    // elements grouped by color; position i must hold an element of pos_color[i]
    std::vector<int> pos_color(n);
    std::vector<std::vector<int>> members;
    for (int e = 0; e < n; ++e) {
        int c = color[e];
        if (c >= (int)members.size()) members.resize(c + 1);
        members[c].push_back(e);
    }
    {
        int at = 0;
        for (int c = 0; c < (int)members.size(); ++c)
            for (size_t k = 0; k < members[c].size(); ++k) pos_color[at++] = c;
    }

    // candidate encoding: for position k the bits (0,k),(1,k),..,(k-1,k),
    // then (k,0)..(k,k-1); bit (i,j) = element at i is covered by element at j
    std::vector<uint8_t> best;
    bool have_best = false;
    std::vector<uint8_t> cur;
    cur.reserve(n * n);
    std::vector<int> elem_at(n, -1);
    std::vector<bool> used(n, false);

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        size_t base = cur.size();
        for (int e : members[pos_color[k]]) {
            if (used[e]) continue;
            cur.resize(base);
            for (int i = 0; i < k; ++i)
                cur.push_back(p.up_cov[elem_at[i]] >> e & 1);
            for (int j = 0; j < k; ++j)
                cur.push_back(p.up_cov[e] >> elem_at[j] & 1);
            if (have_best) {
                // lexicographic prune against the best prefix
                int cmp = std::memcmp(cur.data(), best.data(), cur.size());
                if (cmp > 0) continue;
            }
            used[e] = true;
            elem_at[k] = e;
            self(self, k + 1);
            used[e] = false;
        }
        cur.resize(base);
    };
    rec(rec, 0);

    CanonicalForm form;
    form.n = n;
    // decode the winning matrix back into cover pairs
    {
        size_t at = 0;
        std::vector<std::vector<uint8_t>> mat(n, std::vector<uint8_t>(n, 0));
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < k; ++i) mat[i][k] = best[at++];
            for (int j = 0; j < k; ++j) mat[k][j] = best[at++];
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mat[i][j]) form.covers.emplace_back(i, j);
        std::sort(form.covers.begin(), form.covers.end());
    }
    form.hash = detail::fnv1a_int(form.n, 14695981039346656037ull);
    for (auto [lo, hi] : form.covers) {
        form.hash = detail::fnv1a_int(lo, form.hash);
        form.hash = detail::fnv1a_int(hi, form.hash);
    }
    return form;
}

inline bool isomorphic(const Poset& a, const Poset& b, int max_n = 12) {
    if (a.n != b.n || a.covers.size() != b.covers.size()) return false;
    return canonical_form(a, max_n) == canonical_form(b, max_n);
}

}  // namespace taquin
