#pragma once

// Test-only oracles, deliberately written against the definitions rather than
// the library internals they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "taquin/poset.hpp"

namespace oracle {

// number of order-preserving bijections onto 1..n, by trying all permutations
inline uint64_t extension_count_brute(const taquin::Poset& p) {
    std::vector<int> perm(p.n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = 0;
    do {
        // perm[r] = element with rank r+1
        bool ok = true;
        std::vector<int> rank(p.n);
        for (int r = 0; r < p.n; ++r) rank[perm[r]] = r;
        for (auto [lo, hi] : p.covers)
            if (rank[lo] > rank[hi]) {
                ok = false;
                break;
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// all down-closed subsets by scanning every mask
inline std::vector<uint64_t> ideals_brute(const taquin::Poset& p) {
    std::vector<uint64_t> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << p.n); ++mask) {
        bool ok = true;
        for (int e = 0; e < p.n && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            if ((p.down[e] & ~mask) != 0) ok = false;
        }
        if (ok) out.push_back(mask);
    }
    return out;
}

// Independent re-implementation of the slide-out semantics on a plain array:
// cells hold 0 = empty, positive = label, negative = bubble id. Slides the
// bubble with the given id to its fixpoint, returning the visited cells.
inline std::vector<int> slideout_brute(const taquin::Poset& p, std::vector<int>& cells,
                                       int bubble) {
    int pos = -1;
    for (int e = 0; e < p.n; ++e)
        if (cells[e] == -bubble) pos = e;
    std::vector<int> visited{pos};
    for (;;) {
        int best = -1;
        for (int d = 0; d < p.n; ++d) {
            if (cells[d] <= 0) continue;
            // d covered by pos?
            bool cover = p.lt(d, pos);
            for (int m = 0; m < p.n && cover; ++m)
                if (m != d && m != pos && p.lt(d, m) && p.lt(m, pos)) cover = false;
            if (cover && (best < 0 || cells[d] > cells[best])) best = d;
        }
        if (best < 0) break;
        std::swap(cells[pos], cells[best]);
        pos = best;
        visited.push_back(pos);
    }
    return visited;
}

// count of isomorphism classes of posets on n labeled elements, by summing
// |Aut| / n! over all valid strict order relations (Burnside on the symmetric
// group); connected_only restricts to connected diagrams
inline long class_count_brute(int n, bool connected_only) {
    // enumerate relations: for each unordered pair choose <, > or incomparable
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    long numerator = 0;  // sum over posets of |Aut|, later divided by n!
    std::vector<int> choice(pairs.size(), 0);
    std::vector<int> perm(n);
    uint64_t total = 1;
    for (size_t i = 0; i < pairs.size(); ++i) total *= 3;
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        bool lt[8][8] = {};
        for (size_t i = 0; i < pairs.size(); ++i) {
            int v = c % 3;
            c /= 3;
            if (v == 1) lt[pairs[i].first][pairs[i].second] = true;
            if (v == 2) lt[pairs[i].second][pairs[i].first] = true;
        }
        bool valid = true;
        for (int a = 0; a < n && valid; ++a)
            for (int b = 0; b < n && valid; ++b)
                for (int m = 0; m < n && valid; ++m)
                    if (lt[a][b] && lt[b][m] && !lt[a][m]) valid = false;
        if (!valid) continue;
        if (connected_only) {
            std::vector<int> comp(n, -1);
            std::vector<int> stack{0};
            comp[0] = 0;
            while (!stack.empty()) {
                int e = stack.back();
                stack.pop_back();
                for (int f = 0; f < n; ++f)
                    if (comp[f] < 0 && (lt[e][f] || lt[f][e])) {
                        comp[f] = 0;
                        stack.push_back(f);
                    }
            }
            bool conn = true;
            for (int e = 0; e < n; ++e)
                if (comp[e] < 0) conn = false;
            if (!conn) continue;
        }
        // |Aut|
        std::iota(perm.begin(), perm.end(), 0);
        long aut = 0;
        do {
            bool iso = true;
            for (int a = 0; a < n && iso; ++a)
                for (int b = 0; b < n && iso; ++b)
                    if (lt[a][b] != lt[perm[a]][perm[b]]) iso = false;
            if (iso) ++aut;
        } while (std::next_permutation(perm.begin(), perm.end()));
        numerator += aut;
    }
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return numerator / fact;
}

// random poset via a random DAG on the index order, reduced to covers
inline taquin::Poset random_poset(int n, double density, std::mt19937& rng) {
    std::bernoulli_distribution flip(density);
    std::vector<uint64_t> lt(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) lt[i] |= uint64_t(1) << j;
    // transitive closure along index order
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (lt[i] >> j & 1) lt[i] |= lt[j];
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!(lt[i] >> j & 1)) continue;
            bool direct = true;
            for (int m = i + 1; m < j && direct; ++m)
                if ((lt[i] >> m & 1) && (lt[m] >> j & 1)) direct = false;
            if (direct) cov.emplace_back(i, j);
        }
    return taquin::from_covers(n, std::move(cov));
}

}  // namespace oracle
