#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the counting, bounds or search code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "spider/spider_model.hpp"

namespace spider::oracle {

/// C(m,2) - sum C(deg,2) from an explicit degree table built from the edges.
inline std::int64_t degree_formula_thrackle(const SpiderSpec& s) {
    std::map<VertexLabel, std::int64_t> degree;
    const auto edges = enumerate_edges(s);
    for (const auto& e : edges) {
        ++degree[e.lo];
        ++degree[e.hi];
    }
    const auto m = static_cast<std::int64_t>(edges.size());
    std::int64_t total = m * (m - 1) / 2;
    for (const auto& [v, d] : degree) total -= d * (d - 1) / 2;
    return total;
}

/// Non-incident pairs counted one by one.
inline std::int64_t brute_non_incident_pairs(const SpiderSpec& s) {
    const auto edges = enumerate_edges(s);
    std::int64_t count = 0;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (!are_incident(edges[a], edges[b])) ++count;
    return count;
}

/// Two chords of an n-gon cross iff, measured from one endpoint of the first
/// chord, exactly one endpoint of the second lies strictly before its other end.
inline bool chords_cross_mod(int n, int a, int b, int c, int d) {
    if (a == c || a == d || b == c || b == d) return false;
    auto off = [&](int x) { return ((x - a) % n + n) % n; };
    const int end = off(b);
    return (off(c) < end) != (off(d) < end);
}

/// Crossings of a convex order given as labels (any rotation).
inline std::int64_t convex_count(const SpiderSpec& s, const std::vector<VertexLabel>& seq) {
    const int n = static_cast<int>(seq.size());
    std::map<VertexLabel, int> pos;
    for (int t = 0; t < n; ++t) pos[seq[static_cast<std::size_t>(t)]] = t;
    const auto edges = enumerate_edges(s);
    std::int64_t count = 0;
    for (std::size_t x = 0; x < edges.size(); ++x)
        for (std::size_t y = x + 1; y < edges.size(); ++y)
            if (chords_cross_mod(n, pos[edges[x].lo], pos[edges[x].hi], pos[edges[y].lo], pos[edges[y].hi])) ++count;
    return count;
}

/// Maximum over all (n-1)! orders with the center first; no symmetry tricks.
inline std::int64_t brute_convex_max(const SpiderSpec& s) {
    auto rest = enumerate_vertices(s);
    rest.erase(rest.begin());
    std::sort(rest.begin(), rest.end());
    std::int64_t best = -1;
    std::vector<VertexLabel> seq;
    do {
        seq.assign(1, kCenter);
        seq.insert(seq.end(), rest.begin(), rest.end());
        best = std::max(best, convex_count(s, seq));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

/// Every non-increasing legs list with k >= 3, legs in [min_len, max_len] and
/// sum of legs <= max_edges.
inline std::vector<std::vector<int>> legs_lists(int max_edges, int min_len, int max_len = 1000) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (cur.size() >= 3) out.push_back(cur);
        for (int len = std::min(cap, remaining); len >= min_len; --len) {
            cur.push_back(len);
            self(self, remaining - len, len);
            cur.pop_back();
        }
    };
    rec(rec, max_edges, max_len);
    return out;
}

inline std::vector<int> random_legs(std::mt19937_64& rng, int min_k, int max_k, int min_len, int max_len,
                                    int max_edges) {
    std::uniform_int_distribution<int> kd(min_k, max_k), ld(min_len, max_len);
    for (;;) {
        std::vector<int> legs(static_cast<std::size_t>(kd(rng)));
        for (int& l : legs) l = ld(rng);
        if (std::accumulate(legs.begin(), legs.end(), 0) <= max_edges) return legs;
    }
}

}  // namespace spider::oracle
