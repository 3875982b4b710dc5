#include "spider/bounds.hpp"

#include "spider/error.hpp"

namespace spider {

std::int64_t lower_bound(const SpiderSpec& s) {
    require_legs_at_least_two(s, "lower_bound");
    std::int64_t missed = 0;
    for (int i = 3; i <= s.leg_count(); ++i) missed += std::int64_t{s.leg_length(i) - 1} * ((i - 1) / 2);
    return thrackle_bound(s) - missed;
}

std::int64_t upper_bound(const SpiderSpec& s) {
    require_legs_at_least_two(s, "upper_bound");
    const std::int64_t k = s.leg_count();
    return thrackle_bound(s) - (binom2(k) - mantel_max_edges(k));
}

std::int64_t exact_s_k_2(int k) {
    if (k < 3) throw Error(ErrorCode::KTooSmall, "exact_s_k_2 needs k >= 3, got " + std::to_string(k));
    const std::int64_t kk = k;
    return binom2(2 * kk) - 2 * binom2(kk) - kk + mantel_max_edges(kk);
}

std::int64_t conjectured_mrcr(const SpiderSpec& s) {
    require_legs_at_least_two(s, "conjectured_mrcr");
    return lower_bound(s);
}

bool bounds_coincide(const SpiderSpec& s) { return lower_bound(s) == upper_bound(s); }

BoundsReport compute_bounds(const SpiderSpec& s) {
    BoundsReport r;
    r.thrackle = thrackle_bound(s);
    r.lower = lower_bound(s);
    r.upper = upper_bound(s);
    r.conjectured = conjectured_mrcr(s);
    if (s.legs().front() == 2) r.exact = exact_s_k_2(s.leg_count());
    return r;
}

AuxGraph auxiliary_graph(const SpiderSpec& s, const CrossingTest& crosses) {
    require_legs_at_least_two(s, "auxiliary_graph");
    const int k = s.leg_count();
    AuxGraph g;
    g.k = k;
    g.missed.assign(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
    const auto edges = enumerate_edges(s);
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const int la = edges[a].leg(), lb = edges[b].leg();
            if (la == lb || are_incident(edges[a], edges[b])) continue;
            if (!crosses(edges[a], edges[b])) {
                ++g.missed[static_cast<std::size_t>(la - 1)][static_cast<std::size_t>(lb - 1)];
                ++g.missed[static_cast<std::size_t>(lb - 1)][static_cast<std::size_t>(la - 1)];
            }
        }
    }
    for (int a = 1; a <= k; ++a) {
        for (int b = a + 1; b <= k; ++b) {
            if (g.missed[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] == 0) g.edges.emplace(a, b);
        }
    }
    return g;
}

AuxGraph auxiliary_graph(const CyclicOrder& o) {
    return auxiliary_graph(o.spider(), [&](const EdgeRef& a, const EdgeRef& b) { return chords_cross(o, a, b); });
}

AuxGraph auxiliary_graph(const CoordinateDrawing& d) {
    return auxiliary_graph(d.spider(), [&](const EdgeRef& a, const EdgeRef& b) { return d.edges_cross(a, b); });
}

bool is_triangle_free(const AuxGraph& g) {
    auto has = [&](int a, int b) { return g.edges.count({a, b}) > 0; };
    for (int a = 1; a <= g.k; ++a)
        for (int b = a + 1; b <= g.k; ++b) {
            if (!has(a, b)) continue;
            for (int c = b + 1; c <= g.k; ++c)
                if (has(a, c) && has(b, c)) return false;
        }
    return true;
}

std::int64_t mantel_max_edges(std::int64_t k) { return k * k / 4; }

}  // namespace spider
