#include "spider/convex_drawing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "spider/error.hpp"

namespace spider {
namespace {

constexpr int kMaxRealizeRetries = 64;
const mpq_class kPerturbDenominator(1000003);
constexpr long kBaseGrid = 1024;

std::vector<int> to_indices(const SpiderSpec& s, const std::vector<VertexLabel>& sequence) {
    std::vector<int> idx;
    idx.reserve(sequence.size());
    for (const auto& v : sequence) {
        if (!s.is_valid(v)) {
            throw Error(ErrorCode::InvalidOrder, "label (" + std::to_string(v.leg) + "," +
                                                     std::to_string(v.dist) + ") is not a vertex");
        }
        idx.push_back(s.index_of(v));
    }
    return idx;
}

}  // namespace

CyclicOrder::CyclicOrder(SpiderSpec spider, std::vector<int> sequence, bool)
    : spider_(std::move(spider)) {
    const auto n = static_cast<std::size_t>(spider_.vertex_count());
    if (sequence.size() != n) {
        throw Error(ErrorCode::InvalidOrder, "order has " + std::to_string(sequence.size()) +
                                                 " entries, spider has " + std::to_string(n) +
                                                 " vertices");
    }
    std::vector<int> seen(n, 0);
    for (int v : sequence) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]++) {
            throw Error(ErrorCode::InvalidOrder, "order is not a permutation of the vertices");
        }
    }
    const auto center = std::find(sequence.begin(), sequence.end(), 0);
    std::rotate(sequence.begin(), center, sequence.end());
    sequence_ = std::move(sequence);
    position_.assign(n, 0);
    for (std::size_t t = 0; t < n; ++t) position_[static_cast<std::size_t>(sequence_[t])] = static_cast<int>(t);
}

CyclicOrder::CyclicOrder(SpiderSpec spider, const std::vector<VertexLabel>& sequence)
    : CyclicOrder(spider, to_indices(spider, sequence), true) {}

CyclicOrder CyclicOrder::from_indices(SpiderSpec spider, const std::vector<int>& sequence) {
    return CyclicOrder(std::move(spider), sequence, true);
}

std::vector<VertexLabel> CyclicOrder::labels() const {
    std::vector<VertexLabel> out;
    out.reserve(sequence_.size());
    for (int v : sequence_) out.push_back(spider_.label_at(v));
    return out;
}

CyclicOrder CyclicOrder::reversed() const {
    std::vector<int> rev(sequence_.rbegin(), sequence_.rend());
    return CyclicOrder(spider_, std::move(rev), true);
}

CyclicOrder algorithm_order(const SpiderSpec& s) {
    require_legs_at_least_two(s, "algorithm_order");
    std::vector<VertexLabel> v1, v2, v3, v4;
    for (const auto& v : enumerate_vertices(s)) {
        if (v == kCenter) continue;
        const bool odd_leg = v.leg % 2 == 1;
        const bool odd_dist = v.dist % 2 == 1;
        if (odd_leg && !odd_dist) v1.push_back(v);
        else if (!odd_leg && odd_dist) v2.push_back(v);
        else if (odd_leg && odd_dist) v3.push_back(v);
        else v4.push_back(v);
    }
    auto dec_leg_inc_dist = [](VertexLabel a, VertexLabel b) {
        return a.leg != b.leg ? a.leg > b.leg : a.dist < b.dist;
    };
    auto inc_leg_dec_dist = [](VertexLabel a, VertexLabel b) {
        return a.leg != b.leg ? a.leg < b.leg : a.dist > b.dist;
    };
    std::sort(v1.begin(), v1.end(), dec_leg_inc_dist);
    std::sort(v2.begin(), v2.end(), inc_leg_dec_dist);
    std::sort(v3.begin(), v3.end(), dec_leg_inc_dist);
    std::sort(v4.begin(), v4.end(), inc_leg_dec_dist);

    std::vector<VertexLabel> seq{kCenter};
    for (const auto* block : {&v1, &v2, &v3, &v4}) seq.insert(seq.end(), block->begin(), block->end());
    assert(std::adjacent_find(seq.begin(), seq.end()) == seq.end());
    return CyclicOrder(s, seq);
}

bool chords_cross(const CyclicOrder& o, const EdgeRef& e1, const EdgeRef& e2) {
    if (are_incident(e1, e2)) return false;
    const auto& s = o.spider();
    return chords_alternate(o.position_of(s.index_of(e1.lo)), o.position_of(s.index_of(e1.hi)),
                            o.position_of(s.index_of(e2.lo)), o.position_of(s.index_of(e2.hi)));
}

std::int64_t count_crossings_convex(const CyclicOrder& o) {
    std::int64_t count = 0;
    for (const auto& p : non_incident_pairs(o.spider())) {
        if (chords_alternate(o.position_of(p.a1), o.position_of(p.a2), o.position_of(p.b1),
                             o.position_of(p.b2))) {
            ++count;
        }
    }
    return count;
}

std::vector<EdgePair> missed_pairs(const SpiderSpec& s, const CrossingTest& crosses) {
    const auto edges = enumerate_edges(s);
    std::vector<EdgePair> out;
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (are_incident(edges[a], edges[b])) continue;
            if (!crosses(edges[a], edges[b])) out.emplace_back(edges[a], edges[b]);
        }
    }
    return out;
}

std::vector<EdgePair> missed_pairs(const CyclicOrder& o) {
    return missed_pairs(o.spider(), [&](const EdgeRef& a, const EdgeRef& b) { return chords_cross(o, a, b); });
}

std::vector<EdgePair> missed_pairs(const CoordinateDrawing& d) {
    return missed_pairs(d.spider(), [&](const EdgeRef& a, const EdgeRef& b) { return d.edges_cross(a, b); });
}

CoordinateDrawing realize(const CyclicOrder& o) {
    const int n = o.spider().vertex_count();
    // Half-angle tangents of evenly spaced angles, snapped to a 1/1024 grid.
    std::vector<mpq_class> base(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (t + 0.5) / n;
        long grid = std::lround(std::tan(theta / 2.0) * kBaseGrid);
        mpq_class u(grid, kBaseGrid);
        u.canonicalize();
        if (t > 0 && u <= base[static_cast<std::size_t>(t - 1)]) {
            u = base[static_cast<std::size_t>(t - 1)] + mpq_class(1, kBaseGrid);
        }
        base[static_cast<std::size_t>(t)] = u;
    }

    return realize_with_parameters(o, base);
}

CoordinateDrawing realize_with_parameters(const CyclicOrder& o, const std::vector<mpq_class>& base, int* retries) {
    const int n = o.spider().vertex_count();
    if (static_cast<int>(base.size()) != n) {
        throw Error(ErrorCode::Internal, "realize: need one circle parameter per vertex");
    }
    for (int t = 1; t < n; ++t) {
        if (base[static_cast<std::size_t>(t)] <= base[static_cast<std::size_t>(t - 1)]) {
            throw Error(ErrorCode::Internal, "realize: circle parameters must be strictly increasing");
        }
    }
    for (int retry = 0; retry <= kMaxRealizeRetries; ++retry) {
        std::vector<RationalPoint> positions(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            const mpq_class u = base[static_cast<std::size_t>(t)] +
                                mpq_class(static_cast<long>(t) * t * retry) / kPerturbDenominator;
            const mpq_class w = 1 + u * u;
            const mpq_class cx = (1 - u * u) / w;
            const mpq_class cy = 2 * u / w;
            // Quarter turn so the sequence starts near the bottom of the circle.
            positions[static_cast<std::size_t>(o.indices()[static_cast<std::size_t>(t)])] = {mpq_class(-cy), cx};
        }
        CoordinateDrawing d(o.spider(), std::move(positions));
        if (validate_good_drawing(d).empty()) {
            if (retries) *retries = retry;
            return d;
        }
    }
    throw Error(ErrorCode::Internal, "realize: no good drawing after " +
                                         std::to_string(kMaxRealizeRetries) + " perturbations");
}

}  // namespace spider
