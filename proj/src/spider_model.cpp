#include "spider/spider_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spider/error.hpp"

namespace spider {

SpiderSpec::SpiderSpec(std::vector<int> legs) : legs_(std::move(legs)) {
    offset_.assign(legs_.size() + 1, 0);
    int next = 1;
    for (std::size_t i = 0; i < legs_.size(); ++i) {
        offset_[i + 1] = next;
        next += legs_[i];
    }
    edge_count_ = next - 1;
}

SpiderSpec SpiderSpec::make(std::span<const int> legs, std::vector<int>* permutation) {
    if (legs.size() < 3) {
        throw Error(ErrorCode::TooFewLegs,
                    "a spider needs at least 3 legs, got " + std::to_string(legs.size()));
    }
    for (std::size_t t = 0; t < legs.size(); ++t) {
        if (legs[t] < 1) {
            throw Error(ErrorCode::NonPositiveLeg, "leg " + std::to_string(t + 1) +
                                                       " has length " + std::to_string(legs[t]));
        }
    }
    std::vector<int> perm(legs.size());
    std::iota(perm.begin(), perm.end(), 0);
    // Stable so equal legs keep their relative order.
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return legs[a] > legs[b]; });
    std::vector<int> sorted;
    sorted.reserve(legs.size());
    for (int p : perm) sorted.push_back(legs[p]);
    if (permutation) *permutation = std::move(perm);
    return SpiderSpec(std::move(sorted));
}

bool SpiderSpec::is_valid(VertexLabel v) const noexcept {
    if (v.leg == 0) return v.dist == 0;
    if (v.leg < 1 || v.leg > leg_count()) return false;
    return v.dist >= 1 && v.dist <= legs_[static_cast<std::size_t>(v.leg - 1)];
}

int SpiderSpec::index_of(VertexLabel v) const {
    if (!is_valid(v)) {
        throw Error(ErrorCode::InvalidLabel, "(" + std::to_string(v.leg) + "," +
                                                 std::to_string(v.dist) + ") is not a vertex");
    }
    if (v.leg == 0) return 0;
    return offset_[static_cast<std::size_t>(v.leg)] + v.dist - 1;
}

VertexLabel SpiderSpec::label_at(int index) const {
    if (index == 0) return kCenter;
    if (index < 0 || index > edge_count_) {
        throw Error(ErrorCode::InvalidLabel, "vertex index " + std::to_string(index));
    }
    auto it = std::upper_bound(offset_.begin() + 1, offset_.end(), index);
    const int leg = static_cast<int>(it - offset_.begin()) - 1;
    return {leg, index - offset_[static_cast<std::size_t>(leg)] + 1};
}

SpiderSpec make_spider(std::span<const int> legs, std::vector<int>* permutation) {
    return SpiderSpec::make(legs, permutation);
}

std::vector<VertexLabel> enumerate_vertices(const SpiderSpec& s) {
    std::vector<VertexLabel> out;
    out.reserve(static_cast<std::size_t>(s.vertex_count()));
    out.push_back(kCenter);
    for (int i = 1; i <= s.leg_count(); ++i) {
        for (int j = 1; j <= s.leg_length(i); ++j) out.push_back({i, j});
    }
    return out;
}

std::vector<EdgeRef> enumerate_edges(const SpiderSpec& s) {
    std::vector<EdgeRef> out;
    out.reserve(static_cast<std::size_t>(s.edge_count()));
    for (int i = 1; i <= s.leg_count(); ++i) {
        out.push_back({kCenter, {i, 1}});
        for (int j = 1; j < s.leg_length(i); ++j) out.push_back({{i, j}, {i, j + 1}});
    }
    return out;
}

bool are_incident(const EdgeRef& e1, const EdgeRef& e2) noexcept {
    return e1.lo == e2.lo || e1.lo == e2.hi || e1.hi == e2.lo || e1.hi == e2.hi;
}

std::int64_t binom2(std::int64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

std::int64_t thrackle_bound(const SpiderSpec& s) {
    // Center has degree k, each internal leg vertex degree 2, leaves degree 1.
    std::int64_t degree_two = 0;
    for (int len : s.legs()) degree_two += len - 1;
    return binom2(s.edge_count()) - binom2(s.leg_count()) - degree_two;
}

void require_legs_at_least_two(const SpiderSpec& s, const char* what) {
    if (s.min_leg() < 2) {
        throw Error(ErrorCode::LegTooShort,
                    std::string(what) + " requires every leg to have length >= 2");
    }
}

std::vector<IndexedPair> non_incident_pairs(const SpiderSpec& s) {
    const auto edges = enumerate_edges(s);
    std::vector<IndexedPair> out;
    out.reserve(static_cast<std::size_t>(thrackle_bound(s)));
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (are_incident(edges[a], edges[b])) continue;
            out.push_back({static_cast<int>(a), static_cast<int>(b), s.index_of(edges[a].lo),
                           s.index_of(edges[a].hi), s.index_of(edges[b].lo),
                           s.index_of(edges[b].hi)});
        }
    }
    return out;
}

}  // namespace spider
