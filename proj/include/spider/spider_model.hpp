#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spider {

/// Vertex (i, j): the vertex of leg i at distance j from the center.
/// The center is (0, 0).
struct VertexLabel {
    int leg = 0;
    int dist = 0;

    auto operator<=>(const VertexLabel&) const = default;
};

inline constexpr VertexLabel kCenter{0, 0};

/// Edge between (i, j) and (i, j+1), stored with the smaller distance first.
/// The center edge of leg i is ((0,0), (i,1)).
struct EdgeRef {
    VertexLabel lo;
    VertexLabel hi;

    int leg() const noexcept { return hi.leg; }
    auto operator<=>(const EdgeRef&) const = default;
};

/// A subdivided star K_{1,k}. Legs are kept in non-increasing order; legs()
/// is 0-based storage while labels use 1-based leg indices.
class SpiderSpec {
public:
    /// Sorts `legs` non-increasing. Throws TooFewLegs / NonPositiveLeg.
    /// `permutation[t]` is the original 0-based position of sorted leg t.
    static SpiderSpec make(std::span<const int> legs, std::vector<int>* permutation = nullptr);

    int leg_count() const noexcept { return static_cast<int>(legs_.size()); }
    /// Length of leg i, 1-based.
    int leg_length(int i) const { return legs_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& legs() const noexcept { return legs_; }

    int edge_count() const noexcept { return edge_count_; }
    int vertex_count() const noexcept { return edge_count_ + 1; }
    int min_leg() const noexcept { return legs_.back(); }

    bool is_valid(VertexLabel v) const noexcept;
    /// Dense index of a label in enumerate_vertices order.
    int index_of(VertexLabel v) const;
    VertexLabel label_at(int index) const;

    bool operator==(const SpiderSpec&) const = default;

private:
    explicit SpiderSpec(std::vector<int> legs);

    std::vector<int> legs_;
    std::vector<int> offset_;  // index of (i,1) for leg i (1-based, offset_[0] unused)
    int edge_count_ = 0;
};

/// Canonicalizing constructor; `permutation` as in SpiderSpec::make.
SpiderSpec make_spider(std::span<const int> legs, std::vector<int>* permutation = nullptr);

/// (0,0) then (i,j) in lexicographic order.
std::vector<VertexLabel> enumerate_vertices(const SpiderSpec& s);

/// Leg by leg, center edge first.
std::vector<EdgeRef> enumerate_edges(const SpiderSpec& s);

bool are_incident(const EdgeRef& e1, const EdgeRef& e2) noexcept;

std::int64_t binom2(std::int64_t n) noexcept;

/// C(m,2) minus C(deg u, 2) summed over vertices.
std::int64_t thrackle_bound(const SpiderSpec& s);

/// Throws LegTooShort if some leg has length < 2.
void require_legs_at_least_two(const SpiderSpec& s, const char* what);

/// Endpoint indices of every non-incident edge pair, in canonical edge order.
struct IndexedPair {
    int e1, e2;          // edge indices into enumerate_edges
    int a1, a2, b1, b2;  // endpoint vertex indices
};
std::vector<IndexedPair> non_incident_pairs(const SpiderSpec& s);

}  // namespace spider
