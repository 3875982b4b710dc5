#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spider/geometry.hpp"
#include "spider/spider_model.hpp"

namespace spider {

/// A convex drawing: the anticlockwise circular sequence of all vertices,
/// rotated so that the center comes first.
class CyclicOrder {
public:
    /// Throws InvalidOrder unless `sequence` is a permutation of the vertices.
    CyclicOrder(SpiderSpec spider, const std::vector<VertexLabel>& sequence);
    /// Same, from dense vertex indices.
    static CyclicOrder from_indices(SpiderSpec spider, const std::vector<int>& sequence);

    const SpiderSpec& spider() const noexcept { return spider_; }
    const std::vector<int>& indices() const noexcept { return sequence_; }
    std::vector<VertexLabel> labels() const;
    /// Position of vertex index v in the sequence.
    int position_of(int v) const { return position_[static_cast<std::size_t>(v)]; }

    CyclicOrder reversed() const;

    bool operator==(const CyclicOrder& o) const { return spider_ == o.spider_ && sequence_ == o.sequence_; }

private:
    CyclicOrder(SpiderSpec spider, std::vector<int> sequence, bool);

    SpiderSpec spider_;
    std::vector<int> sequence_;
    std::vector<int> position_;
};

/// Chords (a1,a2) and (b1,b2) cross iff their endpoints alternate around the circle.
/// Arguments are circular positions; all four must be distinct.
inline bool chords_alternate(int a1, int a2, int b1, int b2) noexcept {
    const int lo = a1 < a2 ? a1 : a2;
    const int hi = a1 < a2 ? a2 : a1;
    return (lo < b1 && b1 < hi) != (lo < b2 && b2 < hi);
}

/// Convex placement [V0, V1, V2, V3, V4]. Throws LegTooShort.
CyclicOrder algorithm_order(const SpiderSpec& s);

bool chords_cross(const CyclicOrder& o, const EdgeRef& e1, const EdgeRef& e2);

std::int64_t count_crossings_convex(const CyclicOrder& o);

using EdgePair = std::pair<EdgeRef, EdgeRef>;
using CrossingTest = std::function<bool(const EdgeRef&, const EdgeRef&)>;

/// Non-incident pairs that do not cross, canonical edge order.
std::vector<EdgePair> missed_pairs(const SpiderSpec& s, const CrossingTest& crosses);
std::vector<EdgePair> missed_pairs(const CyclicOrder& o);
std::vector<EdgePair> missed_pairs(const CoordinateDrawing& d);

/// Exact points on the unit circle in the order's angular order, retried until
/// the drawing is good.
CoordinateDrawing realize(const CyclicOrder& o);

/// realize() with explicit strictly increasing circle parameters, one per
/// sequence position. Each retry t adds t^2 * retry / 1000003 to parameter t.
/// `retries` receives the number of perturbations used.
CoordinateDrawing realize_with_parameters(const CyclicOrder& o, const std::vector<mpq_class>& base,
                                          int* retries = nullptr);

struct ExportOptions {
    std::optional<std::int64_t> crossings;  // annotation, omitted when empty
    std::string title;
};

std::string export_svg(const CoordinateDrawing& d, const ExportOptions& options = {});
std::string export_tikz(const CoordinateDrawing& d, const ExportOptions& options = {});

}  // namespace spider
