#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "spider/spider_model.hpp"

namespace spider {

/// Exact point; mpq_class keeps numerator/denominator canonical as long as
/// every value is built through arithmetic or canonicalize().
struct RationalPoint {
    mpq_class x;
    mpq_class y;

    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const RationalPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// Sign of (q - p) x (r - p).
Orientation orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);

/// True iff the segments meet in exactly one point interior to both.
bool segments_properly_cross(const RationalPoint& a1, const RationalPoint& a2,
                             const RationalPoint& b1, const RationalPoint& b2);

/// Closed-segment membership for a point already known to be collinear or not.
bool on_closed_segment(const RationalPoint& p, const RationalPoint& a, const RationalPoint& b);

/// A rectilinear drawing: one position per vertex, indexed like enumerate_vertices.
class CoordinateDrawing {
public:
    CoordinateDrawing(SpiderSpec spider, std::vector<RationalPoint> positions);

    const SpiderSpec& spider() const noexcept { return spider_; }
    const std::vector<RationalPoint>& positions() const noexcept { return positions_; }
    const RationalPoint& position(VertexLabel v) const {
        return positions_[static_cast<std::size_t>(spider_.index_of(v))];
    }

    bool edges_cross(const EdgeRef& e1, const EdgeRef& e2) const;

private:
    SpiderSpec spider_;
    std::vector<RationalPoint> positions_;
};

enum class ViolationKind { DuplicatePosition, VertexOnEdge, CollinearOverlap, ThreeEdgesConcurrent };

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<VertexLabel> vertices;
    std::vector<EdgeRef> edges;

    std::string describe() const;
};

/// Every violation of the good-drawing conditions; empty means the drawing is good.
std::vector<Violation> validate_good_drawing(const CoordinateDrawing& d);

/// Non-incident edge pairs that properly cross. Throws NotGoodDrawing unless
/// `require_good` is false.
std::int64_t count_crossings_geometric(const CoordinateDrawing& d, bool require_good = true);

std::string format_rational(const mpq_class& q);
/// Accepts "p/q" or "p"; throws Parse on anything else or a zero denominator.
mpq_class parse_rational(const std::string& text);

}  // namespace spider
