#include "spider/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "spider/error.hpp"

namespace spider {
namespace {

int sign(const mpq_class& v) { return sgn(v); }

std::string label_text(VertexLabel v) {
    return "(" + std::to_string(v.leg) + "," + std::to_string(v.dist) + ")";
}

std::string edge_text(const EdgeRef& e) { return label_text(e.lo) + "-" + label_text(e.hi); }

// Intersection point of two properly crossing segments.
RationalPoint crossing_point(const RationalPoint& a1, const RationalPoint& a2,
                             const RationalPoint& b1, const RationalPoint& b2) {
    const mpq_class rx = a2.x - a1.x, ry = a2.y - a1.y;
    const mpq_class sx = b2.x - b1.x, sy = b2.y - b1.y;
    const mpq_class denom = rx * sy - ry * sx;
    const mpq_class t = ((b1.x - a1.x) * sy - (b1.y - a1.y) * sx) / denom;
    return {mpq_class(a1.x + t * rx), mpq_class(a1.y + t * ry)};
}

}  // namespace

Orientation orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
    const mpq_class cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return static_cast<Orientation>(sign(cross));
}

bool on_closed_segment(const RationalPoint& p, const RationalPoint& a, const RationalPoint& b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_properly_cross(const RationalPoint& a1, const RationalPoint& a2,
                             const RationalPoint& b1, const RationalPoint& b2) {
    const int o1 = static_cast<int>(orientation(a1, a2, b1));
    const int o2 = static_cast<int>(orientation(a1, a2, b2));
    const int o3 = static_cast<int>(orientation(b1, b2, a1));
    const int o4 = static_cast<int>(orientation(b1, b2, a2));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

CoordinateDrawing::CoordinateDrawing(SpiderSpec spider, std::vector<RationalPoint> positions)
    : spider_(std::move(spider)), positions_(std::move(positions)) {
    if (static_cast<int>(positions_.size()) != spider_.vertex_count()) {
        throw Error(ErrorCode::InvalidOrder,
                    "drawing has " + std::to_string(positions_.size()) + " positions for " +
                        std::to_string(spider_.vertex_count()) + " vertices");
    }
    for (auto& p : positions_) {
        p.x.canonicalize();
        p.y.canonicalize();
    }
}

bool CoordinateDrawing::edges_cross(const EdgeRef& e1, const EdgeRef& e2) const {
    if (are_incident(e1, e2)) return false;
    return segments_properly_cross(position(e1.lo), position(e1.hi), position(e2.lo),
                                   position(e2.hi));
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DuplicatePosition: return "DuplicatePosition";
        case ViolationKind::VertexOnEdge: return "VertexOnEdge";
        case ViolationKind::CollinearOverlap: return "CollinearOverlap";
        case ViolationKind::ThreeEdgesConcurrent: return "ThreeEdgesConcurrent";
    }
    return "Unknown";
}

std::string Violation::describe() const {
    std::ostringstream out;
    out << to_string(kind);
    if (!vertices.empty()) {
        out << " vertices";
        for (const auto& v : vertices) out << ' ' << label_text(v);
    }
    if (!edges.empty()) {
        out << " edges";
        for (const auto& e : edges) out << ' ' << edge_text(e);
    }
    return out.str();
}

std::vector<Violation> validate_good_drawing(const CoordinateDrawing& d) {
    const SpiderSpec& s = d.spider();
    const auto vertices = enumerate_vertices(s);
    const auto edges = enumerate_edges(s);
    const auto& pos = d.positions();
    std::vector<Violation> out;

    std::map<RationalPoint, std::vector<VertexLabel>> by_point;
    for (std::size_t v = 0; v < vertices.size(); ++v) by_point[pos[v]].push_back(vertices[v]);
    for (auto& [point, labels] : by_point) {
        if (labels.size() > 1) out.push_back({ViolationKind::DuplicatePosition, labels, {}});
    }

    auto at = [&](VertexLabel v) -> const RationalPoint& { return d.position(v); };

    for (const auto& e : edges) {
        for (const auto& v : vertices) {
            if (v == e.lo || v == e.hi) continue;
            if (at(v) == at(e.lo) || at(v) == at(e.hi)) continue;  // reported as duplicate
            if (on_closed_segment(at(v), at(e.lo), at(e.hi))) {
                out.push_back({ViolationKind::VertexOnEdge, {v}, {e}});
            }
        }
    }

    // Collinear pairs sharing a segment of positive length.
    for (std::size_t a = 0; a < edges.size(); ++a) {
        const auto& p1 = at(edges[a].lo);
        const auto& p2 = at(edges[a].hi);
        if (p1 == p2) continue;
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const auto& q1 = at(edges[b].lo);
            const auto& q2 = at(edges[b].hi);
            if (q1 == q2) continue;
            if (orientation(p1, p2, q1) != Orientation::Collinear ||
                orientation(p1, p2, q2) != Orientation::Collinear) {
                continue;
            }
            // Project on the dominant axis of the first segment.
            const bool use_x = p1.x != p2.x;
            auto coord = [&](const RationalPoint& p) -> const mpq_class& { return use_x ? p.x : p.y; };
            const mpq_class lo = std::max(std::min(coord(p1), coord(p2)), std::min(coord(q1), coord(q2)));
            const mpq_class hi = std::min(std::max(coord(p1), coord(p2)), std::max(coord(q1), coord(q2)));
            if (lo < hi) out.push_back({ViolationKind::CollinearOverlap, {}, {edges[a], edges[b]}});
        }
    }

    std::map<RationalPoint, std::set<std::size_t>> through;
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const auto& p1 = at(edges[a].lo);
            const auto& p2 = at(edges[a].hi);
            const auto& q1 = at(edges[b].lo);
            const auto& q2 = at(edges[b].hi);
            if (!segments_properly_cross(p1, p2, q1, q2)) continue;
            auto& set = through[crossing_point(p1, p2, q1, q2)];
            set.insert(a);
            set.insert(b);
        }
    }
    for (const auto& [point, members] : through) {
        if (members.size() < 3) continue;
        Violation v{ViolationKind::ThreeEdgesConcurrent, {}, {}};
        for (std::size_t e : members) v.edges.push_back(edges[e]);
        out.push_back(std::move(v));
    }
    return out;
}

std::int64_t count_crossings_geometric(const CoordinateDrawing& d, bool require_good) {
    if (require_good) {
        const auto violations = validate_good_drawing(d);
        if (!violations.empty()) {
            throw Error(ErrorCode::NotGoodDrawing,
                        std::to_string(violations.size()) + " violation(s), first: " +
                            violations.front().describe());
        }
    }
    std::int64_t count = 0;
    for (const auto& p : non_incident_pairs(d.spider())) {
        const auto& pos = d.positions();
        if (segments_properly_cross(pos[p.a1], pos[p.a2], pos[p.b1], pos[p.b2])) ++count;
    }
    return count;
}

std::string format_rational(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto integer_like = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!integer_like(num) || !integer_like(den)) {
        throw Error(ErrorCode::Parse, "not a rational \"num/den\": '" + text + "'");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class dd(den[0] == '+' ? den.substr(1) : den, 10);
    if (dd == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
    mpq_class q(n, dd);
    q.canonicalize();
    return q;
}

}  // namespace spider
