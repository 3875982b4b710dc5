#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "spider/convex_drawing.hpp"
#include "spider/geometry.hpp"
#include "spider/spider_model.hpp"

namespace spider {

/// Leg-thrackling graph of a drawing: legs are vertices, {a,b} is an edge iff
/// every non-incident pair with one edge on leg a and one on leg b crosses.
struct AuxGraph {
    int k = 0;
    std::set<std::pair<int, int>> edges;  // 1-based, a < b
    /// missed[a-1][b-1]: non-crossing cross-leg pairs between legs a and b.
    std::vector<std::vector<std::int64_t>> missed;

    std::int64_t non_edge_count() const { return binom2(k) - static_cast<std::int64_t>(edges.size()); }
};

struct BoundsReport {
    std::int64_t thrackle = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::optional<std::int64_t> exact;  // only for all legs of length 2
    std::int64_t conjectured = 0;
};

/// Thrackle bound minus sum over i >= 3 of (l_i - 1) * floor((i - 1) / 2).
std::int64_t lower_bound(const SpiderSpec& s);

/// Thrackle bound minus (C(k,2) - floor(k^2 / 4)).
std::int64_t upper_bound(const SpiderSpec& s);

/// Closed form for k legs of length 2. Throws KTooSmall for k < 3.
std::int64_t exact_s_k_2(int k);

/// Same value as lower_bound; kept separate because it is conjectural for
/// spiders whose bounds do not coincide.
std::int64_t conjectured_mrcr(const SpiderSpec& s);

BoundsReport compute_bounds(const SpiderSpec& s);

/// True when lower and upper bound coincide, so the value is proven.
bool bounds_coincide(const SpiderSpec& s);

AuxGraph auxiliary_graph(const SpiderSpec& s, const CrossingTest& crosses);
AuxGraph auxiliary_graph(const CyclicOrder& o);
AuxGraph auxiliary_graph(const CoordinateDrawing& d);

bool is_triangle_free(const AuxGraph& g);
std::int64_t mantel_max_edges(std::int64_t k);

}  // namespace spider
