#include "spider/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "spider/error.hpp"

namespace spider::io {
namespace {

struct LegMap {
    SpiderSpec spider;
    std::vector<int> new_index;  // original 1-based leg -> sorted 1-based leg
};

LegMap read_legs(const json& j) {
    if (!j.is_object() || !j.contains("legs") || !j["legs"].is_array()) {
        throw Error(ErrorCode::Parse, "expected an object with a \"legs\" array");
    }
    std::vector<int> legs;
    for (const auto& v : j["legs"]) {
        if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "leg lengths must be integers");
        legs.push_back(v.get<int>());
    }
    std::vector<int> perm;
    SpiderSpec s = make_spider(legs, &perm);
    std::vector<int> new_index(legs.size() + 1, 0);
    for (std::size_t t = 0; t < perm.size(); ++t) new_index[static_cast<std::size_t>(perm[t]) + 1] = static_cast<int>(t) + 1;
    return {std::move(s), std::move(new_index)};
}

VertexLabel read_label(const json& v, const LegMap& m) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
        throw Error(ErrorCode::Parse, "vertex labels must be [i,j] integer pairs, got " + v.dump());
    }
    VertexLabel l{v[0].get<int>(), v[1].get<int>()};
    if (l.leg >= 1 && static_cast<std::size_t>(l.leg) < m.new_index.size()) {
        l.leg = m.new_index[static_cast<std::size_t>(l.leg)];
    }
    if (!m.spider.is_valid(l)) throw Error(ErrorCode::InvalidLabel, v.dump() + " is not a vertex of the spider");
    return l;
}

}  // namespace

json to_json(const SpiderSpec& s) { return json{{"legs", s.legs()}}; }

json to_json(VertexLabel v) { return json::array({v.leg, v.dist}); }

json to_json(const EdgeRef& e) { return json::array({to_json(e.lo), to_json(e.hi)}); }

json to_json(const EdgePair& p) { return json::array({to_json(p.first), to_json(p.second)}); }

json to_json(const CyclicOrder& o) {
    json order = json::array();
    for (const auto& v : o.labels()) order.push_back(to_json(v));
    return json{{"legs", o.spider().legs()}, {"order", std::move(order)}};
}

json to_json(const CoordinateDrawing& d) {
    json positions = json::array();
    const auto labels = enumerate_vertices(d.spider());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto& p = d.positions()[v];
        positions.push_back(json{{"v", to_json(labels[v])}, {"x", format_rational(p.x)}, {"y", format_rational(p.y)}});
    }
    return json{{"legs", d.spider().legs()}, {"positions", std::move(positions)}};
}

json to_json(const BoundsReport& r) {
    json j;
    j["thrackle"] = r.thrackle;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    j["conjectured"] = r.conjectured;
    j["exact_is_proven"] = r.exact.has_value();
    return j;
}

json to_json(const AuxGraph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    json missed = json::array();
    for (int a = 1; a <= g.k; ++a)
        for (int b = a + 1; b <= g.k; ++b)
            missed.push_back(json{{"legs", json::array({a, b})},
                                  {"missed", g.missed[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]}});
    return json{{"k", g.k},
                {"edges", std::move(edges)},
                {"non_edges", g.non_edge_count()},
                {"triangle_free", is_triangle_free(g)},
                {"mantel_max_edges", mantel_max_edges(g.k)},
                {"missed_by_leg_pair", std::move(missed)}};
}

json to_json(const SearchResult& r) {
    json j;
    j["legs"] = r.witness.spider().legs();
    j["best_count"] = r.best_count;
    j["witness"] = to_json(r.witness)["order"];
    j["orders_examined"] = r.orders_examined;
    j["exhaustive"] = r.exhaustive;
    j["matches_conjecture"] = r.matches_conjecture ? json(*r.matches_conjecture) : json(nullptr);
    j["scope"] = "convex drawings only";
    return j;
}

json to_json(const VerifyRow& row) {
    json j;
    j["legs"] = row.spider.legs();
    j["conjectured"] = row.conjectured ? json(*row.conjectured) : json(nullptr);
    j["convex_max"] = row.convex_max ? json(*row.convex_max) : json(nullptr);
    j["equal"] = row.status == VerifyStatus::Equal;
    j["status"] = to_string(row.status);
    j["bounds_coincide"] = row.bounds_coincide;
    j["orders_examined"] = row.orders_examined;
    if (!row.message.empty()) j["message"] = row.message;
    return j;
}

SpiderSpec spider_from_json(const json& j) { return read_legs(j).spider; }

CyclicOrder order_from_json(const json& j) {
    const LegMap m = read_legs(j);
    if (!j.contains("order") || !j["order"].is_array()) throw Error(ErrorCode::Parse, "missing \"order\" array");
    std::vector<VertexLabel> seq;
    for (const auto& v : j["order"]) seq.push_back(read_label(v, m));
    return CyclicOrder(m.spider, seq);
}

CoordinateDrawing drawing_from_json(const json& j) {
    const LegMap m = read_legs(j);
    if (!j.contains("positions") || !j["positions"].is_array()) {
        throw Error(ErrorCode::Parse, "missing \"positions\" array");
    }
    const auto n = static_cast<std::size_t>(m.spider.vertex_count());
    std::vector<RationalPoint> pos(n);
    std::vector<char> seen(n, 0);
    for (const auto& entry : j["positions"]) {
        if (!entry.is_object() || !entry.contains("v") || !entry.contains("x") || !entry.contains("y") ||
            !entry["x"].is_string() || !entry["y"].is_string()) {
            throw Error(ErrorCode::Parse, "position entries need \"v\", and string \"x\"/\"y\": " + entry.dump());
        }
        const auto v = static_cast<std::size_t>(m.spider.index_of(read_label(entry["v"], m)));
        if (seen[v]++) throw Error(ErrorCode::Parse, "vertex " + entry["v"].dump() + " placed twice");
        pos[v] = {parse_rational(entry["x"].get<std::string>()), parse_rational(entry["y"].get<std::string>())};
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw Error(ErrorCode::Parse, "every vertex needs a position");
    }
    return CoordinateDrawing(m.spider, std::move(pos));
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

std::string verify_table(const std::vector<VerifyRow>& rows) {
    auto legs_text = [](const SpiderSpec& s) {
        std::string t;
        for (int l : s.legs()) t += (t.empty() ? "" : ",") + std::to_string(l);
        return t;
    };
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::size_t legs_w = 4;
    for (const auto& r : rows) legs_w = std::max(legs_w, legs_text(r.spider).size());

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(legs_w)) << "legs" << "  " << std::right << std::setw(11)
        << "conjectured" << "  " << std::setw(10) << "convex_max" << "  " << std::setw(10) << "orders"
        << "  " << std::left << std::setw(15) << "status" << "  proven\n";
    int flagged = 0;
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(legs_w)) << legs_text(r.spider) << "  " << std::right
            << std::setw(11) << opt(r.conjectured) << "  " << std::setw(10) << opt(r.convex_max) << "  "
            << std::setw(10) << r.orders_examined << "  " << std::left << std::setw(15) << to_string(r.status)
            << "  " << (r.bounds_coincide ? "yes" : "no") << "\n";
        if (r.status == VerifyStatus::Greater || r.status == VerifyStatus::Less) ++flagged;
    }
    out << "note: maxima are over convex drawings only; they equal mrcr only where lower and upper bounds coincide.\n";
    if (flagged) out << "*** " << flagged << " row(s) disagree with the conjectured value ***\n";
    return out.str();
}

}  // namespace spider::io
