#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "spider/bounds.hpp"
#include "spider/convex_drawing.hpp"
#include "spider/geometry.hpp"
#include "spider/search.hpp"
#include "spider/spider_model.hpp"

namespace spider::io {

using nlohmann::json;

json to_json(const SpiderSpec& s);
json to_json(VertexLabel v);
json to_json(const EdgeRef& e);
json to_json(const EdgePair& p);
json to_json(const CyclicOrder& o);
json to_json(const CoordinateDrawing& d);
json to_json(const BoundsReport& r);
json to_json(const AuxGraph& g);
json to_json(const SearchResult& r);
json to_json(const VerifyRow& row);

/// Reads {"legs":[...]}. Labels elsewhere in the same document refer to the
/// legs as written; readers below remap them after sorting.
SpiderSpec spider_from_json(const json& j);

/// {"legs":[...],"order":[[i,j],...]}
CyclicOrder order_from_json(const json& j);

/// {"legs":[...],"positions":[{"v":[i,j],"x":"p/q","y":"r/s"},...]}
CoordinateDrawing drawing_from_json(const json& j);

/// Parses text; throws Error(Parse) on malformed JSON.
json parse(const std::string& text);

/// Aligned plain-text table for a verification run.
std::string verify_table(const std::vector<VerifyRow>& rows);

}  // namespace spider::io
