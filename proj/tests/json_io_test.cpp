#include <gtest/gtest.h>

#include "spider/error.hpp"
#include "spider/json_io.hpp"

namespace spider {
namespace {

using io::json;

TEST(JsonIo, SpiderAndBounds) {
    const auto s = io::spider_from_json(json::parse(R"({"legs":[2,4,3,2]})"));
    EXPECT_EQ(s.legs(), (std::vector<int>{4, 3, 2, 2}));
    EXPECT_EQ(io::to_json(s).dump(), R"({"legs":[4,3,2,2]})");
    EXPECT_EQ(io::to_json(compute_bounds(s)),
              json::parse(R"({"thrackle":42,"lower":40,"upper":40,"exact":null,"conjectured":40,"exact_is_proven":false})"));
    EXPECT_THROW(io::spider_from_json(json::parse(R"({"legs":[2,2]})")), Error);
    EXPECT_THROW(io::spider_from_json(json::parse(R"({"legs":[2,"x",2]})")), Error);
    EXPECT_THROW(io::spider_from_json(json::parse(R"([2,2,2])")), Error);
}

TEST(JsonIo, LabelsAndEdges) {
    EXPECT_EQ(io::to_json(VertexLabel{3, 2}).dump(), "[3,2]");
    EXPECT_EQ(io::to_json(EdgeRef{kCenter, {2, 1}}).dump(), "[[0,0],[2,1]]");
}

TEST(JsonIo, OrderRoundTripProperty) {
    for (const auto& legs : std::vector<std::vector<int>>{{2, 2, 2}, {4, 3, 2, 2}, {5, 1, 3}}) {
        const auto s = make_spider(legs);
        auto labels = enumerate_vertices(s);
        std::reverse(labels.begin() + 1, labels.end());
        const CyclicOrder o(s, labels);
        EXPECT_EQ(io::order_from_json(io::to_json(o)), o);
        const auto d = realize(o);
        const auto back = io::drawing_from_json(io::to_json(d));
        EXPECT_EQ(back.positions(), d.positions());
    }
}

TEST(JsonIo, OrderWithUnsortedLegsIsRemapped) {
    // Leg 1 in the file is the short one; after sorting it becomes leg 3.
    const auto j = json::parse(R"({"legs":[2,3,2],"order":[[0,0],[1,1],[2,1],[1,2],[2,2],[3,1],[2,3],[3,2]]})");
    const auto o = io::order_from_json(j);
    EXPECT_EQ(o.spider().legs(), (std::vector<int>{3, 2, 2}));
    const std::vector<VertexLabel> expected{{0, 0}, {2, 1}, {1, 1}, {2, 2}, {1, 2}, {3, 1}, {1, 3}, {3, 2}};
    EXPECT_EQ(o.labels(), expected);
}

TEST(JsonIo, MalformedDocuments) {
    EXPECT_THROW(io::parse("{not json"), Error);
    EXPECT_THROW(io::order_from_json(json::parse(R"({"legs":[2,2,2],"order":[[0,0],[1,1]]})")), Error);
    EXPECT_THROW(io::order_from_json(json::parse(R"({"legs":[2,2,2],"order":[[0,0],[1,3],[1,2],[2,1],[2,2],[3,1],[3,2]]})")),
                 Error);
    EXPECT_THROW(io::drawing_from_json(json::parse(R"({"legs":[1,1,1],"positions":[{"v":[0,0],"x":"0","y":"0"}]})")),
                 Error);
    EXPECT_THROW(io::drawing_from_json(json::parse(
                     R"({"legs":[1,1,1],"positions":[{"v":[0,0],"x":"0.5","y":"0"},{"v":[1,1],"x":"1","y":"0"},{"v":[2,1],"x":"0","y":"1"},{"v":[3,1],"x":"-1","y":"0"}]})")),
                 Error);
}

TEST(JsonIo, DrawingUsesRationalStrings) {
    const auto j = io::to_json(realize(algorithm_order(make_spider(std::vector<int>{2, 2, 2}))));
    ASSERT_EQ(j["positions"].size(), 7u);
    for (const auto& p : j["positions"]) {
        EXPECT_NE(p["x"].get<std::string>().find('/'), std::string::npos);
        EXPECT_EQ(p["x"].get<std::string>().find('.'), std::string::npos);
    }
}

TEST(JsonIo, VerifyTable) {
    const auto rows = verify_conjecture({make_spider(std::vector<int>{2, 2, 2}), make_spider(std::vector<int>{1, 1, 1})});
    const auto table = io::verify_table(rows);
    EXPECT_NE(table.find("2,2,2"), std::string::npos);
    EXPECT_NE(table.find("equal"), std::string::npos);
    EXPECT_NE(table.find("rejected"), std::string::npos);
    EXPECT_NE(table.find("convex drawings only"), std::string::npos);
    EXPECT_EQ(io::to_json(rows[0])["equal"], true);
}

}  // namespace
}  // namespace spider
