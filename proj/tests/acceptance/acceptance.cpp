// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "spider/bounds.hpp"
#include "spider/convex_drawing.hpp"
#include "spider/search.hpp"

namespace {

using namespace spider;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

SpiderSpec S(std::vector<int> legs) { return make_spider(legs); }

std::string legs_text(const SpiderSpec& s) {
    std::string t;
    for (int l : s.legs()) t += (t.empty() ? "" : ",") + std::to_string(l);
    return t;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::int64_t missed_formula(const SpiderSpec& s) {
    std::int64_t m = 0;
    for (int i = 3; i <= s.leg_count(); ++i) m += std::int64_t{s.leg_length(i) - 1} * ((i - 1) / 2);
    return m;
}

Outcome constructive_order_reproduction() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto s = S({4, 3, 2, 2});
    const auto order = algorithm_order(s);
    const auto count = count_crossings_convex(order);
    const auto missed = missed_pairs(order);
    const std::vector<EdgePair> expected{
        {{kCenter, {1, 1}}, {{3, 1}, {3, 2}}},
        {{kCenter, {2, 1}}, {{4, 1}, {4, 2}}},
    };
    o.require(thrackle_bound(s) == 42, "thrackle bound " + std::to_string(thrackle_bound(s)) + " != 42");
    o.require(count == 40, "crossings " + std::to_string(count) + " != 40");
    o.require(missed == expected, "missed pairs differ from (0,0)-(1,1)x(3,1)-(3,2), (0,0)-(2,1)x(4,1)-(4,2)");
    const double t = seconds_since(start);
    o.require(t < 1.0, "took " + std::to_string(t) + " s");
    return o;
}

Outcome three_legs_length_two_maximum() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto s = S({2, 2, 2});
    const auto r = exhaustive_max(s);
    o.require(r.best_count == 8, "best " + std::to_string(r.best_count) + " != 8");
    o.require(r.best_count == thrackle_bound(s) - 1, "best != thrackle - 1");
    o.require(r.orders_examined <= 360, "examined " + std::to_string(r.orders_examined) + " > 360");
    const double t = seconds_since(start);
    o.require(t < 1.0, "took " + std::to_string(t) + " s");
    return o;
}

Outcome length_two_closed_form() {
    Outcome o;
    for (int k = 3; k <= 12; ++k) {
        const auto s = S(std::vector<int>(static_cast<std::size_t>(k), 2));
        o.require(exact_s_k_2(k) == lower_bound(s) && lower_bound(s) == upper_bound(s),
                  "closed form/lower/upper disagree at k=" + std::to_string(k));
    }
    for (int k = 3; k <= 5; ++k) {
        const auto s = S(std::vector<int>(static_cast<std::size_t>(k), 2));
        ExhaustiveOptions opts;
        if (k == 5) opts.budget = 2'000'000;
        const auto start = std::chrono::steady_clock::now();
        const auto r = exhaustive_max(s, opts);
        const double t = seconds_since(start);
        o.require(r.best_count == exact_s_k_2(k), "exhaustive k=" + std::to_string(k) + " gave " +
                                                      std::to_string(r.best_count) + ", expected " +
                                                      std::to_string(exact_s_k_2(k)));
        const double limit = k == 5 ? 120.0 : (k == 4 ? 5.0 : 1.0);
        o.require(t < limit, "exhaustive k=" + std::to_string(k) + " took " + std::to_string(t) + " s");
    }
    return o;
}

Outcome constructive_identity() {
    Outcome o;
    int spiders = 0;
    for (const auto& legs : oracle::legs_lists(13, 2)) {
        const auto s = S(legs);
        const auto c = count_crossings_convex(algorithm_order(s));
        o.require(c == thrackle_bound(s) - missed_formula(s), "legs " + legs_text(s) + ": " + std::to_string(c));
        ++spiders;
    }
    o.require(spiders > 0, "no spiders enumerated");
    o.detail = o.ok ? std::to_string(spiders) + " spiders" : o.detail;
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 1000 && o.ok; ++trial) {
        const auto s = S(oracle::random_legs(rng, 3, 5, 1, 4, 11));
        auto labels = enumerate_vertices(s);
        std::shuffle(labels.begin(), labels.end(), rng);
        const CyclicOrder order(s, labels);
        const auto d = realize(order);
        o.require(validate_good_drawing(d).empty(), "realized drawing not good for legs " + legs_text(s));
        o.require(count_crossings_convex(order) == count_crossings_geometric(d, false),
                  "convex/geometric counts differ for legs " + legs_text(s));
    }
    const double t = seconds_since(start);
    o.require(t < 30.0, "took " + std::to_string(t) + " s");
    return o;
}

Outcome auxiliary_graph_machinery() {
    Outcome o;
    std::uint64_t orders = 0;
    for (const auto& legs : oracle::legs_lists(9, 2)) {
        const auto s = S(legs);
        const auto t = thrackle_bound(s);
        const auto mantel = mantel_max_edges(s.leg_count());
        std::vector<int> seq(static_cast<std::size_t>(s.vertex_count()));
        std::iota(seq.begin(), seq.end(), 0);
        do {
            const auto order = CyclicOrder::from_indices(s, seq);
            const auto g = auxiliary_graph(order);
            ++orders;
            if (!is_triangle_free(g) || static_cast<std::int64_t>(g.edges.size()) > mantel ||
                t - count_crossings_convex(order) < g.non_edge_count()) {
                o.require(false, "violated by an order of legs " + legs_text(s));
                return o;
            }
        } while (std::next_permutation(seq.begin() + 1, seq.end()));
    }
    o.detail = std::to_string(orders) + " orders";
    return o;
}

Outcome conjecture_table() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    auto spiders = expand_legs_range("k=3,len=2..3");
    spiders.push_back(S({2, 2, 2, 2}));
    const auto rows = verify_conjecture(spiders);
    for (const auto& r : rows) {
        o.require(r.status == VerifyStatus::Equal, "legs " + legs_text(r.spider) + ": " + to_string(r.status));
    }
    const double t = seconds_since(start);
    o.require(t < 300.0, "took " + std::to_string(t) + " s");
    if (o.ok) o.detail = std::to_string(rows.size()) + " rows equal (convex drawings only)";
    return o;
}

Outcome sandwich() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 500 && o.ok; ++trial) {
        const auto s = S(oracle::random_legs(rng, 3, 9, 2, 9, 29));
        HillClimbOptions opts;
        opts.seed = static_cast<std::uint64_t>(trial);
        opts.restarts = 2;
        opts.steps = 200;
        const auto r = hill_climb(s, opts);
        o.require(lower_bound(s) <= r.best_count && r.best_count <= upper_bound(s) &&
                      upper_bound(s) <= thrackle_bound(s),
                  "legs " + legs_text(s) + ": hill climb " + std::to_string(r.best_count));
    }
    const double t = seconds_since(start);
    o.require(t < 60.0, "took " + std::to_string(t) + " s");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 constructive order on legs 4,3,2,2: 40 crossings, exactly the two expected missed pairs",
         constructive_order_reproduction},
        {"2 exhaustive convex maximum of three legs of length 2 is 8 = thrackle - 1", three_legs_length_two_maximum},
        {"3 length-2 closed form = lower = upper (k=3..12), exhaustive agrees for k=3,4,5", length_two_closed_form},
        {"4 constructive order attains the lower bound for every spider with legs >= 2, n <= 14",
         constructive_identity},
        {"5 convex count = geometric count of the exact realization, 1000 random orders", oracle_equivalence},
        {"6 auxiliary graph triangle-free, Mantel-bounded, non-edges <= missed crossings (n <= 10)",
         auxiliary_graph_machinery},
        {"7 conjectured value = exhaustive convex maximum for k=3 legs 2..3 and legs 2,2,2,2", conjecture_table},
        {"8 lower <= hill climb <= upper <= thrackle on 500 random spiders", sandwich},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double t = seconds_since(start);
        std::printf("[%s] %s (%.2f s)%s%s\n", r.ok ? "PASS" : "FAIL", name.c_str(), t, r.detail.empty() ? "" : ": ",
                    r.detail.c_str());
        std::fflush(stdout);
        failed += r.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
