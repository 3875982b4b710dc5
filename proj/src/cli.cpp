#include "spider/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "spider/bounds.hpp"
#include "spider/convex_drawing.hpp"
#include "spider/error.hpp"
#include "spider/json_io.hpp"
#include "spider/search.hpp"

namespace spider::cli {
namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kUsage = 2;

// Carries a usage problem up to run().
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string legs;
    std::string in;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_in = true) {
    cmd->add_option("--legs", c.legs, "Leg lengths, e.g. 4,3,2,2");
    if (with_in) cmd->add_option("--in", c.in, "JSON input file ('-' for stdin)");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text", "svg", "tikz"}));
    cmd->add_option("--out", c.out, "Write output to FILE instead of stdout");
}

SpiderSpec parse_legs(const std::string& text) {
    std::vector<int> legs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--legs: '" + item + "' is not an integer");
        }
        if (used != item.size()) throw UsageError("--legs: '" + item + "' is not an integer");
        legs.push_back(v);
    }
    try {
        return make_spider(legs);
    } catch (const Error& e) {
        throw UsageError(std::string("--legs: ") + e.what());
    }
}

std::string read_source(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), {}};
}

json read_document(const Common& c, std::istream& in) { return io::parse(read_source(c.in, in)); }

// Spider errors in input documents are usage errors, like bad --legs.
template <typename F>
auto as_usage(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::TooFewLegs || e.code() == ErrorCode::NonPositiveLeg) throw UsageError(e.what());
        throw;
    }
}

SpiderSpec spider_of(const Common& c, std::istream& in) {
    if (!c.legs.empty()) return parse_legs(c.legs);
    if (c.in.empty()) throw UsageError("either --legs or --in is required");
    const json doc = read_document(c, in);
    return as_usage([&] { return io::spider_from_json(doc); });
}

std::string legs_text(const SpiderSpec& s) {
    std::string t;
    for (int l : s.legs()) t += (t.empty() ? "" : ",") + std::to_string(l);
    return t;
}

std::string label_text(VertexLabel v) { return "(" + std::to_string(v.leg) + "," + std::to_string(v.dist) + ")"; }

std::string edge_text(const EdgeRef& e) { return label_text(e.lo) + "-" + label_text(e.hi); }

std::string drawing_graphic(const CoordinateDrawing& d, const std::string& format, std::int64_t crossings) {
    ExportOptions opts;
    opts.crossings = crossings;
    opts.title = "spider " + legs_text(d.spider());
    return format == "tikz" ? export_tikz(d, opts) : export_svg(d, opts);
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string cmd_bounds(const Common& c, std::istream& in) {
    const SpiderSpec s = spider_of(c, in);
    const BoundsReport r = compute_bounds(s);
    if (c.format == "text") {
        std::ostringstream o;
        o << "legs " << legs_text(s) << "\n"
          << "thrackle     " << r.thrackle << "\n"
          << "lower        " << r.lower << "\n"
          << "upper        " << r.upper << "\n"
          << "exact        " << (r.exact ? std::to_string(*r.exact) : "-") << "\n"
          << "conjectured  " << r.conjectured << (bounds_coincide(s) ? " (proven: bounds coincide)" : "") << "\n";
        return o.str();
    }
    if (c.format != "json") throw UsageError("bounds: --format must be json or text");
    return dump(io::to_json(r));
}

std::string cmd_draw(const Common& c, std::istream& in) {
    const SpiderSpec s = spider_of(c, in);
    const CyclicOrder o = algorithm_order(s);
    const CoordinateDrawing d = realize(o);
    const std::int64_t crossings = count_crossings_convex(o);
    if (c.format == "svg" || c.format == "tikz") return drawing_graphic(d, c.format, crossings);
    if (c.format == "text") {
        std::ostringstream t;
        t << "legs " << legs_text(s) << "\norder";
        for (const auto& v : o.labels()) t << ' ' << label_text(v);
        t << "\ncrossings " << crossings << " of thrackle bound " << thrackle_bound(s) << "\n";
        return t.str();
    }
    json j = io::to_json(d);
    j["order"] = io::to_json(o)["order"];
    j["crossings"] = crossings;
    j["thrackle"] = thrackle_bound(s);
    return dump(j);
}

std::string cmd_count(const Common& c, bool diagnose, std::istream& in, int& status) {
    json doc;
    if (!c.in.empty() || c.legs.empty()) {
        doc = read_document(c, in);
    } else {
        doc = io::to_json(algorithm_order(parse_legs(c.legs)));
    }
    if (!doc.is_object()) throw Error(ErrorCode::Parse, "expected a JSON object");
    const bool has_order = doc.contains("order");
    const bool has_positions = doc.contains("positions");
    if (!has_order && !has_positions) throw Error(ErrorCode::Parse, "input needs \"order\" or \"positions\"");

    json j;
    std::optional<std::int64_t> order_count;
    std::optional<SpiderSpec> spider;
    std::vector<EdgePair> missed;
    std::optional<AuxGraph> aux;
    if (has_order) {
        const CyclicOrder o = as_usage([&] { return io::order_from_json(doc); });
        spider = o.spider();
        order_count = count_crossings_convex(o);
        missed = missed_pairs(o);
        if (o.spider().min_leg() >= 2) aux = auxiliary_graph(o);
        j["source"] = "order";
    }
    if (has_positions) {
        const CoordinateDrawing d = as_usage([&] { return io::drawing_from_json(doc); });
        spider = d.spider();
        const auto violations = validate_good_drawing(d);
        json vj = json::array();
        for (const auto& v : violations) vj.push_back(v.describe());
        j["valid"] = violations.empty();
        j["violations"] = vj;
        if (!violations.empty() && !diagnose) {
            throw Error(ErrorCode::NotGoodDrawing, violations.front().describe() + " (" +
                                                       std::to_string(violations.size()) +
                                                       " violation(s); use --diagnose to count anyway)");
        }
        const std::int64_t geometric = count_crossings_geometric(d, false);
        if (order_count && *order_count != geometric) {
            j["order_crossings"] = *order_count;
            status = kValidation;
        }
        order_count = geometric;
        missed = missed_pairs(d);
        aux.reset();
        if (d.spider().min_leg() >= 2) aux = auxiliary_graph(d);
        j["source"] = has_order ? "order+drawing" : "drawing";
    }
    j["legs"] = spider->legs();
    j["crossings"] = *order_count;
    j["thrackle"] = thrackle_bound(*spider);
    json mj = json::array();
    for (const auto& p : missed) mj.push_back(io::to_json(p));
    j["missed_pairs"] = mj;
    j["aux_graph"] = aux ? io::to_json(*aux) : json(nullptr);

    if (c.format == "text") {
        std::ostringstream t;
        t << "legs " << legs_text(*spider) << "\ncrossings " << *order_count << " of thrackle bound "
          << thrackle_bound(*spider) << "\n";
        for (const auto& p : missed) t << "missed " << edge_text(p.first) << " x " << edge_text(p.second) << "\n";
        if (aux) {
            t << "aux graph edges";
            for (const auto& [a, b] : aux->edges) t << " {" << a << "," << b << "}";
            t << "\ntriangle-free " << (is_triangle_free(*aux) ? "yes" : "no") << "\n";
        }
        return t.str();
    }
    if (c.format != "json") throw UsageError("count: --format must be json or text");
    return dump(j);
}

struct SearchFlags {
    bool exhaustive = false;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 1;
    int restarts = 8;
    int steps = 2000;
    bool no_symmetry = false;
    bool leg_symmetry = false;
    unsigned threads = 0;
};

ExhaustiveOptions exhaustive_options(const SearchFlags& f) {
    ExhaustiveOptions o;
    o.budget = f.budget;
    o.reflection = !f.no_symmetry;
    o.leg_symmetry = f.leg_symmetry && !f.no_symmetry;
    o.threads = f.threads;
    return o;
}

std::string cmd_search(const Common& c, const SearchFlags& f, std::istream& in) {
    const SpiderSpec s = spider_of(c, in);
    SearchResult r = f.exhaustive ? exhaustive_max(s, exhaustive_options(f))
                                  : hill_climb(s, HillClimbOptions{f.seed, f.restarts, f.steps, f.threads});
    json j = io::to_json(r);
    if (s.min_leg() >= 2) {
        j["lower"] = lower_bound(s);
        j["upper"] = upper_bound(s);
        j["conjectured"] = conjectured_mrcr(s);
    }
    if (c.format == "text") {
        std::ostringstream t;
        t << "legs " << legs_text(s) << "\n"
          << (r.exhaustive ? "exhaustive" : "hill-climb") << " best " << r.best_count << " over "
          << r.orders_examined << " orders (convex drawings only)\nwitness";
        for (const auto& v : r.witness.labels()) t << ' ' << label_text(v);
        t << "\n";
        if (r.matches_conjecture) t << "matches conjecture " << (*r.matches_conjecture ? "yes" : "no") << "\n";
        return t.str();
    }
    if (c.format != "json") throw UsageError("search: --format must be json or text");
    return dump(j);
}

std::string cmd_verify(const Common& c, const std::vector<std::string>& ranges,
                       const std::vector<std::string>& legs_list, const SearchFlags& f) {
    std::vector<SpiderSpec> spiders;
    for (const auto& r : ranges) {
        try {
            for (auto& s : expand_legs_range(r)) spiders.push_back(std::move(s));
        } catch (const Error& e) {
            throw UsageError(std::string("--range: ") + e.what());
        }
    }
    for (const auto& l : legs_list) spiders.push_back(parse_legs(l));
    if (!c.legs.empty()) spiders.push_back(parse_legs(c.legs));
    if (spiders.empty()) throw UsageError("verify: give at least one --range or --legs");

    const auto rows = verify_conjecture(spiders, exhaustive_options(f));
    if (c.format == "text") return io::verify_table(rows);
    if (c.format != "json") throw UsageError("verify: --format must be json or text");
    json jr = json::array();
    bool all_equal = true;
    for (const auto& r : rows) {
        jr.push_back(io::to_json(r));
        all_equal = all_equal && r.status == VerifyStatus::Equal;
    }
    return dump(json{{"rows", jr}, {"all_equal", all_equal}, {"scope", "convex drawings only"}});
}

std::string cmd_export(const Common& c, std::istream& in) {
    const std::string format = c.format == "json" ? "svg" : c.format;
    if (format != "svg" && format != "tikz") throw UsageError("export: --format must be svg or tikz");
    if (!c.legs.empty() && c.in.empty()) {
        const CyclicOrder o = algorithm_order(parse_legs(c.legs));
        return drawing_graphic(realize(o), format, count_crossings_convex(o));
    }
    const json doc = read_document(c, in);
    if (doc.is_object() && doc.contains("positions")) {
        const CoordinateDrawing d = as_usage([&] { return io::drawing_from_json(doc); });
        return drawing_graphic(d, format, count_crossings_geometric(d, false));
    }
    const CyclicOrder o = as_usage([&] { return io::order_from_json(doc); });
    return drawing_graphic(realize(o), format, count_crossings_convex(o));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crossing-maximal convex drawings and bounds for spider graphs", "spidercross"};
    app.require_subcommand(1);

    Common common;
    SearchFlags flags;
    bool diagnose = false;
    std::vector<std::string> ranges, legs_list;

    auto* bounds = app.add_subcommand("bounds", "Thrackle, lower, upper, exact and conjectured values");
    add_common(bounds, common);
    auto* draw = app.add_subcommand("draw", "Constructive convex order and its exact realization");
    add_common(draw, common);
    auto* count = app.add_subcommand("count", "Count crossings of an order or coordinate drawing");
    add_common(count, common);
    count->add_flag("--diagnose", diagnose, "Report violations and count invalid drawings anyway");

    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget", flags.budget, "Maximum number of orders for exhaustive search");
        cmd->add_flag("--no-symmetry", flags.no_symmetry, "Disable all symmetry reduction");
        cmd->add_flag("--leg-symmetry", flags.leg_symmetry, "Also quotient by permutations of equal legs");
        cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    };
    auto* search = app.add_subcommand("search", "Maximize crossings over convex drawings");
    add_common(search, common);
    add_search_flags(search);
    search->add_flag("--exhaustive", flags.exhaustive, "Enumerate every cyclic order");
    search->add_option("--seed", flags.seed, "Hill-climb seed");
    search->add_option("--restarts", flags.restarts, "Hill-climb restarts")->check(CLI::PositiveNumber);
    search->add_option("--steps", flags.steps, "Hill-climb steps per restart")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand(
        "verify",
        "Compare exhaustive convex maxima with the conjectured value.\n"
        "--range uses the grammar \"k=A..B,len=C..D\" (single values allowed) and expands\n"
        "to every non-increasing legs list; --range and --legs-list may repeat");
    add_common(verify, common, false);
    add_search_flags(verify);
    verify->add_option("--range", ranges, "Legs range expression, e.g. k=3..4,len=2..3");
    verify->add_option("--legs-list", legs_list, "Extra spider, e.g. 2,2,2,2");

    auto* exp = app.add_subcommand("export", "SVG or TikZ rendering of an order or drawing");
    add_common(exp, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        std::string text;
        int status = kOk;
        if (bounds->parsed()) text = cmd_bounds(common, in);
        else if (draw->parsed()) text = cmd_draw(common, in);
        else if (count->parsed()) text = cmd_count(common, diagnose, in, status);
        else if (search->parsed()) text = cmd_search(common, flags, in);
        else if (verify->parsed()) text = cmd_verify(common, ranges, legs_list, flags);
        else text = cmd_export(common, in);

        if (!common.out.empty()) {
            std::ofstream f(common.out, std::ios::binary);
            if (!f) throw Error(ErrorCode::Parse, "cannot write '" + common.out + "'");
            f << text;
        } else {
            out << text;
        }
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
}

}  // namespace spider::cli
