#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "spider/convex_drawing.hpp"

namespace spider {
namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);  // no "-0.000"
    return buf;
}

struct Frame {
    double cx = 0, cy = 0, half = 1;
};

Frame frame_of(const std::vector<std::pair<double, double>>& pts) {
    double minx = pts[0].first, maxx = minx, miny = pts[0].second, maxy = miny;
    for (const auto& [x, y] : pts) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    Frame f;
    f.cx = (minx + maxx) / 2;
    f.cy = (miny + maxy) / 2;
    f.half = std::max({(maxx - minx) / 2, (maxy - miny) / 2, 1e-9});
    return f;
}

std::vector<std::pair<double, double>> as_doubles(const CoordinateDrawing& d) {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : d.positions()) out.emplace_back(p.x.get_d(), p.y.get_d());
    return out;
}

std::string label_text(VertexLabel v) {
    return "(" + std::to_string(v.leg) + "," + std::to_string(v.dist) + ")";
}

// Label anchor pushed away from the frame center.
std::pair<double, double> label_anchor(const Frame& f, double x, double y, double push) {
    double dx = x - f.cx, dy = y - f.cy;
    const double len = std::hypot(dx, dy);
    if (len < 1e-12) return {x, y + push};
    return {x + dx / len * push, y + dy / len * push};
}

}  // namespace

std::string export_svg(const CoordinateDrawing& d, const ExportOptions& options) {
    constexpr double kSize = 480, kRadius = 190;
    const auto pts = as_doubles(d);
    const Frame f = frame_of(pts);
    auto sx = [&](double x) { return kSize / 2 + (x - f.cx) / f.half * kRadius; };
    auto sy = [&](double y) { return kSize / 2 - (y - f.cy) / f.half * kRadius; };
    const auto& s = d.spider();

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize
        << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    if (!options.title.empty()) out << "  <title>" << options.title << "</title>\n";
    out << "  <g stroke=\"black\" stroke-width=\"1.2\">\n";
    for (const auto& e : enumerate_edges(s)) {
        const auto& a = pts[static_cast<std::size_t>(s.index_of(e.lo))];
        const auto& b = pts[static_cast<std::size_t>(s.index_of(e.hi))];
        out << "    <line class=\"edge\" x1=\"" << fixed(sx(a.first)) << "\" y1=\"" << fixed(sy(a.second))
            << "\" x2=\"" << fixed(sx(b.first)) << "\" y2=\"" << fixed(sy(b.second)) << "\"/>\n";
    }
    out << "  </g>\n  <g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    const auto labels = enumerate_vertices(s);
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto& [x, y] = pts[v];
        const auto [lx, ly] = label_anchor(f, x, y, 0.1 * f.half);
        out << "    <circle class=\"vertex\" cx=\"" << fixed(sx(x)) << "\" cy=\"" << fixed(sy(y))
            << "\" r=\"3.5\"/>\n"
            << "    <text x=\"" << fixed(sx(lx)) << "\" y=\"" << fixed(sy(ly) + 4) << "\">"
            << label_text(labels[v]) << "</text>\n";
    }
    out << "  </g>\n";
    if (options.crossings) {
        out << "  <text x=\"8\" y=\"" << fixed(kSize - 8)
            << "\" font-family=\"sans-serif\" font-size=\"12\">crossings: " << *options.crossings
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string export_tikz(const CoordinateDrawing& d, const ExportOptions& options) {
    const auto pts = as_doubles(d);
    const Frame f = frame_of(pts);
    auto nx = [&](double x) { return fixed(3.0 * (x - f.cx) / f.half); };
    auto ny = [&](double y) { return fixed(3.0 * (y - f.cy) / f.half); };
    const auto& s = d.spider();

    std::ostringstream out;
    out << "\\documentclass[tikz,border=6pt]{standalone}\n"
        << "\\begin{document}\n"
        << "\\begin{tikzpicture}\n";
    if (!options.title.empty()) out << "% " << options.title << "\n";
    for (const auto& e : enumerate_edges(s)) {
        const auto& a = pts[static_cast<std::size_t>(s.index_of(e.lo))];
        const auto& b = pts[static_cast<std::size_t>(s.index_of(e.hi))];
        out << "\\draw (" << nx(a.first) << "," << ny(a.second) << ") -- (" << nx(b.first) << ","
            << ny(b.second) << ");\n";
    }
    const auto labels = enumerate_vertices(s);
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto& [x, y] = pts[v];
        const auto [lx, ly] = label_anchor(f, x, y, 0.15 * f.half);
        out << "\\fill (" << nx(x) << "," << ny(y) << ") circle (2pt);\n"
            << "\\node[font=\\tiny] at (" << nx(lx) << "," << ny(ly) << ") {$" << label_text(labels[v])
            << "$};\n";
    }
    if (options.crossings) {
        out << "\\node[anchor=south west,font=\\small] at (-3.4,-3.6) {crossings: "
            << *options.crossings << "};\n";
    }
    out << "\\end{tikzpicture}\n"
        << "\\end{document}\n";
    return out.str();
}

}  // namespace spider
