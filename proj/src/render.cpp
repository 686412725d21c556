#include "rdtsp/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace rdtsp {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::size_t default_prefix(std::size_t n) { return (n + 7) / 8; }

std::vector<Point> star_layout(std::size_t n) {
    std::vector<Point> pts{{0.0, 0.0}};
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pts.push_back({std::cos(a), std::sin(a)});
    }
    return pts;
}

std::string render_svg(const RenderSpec& spec) {
    if (spec.instance == nullptr) throw Error(ErrorCode::InvalidConfig, "render needs an instance");
    const MetricInstance& inst = *spec.instance;
    if (spec.layout == Layout::Coordinates && !inst.has_coords()) {
        throw Error(ErrorCode::NoCoordinates,
                    "matrix-only instances need the star layout to be drawn");
    }
    if (spec.width <= 0 || spec.height <= 0) {
        throw Error(ErrorCode::InvalidConfig, "canvas size must be positive");
    }
    const std::size_t prefix = spec.prefix.value_or(default_prefix(inst.n()));
    if (prefix > inst.n() || prefix > spec.tour.size()) {
        throw Error(ErrorCode::InvalidConfig, "prefix " + std::to_string(prefix) +
                                                  " exceeds the tour or reward count");
    }
    const std::vector<Node> shown(spec.tour.begin(), spec.tour.begin() + static_cast<std::ptrdiff_t>(prefix));
    // Validates range and distinctness.
    (void)evaluate_prefix(inst, shown);

    std::vector<Point> pts;
    if (spec.layout == Layout::Star) {
        pts = star_layout(inst.n());
    } else {
        const auto c = inst.coords();
        pts.assign(c.begin(), c.end());
    }

    double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double spanx = maxx - minx;
    double spany = maxy - miny;
    if (!(spanx > 0.0)) spanx = spany > 0.0 ? spany : 1.0;
    if (!(spany > 0.0)) spany = spanx;
    const double W = spec.width, H = spec.height;
    const double scale = std::min(W / (spanx * 1.1), H / (spany * 1.1));
    const double cx = 0.5 * (minx + maxx), cy = 0.5 * (miny + maxy);
    const auto sx = [&](const Point& p) { return 0.5 * W + (p.x - cx) * scale; };
    const auto sy = [&](const Point& p) { return 0.5 * H - (p.y - cy) * scale; };

    std::string title = spec.title;
    if (spec.layout == Layout::Star) {
        if (!title.empty()) title += " - ";
        title += "schematic star layout, distances not to scale";
    }
    const auto& st = spec.style;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
       << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    if (!title.empty()) os << "  <title>" << escape_xml(title) << "</title>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <g fill=\"" << st.dot_fill << "\">\n";
    for (std::size_t i = 1; i < pts.size(); ++i) {
        os << "    <circle cx=\"" << num(sx(pts[i])) << "\" cy=\"" << num(sy(pts[i])) << "\" r=\""
           << num(st.dot_radius) << "\"/>\n";
    }
    os << "  </g>\n";
    if (prefix > 0) {
        os << "  <polyline fill=\"none\" stroke=\"" << st.path_stroke << "\" stroke-width=\""
           << num(st.stroke_width) << "\" points=\"" << num(sx(pts[0])) << ',' << num(sy(pts[0]));
        for (Node v : shown) os << ' ' << num(sx(pts[v])) << ',' << num(sy(pts[v]));
        os << "\"/>\n";
    }
    const double h = st.start_size / 2.0;
    os << "  <rect x=\"" << num(sx(pts[0]) - h) << "\" y=\"" << num(sy(pts[0]) - h)
       << "\" width=\"" << num(st.start_size) << "\" height=\"" << num(st.start_size)
       << "\" fill=\"" << st.start_fill << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace rdtsp
