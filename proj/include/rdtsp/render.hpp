#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdtsp/core.hpp"

namespace rdtsp {

struct RenderStyle {
    std::string dot_fill = "#9e9e9e";
    double dot_radius = 2.0;
    std::string path_stroke = "#1f77b4";
    double stroke_width = 1.5;
    std::string start_fill = "#d62728";
    double start_size = 8.0;
};

enum class Layout { Coordinates, Star };

struct RenderSpec {
    const MetricInstance* instance = nullptr;
    std::vector<Node> tour;               // full or partial tour
    std::optional<std::size_t> prefix;    // defaults to ceil(n / 8)
    int width = 800;
    int height = 800;
    RenderStyle style;
    // Star draws leaves evenly on a circle around the start; for matrix-only
    // instances, where the drawing cannot be to scale.
    Layout layout = Layout::Coordinates;
    std::string title;
};

std::size_t default_prefix(std::size_t n);
std::vector<Point> star_layout(std::size_t n);

// Grey dots for every reward, one polyline from the start through the first
// `prefix` tour entries (none when prefix is 0), and a start marker. The
// viewport fits all points with a 5% margin.
std::string render_svg(const RenderSpec& spec);

}  // namespace rdtsp
