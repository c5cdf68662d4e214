#include "squircle/gridgen.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace squircle {
namespace {

constexpr const char* kVerticalStroke = "#2060c0";
constexpr const char* kHorizontalStroke = "#c03030";
constexpr const char* kOutlineStroke = "#000000";
constexpr double kOpenClip = 1.0 - 1e-3;  // keep clear of rim singularities

double line_offset(int i, int n_lines, double extent) {
    return (-1.0 + 2.0 * static_cast<double>(i) / (n_lines - 1)) * extent;
}

Polyline circle_outline(int samples) {
    Polyline line;
    line.stroke = kOutlineStroke;
    line.points.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        line.points.push_back({std::cos(t), std::sin(t)});
    }
    return line;
}

Polyline square_outline() {
    Polyline line;
    line.stroke = kOutlineStroke;
    line.points = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
    return line;
}

}  // namespace

VectorDrawing render_square_grid_in_disc(const MappingKind& kind, int n_lines,
                                         int samples_per_line,
                                         const InversionConfig& cfg) {
    if (n_lines < 2) throw ParamError("grid rendering needs at least 2 lines");
    if (samples_per_line < 2)
        throw ParamError("grid rendering needs at least 2 samples per line");

    const double extent = kind.is_open() ? kOpenClip : 1.0;
    VectorDrawing drawing;
    drawing.extent = 1.0;
    drawing.polylines.reserve(2 * n_lines + 1);

    for (int pass = 0; pass < 2; ++pass) {  // 0: x = const, 1: y = const
        for (int i = 0; i < n_lines; ++i) {
            const double c = line_offset(i, n_lines, extent);
            Polyline line;
            line.stroke = pass == 0 ? kVerticalStroke : kHorizontalStroke;
            line.points.reserve(samples_per_line + 1);
            for (int s = 0; s <= samples_per_line; ++s) {
                const double t = line_offset(s, samples_per_line + 1, extent);
                const SquarePoint p = pass == 0 ? SquarePoint{c, t}
                                                : SquarePoint{t, c};
                const DiscPoint d = square_to_disc(kind, p, cfg);
                line.points.push_back({d.u, d.v});
            }
            drawing.polylines.push_back(std::move(line));
        }
    }
    drawing.polylines.push_back(circle_outline(256));
    return drawing;
}

VectorDrawing render_polar_grid_in_square(const MappingKind& kind, int n_rings,
                                          int n_spokes, int samples,
                                          const InversionConfig& cfg) {
    if (n_rings < 1 || n_spokes < 1)
        throw ParamError("polar grid needs at least 1 ring and 1 spoke");
    if (samples < 2) throw ParamError("polar grid needs at least 2 samples");

    const double extent = kind.is_open() ? kOpenClip : 1.0;
    VectorDrawing drawing;
    drawing.extent = 1.0;
    drawing.polylines.reserve(n_rings + n_spokes + 1);

    for (int i = 1; i <= n_rings; ++i) {
        const double r = extent * static_cast<double>(i) / n_rings;
        Polyline ring;
        ring.stroke = kVerticalStroke;
        ring.points.reserve(samples + 1);
        for (int s = 0; s <= samples; ++s) {
            const double theta = 2.0 * std::numbers::pi * s / samples;
            const DiscPoint d{r * std::cos(theta), r * std::sin(theta)};
            const SquarePoint p = disc_to_square(kind, d, cfg);
            ring.points.push_back({p.x, p.y});
        }
        drawing.polylines.push_back(std::move(ring));
    }
    for (int i = 0; i < n_spokes; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n_spokes;
        Polyline spoke;
        spoke.stroke = kHorizontalStroke;
        spoke.points.reserve(samples + 1);
        for (int s = 0; s <= samples; ++s) {
            const double r = extent * static_cast<double>(s) / samples;
            const DiscPoint d{r * std::cos(theta), r * std::sin(theta)};
            const SquarePoint p = disc_to_square(kind, d, cfg);
            spoke.points.push_back({p.x, p.y});
        }
        drawing.polylines.push_back(std::move(spoke));
    }
    drawing.polylines.push_back(square_outline());
    return drawing;
}

std::string to_svg(const VectorDrawing& drawing, int viewport_px) {
    if (viewport_px < 16) throw ParamError("viewport must be at least 16px");
    const double margin = viewport_px * 0.05;
    const double scale = (viewport_px - 2.0 * margin) / (2.0 * drawing.extent);
    char buf[160];

    std::string svg;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                  "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  viewport_px, viewport_px, viewport_px, viewport_px);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const auto& line : drawing.polylines) {
        if (line.points.empty()) continue;
        svg += "<polyline fill=\"none\" stroke=\"" + line.stroke +
               "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < line.points.size(); ++i) {
            const double px = margin + (line.points[i][0] + drawing.extent) * scale;
            const double py = margin + (drawing.extent - line.points[i][1]) * scale;
            std::snprintf(buf, sizeof(buf), i ? " %.4f,%.4f" : "%.4f,%.4f", px, py);
            svg += buf;
        }
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace squircle
