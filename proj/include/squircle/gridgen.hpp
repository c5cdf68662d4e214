#pragma once

#include <array>
#include <string>
#include <vector>

#include "squircle/invert.hpp"
#include "squircle/mapping.hpp"

namespace squircle {

struct Polyline {
    std::vector<std::array<double, 2>> points;
    std::string stroke = "#000000";
};

/// Resolution-independent drawing in canonical coordinates ([-extent,extent]^2).
struct VectorDrawing {
    double extent = 1.0;
    std::vector<Polyline> polylines;
};

/// Images of the square's Cartesian grid lines under square_to_disc, plus the
/// unit circle outline. Open kinds are clipped to 1-1e-3 of the domain.
VectorDrawing render_square_grid_in_disc(const MappingKind& kind, int n_lines,
                                         int samples_per_line,
                                         const InversionConfig& cfg = {});

/// Images of the disc's polar grid (rings and spokes) under disc_to_square,
/// plus the square outline.
VectorDrawing render_polar_grid_in_square(const MappingKind& kind, int n_rings,
                                          int n_spokes, int samples,
                                          const InversionConfig& cfg = {});

/// SVG 1.1 serialization; canonical coordinates scaled to a square viewport.
std::string to_svg(const VectorDrawing& drawing, int viewport_px);

}  // namespace squircle
