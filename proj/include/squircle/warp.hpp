#pragma once

#include <optional>

#include "squircle/eccentric.hpp"
#include "squircle/image.hpp"
#include "squircle/invert.hpp"
#include "squircle/mapping.hpp"

namespace squircle {

enum class WarpDirection { Elliptify, Rectify, CropBaseline };
enum class Interpolation { Nearest, Bilinear };

struct WarpJob {
    WarpDirection direction = WarpDirection::Elliptify;
    /// Empty selects the crop baseline (identity mapping, ellipse mask).
    std::optional<MappingKind> kind;
    Interpolation interp = Interpolation::Bilinear;
    int oversample = 1;
    int jobs = 0;  // 0 = all hardware threads
    bool numeric_fallback = true;
    InversionConfig inversion{};
};

/// RectSpec induced by an image: a = width/height, b = 1.
RectSpec spec_for_image(int width, int height);

/// Center of pixel (ix, iy) in rectangle coordinates, y axis up (row 0 is
/// the top). Centers land in [-a+d, a-d] x [-b+d, b-d] with d a half pixel.
RectPoint pixel_to_unit(int ix, int iy, int width, int height);

/// Inverse of pixel_to_unit, rounded to the nearest pixel.
void unit_to_pixel(RectPoint p, int width, int height, int& ix, int& iy);

/// Inverse sampling: each output pixel inside the inscribed ellipse pulls
/// from the source at ellipse_to_rect(pixel center); outside it is
/// transparent. Same dimensions as the input.
RasterImage elliptify(const RasterImage& img, const WarpJob& job);

/// Mirror of elliptify through the rect-to-ellipse direction; source pixels
/// with alpha 0 are excluded from the interpolation.
RasterImage rectify(const RasterImage& img, const WarpJob& job);

}  // namespace squircle
