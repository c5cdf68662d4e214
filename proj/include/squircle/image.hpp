#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "squircle/types.hpp"

namespace squircle {

/// Row-major 8-bit RGBA raster; alpha 0 encodes "outside the mapped region".
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 4 bytes per sample

    static RasterImage make(int width, int height);

    std::uint8_t* at(int x, int y) {
        return pixels.data() + 4 * (static_cast<size_t>(y) * width + x);
    }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + 4 * (static_cast<size_t>(y) * width + x);
    }
};

/// Reads any PNG as 8-bit RGBA. Throws IoError on failure.
RasterImage load_png(const std::string& path);

/// Writes 8-bit RGBA PNG; output bytes depend only on the pixel data.
void save_png(const RasterImage& img, const std::string& path);

}  // namespace squircle
