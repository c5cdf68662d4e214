#pragma once

// Shared image-test helpers: a synthetic chart, an independent reference
// resampler (the oracle for the warp engine), and interior PSNR.

#include <cmath>
#include <cstdint>

#include "squircle/eccentric.hpp"
#include "squircle/image.hpp"
#include "squircle/warp.hpp"

namespace imagetools {

using namespace squircle;

// Gradients, a sine plaid and coarse checker blocks: structured but
// band-limited enough that a double bilinear pass keeps fidelity.
inline RasterImage make_chart(int w, int h) {
    RasterImage img = RasterImage::make(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t* px = img.at(x, y);
            const double fx = static_cast<double>(x) / (w - 1);
            const double fy = static_cast<double>(y) / (h - 1);
            const double plaid =
                0.5 + 0.25 * std::sin(2.0 * 3.14159265358979 * 6.0 * fx) +
                0.25 * std::sin(2.0 * 3.14159265358979 * 6.0 * fy);
            const int checker = ((x / 32) + (y / 32)) % 2;
            px[0] = static_cast<std::uint8_t>(255.0 * fx);
            px[1] = static_cast<std::uint8_t>(255.0 * plaid);
            px[2] = static_cast<std::uint8_t>(checker ? 200 : 55);
            px[3] = 255;
        }
    }
    return img;
}

// Minimal independent resampler: plain (not alpha-weighted) bilinear pull
// through the same point mappings, written from scratch against the pipeline
// definition rather than the engine code.
inline RasterImage reference_warp(const RasterImage& src,
                                  const MappingKind& kind, bool to_ellipse) {
    const int w = src.width;
    const int h = src.height;
    const RectSpec spec{static_cast<double>(w) / h, 1.0};
    RasterImage out = RasterImage::make(w, h);
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            const double ux = -spec.a + (ix + 0.5) * (2.0 * spec.a / w);
            const double uy = spec.b - (iy + 0.5) * (2.0 * spec.b / h);
            double sx, sy;
            if (to_ellipse) {
                const double rr =
                    (ux / spec.a) * (ux / spec.a) + (uy / spec.b) * (uy / spec.b);
                if (rr > 1.0) continue;
                const RectPoint rp = ellipse_to_rect(kind, spec, {ux, uy});
                sx = rp.x;
                sy = rp.y;
            } else {
                const EllipsePoint ep = rect_to_ellipse(kind, spec, {ux, uy});
                sx = ep.u;
                sy = ep.v;
            }
            const double gx = (sx + spec.a) / (2.0 * spec.a) * w - 0.5;
            const double gy = (spec.b - sy) / (2.0 * spec.b) * h - 0.5;
            const int x0 = static_cast<int>(std::floor(gx));
            const int y0 = static_cast<int>(std::floor(gy));
            const double tx = gx - x0;
            const double ty = gy - y0;
            double acc[4] = {0, 0, 0, 0};
            for (int dy = 0; dy < 2; ++dy) {
                for (int dx = 0; dx < 2; ++dx) {
                    const int cx = std::min(std::max(x0 + dx, 0), w - 1);
                    const int cy = std::min(std::max(y0 + dy, 0), h - 1);
                    const double wgt =
                        (dx ? tx : 1.0 - tx) * (dy ? ty : 1.0 - ty);
                    const std::uint8_t* p = src.at(cx, cy);
                    for (int c = 0; c < 4; ++c) acc[c] += wgt * p[c];
                }
            }
            std::uint8_t* o = out.at(ix, iy);
            for (int c = 0; c < 4; ++c)
                o[c] = static_cast<std::uint8_t>(std::lround(
                    std::min(255.0, std::max(0.0, acc[c]))));
        }
    }
    return out;
}

// PSNR over RGB inside the given fraction of the inscribed ellipse radius.
inline double psnr_interior(const RasterImage& a, const RasterImage& b,
                            double radius_fraction) {
    const int w = a.width;
    const int h = a.height;
    const RectSpec spec{static_cast<double>(w) / h, 1.0};
    double sse = 0.0;
    long n = 0;
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            const double ux = -spec.a + (ix + 0.5) * (2.0 * spec.a / w);
            const double uy = spec.b - (iy + 0.5) * (2.0 * spec.b / h);
            const double rr =
                (ux / spec.a) * (ux / spec.a) + (uy / spec.b) * (uy / spec.b);
            if (rr > radius_fraction * radius_fraction) continue;
            const std::uint8_t* pa = a.at(ix, iy);
            const std::uint8_t* pb = b.at(ix, iy);
            for (int c = 0; c < 3; ++c) {
                const double d = double(pa[c]) - double(pb[c]);
                sse += d * d;
            }
            n += 3;
        }
    }
    if (n == 0 || sse == 0.0) return 99.0;
    const double mse = sse / n;
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace imagetools
