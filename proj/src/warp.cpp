#include "squircle/warp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

namespace squircle {
namespace {

struct Rgba {
    double r = 0, g = 0, b = 0, a = 0;
};

double clamp255(double v) { return std::clamp(v, 0.0, 255.0); }

// Alpha-weighted bilinear tap; fully transparent samples are ignored so the
// region mask never bleeds color into the interior.
Rgba sample_bilinear(const RasterImage& src, double fx, double fy) {
    const int x0 = static_cast<int>(std::floor(fx));
    const int y0 = static_cast<int>(std::floor(fy));
    const double tx = fx - x0;
    const double ty = fy - y0;
    Rgba out;
    double color_w = 0.0;
    for (int dy = 0; dy < 2; ++dy) {
        for (int dx = 0; dx < 2; ++dx) {
            const double w = (dx ? tx : 1.0 - tx) * (dy ? ty : 1.0 - ty);
            if (w == 0.0) continue;
            const int cx = std::clamp(x0 + dx, 0, src.width - 1);
            const int cy = std::clamp(y0 + dy, 0, src.height - 1);
            const std::uint8_t* px = src.at(cx, cy);
            const double cw = w * px[3] / 255.0;
            out.r += cw * px[0];
            out.g += cw * px[1];
            out.b += cw * px[2];
            out.a += w * px[3];
            color_w += cw;
        }
    }
    if (color_w > 0.0) {
        out.r /= color_w;
        out.g /= color_w;
        out.b /= color_w;
    }
    return out;
}

Rgba sample_nearest(const RasterImage& src, double fx, double fy) {
    const int cx = std::clamp(static_cast<int>(std::lround(fx)), 0, src.width - 1);
    const int cy = std::clamp(static_cast<int>(std::lround(fy)), 0, src.height - 1);
    const std::uint8_t* px = src.at(cx, cy);
    if (px[3] == 0) return {};
    return {double(px[0]), double(px[1]), double(px[2]), double(px[3])};
}

// Continuous grid coordinate (gx pixels from the left edge) to rectangle x.
double grid_to_unit_x(double gx, int w, const RectSpec& spec) {
    return -spec.a + gx * (2.0 * spec.a / w);
}
double grid_to_unit_y(double gy, int h, const RectSpec& spec) {
    return spec.b - gy * (2.0 * spec.b / h);
}
double unit_to_grid_x(double x, int w, const RectSpec& spec) {
    return (x + spec.a) / (2.0 * spec.a) * w;
}
double unit_to_grid_y(double y, int h, const RectSpec& spec) {
    return (spec.b - y) / (2.0 * spec.b) * h;
}

void run_rows(int height, int jobs, const std::function<void(int, int)>& fn) {
    int n = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    n = std::clamp(n, 1, height);
    if (n == 1) {
        fn(0, height);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int t = 0; t < n; ++t) {
        const int lo = height * t / n;
        const int hi = height * (t + 1) / n;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

void check_capability(const WarpJob& job, bool need_inverse) {
    if (!job.kind) return;  // crop baseline maps identically
    const bool analytic = need_inverse ? job.kind->analytic_inverse()
                                       : job.kind->analytic_forward();
    if (!analytic && !job.numeric_fallback)
        throw CapabilityError(job.kind->name() +
                              (need_inverse ? " ellipse-to-rect" : " rect-to-ellipse") +
                              " direction needs the numeric fallback, which is disabled");
}

RasterImage warp_impl(const RasterImage& src, const WarpJob& job,
                      bool to_ellipse) {
    if (job.oversample < 1) throw ParamError("oversample must be >= 1");
    check_capability(job, /*need_inverse=*/to_ellipse);

    const int w = src.width;
    const int h = src.height;
    const RectSpec spec = spec_for_image(w, h);
    RasterImage out = RasterImage::make(w, h);

    const bool crop = !job.kind.has_value();
    const int k = job.oversample;
    const bool open_kind = job.kind && job.kind->is_open();

    auto map_back = [&](double eu, double ev, double& gx, double& gy) -> bool {
        // Destination coordinates pulled back into the source frame.
        if (to_ellipse) {
            const double rr = (eu / spec.a) * (eu / spec.a) +
                              (ev / spec.b) * (ev / spec.b);
            if (open_kind ? rr >= 1.0 : rr > 1.0) return false;
            RectPoint rp{eu, ev};
            if (!crop)
                rp = ellipse_to_rect(*job.kind, spec, EllipsePoint{eu, ev},
                                     job.inversion);
            gx = unit_to_grid_x(rp.x, w, spec);
            gy = unit_to_grid_y(rp.y, h, spec);
        } else {
            EllipsePoint ep{eu, ev};
            if (!crop)
                ep = rect_to_ellipse(*job.kind, spec, RectPoint{eu, ev},
                                     job.inversion);
            gx = unit_to_grid_x(ep.u, w, spec);
            gy = unit_to_grid_y(ep.v, h, spec);
        }
        return true;
    };

    auto process = [&](int row_lo, int row_hi) {
        for (int iy = row_lo; iy < row_hi; ++iy) {
            std::uint8_t* row = out.at(0, iy);
            for (int ix = 0; ix < w; ++ix) {
                if (crop && to_ellipse) {
                    // crop baseline keeps source pixels bit-exact inside
                    const RectPoint c = pixel_to_unit(ix, iy, w, h);
                    const double rr = (c.x / spec.a) * (c.x / spec.a) +
                                      (c.y / spec.b) * (c.y / spec.b);
                    if (rr <= 1.0)
                        std::copy_n(src.at(ix, iy), 4, row + 4 * ix);
                    continue;
                }
                Rgba acc;
                int covered = 0;
                for (int sy = 0; sy < k; ++sy) {
                    for (int sx = 0; sx < k; ++sx) {
                        const double gx0 = ix + (sx + 0.5) / k;
                        const double gy0 = iy + (sy + 0.5) / k;
                        const double eu = grid_to_unit_x(gx0, w, spec);
                        const double ev = grid_to_unit_y(gy0, h, spec);
                        double gx, gy;
                        if (!map_back(eu, ev, gx, gy)) continue;
                        const Rgba s =
                            job.interp == Interpolation::Nearest
                                ? sample_nearest(src, gx - 0.5, gy - 0.5)
                                : sample_bilinear(src, gx - 0.5, gy - 0.5);
                        acc.r += s.r * (s.a / 255.0);
                        acc.g += s.g * (s.a / 255.0);
                        acc.b += s.b * (s.a / 255.0);
                        acc.a += s.a;
                        ++covered;
                    }
                }
                if (!covered) continue;
                std::uint8_t* px = row + 4 * ix;
                const double alpha = acc.a / (k * k);
                if (acc.a > 0.0) {
                    px[0] = static_cast<std::uint8_t>(
                        std::lround(clamp255(acc.r * 255.0 / acc.a)));
                    px[1] = static_cast<std::uint8_t>(
                        std::lround(clamp255(acc.g * 255.0 / acc.a)));
                    px[2] = static_cast<std::uint8_t>(
                        std::lround(clamp255(acc.b * 255.0 / acc.a)));
                }
                px[3] = static_cast<std::uint8_t>(std::lround(clamp255(alpha)));
            }
        }
    };
    run_rows(h, job.jobs, process);
    return out;
}

}  // namespace

RectSpec spec_for_image(int width, int height) {
    if (width < 1 || height < 1)
        throw ParamError("image dimensions must be positive");
    return {static_cast<double>(width) / height, 1.0};
}

RectPoint pixel_to_unit(int ix, int iy, int width, int height) {
    const RectSpec spec = spec_for_image(width, height);
    return {grid_to_unit_x(ix + 0.5, width, spec),
            grid_to_unit_y(iy + 0.5, height, spec)};
}

void unit_to_pixel(RectPoint p, int width, int height, int& ix, int& iy) {
    const RectSpec spec = spec_for_image(width, height);
    ix = static_cast<int>(std::lround(unit_to_grid_x(p.x, width, spec) - 0.5));
    iy = static_cast<int>(std::lround(unit_to_grid_y(p.y, height, spec) - 0.5));
}

RasterImage elliptify(const RasterImage& img, const WarpJob& job) {
    if (job.direction == WarpDirection::Rectify)
        throw ParamError("elliptify called with a rectify job");
    WarpJob j = job;
    if (job.direction == WarpDirection::CropBaseline) j.kind.reset();
    return warp_impl(img, j, /*to_ellipse=*/true);
}

RasterImage rectify(const RasterImage& img, const WarpJob& job) {
    if (job.direction == WarpDirection::Elliptify ||
        job.direction == WarpDirection::CropBaseline)
        throw ParamError("rectify called with an elliptify job");
    return warp_impl(img, job, /*to_ellipse=*/false);
}

}  // namespace squircle
