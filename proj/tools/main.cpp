#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <thread>

#include "squircle/eccentric.hpp"
#include "squircle/gridgen.hpp"
#include "squircle/image.hpp"
#include "squircle/invert.hpp"
#include "squircle/mapping.hpp"
#include "squircle/sampling.hpp"
#include "squircle/warp.hpp"

namespace {

using namespace squircle;

constexpr int kExitRoundTrip = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitCapability = 4;

struct MapChoice {
    std::optional<MappingKind> kind;  // empty = crop baseline
};

MapChoice resolve_map(const std::string& name, double beta, bool allow_crop) {
    if (name == "crop") {
        if (!allow_crop)
            throw CLI::ValidationError("--map", "'crop' is only a warp mode");
        return {};
    }
    auto kind = MappingKind::from_name(name, beta);
    if (!kind)
        throw CLI::ValidationError("--map", "unknown mapping '" + name +
                                                "' (see --list-maps)");
    return {kind};
}

void list_maps() {
    std::printf("%-22s %-6s %-12s %-12s\n", "name", "space", "square->disc",
                "disc->square");
    for (MapId id : all_map_ids()) {
        const MappingKind kind(id);
        std::printf("%-22s %-6s %-12s %-12s\n", kind.name().c_str(),
                    kind.is_open() ? "open" : "closed",
                    kind.analytic_forward() ? "analytic" : "numeric",
                    kind.analytic_inverse() ? "analytic" : "numeric");
    }
}

int run_warp(bool to_ellipse, const std::string& map_name, double beta,
             const std::string& in_path, const std::string& out_path,
             const std::string& interp, int oversample, int jobs,
             bool numeric_fallback) {
    WarpJob job;
    job.direction = to_ellipse ? WarpDirection::Elliptify : WarpDirection::Rectify;
    job.kind = resolve_map(map_name, beta, /*allow_crop=*/true).kind;
    job.interp = interp == "nearest" ? Interpolation::Nearest
                                     : Interpolation::Bilinear;
    job.oversample = oversample;
    job.jobs = jobs;
    job.numeric_fallback = numeric_fallback;
    const RasterImage src = load_png(in_path);
    const RasterImage dst = to_ellipse ? elliptify(src, job) : rectify(src, job);
    save_png(dst, out_path);
    return 0;
}

int run_probe(const std::string& map_name, double beta, const std::string& dir,
              double c1, double c2, double a, double b) {
    const MapChoice choice = resolve_map(map_name, beta, /*allow_crop=*/false);
    const MappingKind& kind = *choice.kind;
    const InversionConfig cfg;
    double o1, o2;
    if (dir == "s2d") {
        const DiscPoint d = square_to_disc(kind, SquarePoint{c1, c2}, cfg);
        o1 = d.u, o2 = d.v;
    } else if (dir == "d2s") {
        const SquarePoint s = disc_to_square(kind, DiscPoint{c1, c2}, cfg);
        o1 = s.x, o2 = s.y;
    } else if (dir == "r2e") {
        const EllipsePoint e =
            rect_to_ellipse(kind, RectSpec{a, b}, RectPoint{c1, c2}, cfg);
        o1 = e.u, o2 = e.v;
    } else {
        const RectPoint r =
            ellipse_to_rect(kind, RectSpec{a, b}, EllipsePoint{c1, c2}, cfg);
        o1 = r.x, o2 = r.y;
    }
    std::printf("%.15g %.15g\n", o1, o2);
    return 0;
}

int run_roundtrip(const std::string& map_name, double beta, int samples,
                  double eps) {
    const MapChoice choice = resolve_map(map_name, beta, /*allow_crop=*/false);
    const MappingKind& kind = *choice.kind;
    const InversionConfig cfg;
    const bool numeric = !kind.analytic_forward() || !kind.analytic_inverse();
    const double threshold = kind.id() == MapId::SchwarzChristoffel ? 1e-6
                             : numeric                              ? 1e-8
                                                                    : 1e-9;
    double worst = 0.0;
    if (kind.analytic_forward()) {
        for (uint32_t i = 0; i < static_cast<uint32_t>(samples); ++i) {
            const SquarePoint p = halton_square(i, eps);
            const DiscPoint d = square_to_disc(kind, p, cfg);
            const SquarePoint s = disc_to_square(kind, d, cfg);
            worst = std::max({worst, std::abs(s.x - p.x), std::abs(s.y - p.y)});
        }
    } else {
        for (uint32_t i = 0; i < static_cast<uint32_t>(samples); ++i) {
            const DiscPoint q = halton_disc(i, eps);
            const SquarePoint s = disc_to_square(kind, q, cfg);
            const DiscPoint d = square_to_disc(kind, s, cfg);
            worst = std::max({worst, std::abs(d.u - q.u), std::abs(d.v - q.v)});
        }
    }
    std::printf("map=%s samples=%d max_err=%.3e threshold=%.0e %s\n",
                kind.name().c_str(), samples, worst, threshold,
                worst < threshold ? "ok" : "FAIL");
    return worst < threshold ? 0 : kExitRoundTrip;
}

int run_grid(const std::string& map_name, double beta, const std::string& style,
             const std::string& out_path, int lines, int rings, int spokes,
             int samples, int size, bool verify) {
    const MapChoice choice = resolve_map(map_name, beta, /*allow_crop=*/false);
    const MappingKind& kind = *choice.kind;
    const InversionConfig cfg;
    VectorDrawing drawing;
    int verify_fail = 0;
    if (style == "cartesian-in-disc") {
        drawing = render_square_grid_in_disc(kind, lines, samples, cfg);
        if (verify) {
            for (const auto& line : drawing.polylines)
                for (const auto& pt : line.points)
                    if (pt[0] * pt[0] + pt[1] * pt[1] > 1.0 + 1e-9) ++verify_fail;
        }
    } else {
        drawing = render_polar_grid_in_square(kind, rings, spokes, samples, cfg);
        if (verify) {
            // ring contours must satisfy the kind's squircular continuum
            const double extent = kind.is_open() ? 1.0 - 1e-3 : 1.0;
            for (int i = 1; i <= rings; ++i) {
                const double t = extent * static_cast<double>(i) / rings;
                const auto& ring = drawing.polylines[i - 1];
                for (const auto& pt : ring.points) {
                    const double c =
                        continuum_value(kind, SquarePoint{pt[0], pt[1]});
                    if (std::abs(c - t * t) > 1e-9) ++verify_fail;
                }
            }
        }
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + out_path + "' for writing");
    out << to_svg(drawing, size);
    if (!out.good()) throw IoError("failed writing '" + out_path + "'");
    if (verify) {
        std::printf("verify: %s\n", verify_fail == 0 ? "ok" : "FAIL");
        if (verify_fail) return kExitRoundTrip;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Square<->disc and rectangle<->ellipse mappings: image "
                 "warping, grid diagrams, point probes"};
    app.require_subcommand(0, 1);
    bool want_list = false;
    app.add_flag("--list-maps", want_list, "List registry mappings and exit");

    std::string map_name, in_path, out_path;
    std::string interp = "bilinear";
    double beta = 0.5;
    int oversample = 1;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    bool numeric_fallback = true;

    auto add_warp = [&](CLI::App* cmd) {
        cmd->add_option("--map", map_name, "Mapping name or 'crop'")->required();
        cmd->add_option("input", in_path, "Input PNG")->required();
        cmd->add_option("output", out_path, "Output PNG")->required();
        cmd->add_option("--beta", beta, "Blend parameter for blended-grid");
        cmd->add_option("--interp", interp, "nearest|bilinear")
            ->check(CLI::IsMember({"nearest", "bilinear"}));
        cmd->add_option("--oversample", oversample, "k x k supersampling")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", jobs, "Worker threads");
        cmd->add_flag("--numeric-fallback,!--no-numeric-fallback",
                      numeric_fallback,
                      "Allow numeric inversion for one-directional mappings");
    };
    CLI::App* elliptify_cmd =
        app.add_subcommand("elliptify", "Rectangular PNG -> elliptical PNG");
    add_warp(elliptify_cmd);
    CLI::App* rectify_cmd =
        app.add_subcommand("rectify", "Elliptical PNG -> rectangular PNG");
    add_warp(rectify_cmd);

    std::string dir = "s2d";
    double c1 = 0.0, c2 = 0.0, spec_a = 1.0, spec_b = 1.0;
    CLI::App* probe_cmd = app.add_subcommand("probe", "Map a single point");
    probe_cmd->add_option("--map", map_name)->required();
    probe_cmd->add_option("--dir", dir, "s2d|d2s|r2e|e2r")
        ->check(CLI::IsMember({"s2d", "d2s", "r2e", "e2r"}));
    probe_cmd->add_option("--beta", beta);
    probe_cmd->add_option("--a", spec_a, "Rectangle half-width");
    probe_cmd->add_option("--b", spec_b, "Rectangle half-height");
    probe_cmd->add_option("x", c1)->required();
    probe_cmd->add_option("y", c2)->required();

    int samples = 10000;
    double eps = 1e-6;
    CLI::App* rt_cmd =
        app.add_subcommand("roundtrip", "Forward+inverse error over samples");
    rt_cmd->add_option("--map", map_name)->required();
    rt_cmd->add_option("--beta", beta);
    rt_cmd->add_option("-n,--samples", samples)->check(CLI::PositiveNumber);
    rt_cmd->add_option("--eps", eps, "Domain inset");

    std::string style = "polar-in-square";
    int lines = 17, rings = 8, spokes = 24, grid_samples = 257, size = 512;
    bool verify = false;
    CLI::App* grid_cmd = app.add_subcommand("grid", "Render a grid diagram SVG");
    grid_cmd->add_option("--map", map_name)->required();
    grid_cmd->add_option("--beta", beta);
    grid_cmd->add_option("--style", style)
        ->check(CLI::IsMember({"polar-in-square", "cartesian-in-disc"}));
    grid_cmd->add_option("--out", out_path, "Output SVG path")->required();
    grid_cmd->add_option("--lines", lines);
    grid_cmd->add_option("--rings", rings);
    grid_cmd->add_option("--spokes", spokes);
    grid_cmd->add_option("--samples", grid_samples);
    grid_cmd->add_option("--size", size, "Viewport pixels");
    grid_cmd->add_flag("--verify", verify, "Check ring-contour residuals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (want_list) {
            list_maps();
            return 0;
        }
        if (elliptify_cmd->parsed())
            return run_warp(true, map_name, beta, in_path, out_path, interp,
                            oversample, jobs, numeric_fallback);
        if (rectify_cmd->parsed())
            return run_warp(false, map_name, beta, in_path, out_path, interp,
                            oversample, jobs, numeric_fallback);
        if (probe_cmd->parsed())
            return run_probe(map_name, beta, dir, c1, c2, spec_a, spec_b);
        if (rt_cmd->parsed()) return run_roundtrip(map_name, beta, samples, eps);
        if (grid_cmd->parsed())
            return run_grid(map_name, beta, style, out_path, lines, rings,
                            spokes, grid_samples, size, verify);
        std::fputs(app.help().c_str(), stdout);
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadArgs;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitBadArgs;
    } catch (const ParamError& e) {
        std::fprintf(stderr, "parameter error: %s\n", e.what());
        return kExitBadArgs;
    } catch (const CapabilityError& e) {
        std::fprintf(stderr, "capability error: %s\n", e.what());
        return kExitCapability;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRoundTrip;
    }
}
