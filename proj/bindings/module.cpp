#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <utility>

#include "squircle/eccentric.hpp"
#include "squircle/elliptic.hpp"
#include "squircle/gridgen.hpp"
#include "squircle/image.hpp"
#include "squircle/invert.hpp"
#include "squircle/mapping.hpp"
#include "squircle/warp.hpp"

namespace py = pybind11;
using namespace squircle;

namespace {

MappingKind kind_from(const std::string& name, double beta) {
    auto kind = MappingKind::from_name(name, beta);
    if (!kind) throw ParamError("unknown mapping '" + name + "'");
    return *kind;
}

WarpJob make_job(bool to_ellipse, const std::string& map_name, double beta,
                 const std::string& interp, int oversample, int jobs) {
    WarpJob job;
    job.direction =
        to_ellipse ? WarpDirection::Elliptify : WarpDirection::Rectify;
    if (map_name != "crop") job.kind = kind_from(map_name, beta);
    job.interp = interp == "nearest" ? Interpolation::Nearest
                                     : Interpolation::Bilinear;
    job.oversample = oversample;
    job.jobs = jobs;
    return job;
}

}  // namespace

PYBIND11_MODULE(squircle, m) {
    m.doc() = "Square<->disc and rectangle<->ellipse mappings";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError",
                                            PyExc_RuntimeError);
    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);

    m.def("list_maps", [] {
        py::list out;
        for (MapId id : all_map_ids()) {
            const MappingKind kind(id);
            py::dict info;
            info["name"] = kind.name();
            info["open"] = kind.is_open();
            info["analytic_forward"] = kind.analytic_forward();
            info["analytic_inverse"] = kind.analytic_inverse();
            info["radial"] = kind.is_radial();
            info["axial"] = kind.is_axial();
            out.append(std::move(info));
        }
        return out;
    });

    m.def(
        "square_to_disc",
        [](const std::string& name, double x, double y, double beta) {
            const DiscPoint d =
                square_to_disc(kind_from(name, beta), SquarePoint{x, y},
                               InversionConfig{});
            return std::make_pair(d.u, d.v);
        },
        py::arg("map"), py::arg("x"), py::arg("y"), py::arg("beta") = 0.5);

    m.def(
        "disc_to_square",
        [](const std::string& name, double u, double v, double beta) {
            const SquarePoint s =
                disc_to_square(kind_from(name, beta), DiscPoint{u, v},
                               InversionConfig{});
            return std::make_pair(s.x, s.y);
        },
        py::arg("map"), py::arg("u"), py::arg("v"), py::arg("beta") = 0.5);

    m.def(
        "rect_to_ellipse",
        [](const std::string& name, double a, double b, double x, double y,
           double beta) {
            const EllipsePoint e =
                rect_to_ellipse(kind_from(name, beta), RectSpec{a, b},
                                RectPoint{x, y}, InversionConfig{});
            return std::make_pair(e.u, e.v);
        },
        py::arg("map"), py::arg("a"), py::arg("b"), py::arg("x"), py::arg("y"),
        py::arg("beta") = 0.5);

    m.def(
        "ellipse_to_rect",
        [](const std::string& name, double a, double b, double u, double v,
           double beta) {
            const RectPoint r =
                ellipse_to_rect(kind_from(name, beta), RectSpec{a, b},
                                EllipsePoint{u, v}, InversionConfig{});
            return std::make_pair(r.x, r.y);
        },
        py::arg("map"), py::arg("a"), py::arg("b"), py::arg("u"), py::arg("v"),
        py::arg("beta") = 0.5);

    m.def("k_e", &k_e);
    m.def("legendre_f", [](std::complex<double> phi) { return legendre_f(phi); },
          py::arg("phi"));
    m.def("jacobi_cn", [](std::complex<double> z) { return jacobi_cn(z); },
          py::arg("z"));

    m.def(
        "elliptify_file",
        [](const std::string& input, const std::string& output,
           const std::string& map_name, double beta, const std::string& interp,
           int oversample, int jobs) {
            save_png(elliptify(load_png(input), make_job(true, map_name, beta,
                                                         interp, oversample,
                                                         jobs)),
                     output);
        },
        py::arg("input"), py::arg("output"), py::arg("map"),
        py::arg("beta") = 0.5, py::arg("interp") = "bilinear",
        py::arg("oversample") = 1, py::arg("jobs") = 0);

    m.def(
        "rectify_file",
        [](const std::string& input, const std::string& output,
           const std::string& map_name, double beta, const std::string& interp,
           int oversample, int jobs) {
            save_png(rectify(load_png(input), make_job(false, map_name, beta,
                                                       interp, oversample,
                                                       jobs)),
                     output);
        },
        py::arg("input"), py::arg("output"), py::arg("map"),
        py::arg("beta") = 0.5, py::arg("interp") = "bilinear",
        py::arg("oversample") = 1, py::arg("jobs") = 0);

    m.def(
        "grid_svg",
        [](const std::string& map_name, const std::string& style, double beta,
           int lines, int rings, int spokes, int samples, int size) {
            const MappingKind kind = kind_from(map_name, beta);
            const VectorDrawing drawing =
                style == "cartesian-in-disc"
                    ? render_square_grid_in_disc(kind, lines, samples)
                    : render_polar_grid_in_square(kind, rings, spokes, samples);
            return to_svg(drawing, size);
        },
        py::arg("map"), py::arg("style") = "polar-in-square",
        py::arg("beta") = 0.5, py::arg("lines") = 17, py::arg("rings") = 8,
        py::arg("spokes") = 24, py::arg("samples") = 257, py::arg("size") = 512);
}
