#include <doctest.h>

#include <cmath>

#include "squircle/mapping.hpp"
#include "squircle/sampling.hpp"

using namespace squircle;

// The forward-only kinds are defined by polynomial conditions on the disc
// radius t = |(u,v)|. Plugging the mapped radius back into the defining
// polynomial is an oracle that is independent of whichever closed form or
// trigonometric evaluation produced it.

TEST_CASE("3/2-squircular radius satisfies t^2 + m t - s = 0") {
    for (uint32_t i = 0; i < 2000; ++i) {
        const SquarePoint p = halton_square(i, 1e-6);
        const DiscPoint d = square_to_disc(MapId::ThreeHalvesSquircular, p);
        const double t = std::hypot(d.u, d.v);
        const double m = p.x * p.x * p.y * p.y;
        const double s = p.x * p.x + p.y * p.y;
        CHECK(std::abs(t * t + m * t - s) < 1e-12);
    }
}

TEST_CASE("1/2-squircular radius satisfies t^3 - s t + m = 0 (largest root)") {
    for (uint32_t i = 0; i < 2000; ++i) {
        const SquarePoint p = halton_square(i, 1e-6);
        const DiscPoint d = square_to_disc(MapId::HalfSquircular, p);
        const double t = std::hypot(d.u, d.v);
        const double m = p.x * p.x * p.y * p.y;
        const double s = p.x * p.x + p.y * p.y;
        CHECK(std::abs(t * t * t - s * t + m) < 1e-12);
        // largest real root: above the local minimum of the cubic
        CHECK(t * t * 3.0 >= s - 1e-12);
    }
}

TEST_CASE("4-squircular radius satisfies m t^6 + t^2 - s = 0") {
    for (uint32_t i = 0; i < 2000; ++i) {
        const SquarePoint p = halton_square(i, 1e-6);
        const DiscPoint d = square_to_disc(MapId::FourSquircular, p);
        const double t2 = d.u * d.u + d.v * d.v;
        const double m = p.x * p.x * p.y * p.y;
        const double s = p.x * p.x + p.y * p.y;
        CHECK(std::abs(m * t2 * t2 * t2 + t2 - s) < 1e-12);
    }
}

TEST_CASE("non-axial-tapered2 radius is m(t) = t sqrt(2-t^2) on the s=t^2 continuum") {
    for (uint32_t i = 0; i < 2000; ++i) {
        const SquarePoint p = halton_square(i, 1e-6);
        const DiscPoint d = square_to_disc(MapId::NonAxialTapered2, p);
        const double r = std::hypot(d.u, d.v);
        const double t = std::sqrt((p.x * p.x + p.y * p.y) /
                                   (1.0 + p.x * p.x * p.y * p.y));
        CHECK(std::abs(r - t * std::sqrt(2.0 - t * t)) < 1e-12);
    }
}

TEST_CASE("lame radial radius solves the superellipse radius equation") {
    for (uint32_t i = 0; i < 2000; ++i) {
        const SquarePoint p = halton_square(i, 1e-3);
        if (p.x == 0.0 || p.y == 0.0) continue;
        const DiscPoint d = square_to_disc(MapId::LameRadial, p);
        const double t = std::hypot(d.u, d.v);
        const double n = 2.0 / ((1.0 - std::abs(p.x)) * (1.0 - std::abs(p.y)));
        // |x|^n + |y|^n = t^n, compared in the log domain for conditioning
        const double lhs =
            std::pow(std::abs(p.x) / t, n) + std::pow(std::abs(p.y) / t, n);
        CHECK(std::abs(lhs - 1.0) < 1e-9);
    }
}

TEST_CASE("blended inverse solves its defining biquadratic") {
    for (double beta : {0.25, 0.5, 1.0}) {
        const MappingKind kind = MappingKind::blended(beta);
        for (uint32_t i = 0; i < 1000; ++i) {
            const DiscPoint q = halton_disc(i, 1e-3);
            const SquarePoint s = disc_to_square(kind, q);
            const double b1 = beta + 1.0 + beta * q.u * q.u - q.v * q.v;
            const double res = beta * s.x * s.x * s.x * s.x -
                               b1 * s.x * s.x + q.u * q.u * (beta + 1.0);
            CHECK(std::abs(res) < 1e-12);
        }
    }
}

TEST_CASE("tapered4 forward matches its literal radical form") {
    auto literal = [](double x, double y) {
        const double s = x * x + y * y;
        const double inner = 1.0 - 2.0 * x * x * x * x * y * y -
                             2.0 * x * x * y * y * y * y +
                             3.0 * x * x * x * x * y * y * y * y;
        return sgn(x * y) / (y * std::sqrt(s)) *
               std::sqrt(1.0 - std::sqrt(inner));
    };
    for (uint32_t i = 0; i < 1000; ++i) {
        const SquarePoint p = halton_square(i, 1e-3);
        if (std::abs(p.x) < 0.2 || std::abs(p.y) < 0.2) continue;
        const DiscPoint d = square_to_disc(MapId::Tapered4, p);
        CHECK(d.u == doctest::Approx(literal(p.x, p.y)).epsilon(1e-10));
    }
}
