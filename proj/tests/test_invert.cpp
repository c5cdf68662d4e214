#include <doctest.h>

#include <cmath>

#include "squircle/invert.hpp"
#include "squircle/mapping.hpp"
#include "squircle/sampling.hpp"

using namespace squircle;

namespace {

const MapId kForwardOnly[] = {MapId::ThreeHalvesSquircular,
                              MapId::HalfSquircular, MapId::FourSquircular,
                              MapId::NonAxialTapered2, MapId::LameRadial};

}  // namespace

TEST_CASE("invert_radial recovers forward-only samples") {
    const InversionConfig cfg;
    const MappingKind four(MapId::FourSquircular);
    const DiscPoint d = square_to_disc(four, {0.5, 0.5});
    const SquarePoint s = invert_radial(four, d, cfg);
    CHECK(std::abs(s.x - 0.5) < 1e-8);
    CHECK(std::abs(s.y - 0.5) < 1e-8);

    for (MapId id : kForwardOnly) {
        const SquarePoint z = invert_radial(MappingKind(id), DiscPoint{0.0, 0.0}, cfg);
        CHECK(z.x == 0.0);
        CHECK(z.y == 0.0);
    }

    for (double x : {-0.8, 0.25, 0.92}) {
        const SquarePoint ax =
            invert_radial(MapId::LameRadial, DiscPoint{x, 0.0}, cfg);
        CHECK(std::abs(ax.x - x) < 1e-9);
        CHECK(ax.y == 0.0);
    }
}

TEST_CASE("invert_radial disc-to-square route reproduces the forward maps") {
    // inverting the analytic inverse numerically is an independent second
    // route to the forward equations
    const InversionConfig cfg;
    for (MapId id : {MapId::FgSquircular, MapId::TwoSquircular,
                     MapId::ThreeSquircular, MapId::Tapered2, MapId::Tapered4,
                     MapId::NonAxial2, MapId::NonAxialHalf}) {
        const MappingKind kind(id);
        double worst = 0.0;
        for (uint32_t i = 0; i < 300; ++i) {
            const SquarePoint p = halton_square(i, 1e-3);
            const DiscPoint via_solver = invert_radial(kind, p, cfg);
            const DiscPoint direct = square_to_disc(kind, p);
            worst = std::max({worst, std::abs(via_solver.u - direct.u),
                              std::abs(via_solver.v - direct.v)});
        }
        INFO(kind.name());
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("invert_radial preserves the target angle exactly") {
    const InversionConfig cfg;
    for (uint32_t i = 0; i < 200; ++i) {
        const SquarePoint p = halton_square(i, 1e-3);
        if (p.x == 0.0 && p.y == 0.0) continue;
        const DiscPoint d = square_to_disc(MapId::NonAxialTapered2, p);
        const SquarePoint s = invert_radial(MapId::NonAxialTapered2, d, cfg);
        CHECK(std::abs(std::atan2(s.y, s.x) - std::atan2(d.v, d.u)) <= 1e-15);
    }
}

TEST_CASE("invert_newton2d recovers lame-parametric samples") {
    const InversionConfig cfg;
    const SquarePoint p =
        lame_parametric_disc_to_square({0.3, 0.4});
    const DiscPoint d = invert_newton2d(MappingKind(MapId::LameParametric), p, cfg);
    CHECK(std::abs(d.u - 0.3) < 1e-8);
    CHECK(std::abs(d.v - 0.4) < 1e-8);

    const DiscPoint center =
        square_to_disc(MapId::LameParametric, SquarePoint{0.0, 0.0}, cfg);
    CHECK(center.u == 0.0);
    CHECK(center.v == 0.0);

    const DiscPoint fwd = square_to_disc(MapId::NonAxialTapered2,
                                         SquarePoint{0.6, 0.2});
    const SquarePoint back =
        disc_to_square(MapId::NonAxialTapered2, fwd, cfg);
    CHECK(std::abs(back.x - 0.6) < 1e-8);
    CHECK(std::abs(back.y - 0.2) < 1e-8);
}

TEST_CASE("forward-then-invert identity per forward-only kind") {
    const InversionConfig cfg;
    for (MapId id : kForwardOnly) {
        const MappingKind kind(id);
        double worst = 0.0;
        for (uint32_t i = 0; i < 500; ++i) {
            const SquarePoint p = halton_square(i, 1e-6);
            const DiscPoint d = square_to_disc(kind, p);
            const SquarePoint s = disc_to_square(kind, d, cfg);
            worst = std::max({worst, std::abs(s.x - p.x), std::abs(s.y - p.y)});
            // contract: the forward image of the result reproduces the target
            const DiscPoint check = square_to_disc(kind, s);
            CHECK(std::hypot(check.u - d.u, check.v - d.v) <= cfg.tol * 10);
        }
        INFO(kind.name());
        CHECK(worst < 1e-8);
    }
    // the disc-to-square-only kind runs through Newton (with its axis branch)
    const MappingKind lame(MapId::LameParametric);
    double worst = 0.0;
    for (uint32_t i = 0; i < 500; ++i) {
        const DiscPoint q = halton_disc(i, 1e-6);
        const SquarePoint p = disc_to_square(lame, q);
        const DiscPoint d = square_to_disc(lame, p, cfg);
        worst = std::max({worst, std::abs(d.u - q.u), std::abs(d.v - q.v)});
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("numeric inversion is deterministic") {
    const InversionConfig cfg;
    for (MapId id : {MapId::FourSquircular, MapId::NonAxialTapered2}) {
        const MappingKind kind(id);
        const DiscPoint d = square_to_disc(kind, {0.37, -0.81});
        const SquarePoint a = disc_to_square(kind, d, cfg);
        const SquarePoint b = disc_to_square(kind, d, cfg);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
    }
}

TEST_CASE("lame-parametric axis targets use the axis branch") {
    const InversionConfig cfg;
    for (double y : {-0.75, 0.2, 0.9}) {
        const SquarePoint p = lame_parametric_disc_to_square({0.0, y});
        const DiscPoint d = square_to_disc(MapId::LameParametric, p, cfg);
        CHECK(d.u == 0.0);
        CHECK(std::abs(d.v - y) < 1e-10);
    }
    // direct Newton on an exact-axis target stays on the axis
    const DiscPoint axis =
        invert_newton2d(MappingKind(MapId::LameParametric),
                        SquarePoint{0.0, 0.62}, cfg);
    CHECK(axis.u == 0.0);
    const SquarePoint fwd = lame_parametric_disc_to_square(axis);
    CHECK(std::abs(fwd.y - 0.62) <= cfg.tol * 10);
}

TEST_CASE("capability and domain errors") {
    const InversionConfig cfg;
    CHECK_THROWS_AS(invert_radial(MapId::LameParametric, DiscPoint{0.1, 0.1}, cfg),
                    CapabilityError);
    CHECK_THROWS_AS(invert_radial(MapId::FourSquircular, DiscPoint{0.9, 0.9}, cfg),
                    DomainError);
    CHECK_THROWS_AS(
        disc_to_square(MapId::FourSquircular, DiscPoint{0.9, 0.9}, cfg),
        DomainError);
}
