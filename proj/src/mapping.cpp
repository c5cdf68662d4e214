#include "squircle/mapping.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "squircle/elliptic.hpp"

namespace squircle {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kDiscriminantSlack = 1e-12;
constexpr double kDomainSlack = 1e-12;

// Discriminants can dip just below zero on squircle contours that pass
// exactly through a radical's zero; anything worse is a real error.
double guarded_sqrt(double v, const char* what) {
    if (v < 0.0) {
        if (v < -kDiscriminantSlack)
            throw NumericError(std::string(what) + ": discriminant " +
                               std::to_string(v) + " below -1e-12");
        v = 0.0;
    }
    return std::sqrt(v);
}

struct KindInfo {
    MapId id;
    const char* name;
    bool open;
    bool fwd;     // analytic square-to-disc
    bool inv;     // analytic disc-to-square
    bool radial;
    bool axial;
};

constexpr std::array<KindInfo, 19> kCatalog{{
    {MapId::SchwarzChristoffel, "schwarz-christoffel", false, true, true, false, false},
    {MapId::FgSquircular, "fg-squircular", false, true, true, true, true},
    {MapId::EllipticalGrid, "elliptical-grid", false, true, true, false, true},
    {MapId::TwoSquircular, "2-squircular", false, true, true, true, true},
    {MapId::ThreeSquircular, "3-squircular", false, true, true, true, true},
    {MapId::Tapered2, "tapered2", false, true, true, true, true},
    {MapId::Tapered4, "tapered4", false, true, true, true, true},
    {MapId::NonAxial2, "non-axial-2", false, true, true, true, false},
    {MapId::NonAxialHalf, "non-axial-half", false, true, true, true, false},
    {MapId::SquelchedGrid, "squelched-grid", true, true, true, false, true},
    {MapId::VerticalSquelch, "vertical-squelch", true, true, true, false, true},
    {MapId::HorizontalSquelch, "horizontal-squelch", true, true, true, false, true},
    {MapId::BlendedEllipticalGrid, "blended-grid", true, true, true, false, true},
    {MapId::ThreeHalvesSquircular, "3-2-squircular", false, true, false, true, true},
    {MapId::HalfSquircular, "1-2-squircular", false, true, false, true, true},
    {MapId::FourSquircular, "4-squircular", false, true, false, true, true},
    {MapId::NonAxialTapered2, "non-axial-tapered2", false, true, false, true, false},
    {MapId::LameRadial, "lame-radial", false, true, false, true, false},
    {MapId::LameParametric, "lame-parametric", true, false, true, false, false},
}};

const KindInfo& info(MapId id) { return kCatalog[static_cast<size_t>(id)]; }

void check_square_domain(const MappingKind& kind, SquarePoint p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw DomainError("square point must be finite");
    const double m = std::max(std::abs(p.x), std::abs(p.y));
    if (kind.is_open()) {
        if (m >= 1.0)
            throw DomainError(kind.name() +
                              " is an open mapping: |x|,|y| must be < 1 "
                              "(the square rim holds its singular points)");
    } else if (m > 1.0 + kDomainSlack) {
        throw DomainError("point outside the square [-1,1]^2");
    }
}

void check_disc_domain(const MappingKind& kind, DiscPoint p) {
    if (!std::isfinite(p.u) || !std::isfinite(p.v))
        throw DomainError("disc point must be finite");
    const double r2 = p.u * p.u + p.v * p.v;
    if (kind.is_open()) {
        if (r2 >= 1.0)
            throw DomainError(kind.name() +
                              " is an open mapping: u^2+v^2 must be < 1 "
                              "(the disc rim holds its singular points)");
    } else if (r2 > 1.0 + 1e-9) {
        throw DomainError("point outside the unit disc");
    }
}

// ---- Schwarz-Christoffel ----

DiscPoint sc_square_to_disc(SquarePoint p) {
    using C = std::complex<double>;
    if (p.x == 0.0 && p.y == 0.0) return {0.0, 0.0};  // conformal center
    const double ke = k_e();
    const C z = ke * C(1.0, 1.0) / 2.0 * C(p.x, p.y) - ke;
    const C w = C(1.0, -1.0) / kSqrt2 * jacobi_cn(z);
    return {w.real(), w.imag()};
}

SquarePoint sc_disc_to_square(DiscPoint p) {
    using C = std::complex<double>;
    if (p.u == 0.0 && p.v == 0.0) return {0.0, 0.0};
    const double ke = k_e();
    const C phi = std::acos(C(1.0, 1.0) / kSqrt2 * C(p.u, p.v));
    const C val = C(1.0, -1.0) / (-ke) * legendre_f(phi);
    // the corner branch points cost ~1e-8 of excursion past the rim; the
    // true codomain is the closed square
    return {std::clamp(val.real() + 1.0, -1.0, 1.0),
            std::clamp(val.imag() - 1.0, -1.0, 1.0)};
}

// ---- algebraic square-to-disc kernels ----
// u = x*g, v = y*g for the radial kinds; g rearranged so no radical takes a
// difference of nearly equal terms near the axes.

// Denominators this small underflowed; the pass-through rule applies.
constexpr double kTinyDenominator = 1e-300;

DiscPoint fg_s2d(double x, double y) {
    const double s = x * x + y * y;
    if (s < kTinyDenominator) return {x, y};
    const double g = guarded_sqrt((s - x * x * y * y) / s, "fg-squircular");
    return {x * g, y * g};
}

DiscPoint eg_s2d(double x, double y) {
    return {x * std::sqrt(1.0 - y * y / 2.0), y * std::sqrt(1.0 - x * x / 2.0)};
}

DiscPoint two_s2d(double x, double y) {
    const double g = std::sqrt(1.0 / (1.0 + x * x * y * y));
    return {x * g, y * g};
}

DiscPoint three_s2d(double x, double y) {
    const double s = x * x + y * y;
    const double m = x * x * y * y;
    const double g = std::sqrt(2.0 / (1.0 + std::sqrt(1.0 + 4.0 * m * s)));
    return {x * g, y * g};
}

DiscPoint tapered2_s2d(double x, double y) {
    const double s = x * x + y * y;
    const double m = x * x * y * y;
    if (s < kTinyDenominator) return {x, y};
    if (m == 1.0)  // corners: t = 1 along the diagonal
        return {x * kInvSqrt2, y * kInvSqrt2};
    const double g =
        guarded_sqrt((s - 2.0 * m) / (s * (1.0 - m)), "tapered2");
    return {x * g, y * g};
}

DiscPoint tapered4_s2d(double x, double y) {
    const double s = x * x + y * y;
    const double m = x * x * y * y;
    if (s < kTinyDenominator) return {x, y};
    const double e = m * (2.0 * s - 3.0 * m);
    const double g = guarded_sqrt(
        (2.0 * s - 3.0 * m) / (s * (1.0 + guarded_sqrt(1.0 - e, "tapered4"))),
        "tapered4");
    return {x * g, y * g};
}

DiscPoint nonaxial2_s2d(double x, double y) {
    if (y == 0.0) return {x * std::abs(x), 0.0};
    if (x == 0.0) return {0.0, y * std::abs(y)};
    const double g = std::sqrt(x * x + y * y) / (1.0 + x * x * y * y);
    return {x * g, y * g};
}

DiscPoint nonaxialhalf_s2d(double x, double y) {
    if (y == 0.0) return {sgn(x) * std::sqrt(std::abs(x)), 0.0};
    if (x == 0.0) return {0.0, sgn(y) * std::sqrt(std::abs(y))};
    const double s = x * x + y * y;
    if (s < kTinyDenominator) return {x, y};
    const double g = 1.0 / std::pow(s * (1.0 + x * x * y * y), 0.25);
    return {x * g, y * g};
}

DiscPoint squelched_s2d(double x, double y) {
    const double d = 1.0 - x * x * y * y;
    return {x * std::sqrt((1.0 - y * y) / d), y * std::sqrt((1.0 - x * x) / d)};
}

DiscPoint vsquelch_s2d(double x, double y) {
    return {x, y * std::sqrt(1.0 - x * x)};
}

DiscPoint hsquelch_s2d(double x, double y) {
    return {x * std::sqrt(1.0 - y * y), y};
}

DiscPoint blended_s2d(double beta, double x, double y) {
    const double p = beta + 1.0 - beta * x * x;
    const double q = beta + 1.0 - beta * y * y;
    const double den = p * q - x * x * y * y;
    return {x * guarded_sqrt(q * (p - y * y) / den, "blended-grid"),
            y * guarded_sqrt(p * (q - x * x) / den, "blended-grid")};
}

DiscPoint threehalves_s2d(double x, double y) {
    const double s = x * x + y * y;
    const double m = x * x * y * y;
    if (s < kTinyDenominator) return {x, y};
    const double t = (std::sqrt(m * m + 4.0 * s) - m) / 2.0;
    return {x * t / std::sqrt(s), y * t / std::sqrt(s)};
}

DiscPoint half_s2d(double x, double y) {
    // largest real root of t^3 - (x^2+y^2) t + x^2 y^2 = 0; the Cardano
    // radical goes complex here (three real roots), the cosine form stays real.
    const double s = x * x + y * y;
    const double m = x * x * y * y;
    if (s < kTinyDenominator) return {x, y};
    const double arg =
        std::clamp(-(3.0 * std::sqrt(3.0) / 2.0) * m / (s * std::sqrt(s)), -1.0, 1.0);
    const double t = 2.0 * std::sqrt(s / 3.0) * std::cos(std::acos(arg) / 3.0);
    return {x * t / std::sqrt(s), y * t / std::sqrt(s)};
}

DiscPoint four_s2d(double x, double y) {
    // single real root of m tau^3 + tau - s = 0 (tau = t^2); the hyperbolic
    // form is stable as m -> 0 where the explicit radical cancels.
    const double s = x * x + y * y;
    const double m = x * x * y * y;
    if (m < kTinyDenominator) return {x, y};  // tau -> s exactly on the axes
    const double arg = 1.5 * std::sqrt(3.0 * m) * s;
    const double tau = 2.0 / std::sqrt(3.0 * m) * std::sinh(std::asinh(arg) / 3.0);
    const double t = std::sqrt(tau);
    return {x * t / std::sqrt(s), y * t / std::sqrt(s)};
}

DiscPoint nonaxialtapered2_s2d(double x, double y) {
    if (y == 0.0) return {x * std::sqrt(2.0 - x * x), 0.0};
    if (x == 0.0) return {0.0, y * std::sqrt(2.0 - y * y)};
    const double m = x * x * y * y;
    const double g = guarded_sqrt(2.0 + 2.0 * m - x * x - y * y,
                                  "non-axial-tapered2") /
                     (1.0 + m);
    return {x * g, y * g};
}

DiscPoint lame_radial_s2d(double x, double y) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    const double rn = std::sqrt(x * x + y * y);
    if (rn < kTinyDenominator) return {x, y};
    if (ax == 1.0 || ay == 1.0)  // Lame radius tends to max(|x|,|y|) = 1
        return {x / rn, y / rn};
    const double p = 2.0 / ((1.0 - ax) * (1.0 - ay));
    const double hi = std::max(ax, ay);
    const double lo = std::min(ax, ay);
    // t = hi * (1 + (lo/hi)^p)^(1/p); the ratio power may underflow to zero,
    // which is the correct limit.
    const double t = hi * std::exp(std::log1p(std::pow(lo / hi, p)) / p);
    return {x * t / rn, y * t / rn};
}

// ---- algebraic disc-to-square kernels ----

SquarePoint fg_d2s(double u, double v) {
    const double s = u * u + v * v;
    const double w = u * u * v * v;
    if (s < kTinyDenominator) return {u, v};
    const double g = std::sqrt(
        2.0 * s / (s + guarded_sqrt(s * (s - 4.0 * w), "fg-squircular")));
    return {u * g, v * g};
}

SquarePoint eg_d2s(double u, double v) {
    const double a1 = 2.0 + u * u - v * v;
    const double a2 = 2.0 - u * u + v * v;
    const double x = 0.5 * guarded_sqrt(a1 + 2.0 * kSqrt2 * u, "elliptical-grid") -
                     0.5 * guarded_sqrt(a1 - 2.0 * kSqrt2 * u, "elliptical-grid");
    const double y = 0.5 * guarded_sqrt(a2 + 2.0 * kSqrt2 * v, "elliptical-grid") -
                     0.5 * guarded_sqrt(a2 - 2.0 * kSqrt2 * v, "elliptical-grid");
    return {x, y};
}

SquarePoint two_d2s(double u, double v) {
    const double w = u * u * v * v;
    const double g =
        std::sqrt(2.0 / (1.0 + guarded_sqrt(1.0 - 4.0 * w, "2-squircular")));
    return {u * g, v * g};
}

SquarePoint three_d2s(double u, double v) {
    const double s = u * u + v * v;
    const double w = u * u * v * v;
    const double g =
        std::sqrt(2.0 / (1.0 + guarded_sqrt(1.0 - 4.0 * w * s, "3-squircular")));
    return {u * g, v * g};
}

SquarePoint tapered2_d2s(double u, double v) {
    const double s = u * u + v * v;
    const double w = u * u * v * v;
    if (s < kTinyDenominator) return {u, v};
    const double inner = s + 4.0 * w * (s - 2.0);
    const double g =
        std::sqrt(2.0 * s / (s + guarded_sqrt(s * inner, "tapered2")));
    return {u * g, v * g};
}

SquarePoint tapered4_d2s(double u, double v) {
    const double s = u * u + v * v;
    const double w = u * u * v * v;
    if (s < kTinyDenominator) return {u, v};
    const double inner = s + 2.0 * w * (s * s - 3.0);
    const double g =
        std::sqrt(2.0 * s / (s + guarded_sqrt(s * inner, "tapered4")));
    return {u * g, v * g};
}

SquarePoint nonaxial2_d2s(double u, double v) {
    if (v == 0.0) return {sgn(u) * std::sqrt(std::abs(u)), 0.0};
    if (u == 0.0) return {0.0, sgn(v) * std::sqrt(std::abs(v))};
    const double s = u * u + v * v;
    const double w = u * u * v * v;
    if (s < kTinyDenominator) return {u, v};
    const double d =
        s - 2.0 * w + guarded_sqrt(s * (s - 4.0 * w), "non-axial-2");
    const double g = std::pow(2.0 / d, 0.25);
    return {u * g, v * g};
}

SquarePoint nonaxialhalf_d2s(double u, double v) {
    if (v == 0.0) return {sgn(u) * u * u, 0.0};
    if (u == 0.0) return {0.0, sgn(v) * v * v};
    const double s = u * u + v * v;
    const double w = u * u * v * v;
    const double g = std::sqrt(
        2.0 * s / (1.0 + guarded_sqrt(1.0 - 4.0 * w * s * s, "non-axial-half")));
    return {u * g, v * g};
}

SquarePoint squelched_d2s(double u, double v) {
    return {u / std::sqrt(1.0 - v * v), v / std::sqrt(1.0 - u * u)};
}

SquarePoint vsquelch_d2s(double u, double v) {
    return {u, v / std::sqrt(1.0 - u * u)};
}

SquarePoint hsquelch_d2s(double u, double v) {
    return {u / std::sqrt(1.0 - v * v), v};
}

SquarePoint blended_d2s(double beta, double u, double v) {
    const double b1 = beta + 1.0 + beta * u * u - v * v;
    const double b2 = beta + 1.0 - u * u + beta * v * v;
    const double d1 = guarded_sqrt(
        b1 * b1 - 4.0 * beta * (beta + 1.0) * u * u, "blended-grid inverse");
    const double d2 = guarded_sqrt(
        b2 * b2 - 4.0 * beta * (beta + 1.0) * v * v, "blended-grid inverse");
    return {u * std::sqrt(2.0 * (beta + 1.0) / (b1 + d1)),
            v * std::sqrt(2.0 * (beta + 1.0) / (b2 + d2))};
}

SquarePoint lame_parametric_d2s(double u, double v) {
    const double e = 1.0 - u * u - v * v;
    return {sgn(u) * std::pow(std::abs(u), e), sgn(v) * std::pow(std::abs(v), e)};
}

}  // namespace

double squircle_residual(const SquircleParams& params, double x, double y) {
    if (!(params.t > 0.0))
        throw ParamError("squircle: radius parameter t must be positive");
    const double ratio = params.s / params.t;
    return x * x + y * y - ratio * ratio * x * x * y * y - params.t * params.t;
}

MappingKind MappingKind::blended(double beta) {
    if (!(beta > 0.0) || beta > 1.0)
        throw ParamError("blended-grid: beta must lie in (0, 1]");
    MappingKind kind(MapId::BlendedEllipticalGrid);
    kind.beta_ = beta;
    return kind;
}

bool MappingKind::is_open() const { return info(id_).open; }
bool MappingKind::analytic_forward() const { return info(id_).fwd; }
bool MappingKind::analytic_inverse() const { return info(id_).inv; }
bool MappingKind::is_radial() const { return info(id_).radial; }
bool MappingKind::is_axial() const { return info(id_).axial; }

std::string MappingKind::name() const { return info(id_).name; }

std::optional<MappingKind> MappingKind::from_name(std::string_view name,
                                                  double beta) {
    for (const auto& k : kCatalog) {
        if (name == k.name) {
            if (k.id == MapId::BlendedEllipticalGrid) return blended(beta);
            return MappingKind(k.id);
        }
    }
    if (name == "stretched-schwarz-christoffel")
        return MappingKind(MapId::SchwarzChristoffel);
    if (name == "three-halves-squircular")
        return MappingKind(MapId::ThreeHalvesSquircular);
    if (name == "half-squircular") return MappingKind(MapId::HalfSquircular);
    if (name == "four-squircular") return MappingKind(MapId::FourSquircular);
    return std::nullopt;
}

std::span<const MapId> all_map_ids() {
    static const std::array<MapId, 19> ids = [] {
        std::array<MapId, 19> out{};
        for (size_t i = 0; i < kCatalog.size(); ++i) out[i] = kCatalog[i].id;
        return out;
    }();
    return ids;
}

namespace detail {

DiscPoint square_to_disc_raw(const MappingKind& kind, SquarePoint p) {
    const double x = p.x;
    const double y = p.y;
    // Divisions by zero in the closed forms reduce to the pass-through rule
    // u=x, v=y; every axial kind is exactly the identity on the axes.
    const bool on_axis = (x == 0.0 || y == 0.0);
    switch (kind.id()) {
        case MapId::SchwarzChristoffel:
            return sc_square_to_disc(p);
        case MapId::FgSquircular:
            return on_axis ? DiscPoint{x, y} : fg_s2d(x, y);
        case MapId::EllipticalGrid:
            return on_axis ? DiscPoint{x, y} : eg_s2d(x, y);
        case MapId::TwoSquircular:
            return on_axis ? DiscPoint{x, y} : two_s2d(x, y);
        case MapId::ThreeSquircular:
            return on_axis ? DiscPoint{x, y} : three_s2d(x, y);
        case MapId::Tapered2:
            return on_axis ? DiscPoint{x, y} : tapered2_s2d(x, y);
        case MapId::Tapered4:
            return on_axis ? DiscPoint{x, y} : tapered4_s2d(x, y);
        case MapId::NonAxial2:
            return nonaxial2_s2d(x, y);
        case MapId::NonAxialHalf:
            return nonaxialhalf_s2d(x, y);
        case MapId::SquelchedGrid:
            return on_axis ? DiscPoint{x, y} : squelched_s2d(x, y);
        case MapId::VerticalSquelch:
            return vsquelch_s2d(x, y);
        case MapId::HorizontalSquelch:
            return hsquelch_s2d(x, y);
        case MapId::BlendedEllipticalGrid:
            return on_axis ? DiscPoint{x, y} : blended_s2d(kind.beta(), x, y);
        case MapId::ThreeHalvesSquircular:
            return on_axis ? DiscPoint{x, y} : threehalves_s2d(x, y);
        case MapId::HalfSquircular:
            return on_axis ? DiscPoint{x, y} : half_s2d(x, y);
        case MapId::FourSquircular:
            return on_axis ? DiscPoint{x, y} : four_s2d(x, y);
        case MapId::NonAxialTapered2:
            return nonaxialtapered2_s2d(x, y);
        case MapId::LameRadial:
            return on_axis ? DiscPoint{x, y} : lame_radial_s2d(x, y);
        case MapId::LameParametric:
            break;
    }
    throw CapabilityError(
        "lame-parametric has no analytic square-to-disc equations");
}

SquarePoint disc_to_square_raw(const MappingKind& kind, DiscPoint p) {
    const double u = p.u;
    const double v = p.v;
    const bool on_axis = (u == 0.0 || v == 0.0);
    switch (kind.id()) {
        case MapId::SchwarzChristoffel:
            return sc_disc_to_square(p);
        case MapId::FgSquircular:
            return on_axis ? SquarePoint{u, v} : fg_d2s(u, v);
        case MapId::EllipticalGrid:
            return on_axis ? SquarePoint{u, v} : eg_d2s(u, v);
        case MapId::TwoSquircular:
            return on_axis ? SquarePoint{u, v} : two_d2s(u, v);
        case MapId::ThreeSquircular:
            return on_axis ? SquarePoint{u, v} : three_d2s(u, v);
        case MapId::Tapered2:
            return on_axis ? SquarePoint{u, v} : tapered2_d2s(u, v);
        case MapId::Tapered4:
            return on_axis ? SquarePoint{u, v} : tapered4_d2s(u, v);
        case MapId::NonAxial2:
            return nonaxial2_d2s(u, v);
        case MapId::NonAxialHalf:
            return nonaxialhalf_d2s(u, v);
        case MapId::SquelchedGrid:
            return on_axis ? SquarePoint{u, v} : squelched_d2s(u, v);
        case MapId::VerticalSquelch:
            return vsquelch_d2s(u, v);
        case MapId::HorizontalSquelch:
            return hsquelch_d2s(u, v);
        case MapId::BlendedEllipticalGrid:
            return on_axis ? SquarePoint{u, v} : blended_d2s(kind.beta(), u, v);
        case MapId::LameParametric:
            return lame_parametric_d2s(u, v);
        case MapId::ThreeHalvesSquircular:
        case MapId::HalfSquircular:
        case MapId::FourSquircular:
        case MapId::NonAxialTapered2:
        case MapId::LameRadial:
            break;
    }
    throw CapabilityError(kind.name() +
                          " has no analytic disc-to-square equations");
}

}  // namespace detail

DiscPoint square_to_disc(const MappingKind& kind, SquarePoint p) {
    if (!kind.analytic_forward())
        throw CapabilityError(kind.name() +
                              " square-to-disc requires the numeric fallback");
    check_square_domain(kind, p);
    // accepted points a few ulps past the rim project onto it, so the
    // kernels never see radicands pushed past their zeros
    p.x = std::clamp(p.x, -1.0, 1.0);
    p.y = std::clamp(p.y, -1.0, 1.0);
    return detail::square_to_disc_raw(kind, p);
}

SquarePoint disc_to_square(const MappingKind& kind, DiscPoint p) {
    if (!kind.analytic_inverse())
        throw CapabilityError(kind.name() +
                              " disc-to-square requires the numeric fallback");
    check_disc_domain(kind, p);
    const double r2 = p.u * p.u + p.v * p.v;
    if (r2 > 1.0) {
        const double scale = 1.0 / std::sqrt(r2);
        p.u *= scale;
        p.v *= scale;
    }
    return detail::disc_to_square_raw(kind, p);
}

DiscPoint blended_grid_forward(double beta, SquarePoint p) {
    return square_to_disc(MappingKind::blended(beta), p);
}

SquarePoint blended_grid_inverse(double beta, DiscPoint p) {
    return disc_to_square(MappingKind::blended(beta), p);
}

DiscPoint lame_radial_forward(SquarePoint p) {
    return square_to_disc(MapId::LameRadial, p);
}

SquarePoint lame_parametric_disc_to_square(DiscPoint p) {
    return disc_to_square(MapId::LameParametric, p);
}

double continuum_value(const MappingKind& kind, SquarePoint p) {
    check_square_domain(kind, p);
    const double x = p.x;
    const double y = p.y;
    const double m = x * x * y * y;
    switch (kind.id()) {
        case MapId::FgSquircular:
        case MapId::VerticalSquelch:
        case MapId::HorizontalSquelch:
            return x * x + y * y - m;
        case MapId::Tapered2:
        case MapId::SquelchedGrid:
            if (m == 1.0) return 1.0;  // diagonal corner limit
            return (x * x + y * y - 2.0 * m) / (1.0 - m);
        case MapId::TwoSquircular:
        case MapId::NonAxial2:
        case MapId::NonAxialHalf:
            return (x * x + y * y) / (1.0 + m);
        default:
            throw CapabilityError("no derived squircular continuum for " +
                                  kind.name());
    }
}

bool is_rampant(const std::function<double(double)>& f, int samples) {
    if (samples < 2) throw ParamError("is_rampant: need at least 2 samples");
    const double tol = 1e-9;
    if (std::abs(f(0.0)) > tol || std::abs(f(1.0) - 1.0) > tol) return false;
    double prev = f(0.0);
    double max_jump = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const double ft = f(t);
        if (!std::isfinite(ft)) return false;
        if (ft < prev - tol) return false;  // monotone non-decreasing
        max_jump = std::max(max_jump, ft - prev);
        prev = ft;
    }
    // continuity proxy: no step may dwarf the mean increment
    return max_jump <= 0.5;
}

}  // namespace squircle
