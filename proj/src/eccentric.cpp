#include "squircle/eccentric.hpp"

namespace squircle {
namespace {

void check_spec(const RectSpec& spec) {
    if (!(spec.a > 0.0) || !(spec.b > 0.0))
        throw ParamError("RectSpec: half-extents a, b must be positive");
}

}  // namespace

EllipsePoint rect_to_ellipse(const MappingKind& kind, const RectSpec& spec,
                             RectPoint p) {
    check_spec(spec);
    const DiscPoint d = square_to_disc(kind, {p.x / spec.a, p.y / spec.b});
    return {spec.a * d.u, spec.b * d.v};
}

RectPoint ellipse_to_rect(const MappingKind& kind, const RectSpec& spec,
                          EllipsePoint p) {
    check_spec(spec);
    const SquarePoint s = disc_to_square(kind, {p.u / spec.a, p.v / spec.b});
    return {spec.a * s.x, spec.b * s.y};
}

EllipsePoint rect_to_ellipse(const MappingKind& kind, const RectSpec& spec,
                             RectPoint p, const InversionConfig& cfg) {
    check_spec(spec);
    const DiscPoint d = square_to_disc(kind, {p.x / spec.a, p.y / spec.b}, cfg);
    return {spec.a * d.u, spec.b * d.v};
}

RectPoint ellipse_to_rect(const MappingKind& kind, const RectSpec& spec,
                          EllipsePoint p, const InversionConfig& cfg) {
    check_spec(spec);
    const SquarePoint s = disc_to_square(kind, {p.u / spec.a, p.v / spec.b}, cfg);
    return {spec.a * s.x, spec.b * s.y};
}

}  // namespace squircle
