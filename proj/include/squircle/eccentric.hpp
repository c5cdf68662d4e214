#pragma once

#include "squircle/invert.hpp"
#include "squircle/mapping.hpp"
#include "squircle/types.hpp"

namespace squircle {

/// Removes the eccentricity (divide by a,b), applies the square-to-disc
/// mapping, and reintroduces it (multiply by a,b). Aspect is never altered.
EllipsePoint rect_to_ellipse(const MappingKind& kind, const RectSpec& spec,
                             RectPoint p);

/// Mirror pipeline through the disc-to-square direction.
RectPoint ellipse_to_rect(const MappingKind& kind, const RectSpec& spec,
                          EllipsePoint p);

/// Same pipelines with the numeric fallback engaged.
EllipsePoint rect_to_ellipse(const MappingKind& kind, const RectSpec& spec,
                             RectPoint p, const InversionConfig& cfg);
RectPoint ellipse_to_rect(const MappingKind& kind, const RectSpec& spec,
                          EllipsePoint p, const InversionConfig& cfg);

}  // namespace squircle
