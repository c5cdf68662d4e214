#pragma once

#include "squircle/mapping.hpp"
#include "squircle/types.hpp"

namespace squircle {

struct InversionConfig {
    double tol = 1e-10;
    int max_iter = 100;
    enum class Strategy { Auto, Radial1D, Newton2D } strategy = Strategy::Auto;
};

/// Inverts one analytic direction of a radial kind by a 1-D monotone
/// root-find along the ray through the origin (bisection seeded by the
/// linear estimate, polished by Newton). The angle is copied from the
/// target, never solved for. The DiscPoint-target overload inverts
/// square-to-disc; the SquarePoint-target overload inverts disc-to-square.
SquarePoint invert_radial(const MappingKind& kind, DiscPoint target,
                          const InversionConfig& cfg = {});
DiscPoint invert_radial(const MappingKind& kind, SquarePoint target,
                        const InversionConfig& cfg = {});

/// General 2-D damped Newton with central-difference Jacobian (step 1e-7).
/// The SquarePoint-target overload inverts the analytic disc-to-square
/// direction (used for lame-parametric), the DiscPoint-target overload the
/// square-to-disc direction.
DiscPoint invert_newton2d(const MappingKind& kind, SquarePoint target,
                          const InversionConfig& cfg = {});
SquarePoint invert_newton2d(const MappingKind& kind, DiscPoint target,
                            const InversionConfig& cfg = {});

/// square_to_disc/disc_to_square with the numeric fallback engaged for kinds
/// lacking the analytic direction.
DiscPoint square_to_disc(const MappingKind& kind, SquarePoint p,
                         const InversionConfig& cfg);
SquarePoint disc_to_square(const MappingKind& kind, DiscPoint p,
                           const InversionConfig& cfg);

}  // namespace squircle
