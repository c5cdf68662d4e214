#pragma once

#include <stdexcept>
#include <string>

namespace squircle {

/// Point in the canonical square S = [-1,1] x [-1,1].
struct SquarePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Point in the canonical unit disc, u^2 + v^2 <= 1.
struct DiscPoint {
    double u = 0.0;
    double v = 0.0;
};

/// Point in the rectangle R = [-a,a] x [-b,b].
struct RectPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Point in the ellipse u^2/a^2 + v^2/b^2 <= 1.
struct EllipsePoint {
    double u = 0.0;
    double v = 0.0;
};

/// Half-width a and half-height b of the rectangle/ellipse pair.
/// The aspect ratio a/b is shared by both shapes.
struct RectSpec {
    double a = 1.0;
    double b = 1.0;
};

/// Fernandez-Guasti squircle x^2 + y^2 - (s^2/t^2) x^2 y^2 = t^2.
/// s in [0,t] is the squareness, t > 0 the radius parameter.
struct SquircleParams {
    double s = 1.0;
    double t = 1.0;
};

/// Signed residual of the squircle equation at (x, y); zero on the curve.
double squircle_residual(const SquircleParams& params, double x, double y);

inline double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mapping's domain (or on the rim of an open mapping).
struct DomainError : Error {
    using Error::Error;
};

/// Requested direction has no analytic equations and the numeric fallback is
/// disabled or inapplicable.
struct CapabilityError : Error {
    using Error::Error;
};

/// Parameter outside its allowed range (e.g. blend beta outside (0,1]).
struct ParamError : Error {
    using Error::Error;
};

/// A discriminant went negative beyond floating-point noise.
struct NumericError : Error {
    using Error::Error;
};

/// An iteration failed to reach tolerance within its budget.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Root bracketing failed where monotonicity was expected.
struct NonMonotoneError : Error {
    using Error::Error;
};

/// Finite-difference Jacobian is singular at the current iterate.
struct SingularJacobianError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace squircle
