#include "squircle/invert.hpp"

#include <algorithm>
#include <cmath>

namespace squircle {
namespace {

double disc_radius(const MappingKind& kind, double rho, double cu, double cv) {
    const DiscPoint d =
        detail::square_to_disc_raw(kind, {rho * cu, rho * cv});
    return std::hypot(d.u, d.v);
}

// Root of y = sgn(v)|v|^(1-v^2) on the axis of the Lame parametric mapping;
// (1-v^2)ln v is monotone on (0,1).
double lame_parametric_axis_root(double y) {
    const double target = std::log(std::abs(y));
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double val = (1.0 - mid * mid) * std::log(mid);
        (val < target ? lo : hi) = mid;
    }
    return sgn(y) * 0.5 * (lo + hi);
}

// Log-domain reduction of the Lame parametric forward problem: with
// a=ln|u|, b=ln|v|, the map gives ln|x| = E a, ln|y| = E b (E = 1-u^2-v^2),
// so a = lambda b with lambda known, and b solves a monotone 1-D equation.
DiscPoint lame_parametric_log_bisect(SquarePoint target) {
    const double q = std::log(std::abs(target.y));
    const double lambda = std::log(std::abs(target.x)) / q;
    auto g = [&](double b) {
        const double e = 1.0 - std::exp(2.0 * lambda * b) - std::exp(2.0 * b);
        return e * b - q;
    };
    double hi = q;  // |v| <= |y| always, so b <= q
    double lo = 2.0 * q;
    int guard = 0;
    while (g(lo) > 0.0) {
        lo *= 2.0;
        if (++guard > 64)
            throw ConvergenceError("lame-parametric: log-domain bracket failed");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? hi : lo) = mid;
    }
    const double b = 0.5 * (lo + hi);
    return {sgn(target.x) * std::exp(lambda * b), sgn(target.y) * std::exp(b)};
}

DiscPoint lame_parametric_square_to_disc(SquarePoint target,
                                         const InversionConfig& cfg) {
    if (target.x == 0.0 && target.y == 0.0) return {0.0, 0.0};
    if (target.x == 0.0) return {0.0, lame_parametric_axis_root(target.y)};
    if (target.y == 0.0) return {lame_parametric_axis_root(target.x), 0.0};
    try {
        return invert_newton2d(MappingKind(MapId::LameParametric), target, cfg);
    } catch (const SingularJacobianError&) {
        return lame_parametric_log_bisect(target);
    } catch (const ConvergenceError&) {
        return lame_parametric_log_bisect(target);
    }
}

}  // namespace

namespace {

// Monotone root-find along one ray: radius(rho) = r on [0, rho_max],
// bisection bracket guarded, Newton steps polished down to the evaluation
// noise floor. A residual at cfg.tol can still leave a large position error
// where the forward radius flattens near the rim, so the loop keeps going
// while progress lasts and returns the best point seen.
template <typename RadiusFn>
double solve_along_ray(const RadiusFn& radius, double r, double rho_max,
                       const InversionConfig& cfg, const std::string& name) {
    double lo = 0.0;
    double hi = rho_max;
    if (radius(hi) < r - 1e-9)
        throw NonMonotoneError(name +
                               ": ray endpoint does not bracket the target radius");

    double rho = std::min(r * rho_max, rho_max);
    double err = radius(rho) - r;
    double best_rho = rho;
    double best_err = std::abs(err);
    for (int it = 0; it < cfg.max_iter; ++it) {
        if (std::abs(err) <= 4e-16 || hi - lo <= 1e-15 * rho_max) break;
        (err > 0.0 ? hi : lo) = rho;
        const double h = std::max(1e-7 * rho_max, 1e-9);
        const double hp = std::min(rho + h, rho_max);
        const double hm = std::max(rho - h, 0.0);
        const double fp = (radius(hp) - radius(hm)) / (hp - hm);
        double next = rho - err / fp;
        if (!(fp > 0.0) || !(next > lo) || !(next < hi))
            next = 0.5 * (lo + hi);  // Newton left the bracket; bisect
        rho = next;
        err = radius(rho) - r;
        if (std::abs(err) < best_err) {
            best_err = std::abs(err);
            best_rho = rho;
        }
    }
    if (best_err > cfg.tol)
        throw ConvergenceError(name +
                               ": radial inversion exhausted its iteration budget");
    return best_rho;
}

}  // namespace

SquarePoint invert_radial(const MappingKind& kind, DiscPoint target,
                          const InversionConfig& cfg) {
    if (!kind.is_radial())
        throw CapabilityError(kind.name() + " is not radial; use invert_newton2d");
    if (!kind.analytic_forward())
        throw CapabilityError(kind.name() + " has no forward direction to invert");
    const double r = std::hypot(target.u, target.v);
    if (r == 0.0) return {0.0, 0.0};
    if (r > 1.0 + 1e-12)
        throw DomainError("invert_radial: target outside the unit disc");

    const double cu = target.u / r;
    const double cv = target.v / r;
    const double rho_max = 1.0 / std::max(std::abs(cu), std::abs(cv));
    const double rho = solve_along_ray(
        [&](double t) { return disc_radius(kind, t, cu, cv); }, r, rho_max, cfg,
        kind.name());
    return {rho * cu, rho * cv};
}

DiscPoint invert_radial(const MappingKind& kind, SquarePoint target,
                        const InversionConfig& cfg) {
    if (!kind.is_radial())
        throw CapabilityError(kind.name() + " is not radial; use invert_newton2d");
    if (!kind.analytic_inverse())
        throw CapabilityError(kind.name() + " has no inverse direction to invert");
    const double r = std::hypot(target.x, target.y);
    if (r == 0.0) return {0.0, 0.0};
    const double rho_max = 1.0 / std::max(std::abs(target.x / r),
                                          std::abs(target.y / r));
    if (r > rho_max + 1e-12)
        throw DomainError("invert_radial: target outside the square");

    const double cu = target.x / r;
    const double cv = target.y / r;
    auto square_radius = [&](double t) {
        const SquarePoint s =
            detail::disc_to_square_raw(kind, {t * cu, t * cv});
        return std::hypot(s.x, s.y);
    };
    const double rho = solve_along_ray(square_radius, r, 1.0, cfg, kind.name());
    return {rho * cu, rho * cv};
}

namespace {

template <typename Fwd>
void newton2d_core(Fwd&& fwd, double tx, double ty, double& u, double& v,
                   const InversionConfig& cfg) {
    constexpr double kStep = 1e-7;
    double fu, fv;
    fwd(u, v, fu, fv);
    double res = std::max(std::abs(fu - tx), std::abs(fv - ty));
    for (int it = 0; it < cfg.max_iter; ++it) {
        if (res <= cfg.tol) return;
        double apu, apv, amu, amv, bpu, bpv, bmu, bmv;
        fwd(u + kStep, v, apu, apv);
        fwd(u - kStep, v, amu, amv);
        fwd(u, v + kStep, bpu, bpv);
        fwd(u, v - kStep, bmu, bmv);
        const double j11 = (apu - amu) / (2.0 * kStep);
        const double j21 = (apv - amv) / (2.0 * kStep);
        const double j12 = (bpu - bmu) / (2.0 * kStep);
        const double j22 = (bpv - bmv) / (2.0 * kStep);
        const double det = j11 * j22 - j12 * j21;
        const double scale = std::max({std::abs(j11), std::abs(j12),
                                       std::abs(j21), std::abs(j22), 1.0});
        if (!std::isfinite(det) || std::abs(det) < 1e-14 * scale * scale)
            throw SingularJacobianError(
                "invert_newton2d: Jacobian singular at the current iterate");
        const double rx = fu - tx;
        const double ry = fv - ty;
        double du = (j22 * rx - j12 * ry) / det;
        double dv = (j11 * ry - j21 * rx) / det;
        double step = 1.0;
        for (int back = 0;; ++back) {
            const double nu = u - step * du;
            const double nv = v - step * dv;
            double gu, gv;
            fwd(nu, nv, gu, gv);
            const double nres = std::max(std::abs(gu - tx), std::abs(gv - ty));
            if (nres < res || nres <= cfg.tol) {
                u = nu;
                v = nv;
                fu = gu;
                fv = gv;
                res = nres;
                break;
            }
            if (back >= 24)
                throw ConvergenceError(
                    "invert_newton2d: damped step failed to reduce the residual");
            step *= 0.5;
        }
    }
    if (res > cfg.tol)
        throw ConvergenceError(
            "invert_newton2d: exhausted the iteration budget");
}

}  // namespace

DiscPoint invert_newton2d(const MappingKind& kind, SquarePoint target,
                          const InversionConfig& cfg) {
    if (!kind.analytic_inverse())
        throw CapabilityError(kind.name() +
                              " has no disc-to-square direction to invert");
    double u = target.x;
    double v = target.y;
    const double r = std::hypot(u, v);
    if (r >= 1.0) {  // identity guess pulled into the open disc
        u *= (1.0 - 1e-9) / r;
        v *= (1.0 - 1e-9) / r;
    }
    auto fwd = [&kind](double a, double b, double& ox, double& oy) {
        const SquarePoint s = detail::disc_to_square_raw(kind, {a, b});
        ox = s.x;
        oy = s.y;
    };
    newton2d_core(fwd, target.x, target.y, u, v, cfg);
    // The raw kernels continue smoothly past the rim, where spurious roots
    // can live; a converged iterate is only valid inside the disc.
    if (u * u + v * v > 1.0)
        throw ConvergenceError(kind.name() +
                               ": Newton converged outside the unit disc");
    return {u, v};
}

SquarePoint invert_newton2d(const MappingKind& kind, DiscPoint target,
                            const InversionConfig& cfg) {
    if (!kind.analytic_forward())
        throw CapabilityError(kind.name() +
                              " has no square-to-disc direction to invert");
    double x = target.u;
    double y = target.v;
    auto fwd = [&kind](double a, double b, double& ou, double& ov) {
        const DiscPoint d = detail::square_to_disc_raw(kind, {a, b});
        ou = d.u;
        ov = d.v;
    };
    newton2d_core(fwd, target.u, target.v, x, y, cfg);
    if (std::max(std::abs(x), std::abs(y)) > 1.0)
        throw ConvergenceError(kind.name() +
                               ": Newton converged outside the square");
    return {x, y};
}

DiscPoint square_to_disc(const MappingKind& kind, SquarePoint p,
                         const InversionConfig& cfg) {
    if (kind.analytic_forward()) return square_to_disc(kind, p);
    // lame-parametric is the only kind without forward equations
    if (kind.is_open()) {
        if (std::max(std::abs(p.x), std::abs(p.y)) >= 1.0)
            throw DomainError(kind.name() +
                              " is an open mapping: |x|,|y| must be < 1");
    }
    if (kind.id() == MapId::LameParametric)
        return lame_parametric_square_to_disc(p, cfg);
    return invert_newton2d(kind, p, cfg);
}

SquarePoint disc_to_square(const MappingKind& kind, DiscPoint p,
                           const InversionConfig& cfg) {
    if (kind.analytic_inverse()) return disc_to_square(kind, p);
    const double r2 = p.u * p.u + p.v * p.v;
    if (r2 > 1.0 + 1e-12)
        throw DomainError("point outside the unit disc");
    if (kind.is_radial() &&
        cfg.strategy != InversionConfig::Strategy::Newton2D)
        return invert_radial(kind, p, cfg);
    return invert_newton2d(kind, p, cfg);
}

}  // namespace squircle
