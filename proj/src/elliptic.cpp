#include "squircle/elliptic.hpp"

#include <cmath>
#include <numbers>

#include "squircle/types.hpp"

namespace squircle {
namespace {

using std::complex;
constexpr double kPi = std::numbers::pi;
constexpr double kDescentTol = 1e-14;
constexpr int kMaxDescent = 64;

struct JacobiReal {
    double sn, cn, dn;
};

// Real-argument sn/cn/dn by descending Landen on the modulus (DLMF 22.7.2-4),
// closed with the small-modulus asymptotics of A&S 16.13. No inverse trig,
// so there are no branch decisions to get wrong.
JacobiReal jacobi_real(double z, double k) {
    double ladder[kMaxDescent];
    int depth = 0;
    double kc = k;
    double scale = 1.0;
    while (kc > 1e-5) {
        if (depth >= kMaxDescent)
            throw ConvergenceError("jacobi: modulus descent exhausted its budget");
        const double kp = std::sqrt((1.0 - kc) * (1.0 + kc));
        kc = (1.0 - kp) / (1.0 + kp);
        ladder[depth++] = kc;
        scale *= 1.0 + kc;
    }

    const double u = z / scale;
    const double m = kc * kc;
    const double su = std::sin(u);
    const double cu = std::cos(u);
    const double secular = m * (u - su * cu) / 4.0;
    JacobiReal j{su - secular * cu, cu + secular * su, 1.0 - m * su * su / 2.0};

    for (int i = depth - 1; i >= 0; --i) {
        const double k1 = ladder[i];
        const double den = 1.0 + k1 * j.sn * j.sn;
        const double sn = (1.0 + k1) * j.sn / den;
        const double cn = j.cn * j.dn / den;
        const double kup = (i == 0) ? k : ladder[i - 1];
        j = {sn, cn, std::sqrt(1.0 - kup * kup * sn * sn)};
    }
    return j;
}

complex<double> asin_with_cut_side(complex<double> s, int im_side) {
    // Near the branch cut (real s, |s| > 1) the tiny imaginary part of s is
    // roundoff noise; the side must come from the sign of Im(phi) instead.
    if (std::abs(s.real()) > 1.0 &&
        std::abs(s.imag()) <= 1e-12 * (1.0 + std::abs(s.real()))) {
        const double side = im_side != 0 ? im_side : 1;
        return {sgn(s.real()) * kPi / 2.0, side * std::acosh(std::abs(s.real()))};
    }
    return std::asin(s);
}

}  // namespace

std::complex<double> legendre_f(std::complex<double> phi) {
    if (!std::isfinite(phi.real()) || !std::isfinite(phi.imag()))
        throw DomainError("legendre_f: amplitude must be finite");

    // F(phi + n*pi) = F(phi) + 2nK; reduce Re(phi) into [-pi/2, pi/2].
    const double n = std::floor(phi.real() / kPi + 0.5);
    complex<double> s = std::sin(phi - n * kPi);
    const int im_side = (phi.imag() > 0.0) - (phi.imag() < 0.0);

    double factor = 1.0;
    double kc = kEllipticModulus;
    int iter = 0;
    while (kc > kDescentTol) {
        if (++iter > kMaxDescent)
            throw ConvergenceError("legendre_f: modulus descent exhausted its budget");
        const double kp = std::sqrt((1.0 - kc) * (1.0 + kc));
        const double k1 = (1.0 - kp) / (1.0 + kp);
        // sn(z,k) = (1+k1) sn(z1,k1) / (1 + k1 sn^2(z1,k1)), z = (1+k1) z1,
        // solved for sn(z1,k1) in the cancellation-free conjugate form.
        const complex<double> rad =
            std::sqrt(complex<double>((1.0 + k1) * (1.0 + k1)) - 4.0 * k1 * s * s);
        s = 2.0 * s / ((1.0 + k1) + rad);
        factor *= 1.0 + k1;
        kc = k1;
    }
    return factor * (asin_with_cut_side(s, im_side) + n * kPi);
}

double k_e() {
    static const double value = legendre_f(complex<double>(kPi / 2.0, 0.0)).real();
    return value;
}

std::complex<double> jacobi_cn(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("jacobi_cn: argument must be finite");

    const double k = kEllipticModulus;
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    // cn(x+iy,k) from real-argument values at moduli k and k' (A&S 16.21.2).
    const JacobiReal a = jacobi_real(z.real(), k);
    const JacobiReal b = jacobi_real(z.imag(), kp);
    const double den = b.cn * b.cn + k * k * a.sn * a.sn * b.sn * b.sn;
    if (den == 0.0)
        throw NumericError("jacobi_cn: argument is a pole of cn");
    return {a.cn * b.cn / den, -a.sn * a.dn * b.sn * b.dn / den};
}

}  // namespace squircle
