#pragma once

#include <complex>

namespace squircle {

/// The only modulus used by the Schwarz-Christoffel square mapping.
inline constexpr double kEllipticModulus = 0.70710678118654752440;

/// K_e = F(pi/2, 1/sqrt(2)), the quarter period of the mapping.
double k_e();

/// Incomplete Legendre elliptic integral of the first kind F(phi, 1/sqrt(2))
/// for complex amplitude, evaluated by descending Landen transformation.
/// Throws ConvergenceError if the modulus descent fails to reach tolerance.
std::complex<double> legendre_f(std::complex<double> phi);

/// Jacobi cn(z, 1/sqrt(2)) for complex argument, via real-argument Landen
/// recursion combined through the complex-argument addition identity.
std::complex<double> jacobi_cn(std::complex<double> z);

}  // namespace squircle
