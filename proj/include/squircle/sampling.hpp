#pragma once

#include <cmath>
#include <cstdint>

#include "squircle/types.hpp"

namespace squircle {

/// Halton radical-inverse in the given base, in (0,1).
inline double halton(std::uint32_t index, std::uint32_t base) {
    double f = 1.0;
    double r = 0.0;
    for (std::uint32_t i = index + 1; i > 0; i /= base) {
        f /= base;
        r += f * static_cast<double>(i % base);
    }
    return r;
}

/// i-th quasi-random point of [-1+inset, 1-inset]^2 (bases 2 and 3).
inline SquarePoint halton_square(std::uint32_t index, double inset) {
    const double span = 1.0 - inset;
    return {(2.0 * halton(index, 2) - 1.0) * span,
            (2.0 * halton(index, 3) - 1.0) * span};
}

/// i-th quasi-random point of the disc of radius 1-inset (area-uniform).
inline DiscPoint halton_disc(std::uint32_t index, double inset) {
    const double r = (1.0 - inset) * std::sqrt(halton(index, 2));
    const double theta = 6.283185307179586476925286766559 * halton(index, 3);
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace squircle
