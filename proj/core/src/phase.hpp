#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace kerr::detail {

/// Angle 2 pi * k * u reduced into [-pi, pi], for integer k. Reducing u
/// first keeps k * u small before the final reduction.
inline double turns_to_angle(std::uint64_t k, double u) noexcept {
    const double u_reduced = std::remainder(u, 1.0);
    const double turns = std::remainder(static_cast<double>(k) * u_reduced, 1.0);
    return 2.0 * std::numbers::pi * turns;
}

/// chi * t measured in half turns, so that chi t = pi u.
inline double half_turns(double chi, double t) noexcept { return chi * t / std::numbers::pi; }

}  // namespace kerr::detail
