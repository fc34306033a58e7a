#pragma once

#include <complex>

namespace kerr {

using Complex = std::complex<double>;

/// Laguerre polynomial L_m(z) by upward three-term recurrence
///   (k+1) L_{k+1} = (2k+1-z) L_k - k L_{k-1},  L_0 = 1, L_1 = 1-z.
///
/// Stable and accurate for the envelope used here (m <= 64, |z| <= 1e3).
/// A purely real argument yields an exactly zero imaginary part.
Complex laguerre(unsigned m, Complex z) noexcept;

/// Associated Laguerre polynomial L_m^(1)(z), the alpha = 1 member of the
/// family:  (k+1) L_{k+1} = (2k+2-z) L_k - (k+1) L_{k-1},  L_0 = 1, L_1 = 2-z.
///
/// Satisfies L_m^(1)(-nu) = d/dnu L_{m+1}(-nu) and L_m^(1) = sum_{k<=m} L_k.
Complex laguerre_assoc1(unsigned m, Complex z) noexcept;

}  // namespace kerr
