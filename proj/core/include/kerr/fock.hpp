#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kerr/laguerre.hpp"

namespace kerr {

/// Tail-mass bound a constructed state must satisfy over its top basis slots.
inline constexpr double kTailTolerance = 1e-12;
/// Number of top basis slots inspected by the tail-mass check.
inline constexpr std::size_t kTailWindow = 8;

/// Physical and numerical configuration of one run.
///
/// The initial state is |alpha, m> with alpha = (x0 + i p0)/sqrt(2), evolved
/// under H = chi N(N-1) (hbar = 1). nu = |alpha|^2 is always derived from
/// (x0, p0) and never stored. The time grid holds n_steps points spaced
/// uniformly over [t_start, t_end], both ends included.
struct SimParams {
    double chi = 5.0;
    double x0 = 1.0;
    double p0 = 1.0;
    unsigned m = 0;
    std::optional<std::size_t> n_max;  ///< nullopt selects auto_truncation()
    double t_start = 0.0;
    double t_end = 0.0;
    std::size_t n_steps = 2001;

    [[nodiscard]] double nu() const noexcept { return 0.5 * (x0 * x0 + p0 * p0); }
    [[nodiscard]] Complex alpha() const noexcept;
    /// T_rev = pi / chi.
    [[nodiscard]] double revival_period() const noexcept;
    [[nodiscard]] std::size_t resolved_n_max() const noexcept;
    /// Throws std::invalid_argument on a non-physical or degenerate configuration.
    void validate() const;

    friend bool operator==(const SimParams&, const SimParams&) = default;
};

/// n_max = max(32, ceil(nu + 2m + 12 sqrt(nu + m + 1)) + kTailWindow), so the
/// tail-mass window starts beyond the 12-sigma point.
std::size_t auto_truncation(double nu, unsigned m) noexcept;

/// Amplitudes c_n, n = 0..n_max, of a pure state in the truncated number
/// basis. In the b_n(t)/sqrt(n!) expansion, c_n = b_n / sqrt(n!).
class StateVector {
  public:
    /// Throws std::invalid_argument if `amplitudes` is empty.
    explicit StateVector(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_max() const noexcept { return amps_.size() - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t n) const { return amps_[n]; }
    [[nodiscard]] double norm() const noexcept;

  private:
    std::vector<Complex> amps_;
};

/// <lhs|rhs>; both vectors must share n_max.
Complex inner_product(const StateVector& lhs, const StateVector& rhs);

/// Probability mass in the top kTailWindow slots.
double tail_mass(const StateVector& s) noexcept;

/// |n> in a basis truncated at n_max.
StateVector number_state(std::size_t n, std::size_t n_max);

/// Coherent state |alpha>, alpha = (x0 + i p0)/sqrt(2).
/// Throws TruncationInsufficient if the tail-mass check fails.
StateVector coherent_state(double x0, double p0, std::size_t n_max);

/// Normalized m-atom-added coherent state (a^dagger)^m |alpha> / sqrt(m! L_m(-nu)).
///
/// Built by the ratio recursion c_{n+1}/c_n = alpha sqrt(n+1)/(n+1-m) in log
/// magnitude, then normalized from the truncated vector itself, so the result
/// has unit norm to rounding. Support starts at n = m.
/// Throws TruncationInsufficient if the tail-mass check fails.
StateVector photon_added_state(double x0, double p0, unsigned m, std::size_t n_max);

/// a|s>, unnormalized. The top slot becomes zero.
StateVector apply_annihilation(const StateVector& s);

/// a^dagger|s>, unnormalized. Throws TruncationInsufficient if the weight
/// pushed past n_max, (n_max+1)|c_{n_max}|^2, exceeds kTailTolerance.
StateVector apply_creation(const StateVector& s);

/// Quadratures x = (a + a^dagger)/sqrt(2), p = -i(a - a^dagger)/sqrt(2), [x, p] = i.
/// Note the sqrt(2) convention, not the 1/2 of the optical field quadrature.
enum class Observable {
    X,
    P,
    N,
    NSquared,
    XSquared,
    PSquared,
    XFourthCentral,  ///< <(x - <x>)^4>
    PFourthCentral,  ///< <(p - <p>)^4>
};

/// Real expectation value on a normalized state. Quadrature moments are
/// computed in a zero-padded buffer, so they are exact for the truncated
/// state rather than clipped at n_max.
double expectation(const StateVector& s, Observable observable);

/// All quadrature and number moments of one state in a single pass.
struct Moments {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double m4_x = 0.0;
    double m4_p = 0.0;
    double mean_n = 0.0;
    double mean_n2 = 0.0;
};

Moments moments(const StateVector& s);

/// || [1 - m (1 + N)^{-1}] a |s> - alpha |s> ||.
/// Vanishes (to truncation) when s is |alpha, m>.
double nonlinear_eigen_residual(const StateVector& s, unsigned m, Complex alpha);

}  // namespace kerr
