#pragma once

#include <optional>
#include <vector>

#include "kerr/fock.hpp"

namespace kerr {

/// Observables at one instant. The numeric engine fills every field; the
/// analytic engine only has closed forms for the means, so the remaining
/// fields stay empty.
struct ObservableSet {
    double t = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
    std::optional<double> var_x;
    std::optional<double> var_p;
    std::optional<double> uncertainty_product;  ///< dx * dp
    std::optional<double> m4_x;                 ///< <(x - <x>)^4>
    std::optional<double> m4_p;                 ///< <(p - <p>)^4>
    double mean_n = 0.0;
    std::optional<double> autocorr;  ///< |<psi(0)|psi(t)>|

    friend bool operator==(const ObservableSet&, const ObservableSet&) = default;
};

enum class Engine { Numeric, Analytic };

struct TimeSeries {
    SimParams params;
    Engine engine = Engine::Numeric;
    std::vector<ObservableSet> samples;  ///< strictly increasing in t

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

/// Multiplies c_n by exp(-i chi n(n-1) t). The phase is reduced modulo 2 pi
/// before evaluation, so large n(n-1) t does not lose accuracy.
StateVector kerr_propagate(const StateVector& s, double chi, double t);

/// Propagates s0 directly from t = 0 and evaluates every ObservableSet field.
ObservableSet observables_at(const StateVector& s0, double chi, double t);

/// n_steps points, uniformly spaced over [t_start, t_end] with both ends included.
std::vector<double> time_grid(const SimParams& params);

/// Numeric engine over the full grid. Each sample is propagated from the
/// initial state, never by chaining steps.
TimeSeries run_series(const SimParams& params);

}  // namespace kerr
