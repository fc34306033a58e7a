#pragma once

#include <utility>

#include "kerr/evolution.hpp"
#include "kerr/laguerre.hpp"

namespace kerr {

/// Closed-form first moments at one instant.
///
/// X and P are the means with the Gaussian envelope exp[-nu(1 - cos 2 chi t)]
/// stripped off:  mean_x = X * envelope,  mean_p = P * envelope.
struct AnalyticPoint {
    double t = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
    Complex z;  ///< z_m(t)
    double X = 0.0;
    double P = 0.0;
};

/// <N>_m = (m+1) L_{m+1}(-nu) / L_m(-nu) - 1, constant in time.
double mean_n_closed(unsigned m, double nu);

/// Coherent-state (m = 0) means:
///   e^{-nu(1 - cos 2 chi t)} (x0 cos phi + p0 sin phi, p0 cos phi - x0 sin phi),
/// phi = nu sin 2 chi t, nu = (x0^2 + p0^2)/2.
std::pair<double, double> xp_mean_m0(double t, double x0, double p0, double chi);

/// z_m(t) = L_m^(1)(-nu e^{2 i chi t}) / L_m(-nu) * exp[i(2 m chi t + nu sin 2 chi t)].
Complex z_m(double t, unsigned m, double nu, double chi);

/// X = x0 Re z + p0 Im z,  P = p0 Re z - x0 Im z, means restored by the
/// envelope. nu is recomputed from (x0, p0).
AnalyticPoint xp_mean_m(double t, const SimParams& params);

/// Analytic engine over the grid of `params`: means and <N> only.
TimeSeries run_analytic_series(const SimParams& params);

}  // namespace kerr
