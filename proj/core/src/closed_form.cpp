#include "kerr/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "phase.hpp"

namespace kerr {

double mean_n_closed(unsigned m, double nu) {
    if (!(nu >= 0.0)) throw std::invalid_argument("mean_n_closed: nu must be non-negative");
    const double upper = laguerre(m + 1, Complex{-nu, 0.0}).real();
    const double lower = laguerre(m, Complex{-nu, 0.0}).real();
    return static_cast<double>(m + 1) * upper / lower - 1.0;
}

std::pair<double, double> xp_mean_m0(double t, double x0, double p0, double chi) {
    const double nu = 0.5 * (x0 * x0 + p0 * p0);
    const double two_chi_t = 2.0 * chi * t;
    const double envelope = std::exp(-nu * (1.0 - std::cos(two_chi_t)));
    const double phi = nu * std::sin(two_chi_t);
    return {envelope * (x0 * std::cos(phi) + p0 * std::sin(phi)),
            envelope * (p0 * std::cos(phi) - x0 * std::sin(phi))};
}

Complex z_m(double t, unsigned m, double nu, double chi) {
    if (!(nu >= 0.0)) throw std::invalid_argument("z_m: nu must be non-negative");
    const double u = detail::half_turns(chi, t);
    const Complex rotation = std::polar(1.0, detail::turns_to_angle(1, u));  // e^{2 i chi t}
    const Complex numerator = laguerre_assoc1(m, -nu * rotation);
    const double denominator = laguerre(m, Complex{-nu, 0.0}).real();
    const double phase = detail::turns_to_angle(m, u) + nu * rotation.imag();
    return numerator / denominator * std::polar(1.0, phase);
}

AnalyticPoint xp_mean_m(double t, const SimParams& params) {
    const double nu = params.nu();
    const Complex z = z_m(t, params.m, nu, params.chi);
    const double cos_2chit = std::cos(detail::turns_to_angle(1, detail::half_turns(params.chi, t)));
    const double envelope = std::exp(-nu * (1.0 - cos_2chit));
    AnalyticPoint out;
    out.t = t;
    out.z = z;
    out.X = params.x0 * z.real() + params.p0 * z.imag();
    out.P = params.p0 * z.real() - params.x0 * z.imag();
    out.mean_x = out.X * envelope;
    out.mean_p = out.P * envelope;
    return out;
}

TimeSeries run_analytic_series(const SimParams& params) {
    params.validate();
    const double mean_n = mean_n_closed(params.m, params.nu());
    TimeSeries ts{.params = params, .engine = Engine::Analytic, .samples = {}};
    const std::vector<double> grid = time_grid(params);
    ts.samples.reserve(grid.size());
    for (double t : grid) {
        const AnalyticPoint point = xp_mean_m(t, params);
        ObservableSet sample;
        sample.t = t;
        sample.mean_x = point.mean_x;
        sample.mean_p = point.mean_p;
        sample.mean_n = mean_n;
        ts.samples.push_back(sample);
    }
    return ts;
}

}  // namespace kerr
