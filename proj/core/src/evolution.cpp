#include "kerr/evolution.hpp"

#include <cmath>

#include "phase.hpp"

namespace kerr {

StateVector kerr_propagate(const StateVector& s, double chi, double t) {
    const double u = detail::half_turns(chi, t);
    const auto in = s.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t n = 0; n < in.size(); ++n) {
        // chi n(n-1) t = 2 pi * [n(n-1)/2] * u, and n(n-1) is always even.
        const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
        out[n] = in[n] * std::polar(1.0, -detail::turns_to_angle(pairs, u));
    }
    return StateVector(std::move(out));
}

ObservableSet observables_at(const StateVector& s0, double chi, double t) {
    const StateVector st = kerr_propagate(s0, chi, t);
    const Moments mo = moments(st);
    ObservableSet out;
    out.t = t;
    out.mean_x = mo.mean_x;
    out.mean_p = mo.mean_p;
    out.var_x = mo.var_x;
    out.var_p = mo.var_p;
    out.uncertainty_product = std::sqrt(mo.var_x * mo.var_p);
    out.m4_x = mo.m4_x;
    out.m4_p = mo.m4_p;
    out.mean_n = mo.mean_n;
    out.autocorr = std::abs(inner_product(s0, st));
    return out;
}

std::vector<double> time_grid(const SimParams& params) {
    std::vector<double> grid(params.n_steps);
    const double span = params.t_end - params.t_start;
    const double intervals = static_cast<double>(params.n_steps - 1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = params.t_start + span * (static_cast<double>(i) / intervals);
    grid.back() = params.t_end;
    return grid;
}

TimeSeries run_series(const SimParams& params) {
    params.validate();
    const StateVector s0 =
        photon_added_state(params.x0, params.p0, params.m, params.resolved_n_max());
    TimeSeries ts{.params = params, .engine = Engine::Numeric, .samples = {}};
    const std::vector<double> grid = time_grid(params);
    ts.samples.reserve(grid.size());
    for (double t : grid) ts.samples.push_back(observables_at(s0, params.chi, t));
    return ts;
}

}  // namespace kerr
