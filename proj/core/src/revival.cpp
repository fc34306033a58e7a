#include "kerr/revival.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kerr/errors.hpp"

namespace kerr {
namespace {

constexpr std::size_t kMinWindowSamples = 16;

double value_or_throw(const std::optional<double>& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("channel not populated: ") + name);
    return *v;
}

double grid_step(const TimeSeries& ts) {
    if (ts.samples.size() < 2) return std::numeric_limits<double>::infinity();
    return (ts.samples.back().t - ts.samples.front().t) / static_cast<double>(ts.samples.size() - 1);
}

void require_fine_grid(const TimeSeries& ts) {
    const double t_rev = ts.params.revival_period();
    const double step = grid_step(ts);
    if (!(step < t_rev / kMinStepsPerRevival)) {
        std::ostringstream msg;
        msg << "grid step " << step << " is not below T_rev/" << kMinStepsPerRevival << " = "
            << t_rev / kMinStepsPerRevival;
        throw GridTooCoarse(msg.str());
    }
}

struct Window {
    std::size_t first = 0;
    std::size_t last = 0;  // one past
};

Window window_indices(const TimeSeries& ts, double center, double width_fraction) {
    require_fine_grid(ts);
    const double half = 0.5 * width_fraction * ts.params.revival_period();
    const double slack = 1e-9 * grid_step(ts);
    const auto& s = ts.samples;
    const auto lo = std::lower_bound(s.begin(), s.end(), center - half - slack,
                                     [](const ObservableSet& o, double t) { return o.t < t; });
    const auto hi = std::upper_bound(s.begin(), s.end(), center + half + slack,
                                     [](double t, const ObservableSet& o) { return t < o.t; });
    Window w{static_cast<std::size_t>(lo - s.begin()), static_cast<std::size_t>(hi - s.begin())};
    if (w.last - w.first < kMinWindowSamples) {
        std::ostringstream msg;
        msg << "window around t = " << center << " holds " << (w.last - w.first)
            << " samples, need " << kMinWindowSamples;
        throw GridTooCoarse(msg.str());
    }
    return w;
}

// Residual of a least-squares quadratic fit, in coordinates scaled to [-1, 1].
std::vector<double> quadratic_residual(std::span<const double> t, std::span<const double> y) {
    const double t0 = 0.5 * (t.front() + t.back());
    const double scale = std::max(0.5 * (t.back() - t.front()), 1e-300);
    std::array<std::array<double, 4>, 3> normal{};  // augmented [A^T A | A^T y]
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double s = (t[i] - t0) / scale;
        const std::array<double, 3> basis{1.0, s, s * s};
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) normal[r][c] += basis[r] * basis[c];
            normal[r][3] += basis[r] * y[i];
        }
    }
    // Gauss-Jordan with partial pivoting; the system is 3x3 and well scaled.
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 3; ++r)
            if (std::abs(normal[r][col]) > std::abs(normal[pivot][col])) pivot = r;
        std::swap(normal[col], normal[pivot]);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = normal[r][col] / normal[col][col];
            for (std::size_t c = col; c < 4; ++c) normal[r][c] -= f * normal[col][c];
        }
    }
    std::array<double, 3> coef{};
    for (std::size_t r = 0; r < 3; ++r) coef[r] = normal[r][3] / normal[r][r];

    std::vector<double> residual(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double s = (t[i] - t0) / scale;
        residual[i] = y[i] - (coef[0] + coef[1] * s + coef[2] * s * s);
    }
    return residual;
}

double oscillation_in(const TimeSeries& ts, Channel channel, const Window& w) {
    const std::vector<double> values = channel_values(ts, channel);
    std::vector<double> times;
    times.reserve(w.last - w.first);
    for (std::size_t i = w.first; i < w.last; ++i) times.push_back(ts.samples[i].t);
    const std::span<const double> y(values.data() + w.first, w.last - w.first);

    // A constant channel has no oscillation; skip the fit so rounding in
    // the normal equations cannot manufacture one.
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (*lo == *hi) return 0.0;

    const std::vector<double> residual = quadratic_residual(times, y);
    const auto [rlo, rhi] = std::minmax_element(residual.begin(), residual.end());
    return *rhi - *rlo;
}

int moment_order_channel(int k, Channel& channel) {
    switch (k) {
        case 2: channel = Channel::VarX; return 2;
        case 4: channel = Channel::M4X; return 4;
        default: {
            std::ostringstream msg;
            msg << "fractional order k = " << k << " unsupported (k must be 2 or 4)";
            throw UnsupportedOrder(msg.str());
        }
    }
}

}  // namespace

std::vector<double> channel_values(const TimeSeries& ts, Channel channel) {
    std::vector<double> out;
    out.reserve(ts.samples.size());
    for (const ObservableSet& s : ts.samples) {
        switch (channel) {
            case Channel::MeanX: out.push_back(s.mean_x); break;
            case Channel::MeanP: out.push_back(s.mean_p); break;
            case Channel::VarX: out.push_back(value_or_throw(s.var_x, "var_x")); break;
            case Channel::VarP: out.push_back(value_or_throw(s.var_p, "var_p")); break;
            case Channel::UncertaintyProduct:
                out.push_back(value_or_throw(s.uncertainty_product, "dxdp"));
                break;
            case Channel::M4X: out.push_back(value_or_throw(s.m4_x, "m4_x")); break;
            case Channel::M4P: out.push_back(value_or_throw(s.m4_p, "m4_p")); break;
            case Channel::MeanN: out.push_back(s.mean_n); break;
            case Channel::Autocorr: out.push_back(value_or_throw(s.autocorr, "autocorr")); break;
        }
    }
    return out;
}

std::vector<double> detect_revivals(const TimeSeries& ts) {
    if (ts.samples.empty()) throw NoRevivalFound("empty time series");
    const double t_rev = ts.params.revival_period();
    const double span = ts.samples.back().t - ts.samples.front().t;
    if (span < t_rev * (1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "series spans " << span << ", shorter than one revival period " << t_rev;
        throw NoRevivalFound(msg.str());
    }

    const std::vector<double> autocorr = channel_values(ts, Channel::Autocorr);
    const double threshold = 1.0 - kRevivalThreshold;
    if (std::all_of(autocorr.begin(), autocorr.end(), [&](double a) { return a > threshold; })) {
        std::vector<double> every;
        every.reserve(ts.samples.size());
        for (const ObservableSet& s : ts.samples) every.push_back(s.t);
        return every;
    }

    std::vector<double> times;
    std::size_t i = 0;
    while (i < autocorr.size()) {
        if (!(autocorr[i] > threshold)) {
            ++i;
            continue;
        }
        std::size_t best = i;
        for (; i < autocorr.size() && autocorr[i] > threshold; ++i)
            if (autocorr[i] > autocorr[best]) best = i;
        times.push_back(ts.samples[best].t);
    }
    return times;
}

double window_oscillation_amplitude(const TimeSeries& ts, Channel channel, double center,
                                    double width_fraction) {
    return oscillation_in(ts, channel, window_indices(ts, center, width_fraction));
}

Signature fractional_signature(const TimeSeries& ts, int k, int j, double width_fraction) {
    Channel channel{};
    moment_order_channel(k, channel);
    if (j < 1 || j >= k) throw std::invalid_argument("fractional_signature: need 1 <= j < k");
    const double t = ts.params.revival_period() * static_cast<double>(j) / static_cast<double>(k);
    return Signature{t, window_oscillation_amplitude(ts, channel, t, width_fraction)};
}

RadialTangential radial_tangential_decomposition(const TimeSeries& ts, double window_center,
                                                 double width_fraction) {
    const Window w = window_indices(ts, window_center, width_fraction);
    const std::vector<double> var_x = channel_values(ts, Channel::VarX);
    const std::vector<double> var_p = channel_values(ts, Channel::VarP);

    const std::size_t count = w.last - w.first;
    std::vector<double> radius(count);
    std::vector<double> angle(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double dx = std::sqrt(var_x[w.first + i]);
        const double dp = std::sqrt(var_p[w.first + i]);
        radius[i] = std::hypot(dx, dp);
        angle[i] = std::atan2(dp, dx);
    }
    const double n = static_cast<double>(count);
    const double mean_radius = std::accumulate(radius.begin(), radius.end(), 0.0) / n;
    const double mean_angle = std::accumulate(angle.begin(), angle.end(), 0.0) / n;

    double radial = 0.0;
    double tangential = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dr = radius[i] - mean_radius;
        const double ds = mean_radius * (angle[i] - mean_angle);
        radial += dr * dr;
        tangential += ds * ds;
    }
    return RadialTangential{std::sqrt(radial / n), std::sqrt(tangential / n)};
}

RevivalReport analyze_revivals(const TimeSeries& ts, double width_fraction) {
    RevivalReport report;
    report.window_width = width_fraction;
    report.revival_times = detect_revivals(ts);

    if (report.revival_times.size() == ts.samples.size() && ts.samples.size() > 2) {
        report.t_rev = 0.0;  // stationary
        return report;
    }
    if (report.revival_times.size() < 2)
        throw NoRevivalFound("fewer than two revivals; cannot establish the period");

    const auto& r = report.revival_times;
    report.t_rev = (r.back() - r.front()) / static_cast<double>(r.size() - 1);

    try {
        require_fine_grid(ts);
    } catch (const GridTooCoarse&) {
        return report;
    }

    const double period = ts.params.revival_period();
    const double t_first = ts.samples.front().t;
    const double t_last = ts.samples.back().t;
    const double half = 0.5 * width_fraction * period;
    const auto first_cycle = static_cast<long>(std::floor(t_first / period));
    const auto last_cycle = static_cast<long>(std::floor(t_last / period));
    for (long cycle = first_cycle; cycle <= last_cycle; ++cycle) {
        for (int k : {2, 4}) {
            Channel channel{};
            const int order = moment_order_channel(k, channel);
            for (int j = 1; j < k; ++j) {
                if (std::gcd(j, k) != 1) continue;
                const double t = period * (static_cast<double>(cycle) +
                                           static_cast<double>(j) / static_cast<double>(k));
                if (t - half < t_first || t + half > t_last) continue;
                const double amplitude = window_oscillation_amplitude(ts, channel, t, width_fraction);
                report.fractional_events.push_back(FractionalEvent{j, k, t, order, amplitude});
            }
        }
    }
    std::sort(report.fractional_events.begin(), report.fractional_events.end(),
              [](const FractionalEvent& a, const FractionalEvent& b) { return a.t < b.t; });
    return report;
}

}  // namespace kerr
