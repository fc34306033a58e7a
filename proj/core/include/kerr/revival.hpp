#pragma once

#include <vector>

#include "kerr/evolution.hpp"

namespace kerr {

/// Samples with autocorr above 1 - kRevivalThreshold count as revivals.
inline constexpr double kRevivalThreshold = 1e-6;
/// Default analysis window, as a fraction of T_rev, centered on j T_rev / k.
inline constexpr double kDefaultWindowWidth = 0.08;
/// Fractional analysis needs a grid step below T_rev / kMinStepsPerRevival.
inline constexpr double kMinStepsPerRevival = 500.0;

/// A fractional revival at t = (n + j/k) T_rev with gcd(j, k) = 1.
struct FractionalEvent {
    int j = 0;
    int k = 0;
    double t = 0.0;
    int signature_moment_order = 0;
    double oscillation_amplitude = 0.0;

    friend bool operator==(const FractionalEvent&, const FractionalEvent&) = default;
};

struct RevivalReport {
    double t_rev = 0.0;  ///< 0 for a stationary series, where every instant is a revival
    std::vector<double> revival_times;
    std::vector<FractionalEvent> fractional_events;
    double window_width = kDefaultWindowWidth;

    friend bool operator==(const RevivalReport&, const RevivalReport&) = default;
};

enum class Channel {
    MeanX,
    MeanP,
    VarX,
    VarP,
    UncertaintyProduct,
    M4X,
    M4P,
    MeanN,
    Autocorr,
};

/// One channel of the series. Throws std::invalid_argument when the engine
/// did not populate it.
std::vector<double> channel_values(const TimeSeries& ts, Channel channel);

/// Times where autocorr exceeds 1 - kRevivalThreshold. Consecutive samples
/// above threshold form one cluster, represented by its maximum. A
/// stationary series (every sample above threshold) returns every sample.
/// Throws NoRevivalFound if the series does not span a full period.
std::vector<double> detect_revivals(const TimeSeries& ts);

/// Peak-to-trough size of the oscillation of `channel` inside the window
/// [center - w/2, center + w/2], w = width_fraction * T_rev, after removing
/// the least-squares quadratic trend over the window. The slow background
/// is not counted as oscillation.
/// Throws GridTooCoarse if the step is not below T_rev / kMinStepsPerRevival
/// or the window holds too few samples.
double window_oscillation_amplitude(const TimeSeries& ts, Channel channel, double center,
                                    double width_fraction = kDefaultWindowWidth);

struct Signature {
    double t = 0.0;
    double oscillation_amplitude = 0.0;
};

/// Oscillation in the k-th central moment of x around j T_rev / k.
/// k = 2 reads var_x, k = 4 reads m4_x; any other k throws UnsupportedOrder.
/// Requires 1 <= j < k.
Signature fractional_signature(const TimeSeries& ts, int k, int j,
                               double width_fraction = kDefaultWindowWidth);

struct RadialTangential {
    double radial_rms = 0.0;
    double tangential_rms = 0.0;
};

/// Splits the motion of (dx, dp) inside a window into the change of the
/// radius R = sqrt(dx^2 + dp^2) and the swing along the arc R * angle.
/// On the diagonal dx = dp the radial direction is the diagonal itself.
RadialTangential radial_tangential_decomposition(const TimeSeries& ts, double window_center,
                                                 double width_fraction = kDefaultWindowWidth);

/// Revival times, the detected period, and fractional events for k in {2, 4}
/// in every revival interval the series covers. Fractional events are
/// omitted when the grid is too coarse to resolve them.
RevivalReport analyze_revivals(const TimeSeries& ts, double width_fraction = kDefaultWindowWidth);

}  // namespace kerr
