#include "kerr/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "kerr/errors.hpp"

namespace kerr {

Complex SimParams::alpha() const noexcept { return Complex{x0, p0} / std::numbers::sqrt2; }

double SimParams::revival_period() const noexcept { return std::numbers::pi / chi; }

std::size_t SimParams::resolved_n_max() const noexcept {
    return n_max.value_or(auto_truncation(nu(), m));
}

void SimParams::validate() const {
    if (!std::isfinite(chi) || chi <= 0.0)
        throw std::invalid_argument("chi must be finite and positive");
    if (!std::isfinite(x0) || !std::isfinite(p0))
        throw std::invalid_argument("x0 and p0 must be finite");
    if (n_max && *n_max == 0) throw std::invalid_argument("n_max must be at least 1");
    if (n_steps < 2) throw std::invalid_argument("n_steps must be at least 2");
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start))
        throw std::invalid_argument("time grid needs finite t_start < t_end");
}

std::size_t auto_truncation(double nu, unsigned m) noexcept {
    const double md = static_cast<double>(m);
    const double estimate = std::ceil(nu + 2.0 * md + 12.0 * std::sqrt(nu + md + 1.0));
    return std::max<std::size_t>(32, static_cast<std::size_t>(estimate) + kTailWindow);
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw std::invalid_argument("StateVector needs at least one amplitude");
}

double StateVector::norm() const noexcept {
    double sum = 0.0;
    for (const Complex& c : amps_) sum += std::norm(c);
    return std::sqrt(sum);
}

Complex inner_product(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("inner_product: n_max mismatch");
    Complex sum{};
    for (std::size_t n = 0; n < lhs.size(); ++n) sum += std::conj(lhs[n]) * rhs[n];
    return sum;
}

double tail_mass(const StateVector& s) noexcept {
    const auto amps = s.amplitudes();
    const std::size_t first = amps.size() > kTailWindow ? amps.size() - kTailWindow : 0;
    double mass = 0.0;
    for (std::size_t n = first; n < amps.size(); ++n) mass += std::norm(amps[n]);
    return mass;
}

StateVector number_state(std::size_t n, std::size_t n_max) {
    if (n > n_max) throw TruncationInsufficient("number_state: n exceeds n_max");
    std::vector<Complex> amps(n_max + 1);
    amps[n] = 1.0;
    return StateVector(std::move(amps));
}

namespace {

void check_tail(const StateVector& s, const char* what) {
    const double mass = tail_mass(s);
    if (!(mass < kTailTolerance)) {
        std::ostringstream msg;
        msg << what << ": tail mass " << mass << " in the top " << kTailWindow
            << " slots exceeds " << kTailTolerance << " at n_max = " << s.n_max();
        throw TruncationInsufficient(msg.str());
    }
}

}  // namespace

StateVector coherent_state(double x0, double p0, std::size_t n_max) {
    return photon_added_state(x0, p0, 0, n_max);
}

StateVector photon_added_state(double x0, double p0, unsigned m, std::size_t n_max) {
    if (m > n_max) {
        std::ostringstream msg;
        msg << "photon_added_state: m = " << m << " exceeds n_max = " << n_max;
        throw TruncationInsufficient(msg.str());
    }
    const Complex alpha = Complex{x0, p0} / std::numbers::sqrt2;
    const double radius = std::abs(alpha);
    std::vector<Complex> amps(n_max + 1);

    if (radius == 0.0) {
        amps[m] = 1.0;
    } else {
        // |c_n| for n = m + k is |alpha|^k sqrt(n!)/k!, carried as a logarithm.
        const double log_radius = std::log(radius);
        const double phase = std::arg(alpha);
        std::vector<double> log_mag(n_max + 1, -std::numeric_limits<double>::infinity());
        log_mag[m] = 0.0;
        for (std::size_t n = m; n < n_max; ++n) {
            const double k_next = static_cast<double>(n + 1 - m);
            log_mag[n + 1] = log_mag[n] + log_radius + 0.5 * std::log(static_cast<double>(n + 1)) -
                             std::log(k_next);
        }
        const double peak = *std::max_element(log_mag.begin() + m, log_mag.end());
        for (std::size_t n = m; n <= n_max; ++n) {
            const double k = static_cast<double>(n - m);
            amps[n] = std::polar(std::exp(log_mag[n] - peak), k * phase);
        }
        double sum = 0.0;
        for (const Complex& c : amps) sum += std::norm(c);
        const double scale = 1.0 / std::sqrt(sum);
        for (Complex& c : amps) c *= scale;
    }

    StateVector state(std::move(amps));
    check_tail(state, m == 0 ? "coherent_state" : "photon_added_state");
    return state;
}

StateVector apply_annihilation(const StateVector& s) {
    const auto in = s.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t n = 0; n + 1 < in.size(); ++n)
        out[n] = std::sqrt(static_cast<double>(n + 1)) * in[n + 1];
    return StateVector(std::move(out));
}

StateVector apply_creation(const StateVector& s) {
    const auto in = s.amplitudes();
    const std::size_t top = s.n_max();
    const double lost = static_cast<double>(top + 1) * std::norm(in[top]);
    if (lost > kTailTolerance) {
        std::ostringstream msg;
        msg << "apply_creation: weight " << lost << " would leave the basis at n_max = " << top;
        throw TruncationInsufficient(msg.str());
    }
    std::vector<Complex> out(in.size());
    for (std::size_t n = 1; n < in.size(); ++n)
        out[n] = std::sqrt(static_cast<double>(n)) * in[n - 1];
    return StateVector(std::move(out));
}

namespace {

enum class Quadrature { X, P };

// out = (q - shift) in, over buffers that share one length. The caller pads
// so nothing reaches the last slot.
void apply_quadrature(Quadrature q, double shift, std::span<const Complex> in,
                      std::span<Complex> out) {
    const std::size_t size = in.size();
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t n = 0; n < size; ++n) {
        const Complex up = n + 1 < size ? std::sqrt(static_cast<double>(n + 1)) * in[n + 1] : Complex{};
        const Complex down = n > 0 ? std::sqrt(static_cast<double>(n)) * in[n - 1] : Complex{};
        const Complex value = q == Quadrature::X ? (up + down) * inv_sqrt2
                                                 : Complex{0.0, -1.0} * (up - down) * inv_sqrt2;
        out[n] = value - shift * in[n];
    }
}

double squared_norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const Complex& c : v) sum += std::norm(c);
    return sum;
}

struct QuadratureMoments {
    double mean = 0.0;
    double second = 0.0;  // <q^2>
    double variance = 0.0;
    double fourth_central = 0.0;
};

QuadratureMoments quadrature_moments(Quadrature q, std::span<const Complex> padded) {
    std::vector<Complex> first(padded.size());
    std::vector<Complex> second(padded.size());

    apply_quadrature(q, 0.0, padded, first);
    QuadratureMoments out;
    Complex mean{};
    for (std::size_t n = 0; n < padded.size(); ++n) mean += std::conj(padded[n]) * first[n];
    out.mean = mean.real();
    out.second = squared_norm(first);

    apply_quadrature(q, out.mean, padded, first);
    out.variance = squared_norm(first);
    apply_quadrature(q, out.mean, first, second);
    out.fourth_central = squared_norm(second);
    return out;
}

std::vector<Complex> padded_copy(const StateVector& s) {
    // Two quadrature applications raise occupation by at most two.
    std::vector<Complex> buffer(s.size() + 2);
    std::copy(s.amplitudes().begin(), s.amplitudes().end(), buffer.begin());
    return buffer;
}

std::pair<double, double> number_moments(const StateVector& s) {
    double first = 0.0;
    double second = 0.0;
    const auto amps = s.amplitudes();
    for (std::size_t n = 0; n < amps.size(); ++n) {
        const double weight = std::norm(amps[n]);
        const double nd = static_cast<double>(n);
        first += nd * weight;
        second += nd * nd * weight;
    }
    return {first, second};
}

}  // namespace

Moments moments(const StateVector& s) {
    const std::vector<Complex> padded = padded_copy(s);
    const QuadratureMoments x = quadrature_moments(Quadrature::X, padded);
    const QuadratureMoments p = quadrature_moments(Quadrature::P, padded);
    const auto [mean_n, mean_n2] = number_moments(s);
    return Moments{
        .mean_x = x.mean,
        .mean_p = p.mean,
        .var_x = x.variance,
        .var_p = p.variance,
        .m4_x = x.fourth_central,
        .m4_p = p.fourth_central,
        .mean_n = mean_n,
        .mean_n2 = mean_n2,
    };
}

double expectation(const StateVector& s, Observable observable) {
    switch (observable) {
        case Observable::N: return number_moments(s).first;
        case Observable::NSquared: return number_moments(s).second;
        default: break;
    }
    const std::vector<Complex> padded = padded_copy(s);
    const bool is_x = observable == Observable::X || observable == Observable::XSquared ||
                      observable == Observable::XFourthCentral;
    const QuadratureMoments q = quadrature_moments(is_x ? Quadrature::X : Quadrature::P, padded);
    switch (observable) {
        case Observable::X:
        case Observable::P: return q.mean;
        case Observable::XSquared:
        case Observable::PSquared: return q.second;
        default: return q.fourth_central;
    }
}

double nonlinear_eigen_residual(const StateVector& s, unsigned m, Complex alpha) {
    const StateVector lowered = apply_annihilation(s);
    double sum = 0.0;
    for (std::size_t n = 0; n < s.size(); ++n) {
        const double factor = 1.0 - static_cast<double>(m) / static_cast<double>(n + 1);
        sum += std::norm(factor * lowered[n] - alpha * s[n]);
    }
    return std::sqrt(sum);
}

}  // namespace kerr
