#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library paths it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

inline long double binomial(long double n, unsigned k) {
    long double r = 1.0L;
    for (unsigned i = 1; i <= k; ++i) r *= (n - k + i) / i;
    return r;
}

/// L_m^(alpha)(z) = sum_i (-1)^i C(m+alpha, m-i) z^i / i!, in long double.
inline Complex laguerre_explicit(unsigned m, unsigned alpha, Complex z) {
    const LComplex zl(z.real(), z.imag());
    LComplex sum = 0.0L;
    LComplex power = 1.0L;
    long double factorial = 1.0L;
    for (unsigned i = 0; i <= m; ++i) {
        if (i > 0) {
            power *= zl;
            factorial *= i;
        }
        const long double sign = (i % 2 == 0) ? 1.0L : -1.0L;
        sum += sign * binomial(static_cast<long double>(m + alpha), m - i) * power / factorial;
    }
    return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

/// Dense operator algebra on a truncated basis of dimension `dim`.
struct Dense {
    using Matrix = std::vector<std::vector<Complex>>;
    std::size_t dim;
    Matrix a, adag, x, p, n;

    explicit Dense(std::size_t d)
        : dim(d),
          a(d, std::vector<Complex>(d)),
          adag(d, std::vector<Complex>(d)),
          x(d, std::vector<Complex>(d)),
          p(d, std::vector<Complex>(d)),
          n(d, std::vector<Complex>(d)) {
        const double r2 = std::numbers::sqrt2;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            a[i][i + 1] = std::sqrt(double(i + 1));
            adag[i + 1][i] = std::sqrt(double(i + 1));
        }
        for (std::size_t i = 0; i < d; ++i) {
            n[i][i] = double(i);
            for (std::size_t j = 0; j < d; ++j) {
                x[i][j] = (a[i][j] + adag[i][j]) / r2;
                p[i][j] = Complex(0, -1) * (a[i][j] - adag[i][j]) / r2;
            }
        }
    }

    static std::vector<Complex> apply(const Matrix& m, const std::vector<Complex>& v) {
        std::vector<Complex> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
        return out;
    }

    static Complex braket(const std::vector<Complex>& u, const std::vector<Complex>& v) {
        Complex s{};
        for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
        return s;
    }

    /// <v| (q - <q>)^power |v> for power 2 or 4, q one of x, p.
    static double central_moment(const Matrix& q, const std::vector<Complex>& v, int power) {
        const double mean = braket(v, apply(q, v)).real();
        std::vector<Complex> w = v;
        for (int k = 0; k < power / 2; ++k) {
            std::vector<Complex> qw = apply(q, w);
            for (std::size_t i = 0; i < w.size(); ++i) qw[i] -= mean * w[i];
            w = std::move(qw);
        }
        return braket(w, w).real();
    }
};

/// c_n = e^{-nu/2} alpha^n / sqrt(n!) evaluated directly (n_max <= 150).
inline std::vector<Complex> coherent_direct(double x0, double p0, std::size_t n_max) {
    const Complex alpha = Complex(x0, p0) / std::numbers::sqrt2;
    const double nu = std::norm(alpha);
    std::vector<Complex> c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        c[n] = std::exp(-nu / 2) * std::pow(alpha, double(n)) / std::sqrt(std::tgamma(double(n) + 1));
    return c;
}

/// (a^dagger)^m applied by dense matrices to the direct coherent vector,
/// kept on 0..n_max and normalized.
inline std::vector<Complex> photon_added_dense(double x0, double p0, unsigned m, std::size_t n_max) {
    const std::size_t big = n_max + m + 1;
    std::vector<Complex> v = coherent_direct(x0, p0, big - 1);
    const Dense ops(big);
    for (unsigned i = 0; i < m; ++i) v = Dense::apply(ops.adag, v);
    v.resize(n_max + 1);
    double norm = 0.0;
    for (const Complex& c : v) norm += std::norm(c);
    for (Complex& c : v) c /= std::sqrt(norm);
    return v;
}

/// Central difference with step h.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

inline std::mt19937_64 rng(std::uint64_t seed = 20040623) { return std::mt19937_64(seed); }

}  // namespace oracle
