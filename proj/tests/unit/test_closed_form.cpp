#include <cmath>
#include <numbers>

#include "doctest.h"
#include "kerr/closed_form.hpp"
#include "support/oracles.hpp"

using namespace kerr;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("mean_n_closed") {
    for (unsigned m = 0; m <= 10; ++m) CHECK(mean_n_closed(m, 0.0) == static_cast<double>(m));
    for (double nu : {0.1, 1.0, 7.5}) CHECK(mean_n_closed(0, nu) == doctest::Approx(nu).epsilon(1e-14));
    CHECK(mean_n_closed(1, 1.0) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(std::abs(mean_n_closed(2, 100.0) - 104.0) < 0.1);
    CHECK_THROWS_AS(mean_n_closed(1, -0.5), std::invalid_argument);
}

TEST_CASE("xp_mean_m0") {
    const auto [x0, p0] = xp_mean_m0(0.0, 1.0, 1.0, 5.0);
    CHECK(x0 == 1.0);
    CHECK(p0 == 1.0);
    const auto [xr, pr] = xp_mean_m0(kPi / 5.0, 1.0, 1.0, 5.0);
    CHECK(xr == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pr == doctest::Approx(1.0).epsilon(1e-14));
    const auto [xh, ph] = xp_mean_m0(kPi / 10.0, 1.0, 1.0, 5.0);
    CHECK(xh == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
    CHECK(ph == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("z_m") {
    SUBCASE("m = 0 is a pure phase") {
        for (double t : {0.0, 0.1, 0.33, 1.7}) {
            const Complex z = z_m(t, 0, 1.3, 5.0);
            CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(std::abs(z - std::polar(1.0, 1.3 * std::sin(10.0 * t))) < 1e-13);
        }
    }
    SUBCASE("t = 0 is the real Laguerre ratio") {
        const Complex z = z_m(0.0, 1, 1.0, 5.0);
        CHECK(z.real() == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(z.imag() == 0.0);
        for (unsigned m = 1; m <= 10; ++m) CHECK(std::abs(z_m(0.0, m, 1.0, 5.0) - 1.0) > 0.1);
    }
    SUBCASE("half revival, m = 1, nu = 1") {
        // L_1^(1)(1)/L_1(-1) * e^{i pi} = (1/2)(-1)
        const Complex z = z_m(kPi / 10.0, 1, 1.0, 5.0);
        CHECK(std::abs(z - Complex(-0.5, 0.0)) < 1e-14);
    }
    SUBCASE("|z_m| varies in time for m > 0") {
        CHECK(std::abs(std::abs(z_m(0.05, 3, 1.0, 5.0)) - std::abs(z_m(0.2, 3, 1.0, 5.0))) > 1e-3);
    }
    SUBCASE("T_rev-periodic despite the secular phase") {
        auto gen = oracle::rng(17);
        std::uniform_real_distribution<double> time(0.0, 3.0);
        for (unsigned m : {0u, 1u, 2u, 5u, 10u}) {
            for (double chi : {1.0, 5.0}) {
                for (int i = 0; i < 20; ++i) {
                    const double t = time(gen);
                    CHECK(std::abs(z_m(t, m, 1.0, chi) - z_m(t + kPi / chi, m, 1.0, chi)) < 1e-11);
                }
            }
        }
    }
}

TEST_CASE("xp_mean_m") {
    SUBCASE("m = 0 agrees with the coherent-state formula") {
        auto gen = oracle::rng(23);
        std::uniform_real_distribution<double> coord(-2.0, 2.0);
        std::uniform_real_distribution<double> time(0.0, 2.0);
        for (int i = 0; i < 200; ++i) {
            const SimParams p{.chi = 5.0, .x0 = coord(gen), .p0 = coord(gen), .m = 0};
            const double t = time(gen);
            const AnalyticPoint a = xp_mean_m(t, p);
            const auto [x, pm] = xp_mean_m0(t, p.x0, p.p0, p.chi);
            CHECK(std::abs(a.mean_x - x) < 1e-12);
            CHECK(std::abs(a.mean_p - pm) < 1e-12);
        }
    }
    SUBCASE("t = 0, m = 1") {
        const AnalyticPoint a = xp_mean_m(0.0, SimParams{.m = 1});
        CHECK(a.mean_x == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(a.mean_p == doctest::Approx(1.5).epsilon(1e-15));
    }
    SUBCASE("full revival returns the initial means") {
        for (unsigned m : {0u, 1u, 4u, 10u}) {
            const SimParams p{.chi = 5.0, .x0 = 1.0, .p0 = 1.0, .m = m};
            const AnalyticPoint start = xp_mean_m(0.0, p);
            const AnalyticPoint rev = xp_mean_m(kPi / 5.0, p);
            CHECK(std::abs(rev.mean_x - start.mean_x) < 1e-12);
            CHECK(std::abs(rev.mean_p - start.mean_p) < 1e-12);
        }
    }
    SUBCASE("envelope identity and bound") {
        auto gen = oracle::rng(29);
        std::uniform_real_distribution<double> time(0.0, 1.0);
        for (unsigned m : {0u, 2u, 7u}) {
            const SimParams p{.chi = 5.0, .x0 = 1.1, .p0 = -0.6, .m = m};
            for (int i = 0; i < 100; ++i) {
                const double t = time(gen);
                const AnalyticPoint a = xp_mean_m(t, p);
                const double envelope = std::exp(-p.nu() * (1.0 - std::cos(2 * p.chi * t)));
                CHECK(a.mean_x == doctest::Approx(a.X * envelope).epsilon(1e-13));
                CHECK(a.mean_p == doctest::Approx(a.P * envelope).epsilon(1e-13));
                const double bound = envelope * std::abs(a.z) * std::hypot(p.x0, p.p0);
                CHECK(std::abs(a.mean_x) <= bound * (1 + 1e-12));
                CHECK(std::abs(a.mean_p) <= bound * (1 + 1e-12));
            }
        }
    }
}

TEST_CASE("analytic series leaves higher moments empty") {
    SimParams p{.m = 2};
    p.t_end = p.revival_period();
    p.n_steps = 50;
    const TimeSeries ts = run_analytic_series(p);
    CHECK(ts.engine == Engine::Analytic);
    CHECK(ts.samples.size() == 50);
    for (const ObservableSet& o : ts.samples) {
        CHECK_FALSE(o.var_x.has_value());
        CHECK_FALSE(o.m4_p.has_value());
        CHECK_FALSE(o.autocorr.has_value());
        CHECK(o.mean_n == mean_n_closed(2, 1.0));
    }
}

TEST_CASE("closed form agrees with the numeric engine") {
    for (unsigned m : {0u, 1u, 2u, 5u, 10u}) {
        for (double nu : {0.25, 1.0, 4.0}) {
            for (double chi : {1.0, 5.0}) {
                const double x0 = std::sqrt(nu);
                SimParams p{.chi = chi, .x0 = x0, .p0 = x0, .m = m};
                p.t_end = p.revival_period();
                p.n_steps = 400;
                const TimeSeries numeric = run_series(p);
                const TimeSeries analytic = run_analytic_series(p);
                double worst = 0.0;
                for (std::size_t i = 0; i < numeric.samples.size(); ++i) {
                    worst = std::max(worst, std::abs(numeric.samples[i].mean_x - analytic.samples[i].mean_x));
                    worst = std::max(worst, std::abs(numeric.samples[i].mean_p - analytic.samples[i].mean_p));
                }
                CHECK(worst < 1e-9);
                CHECK(std::abs(numeric.samples[0].mean_n - analytic.samples[0].mean_n) < 1e-10);
            }
        }
    }
}
