#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nazgsa/errors.hpp"
#include "nazgsa/quadrature.hpp"
#include "nazgsa/rng.hpp"
#include "nazgsa/specfun.hpp"

using namespace nazgsa;

TEST_SUITE("specfun") {

TEST_CASE("gaussian_pdf values and symmetry") {
    CHECK(gaussian_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(gaussian_pdf(1.0) == doctest::Approx(0.24197072451914337).epsilon(1e-15));
    for (double x : {0.3, 1.7, 4.2, 9.0}) {
        CHECK(gaussian_pdf(-x) == gaussian_pdf(x));
    }
}

TEST_CASE("gaussian_tail matches erfc oracle") {
    CHECK(gaussian_tail(0.0) == 0.5);
    CHECK(gaussian_tail(1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-14));
    // Relative error against a high-precision table (mpmath ncdf).
    CHECK(gaussian_tail(2.0) == doctest::Approx(0.022750131948179207).epsilon(1e-13));
    CHECK(gaussian_tail(-3.0) == doctest::Approx(0.9986501019683699).epsilon(1e-14));
    CHECK(gaussian_tail(8.0) == doctest::Approx(6.220960574271785e-16).epsilon(1e-12));
}

TEST_CASE("mills_sandwich") {
    const auto at_one = mills_sandwich(1.0);
    CHECK(at_one.lower == 0.0);
    CHECK(at_one.upper == doctest::Approx(0.24197072451914337).epsilon(1e-14));

    const auto at_two = mills_sandwich(2.0);
    CHECK(at_two.lower == doctest::Approx(0.020246612442445519).epsilon(1e-13));
    CHECK(at_two.upper == doctest::Approx(0.026995483256594026).epsilon(1e-13));

    for (int k = 10; k <= 80; ++k) {
        const double t = k / 10.0;
        const auto s = mills_sandwich(t);
        CHECK(s.lower <= gaussian_tail(t));
        CHECK(gaussian_tail(t) <= s.upper);
        CHECK(0.0 <= s.lower);
        CHECK(s.upper <= 1.0);
    }
    CHECK_THROWS_AS(mills_sandwich(0.0), ValidationError);
    CHECK_THROWS_AS(mills_sandwich(-1.0), ValidationError);
}

TEST_CASE("norm_concentration_bound") {
    CHECK(norm_concentration_bound(5, 100.0, 0.25) == 0.0);
    CHECK(norm_concentration_bound(100, 0.01, 0.25) == 1.0);
    CHECK_THROWS_AS(norm_concentration_bound(10, 0.0, 0.25), ValidationError);
    CHECK_THROWS_AS(norm_concentration_bound(10, 1.0, 0.0), ValidationError);
}

TEST_CASE("norm_concentration_bound dominates simulated deviations (n = 100, C = 1/8)") {
    constexpr int n = 100;
    constexpr int samples = 1000000;
    const double root_n = std::sqrt(static_cast<double>(n));
    int exceed[3] = {0, 0, 0};
    Philox4x32 rng(2024, stream_id(StreamDomain::GaussianPoints, 0));
    for (int i = 0; i < samples; ++i) {
        double norm2 = 0.0;
        for (int k = 0; k < n; ++k) {
            const double g = rng.gaussian();
            norm2 += g * g;
        }
        const double deviation = std::abs(std::sqrt(norm2) - root_n);
        for (int t = 1; t <= 3; ++t) {
            exceed[t - 1] += deviation >= t ? 1 : 0;
        }
    }
    for (int t = 1; t <= 3; ++t) {
        CHECK(static_cast<double>(exceed[t - 1]) / samples <= norm_concentration_bound(n, t));
    }
}

TEST_CASE("log_gamma") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma(2.0)) < 1e-14);
    CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
    // Factorials well into the Stirling range.
    double log_fact = 0.0;
    for (int k = 1; k < 60; ++k) {
        log_fact += std::log(static_cast<double>(k));
        CHECK(std::abs(log_gamma(k + 1.0) - log_fact) < 1e-12);
    }
    // Half-integers: Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!).
    double log_half = 0.5 * std::log(std::numbers::pi);
    for (int k = 1; k < 40; ++k) {
        log_half += std::log(k - 0.5);
        CHECK(std::abs(log_gamma(k + 0.5) - log_half) < 1e-12);
    }
    CHECK_THROWS_AS(log_gamma(0.0), ValidationError);
    CHECK_THROWS_AS(log_gamma(-2.5), ValidationError);
}

TEST_CASE("log_gamma_ratio agrees with the plain difference") {
    for (double a : {0.5, 1.3, 7.0, 12.5, 300.25}) {
        for (double b : {0.25, 2.0, 9.5, 11.0, 299.75}) {
            CHECK(log_gamma_ratio(a, b) == doctest::Approx(log_gamma(a) - log_gamma(b)).epsilon(1e-12));
        }
    }
}

TEST_CASE("cap_normalizer closed forms") {
    CHECK(cap_normalizer(2) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(cap_normalizer(3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cap_normalizer(103) == doctest::Approx(4.019256488052527).epsilon(1e-13));
    CHECK_THROWS_AS(cap_normalizer(1), ValidationError);
}

TEST_CASE("cap_normalizer asymptotics at n = 1e6") {
    const double n = 1e6;
    const double ceiling = std::sqrt(n / (2.0 * std::numbers::pi));
    const double tau = cap_normalizer(1'000'000);
    // tau_n = sqrt(n / 2 pi) (1 - 3/(4n) + ...); the bracket uses c = 1.
    CHECK(tau <= ceiling);
    CHECK(tau >= ceiling * (1.0 - 1.0 / n));
    CHECK(tau / ceiling == doctest::Approx(0.999999249999781).epsilon(1e-12));
}

TEST_CASE("cap_normalizer recurrence tau_n tau_(n-1) = (n-2)/(2 pi)") {
    for (int n = 4; n <= 100; ++n) {
        const double lhs = log_cap_normalizer(n) + log_cap_normalizer(n - 1);
        CHECK(std::abs(lhs - std::log((n - 2.0) / (2.0 * std::numbers::pi))) < 1e-10);
    }
}

TEST_CASE("cap_normalizer stays below sqrt(n / 2 pi) on a log grid") {
    for (double e = std::log(2.0); e <= std::log(1e6); e += 0.05) {
        const int n = static_cast<int>(std::round(std::exp(e)));
        CHECK(cap_normalizer(n) <= std::sqrt(n / (2.0 * std::numbers::pi)));
    }
}

TEST_CASE("chi_log_density") {
    CHECK(chi_log_density(1, 1.0) == doctest::Approx(-0.7257913526447274).epsilon(1e-14));
    CHECK(chi_log_density(2, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK_THROWS_AS(chi_log_density(3, 0.0), ValidationError);
}

TEST_CASE("chi density normalizes and peaks at sqrt(n - 1)") {
    for (int n : {2, 64, 4096}) {
        const double hi = std::sqrt(static_cast<double>(n)) + 12.0;
        auto density = [n](double rho) { return rho > 0 ? std::exp(chi_log_density(n, rho)) : 0.0; };
        // Trapezoid rule on a fine grid.
        constexpr int steps = 200000;
        const double h = hi / steps;
        double sum = 0.5 * (density(0.0) + density(hi));
        for (int i = 1; i < steps; ++i) {
            sum += density(i * h);
        }
        CHECK(std::abs(sum * h - 1.0) < 1e-8);

        const double mode = std::sqrt(n - 1.0);
        const double step = 1e-3;
        CHECK(chi_log_density(n, mode) > chi_log_density(n, mode - step));
        CHECK(chi_log_density(n, mode) > chi_log_density(n, mode + step));
    }
}

TEST_CASE("chi_cdf against the density integral") {
    for (int n : {1, 2, 5, 30, 400}) {
        for (double rho : {0.5, 1.0, std::sqrt(static_cast<double>(n)), std::sqrt(n + 10.0)}) {
            auto density = [n](double x) { return x > 0 ? std::exp(chi_log_density(n, x)) : 0.0; };
            const double lo = std::max(0.0, std::sqrt(static_cast<double>(n)) - 14.0);
            const double direct = lo < rho ? adaptive_gauss_legendre(density, lo, rho, 1e-16, 1e-13) : 0.0;
            CHECK(std::abs(chi_cdf(n, rho) - direct) < 1e-12);
            CHECK(std::abs(chi_cdf(n, rho) + chi_sf(n, rho) - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("regularized incomplete beta closed forms") {
    // I_x(1, b) = 1 - (1 - x)^b and I_x(a, 1) = x^a.
    for (double x : {1e-6, 0.1, 0.5, 0.9, 0.999}) {
        CHECK(regularized_beta(x, 1.0 - x, 1.0, 3.5) == doctest::Approx(1.0 - std::pow(1.0 - x, 3.5)).epsilon(1e-13));
        CHECK(regularized_beta(x, 1.0 - x, 2.5, 1.0) == doctest::Approx(std::pow(x, 2.5)).epsilon(1e-13));
    }
    // Deep tail keeps relative precision in log space: I_x(a, 1) = x^a.
    CHECK(log_regularized_beta(1e-3, 1.0 - 1e-3, 90.0, 1.0) == doctest::Approx(90.0 * std::log(1e-3)).epsilon(1e-12));
}

}  // TEST_SUITE
