#include "nazgsa/bounds.hpp"

#include <cmath>
#include <numbers>

#include "nazgsa/errors.hpp"
#include "nazgsa/quadrature.hpp"
#include "nazgsa/specfun.hpp"

namespace nazgsa {

double ball_upper(int n) {
    require(n >= 1, "ball_upper: n must be >= 1");
    return 4.0 * std::pow(static_cast<double>(n), 0.25);
}

double raic_upper(int n) {
    require(n >= 1, "raic_upper: n must be >= 1");
    return std::sqrt(2.0 / std::numbers::pi) + 0.59 * (std::pow(static_cast<double>(n), 0.25) - 1.0);
}

double nazarov_lower(int n) {
    require(n >= 1, "nazarov_lower: n must be >= 1");
    return std::exp(-1.25) * std::pow(static_cast<double>(n), 0.25);
}

BoundsRow bounds_row(int n) { return {n, ball_upper(n), raic_upper(n), nazarov_lower(n)}; }

double gsa_ball_exact(int n, double radius) {
    require(n >= 1, "gsa_ball_exact: n must be >= 1");
    require(radius > 0.0, "gsa_ball_exact: radius must be positive");
    const double half_n = 0.5 * n;
    const double log_value = std::numbers::ln2 + half_n * std::log(std::numbers::pi) -
                             log_gamma(half_n) + (n - 1) * std::log(radius) -
                             half_n * std::log(2.0 * std::numbers::pi) - 0.5 * radius * radius;
    return std::exp(log_value);
}

double ball_volume(int n, double radius) { return chi_cdf(n, radius); }

double ball_influence_radial(int n, double radius) {
    require(n >= 1, "ball_influence_radial: n must be >= 1");
    require(radius > 0.0, "ball_influence_radial: radius must be positive");
    auto integrand = [n](double rho) {
        if (rho <= 0.0) {
            return 0.0;
        }
        return std::exp(chi_log_density(n, rho)) * (n - rho * rho);
    };
    return integrate_with_doubling(integrand, 0.0, radius, 64, 1e-13, 1e-10).value;
}

double variance_gsa_upper(int n, double volume, double inradius) {
    require(n >= 1, "variance_gsa_upper: n must be >= 1");
    require(volume >= 0.0 && volume <= 1.0, "variance_gsa_upper: volume must lie in [0, 1]");
    require(inradius > 0.0, "variance_gsa_upper: inradius must be positive");
    return std::sqrt(2.0 * n) * std::sqrt(volume * (1.0 - volume)) / inradius;
}

double hermite_gsa_upper(int n, std::span<const double> diagonal_coefficients,
                         double inradius) {
    require(n >= 1, "hermite_gsa_upper: n must be >= 1");
    require(inradius > 0.0, "hermite_gsa_upper: inradius must be positive");
    double sum = 0.0;
    for (double c : diagonal_coefficients) {
        sum += c * c;
    }
    return std::sqrt(2.0 * n * sum) / inradius;
}

}  // namespace nazgsa
