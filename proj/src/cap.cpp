#include "nazgsa/cap.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nazgsa/errors.hpp"
#include "nazgsa/quadrature.hpp"
#include "nazgsa/specfun.hpp"

namespace nazgsa {

namespace {

void validate(const CapQuery& q) {
    require(q.n >= 2, "cap: n must be >= 2");
    require(std::isfinite(q.norm_x) && std::isfinite(q.r), "cap: query must be finite");
    require(q.norm_x >= 0.0, "cap: ||x|| must be nonnegative");
}

// ln of half the regularized incomplete beta, which is the cap complement
// for u = r/||x|| in [0, 1).
double log_half_beta_tail(int n, double u) {
    const double one_minus_u2 = (1.0 - u) * (1.0 + u);
    return log_regularized_beta(one_minus_u2, u * u, 0.5 * (n - 1), 0.5) - std::numbers::ln2;
}

}  // namespace

double cap_probability(const CapQuery& q) {
    validate(q);
    require(q.r >= 0.0, "cap_probability: r must be nonnegative");
    if (q.norm_x == 0.0 || q.r >= q.norm_x) {
        return 1.0;
    }
    const double u = q.r / q.norm_x;
    return 1.0 - std::exp(log_half_beta_tail(q.n, u));
}

double cap_probability_quadrature(const CapQuery& q) {
    validate(q);
    require(q.r >= 0.0, "cap_probability_quadrature: r must be nonnegative");
    if (q.norm_x == 0.0 || q.r >= q.norm_x) {
        return 1.0;
    }
    const double u = q.r / q.norm_x;
    const double tau = cap_normalizer(q.n);
    const double power = q.n - 2.0;
    auto density = [power](double theta) { return std::pow(std::cos(theta), power); };
    // Integrate the smaller tail, theta in [asin(u), pi/2].
    const double tail = tau * adaptive_gauss_legendre(density, std::asin(u), 0.5 * std::numbers::pi,
                                                      1e-17, 1e-14);
    return 1.0 - tail;
}

double cap_log_complement(const CapQuery& q) {
    validate(q);
    require(q.r > 0.0, "cap_log_complement: r must be positive");
    if (q.r >= q.norm_x) {
        return -std::numeric_limits<double>::infinity();
    }
    return log_half_beta_tail(q.n, q.r / q.norm_x);
}

double cap_complement_bound(const CapQuery& q) {
    validate(q);
    require(q.n >= 4, "cap_complement_bound: n must be >= 4");
    require(q.r > 0.0 && q.r <= q.norm_x, "cap_complement_bound: requires 0 < r <= ||x||");
    const double u = q.r / q.norm_x;
    const double m = q.n - 3.0;
    return std::exp(log_cap_normalizer(q.n) - std::log(u * m) - 0.5 * u * u * m);
}

double log_cap_dilation_rate(int n, double r, double rho) {
    require(n >= 2, "cap_dilation_rate: n must be >= 2");
    require(r > 0.0 && rho > 0.0, "cap_dilation_rate: r and rho must be positive");
    if (rho <= r) {
        return -std::numeric_limits<double>::infinity();
    }
    const double u = r / rho;
    return std::log(u) + 0.5 * (n - 3) * (std::log1p(-u) + std::log1p(u));
}

double cap_dilation_rate(int n, double r, double rho) {
    const double log_rate = log_cap_dilation_rate(n, r, rho);
    return std::isinf(log_rate) ? 0.0 : std::exp(log_rate);
}

}  // namespace nazgsa
