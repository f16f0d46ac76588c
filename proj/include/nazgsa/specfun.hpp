#pragma once

// Scalar special functions: Gaussian density and tails, log-gamma, the
// sphere-cap normalizer, chi radial law, and incomplete beta/gamma in log
// space.

namespace nazgsa {

/// Two-sided bracket for a probability; 0 <= lower <= upper <= 1.
struct TailSandwich {
    double lower = 0.0;
    double upper = 0.0;
};

/// Standard normal density.
double gaussian_pdf(double x);

/// P[g >= t] for g ~ N(0, 1), via erfc.
double gaussian_tail(double t);

/// Mills-ratio bracket (1/t - 1/t^3) phi(t) <= P[g >= t] <= phi(t)/t.
/// The lower end is clamped at 0 for t <= 1. Requires t > 0.
TailSandwich mills_sandwich(double t);

/// Default constant for norm_concentration_bound; the bound's constant is
/// not pinned down analytically, so it is always an explicit argument.
inline constexpr double kDefaultNormConcentration = 0.125;

/// min(1, 2 exp(-C t^2)), the sub-Gaussian tail of | ||x|| - sqrt(n) |.
double norm_concentration_bound(int n, double t, double C = kDefaultNormConcentration);

/// ln Gamma(a) for a > 0, absolute error below 1e-13 on moderate arguments.
double log_gamma(double a);

/// ln Gamma(a) - ln Gamma(b) without the cancellation of two large logs.
double log_gamma_ratio(double a, double b);

/// ln B(a, b).
double log_beta(double a, double b);

/// ln tau_n, where tau_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)) is the
/// normalizer of the cap-height density (1 - z^2)^((n-3)/2) on [-1, 1].
double log_cap_normalizer(int n);
double cap_normalizer(int n);

/// ln of the chi density with n degrees of freedom (law of ||x||, x ~ N(0, I_n)).
double chi_log_density(int n, double rho);

/// P[||x|| <= rho] for x ~ N(0, I_n).
double chi_cdf(int n, double rho);

/// P[||x|| > rho] for x ~ N(0, I_n).
double chi_sf(int n, double rho);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// ln I_x(a, b) for the regularized incomplete beta function. The caller
/// passes y = 1 - x as well so that x close to 1 keeps full precision.
/// Accurate in relative terms down to I ~ 1e-300.
double log_regularized_beta(double x, double y, double a, double b);

/// I_x(a, b).
double regularized_beta(double x, double y, double a, double b);

}  // namespace nazgsa
