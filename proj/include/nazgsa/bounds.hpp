#pragma once

#include <span>

namespace nazgsa {

/// Reference curves for the largest Gaussian surface area of a convex set
/// in R^n.
struct BoundsRow {
    int n = 1;
    double ball_upper = 0.0;
    double raic_upper = 0.0;
    /// e^(-5/4) n^(1/4): an asymptotic reference curve, not a certified
    /// finite-n lower bound.
    double nazarov_lower_asymptotic = 0.0;
};

/// 4 n^(1/4).
double ball_upper(int n);

/// sqrt(2/pi) + 0.59 (n^(1/4) - 1).
double raic_upper(int n);

/// e^(-5/4) n^(1/4).
double nazarov_lower(int n);

BoundsRow bounds_row(int n);

/// Exact Gaussian surface area of the origin-centered sphere of radius R:
/// |S^(n-1)| R^(n-1) (2 pi)^(-n/2) e^(-R^2/2), evaluated in log space.
double gsa_ball_exact(int n, double radius);

/// Gaussian measure of the origin-centered ball of radius R.
double ball_volume(int n, double radius);

/// Influence of the ball, integral_0^R chi_n(rho) (n - rho^2) d rho, by
/// Gauss-Legendre quadrature of the radial density.
double ball_influence_radial(int n, double radius);

/// sqrt(2n) sqrt(p (1 - p)) / inradius, with p the Gaussian volume.
double variance_gsa_upper(int n, double volume, double inradius);

/// sqrt(2n sum_i c_i^2) / inradius for the diagonal degree-2 Hermite
/// coefficients c_i.
double hermite_gsa_upper(int n, std::span<const double> diagonal_coefficients, double inradius);

}  // namespace nazgsa
