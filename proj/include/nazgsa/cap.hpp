#pragma once

// Uniform measure of spherical caps {v in S^(n-1) : x.v <= r}, which depends
// on x only through ||x||.

namespace nazgsa {

/// A cap question: how much of S^(n-1) satisfies x.v <= r.
struct CapQuery {
    int n = 2;
    double norm_x = 0.0;
    double r = 0.0;
};

/// P_v[x.v <= r] through the incomplete-beta identity
/// P = 1 - I_{1-u^2}((n-1)/2, 1/2) / 2 with u = r/||x||. Returns 1 when
/// r >= ||x|| or ||x|| = 0. Requires r >= 0.
double cap_probability(const CapQuery& q);

/// Same probability by adaptive Gauss-Legendre quadrature of the height
/// density tau_n (1 - z^2)^((n-3)/2), integrated in the angle z = sin(theta)
/// so the integrand cos^(n-2) is smooth for every n. Independent of the beta
/// route; kept as its cross-check.
double cap_probability_quadrature(const CapQuery& q);

/// ln P_v[x.v > r] computed in log space; usable down to complements of
/// 1e-300. Returns -inf when r >= ||x||. Requires r > 0.
double cap_log_complement(const CapQuery& q);

/// Upper bound on the cap complement,
/// tau_n ||x|| / (r (n-3)) * exp(-r^2 (n-3) / (2 ||x||^2)).
/// Requires n >= 4 and 0 < r <= ||x||.
double cap_complement_bound(const CapQuery& q);

/// Rate of change of the cap probability under dilation of the offset,
/// divided by tau_n:
/// (r/rho) (1 - r^2/rho^2)_+^((n-3)/2). Exactly 0 for rho <= r.
double cap_dilation_rate(int n, double r, double rho);

/// ln cap_dilation_rate; -inf for rho <= r.
double log_cap_dilation_rate(int n, double r, double rho);

}  // namespace nazgsa
