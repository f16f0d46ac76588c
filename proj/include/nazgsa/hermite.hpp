#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "nazgsa/quadrature.hpp"

namespace nazgsa {

// Orthonormal Hermite basis of L^2(N(0, I_n)):
// h_j(x) = (-1)^j / sqrt(j!) e^(x^2/2) d^j/dx^j e^(-x^2/2).
// The monic probabilists' polynomial He_j equals sqrt(j!) h_j.

/// h_j(x) by the recurrence sqrt(j+1) h_(j+1) = x h_j - sqrt(j) h_(j-1).
double hermite(int degree, double x);

/// h_0(x), ..., h_max(x).
std::vector<double> hermite_all(int max_degree, double x);

/// Multi-index in N^n.
using HermiteIndex = std::vector<int>;

int degree(const HermiteIndex& alpha);

/// prod_i h_(alpha_i)(x_i).
double hermite_product(const HermiteIndex& alpha, std::span<const double> x);

/// Gauss-Hermite rule for the standard Gaussian weight (weights sum to 1),
/// exact for polynomials of degree <= 2 * points - 1. Golub-Welsch.
const GaussRule& gauss_hermite(int points);

/// A univariate function with a known polynomial degree bound.
struct Polynomial1d {
    std::function<double(double)> eval;
    int degree = 0;
};

/// <f, g> = E[f(x) g(x)] under N(0, 1) with max_degree + 1 Gauss-Hermite
/// nodes; exact when deg f + deg g <= 2 max_degree, which is checked.
double gaussian_inner_product(const Polynomial1d& f, const Polynomial1d& g, int max_degree);

/// Hermite coefficients f^(0..degree) of a univariate polynomial.
std::vector<double> hermite_coefficients(const Polynomial1d& f);

using HermiteSpectrum = std::map<HermiteIndex, double>;

/// sum_alpha f^(alpha) g^(alpha) over the common support.
double parseval_sum(const HermiteSpectrum& f, const HermiteSpectrum& g);

/// E[f] = f^(0) and Var[f] = sum_(alpha != 0) f^(alpha)^2.
struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0;
};
MeanVariance mean_variance_from_spectrum(const HermiteSpectrum& f);

/// Coefficient of the slab indicator 1{|x| <= theta} on h_j, from
/// integral_a^b h_j phi = [-h_(j-1) phi / sqrt(j)]_a^b.
double slab_hermite_coefficient(int degree, double half_width);

}  // namespace nazgsa
