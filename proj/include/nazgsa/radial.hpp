#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nazgsa/bounds.hpp"

namespace nazgsa {

// Expected influence and surface area of the sphere-normal random polytope
// (s facets tangent to the radius-r sphere), reduced to one-dimensional
// integrals over rho = ||x|| against the chi density.

enum class QuadratureRule { CompositeGaussLegendre, Adaptive };

/// Integration window and rule for the radial integrals. An unset window
/// defaults to [sqrt(n) - 12, sqrt(n) + 12] clipped at 0, outside of which
/// the chi density is below e^-70 of its peak.
struct QuadratureSpec {
    std::optional<double> rho_lo;
    std::optional<double> rho_hi;
    std::size_t nodes = 256;
    QuadratureRule rule = QuadratureRule::CompositeGaussLegendre;
};

struct Window {
    double lo = 0.0;
    double hi = 0.0;
};

/// Window after applying defaults; validates the spec.
Window resolve_window(int n, const QuadratureSpec& spec);

/// Radius band {x : ||x|| in [sqrt(n) - t, sqrt(n) + t]}.
struct Shell {
    int n = 0;
    double t = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
};

/// Default half-width n^(1/4).
double default_shell_halfwidth(int n);

/// Requires sqrt(n) - t > 0.
Shell make_shell(int n, std::optional<double> t = std::nullopt);

/// Gaussian measure of the shell from the chi CDF.
double shell_volume(const Shell& shell);

/// ln of the integrand of E[TInf] at radius rho (without the chi density):
/// ln s + ln tau_n + ln F(rho) + (s - 1) ln P[x.v <= r].
double log_influence_kernel(int n, double r, double s, double rho);

/// E[TInf[K]] for the sphere-normal polytope with s facets at offset r,
/// as integral chi_n(rho) s tau_n F(rho) P(rho)^(s-1) d rho, assembled in log
/// space. s is real-valued (it reaches far beyond 2^64 at large n).
/// Requires n >= 4, r > 0, s >= 1.
double expected_influence(int n, double r, double s, const QuadratureSpec& spec = {});

/// E[GSA(K)] = expected_influence / r.
double expected_gsa(int n, double r, double s, const QuadratureSpec& spec = {});

/// E[Vol(K)] = integral chi_n(rho) P(rho)^s d rho.
double expected_volume(int n, double r, double s, const QuadratureSpec& spec = {});

/// Facet count with s * F(rho_min) = c1 on the shell, rounded, at least 1.
/// Checks that F is increasing on the shell (so the infimum is at rho_min)
/// and rejects shells with rho_min <= r.
double choose_cap_count(int n, double r, double c1, std::optional<double> t = std::nullopt);

/// Each step of the finite-n lower-bound chain for one (n, r, s).
struct LowerBoundReport {
    int n = 0;
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
    /// s * inf_A F.
    double c1 = 0.0;
    double shell_volume = 0.0;
    /// E[TInf] by quadrature.
    double exact_quadrature = 0.0;
    /// Vol(A) inf_A { s tau F P^(s-1) } with the exact cap probability P.
    double shell_infimum = 0.0;
    /// Vol(A) tau inf_A { s F (1 - G)^(s-1) }.
    double chain_value = 0.0;
    /// Vol(A) tau c1 inf_A (1 - G)^s.
    double power_relaxed = 0.0;
    /// Vol(A) tau c1 inf_A { e^(-sG) (1 - s G^2 e^G) }.
    double bernoulli_relaxed = 0.0;
    /// tau c1 exp(-c1 e^(1/4) / sqrt(2 pi)), the limiting form of the chain.
    double limiting_form = 0.0;
    /// chain_value / r.
    double gsa_lower = 0.0;
    /// exact_quadrature / (r n^(1/4)).
    double ratio_to_n14 = 0.0;
    /// inf_A (1 - s G^2 e^G).
    double bernoulli_factor_min = 0.0;
    /// sup_A G / inf_A G - 1.
    double g_flatness = 0.0;
    /// inf_A F / inf_A G.
    double f_over_g = 0.0;
};

/// Evaluates the chain and verifies every step is a lower bound for the
/// previous one within 1e-10; throws InvariantViolation otherwise.
LowerBoundReport lower_bound_chain(int n, double r, double s, const QuadratureSpec& spec = {},
                                   std::optional<double> t = std::nullopt);

struct CapConstant {
    double c1_star = 0.0;
    double value = 0.0;
};

/// Limiting objective (c / sqrt(2 pi)) exp(-c e^(1/4) / sqrt(2 pi)).
double cap_constant_objective(double c);

/// Golden-section maximizer of cap_constant_objective on [0.1, 10].
CapConstant optimal_cap_constant();

struct CapCountOptimum {
    double s_star = 0.0;
    double gsa = 0.0;
};

/// Maximizes expected_gsa over s by golden section in ln s; s_star is
/// rounded when it is below 2^53.
CapCountOptimum optimize_cap_count(int n, double r, const QuadratureSpec& spec = {});

/// One scan cell.
struct ReportRow {
    double alpha = 1.0;
    double expected_gsa = 0.0;
    LowerBoundReport chain;
    BoundsRow bounds;
};

/// For every n and alpha (r = alpha n^(1/4)): optimize s, evaluate the chain
/// at the optimum. ratio_to_n14 = expected_gsa / n^(1/4). Cells run in
/// parallel; output order is n-major, then alpha.
std::vector<ReportRow> scan_report(std::span<const int> n_list, std::span<const double> alpha_list,
                                   const QuadratureSpec& spec = {},
                                   std::optional<double> t = std::nullopt);

}  // namespace nazgsa
