#include "nazgsa/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nazgsa/cap.hpp"
#include "nazgsa/errors.hpp"
#include "nazgsa/optimize.hpp"
#include "nazgsa/parallel.hpp"
#include "nazgsa/quadrature.hpp"
#include "nazgsa/specfun.hpp"

namespace nazgsa {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kWindowHalfWidth = 12.0;
constexpr double kChainSlack = 1e-10;

void validate_configuration(int n, double r, double s) {
    require(n >= 4, "radial: n must be >= 4");
    require(r > 0.0 && std::isfinite(r), "radial: r must be positive");
    require(s >= 1.0 && std::isfinite(s), "radial: s must be >= 1");
}

// ln P_v[x.v <= r] for ||x|| = rho. The probability is at least 1/2 for
// r >= 0, so log1p of the (small) complement is stable.
double log_cap_probability(int n, double r, double rho) {
    if (rho <= r) {
        return 0.0;
    }
    return std::log1p(-std::exp(cap_log_complement({n, rho, r})));
}

// Integrates exp(log_f(rho)) over the window, restricted to rho > r. When r
// lies inside the window the substitution rho = r + u^2 removes the
// (rho - r)^((n-3)/2) endpoint behaviour of the dilation rate.
template <class LogF>
double integrate_above_offset(int n, double r, const QuadratureSpec& spec, LogF log_f) {
    const Window window = resolve_window(n, spec);
    if (r >= window.hi) {
        return 0.0;
    }
    ScalarFunction f;
    double a = 0.0;
    double b = 0.0;
    if (r > window.lo) {
        b = std::sqrt(window.hi - r);
        f = [&, r](double u) {
            if (u <= 0.0) {
                return 0.0;
            }
            return 2.0 * u * std::exp(log_f(r + u * u));
        };
    } else {
        a = window.lo;
        b = window.hi;
        f = [&](double rho) { return std::exp(log_f(rho)); };
    }
    if (spec.rule == QuadratureRule::Adaptive) {
        return adaptive_gauss_legendre(f, a, b, 0.0, 1e-10);
    }
    return integrate_with_doubling(f, a, b, spec.nodes).value;
}

}  // namespace

Window resolve_window(int n, const QuadratureSpec& spec) {
    require(n >= 1, "quadrature: n must be >= 1");
    require(spec.nodes >= 16, "quadrature: at least 16 nodes");
    const double center = std::sqrt(static_cast<double>(n));
    const Window window{spec.rho_lo.value_or(std::max(0.0, center - kWindowHalfWidth)),
                        spec.rho_hi.value_or(center + kWindowHalfWidth)};
    require(window.lo >= 0.0 && window.lo < window.hi, "quadrature: invalid window");
    return window;
}

double default_shell_halfwidth(int n) { return std::pow(static_cast<double>(n), 0.25); }

Shell make_shell(int n, std::optional<double> t) {
    require(n >= 1, "make_shell: n must be >= 1");
    const double width = t.value_or(default_shell_halfwidth(n));
    require(width > 0.0, "make_shell: half-width must be positive");
    const double center = std::sqrt(static_cast<double>(n));
    require(center - width > 0.0, "make_shell: sqrt(n) - t must be positive");
    return {n, width, center - width, center + width};
}

double shell_volume(const Shell& shell) {
    return chi_cdf(shell.n, shell.rho_max) - chi_cdf(shell.n, shell.rho_min);
}

double log_influence_kernel(int n, double r, double s, double rho) {
    if (rho <= r) {
        return kNegInf;
    }
    const double log_p = log_cap_probability(n, r, rho);
    return std::log(s) + log_cap_normalizer(n) + log_cap_dilation_rate(n, r, rho) +
           (s - 1.0) * log_p;
}

double expected_influence(int n, double r, double s, const QuadratureSpec& spec) {
    validate_configuration(n, r, s);
    const double log_tau = log_cap_normalizer(n);
    const double log_s = std::log(s);
    return integrate_above_offset(n, r, spec, [=](double rho) {
        return chi_log_density(n, rho) + log_s + log_tau + log_cap_dilation_rate(n, r, rho) +
               (s - 1.0) * log_cap_probability(n, r, rho);
    });
}

double expected_gsa(int n, double r, double s, const QuadratureSpec& spec) {
    return expected_influence(n, r, s, spec) / r;
}

double expected_volume(int n, double r, double s, const QuadratureSpec& spec) {
    validate_configuration(n, r, s);
    const Window window = resolve_window(n, spec);
    // Below the offset every cap is the whole sphere.
    const double inner =
        r > window.lo ? chi_cdf(n, std::min(r, window.hi)) - chi_cdf(n, window.lo) : 0.0;
    return inner + integrate_above_offset(n, r, spec, [=](double rho) {
               return chi_log_density(n, rho) + s * log_cap_probability(n, r, rho);
           });
}

double choose_cap_count(int n, double r, double c1, std::optional<double> t) {
    require(n >= 4, "choose_cap_count: n must be >= 4");
    require(r > 0.0, "choose_cap_count: r must be positive");
    require(c1 > 0.0, "choose_cap_count: c1 must be positive");
    const Shell shell = make_shell(n, t);
    if (shell.rho_min <= r) {
        std::ostringstream msg;
        msg << "choose_cap_count: degenerate shell, rho_min = " << shell.rho_min << " <= r = " << r;
        throw ValidationError(msg.str());
    }
    // d/d rho ln F = -1/rho + (n-3) r^2 / (rho (rho^2 - r^2)); positive iff
    // rho < r sqrt(n-2).
    constexpr int kChecks = 64;
    for (int k = 0; k <= kChecks; ++k) {
        const double rho = shell.rho_min + (shell.rho_max - shell.rho_min) * k / kChecks;
        const double slope = -1.0 / rho + (n - 3.0) * r * r / (rho * (rho * rho - r * r));
        if (!(slope > 0.0)) {
            std::ostringstream msg;
            msg << "choose_cap_count: dilation rate is not increasing on the shell (rho = " << rho
                << ", r sqrt(n-2) = " << r * std::sqrt(n - 2.0) << ")";
            throw ValidationError(msg.str());
        }
    }
    const double s = std::exp(std::log(c1) - log_cap_dilation_rate(n, r, shell.rho_min));
    return std::max(1.0, std::round(s));
}

LowerBoundReport lower_bound_chain(int n, double r, double s, const QuadratureSpec& spec,
                                   std::optional<double> t) {
    validate_configuration(n, r, s);
    const Shell shell = make_shell(n, t);
    require(shell.rho_min > r, "lower_bound_chain: shell must lie outside the offset sphere");

    LowerBoundReport report;
    report.n = n;
    report.r = r;
    report.s = s;
    report.t = shell.t;
    report.shell_volume = shell_volume(shell);
    report.exact_quadrature = expected_influence(n, r, s, spec);

    const double log_tau = log_cap_normalizer(n);
    const double log_s = std::log(s);
    const double tau = std::exp(log_tau);
    auto log_f = [&](double rho) { return log_cap_dilation_rate(n, r, rho); };
    auto g_of = [&](double rho) { return cap_complement_bound({n, rho, r}); };
    auto log1m_g = [&](double rho) {
        const double g = g_of(rho);
        return g >= 1.0 ? kNegInf : std::log1p(-g);
    };
    auto inf_on_shell = [&](const auto& f) {
        return grid_golden_minimize(f, shell.rho_min, shell.rho_max, 512).value;
    };
    auto sup_on_shell = [&](const auto& f) {
        return -inf_on_shell([&](double rho) { return -f(rho); });
    };

    const double log_inf_f = inf_on_shell(log_f);
    report.c1 = std::exp(log_s + log_inf_f);
    const double log_inf_g = inf_on_shell([&](double rho) { return std::log(g_of(rho)); });
    const double log_sup_g = sup_on_shell([&](double rho) { return std::log(g_of(rho)); });
    report.g_flatness = std::expm1(log_sup_g - log_inf_g);
    report.f_over_g = std::exp(log_inf_f - log_inf_g);

    report.shell_infimum = report.shell_volume * std::exp(inf_on_shell([&](double rho) {
                               return log_s + log_tau + log_f(rho) +
                                      (s - 1.0) * log_cap_probability(n, r, rho);
                           }));
    report.chain_value = report.shell_volume * std::exp(inf_on_shell([&](double rho) {
                             return log_s + log_tau + log_f(rho) + (s - 1.0) * log1m_g(rho);
                         }));
    report.power_relaxed = report.shell_volume * tau * report.c1 *
                           std::exp(inf_on_shell([&](double rho) { return s * log1m_g(rho); }));
    auto bernoulli_factor = [&](double rho) {
        const double g = g_of(rho);
        return 1.0 - s * g * g * std::exp(g);
    };
    report.bernoulli_factor_min = inf_on_shell(bernoulli_factor);
    report.bernoulli_relaxed =
        report.shell_volume * tau * report.c1 * inf_on_shell([&](double rho) {
            return std::exp(-s * g_of(rho)) * bernoulli_factor(rho);
        });
    report.limiting_form =
        tau * report.c1 *
        std::exp(-report.c1 * std::exp(0.25) / std::sqrt(2.0 * std::numbers::pi));
    report.gsa_lower = report.chain_value / r;
    report.ratio_to_n14 = report.exact_quadrature / (r * std::pow(static_cast<double>(n), 0.25));

    const double steps[] = {report.exact_quadrature, report.shell_infimum, report.chain_value,
                            report.power_relaxed, report.bernoulli_relaxed};
    static constexpr const char* kNames[] = {"exact quadrature", "shell infimum", "chain value",
                                             "power relaxation", "Bernoulli relaxation"};
    for (std::size_t k = 1; k < std::size(steps); ++k) {
        const double slack = kChainSlack * std::max(1.0, std::abs(steps[k - 1]));
        if (!(steps[k] <= steps[k - 1] + slack)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "lower_bound_chain: " << kNames[k] << " (" << steps[k] << ") exceeds "
                << kNames[k - 1] << " (" << steps[k - 1] << ") at n=" << n << " r=" << r
                << " s=" << s;
            throw InvariantViolation(msg.str());
        }
    }
    return report;
}

double cap_constant_objective(double c) {
    const double root_two_pi = std::sqrt(2.0 * std::numbers::pi);
    return c / root_two_pi * std::exp(-c * std::exp(0.25) / root_two_pi);
}

CapConstant optimal_cap_constant() {
    const double k = std::exp(0.25) / std::sqrt(2.0 * std::numbers::pi);
    // ln f(c) - ln f(d) = log1p((c - d)/d) - k (c - d), free of cancellation.
    auto prefer = [k](double c, double d) { return std::log1p((c - d) / d) - k * (c - d) >= 0.0; };
    const double c_star = golden_section_search(prefer, 0.1, 10.0, 1e-15);
    return {c_star, cap_constant_objective(c_star)};
}

CapCountOptimum optimize_cap_count(int n, double r, const QuadratureSpec& spec) {
    require(n >= 7, "optimize_cap_count: n must be >= 7");
    require(r > 0.0, "optimize_cap_count: r must be positive");
    const double center = std::sqrt(static_cast<double>(n));
    require(center > r, "optimize_cap_count: r must be below sqrt(n)");
    // Centre the bracket on the count that sets s F(sqrt(n)) to the limiting c1.
    const double guess = std::log(optimal_cap_constant().c1_star) -
                         log_cap_dilation_rate(n, r, center);
    const double lo = std::max(0.0, guess - 25.0);
    const double hi = std::max(guess, 0.0) + 25.0;
    auto objective = [&](double log_s) { return expected_gsa(n, r, std::exp(log_s), spec); };
    const ScalarOptimum best = golden_section_maximize(objective, lo, hi, 1e-9, 400);
    double s_star = std::exp(best.x);
    if (s_star < 0x1.0p53) {
        s_star = std::max(1.0, std::round(s_star));
    }
    return {s_star, expected_gsa(n, r, s_star, spec)};
}

std::vector<ReportRow> scan_report(std::span<const int> n_list, std::span<const double> alpha_list,
                                   const QuadratureSpec& spec, std::optional<double> t) {
    require(!n_list.empty() && !alpha_list.empty(), "scan_report: empty grid");
    for (int n : n_list) {
        require(n >= 7, "scan_report: every n must be >= 7");
    }
    for (double alpha : alpha_list) {
        require(alpha > 0.0, "scan_report: alpha must be positive");
    }
    std::vector<ReportRow> rows(n_list.size() * alpha_list.size());
    parallel_for(rows.size(), [&](std::size_t cell) {
        const int n = n_list[cell / alpha_list.size()];
        const double alpha = alpha_list[cell % alpha_list.size()];
        const double r = alpha * std::pow(static_cast<double>(n), 0.25);
        const CapCountOptimum optimum = optimize_cap_count(n, r, spec);
        ReportRow row;
        row.alpha = alpha;
        row.expected_gsa = optimum.gsa;
        row.chain = lower_bound_chain(n, r, optimum.s_star, spec, t);
        row.bounds = bounds_row(n);
        rows[cell] = row;
    });
    return rows;
}

}  // namespace nazgsa
