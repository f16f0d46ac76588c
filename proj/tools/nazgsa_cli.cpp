// nazgsa: command-line front end for the Gaussian surface area lab.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nazgsa/bounds.hpp"
#include "nazgsa/cap.hpp"
#include "nazgsa/errors.hpp"
#include "nazgsa/estimators.hpp"
#include "nazgsa/hermite.hpp"
#include "nazgsa/parallel.hpp"
#include "nazgsa/polytope.hpp"
#include "nazgsa/radial.hpp"
#include "nazgsa/report.hpp"
#include "nazgsa/specfun.hpp"

using namespace nazgsa;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kNonConvergence = 2, kInvariant = 3 };

struct GlobalOptions {
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

struct BodyOptions {
    int n = 16;
    std::optional<double> r;
    double s = 32;
    std::string law = "unit-sphere-normals";
    std::optional<double> ball_radius;
    std::size_t samples = 100000;
};

struct QuadOptions {
    int n = 256;
    std::optional<double> r;
    std::optional<double> s;
    std::optional<double> t;
    std::size_t nodes = 256;
    std::string rule = "gauss-legendre";
};

double default_offset(int n, const std::optional<double>& r) {
    return r.value_or(std::pow(static_cast<double>(n), 0.25));
}

QuadratureSpec make_spec(const QuadOptions& q) {
    QuadratureSpec spec;
    spec.nodes = q.nodes;
    spec.rule = q.rule == "adaptive" ? QuadratureRule::Adaptive
                                     : QuadratureRule::CompositeGaussLegendre;
    return spec;
}

std::size_t facet_count(double s) {
    require(s >= 1.0 && s <= 1e7 && s == std::floor(s),
            "--s must be a whole number in [1, 1e7] for sampled polytopes");
    return static_cast<std::size_t>(s);
}

void emit(const GlobalOptions& g, const Report& report) {
    const std::string text = g.format == "csv" ? render_csv(report) : render_json(report);
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(g.output, std::ios::binary);
    require(static_cast<bool>(file), "cannot open output file " + g.output);
    file << text;
}

Report run_cap(const GlobalOptions& g, int n, double norm_x, double r) {
    Report report{"cap", g.seed, {}};
    const CapQuery q{n, norm_x, r};
    report.rows.push_back(scalar_row("cap_probability", cap_probability(q), "cap-law-beta", g.seed));
    report.rows.push_back(scalar_row("cap_probability_quadrature", cap_probability_quadrature(q),
                                     "cap-law-quadrature", g.seed));
    if (r > 0.0) {
        report.rows.push_back(scalar_row("log_complement", cap_log_complement(q),
                                         "cap-complement-log", g.seed));
    }
    if (n >= 4 && r > 0.0 && r <= norm_x) {
        report.rows.push_back(scalar_row("complement_bound", cap_complement_bound(q),
                                         "cap-complement-bound", g.seed));
    }
    return report;
}

Report run_influence(const GlobalOptions& g, const BodyOptions& b) {
    Report report{"influence", g.seed, {}};
    if (b.ball_radius) {
        const Ball ball{b.n, *b.ball_radius};
        const auto diag = estimate_hermite_diagonal(ball, b.samples, g.seed);
        report.rows.push_back(to_row("influence_spectral", estimate_influence(ball, b.samples, g.seed),
                                     "spectral-influence"));
        report.rows.push_back(to_row("influence_hermite", influence_from_hermite(diag), "hermite-influence"));
        report.rows.push_back(to_row("volume", estimate_volume(ball, b.samples, g.seed), "gaussian-volume"));
        report.rows.push_back(scalar_row("influence_exact", ball_influence_radial(b.n, *b.ball_radius),
                                         "ball-influence-radial", g.seed));
        return report;
    }
    const PolytopeParams params{b.n, default_offset(b.n, b.r), facet_count(b.s),
                                normal_law_from_string(b.law)};
    const auto body = sample_polytope(params, g.seed);
    const auto diag = estimate_hermite_diagonal(body, b.samples, g.seed);
    report.rows.push_back(to_row("influence_spectral", estimate_influence(body, b.samples, g.seed),
                                 "spectral-influence"));
    report.rows.push_back(to_row("influence_hermite", influence_from_hermite(diag), "hermite-influence"));
    report.rows.push_back(to_row("volume", estimate_volume(body, b.samples, g.seed), "gaussian-volume"));
    report.rows.push_back(scalar_row("inradius", body.inradius(), "inradius", g.seed));
    return report;
}

Report run_gsa(const GlobalOptions& g, const BodyOptions& b, std::size_t influence_samples) {
    Report report{"gsa", g.seed, {}};
    const PolytopeParams params{b.n, default_offset(b.n, b.r), facet_count(b.s),
                                normal_law_from_string(b.law)};
    const auto body = sample_polytope(params, g.seed);
    const auto gsa = estimate_gsa_facets(body, b.samples, g.seed);
    auto scaled = estimate_influence(body, influence_samples, g.seed);
    const double inradius = body.inradius();
    scaled.value /= inradius;
    scaled.std_error /= inradius;
    report.rows.push_back(to_row("gsa_facets", gsa, "facet-surface-area"));
    report.rows.push_back(to_row("influence_over_inradius", scaled, "influence-over-inradius"));
    report.rows.push_back(scalar_row("raic_upper", raic_upper(b.n), "raic-upper", g.seed));
    return report;
}

Report run_quad(const GlobalOptions& g, const QuadOptions& q) {
    Report report{"quad", g.seed, {}};
    const double r = default_offset(q.n, q.r);
    const QuadratureSpec spec = make_spec(q);
    const double s = q.s ? *q.s : optimize_cap_count(q.n, r, spec).s_star;
    report.rows.push_back(scalar_row("s", s, "cap-count", g.seed));
    report.rows.push_back(scalar_row("expected_influence", expected_influence(q.n, r, s, spec),
                                     "dilation-influence-radial", g.seed));
    report.rows.push_back(scalar_row("expected_gsa", expected_gsa(q.n, r, s, spec),
                                     "influence-over-offset", g.seed));
    report.rows.push_back(scalar_row("expected_volume", expected_volume(q.n, r, s, spec),
                                     "cap-power-volume", g.seed));
    return report;
}

Report run_optimize(const GlobalOptions& g, const QuadOptions& q, bool with_n) {
    Report report{"optimize", g.seed, {}};
    const auto best = optimal_cap_constant();
    report.rows.push_back(scalar_row("c1_star", best.c1_star, "cap-constant-optimum", g.seed));
    report.rows.push_back(scalar_row("limiting_constant", best.value, "cap-constant-value", g.seed));
    if (with_n) {
        const double r = default_offset(q.n, q.r);
        const QuadratureSpec spec = make_spec(q);
        const auto opt = optimize_cap_count(q.n, r, spec);
        report.rows.push_back(scalar_row("s_star", opt.s_star, "cap-count-optimum", g.seed));
        report.rows.push_back(scalar_row("gsa_at_s_star", opt.gsa, "influence-over-offset", g.seed));
        const Shell shell = make_shell(q.n, q.t);
        if (shell.rho_min > r) {
            const double s_rule = choose_cap_count(q.n, r, best.c1_star, q.t);
            report.rows.push_back(scalar_row("choose_s", s_rule, "cap-count-rule", g.seed));
            report.rows.push_back(scalar_row("gsa_at_choose_s", expected_gsa(q.n, r, s_rule, spec),
                                             "influence-over-offset", g.seed));
        }
    }
    return report;
}

Report run_scan(const GlobalOptions& g, const std::vector<int>& ns, const std::vector<double>& alphas,
                const QuadOptions& q, const std::string& svg_path) {
    Report report{"scan", g.seed, {}};
    const auto rows = scan_report(ns, alphas, make_spec(q), q.t);
    for (const auto& row : rows) {
        report.rows.push_back(to_row(row, g.seed));
    }
    if (!svg_path.empty()) {
        std::ofstream file(svg_path, std::ios::binary);
        require(static_cast<bool>(file), "cannot open svg file " + svg_path);
        file << render_svg(rows);
    }
    return report;
}

// Quick invariant pass over every module; a violated invariant is fatal.
Report run_selftest(const GlobalOptions& g) {
    Report report{"selftest", g.seed, {}};
    int failures = 0;
    auto check = [&](const std::string& name, double value, bool ok) {
        Row row = scalar_row(name, value, "selftest", g.seed);
        row["pass"] = ok;
        report.rows.push_back(row);
        failures += ok ? 0 : 1;
    };

    const auto best = optimal_cap_constant();
    check("optimal_constant_error", std::abs(best.value - std::exp(-1.25)), std::abs(best.value - std::exp(-1.25)) <= 1e-9);

    double sandwich = 0.0;
    for (int k = 10; k <= 80; ++k) {
        const auto s = mills_sandwich(k / 10.0);
        const double tail = gaussian_tail(k / 10.0);
        sandwich = std::max({sandwich, s.lower - tail, tail - s.upper});
    }
    check("mills_sandwich_excess", sandwich, sandwich <= 0.0);

    std::mt19937_64 gen(g.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double route_gap = 0.0;
    for (int k = 0; k < 100; ++k) {
        const int n = 2 + static_cast<int>(unit(gen) * 300);
        const double norm_x = 0.1 + 20.0 * unit(gen);
        const CapQuery q{n, norm_x, norm_x * unit(gen)};
        route_gap = std::max(route_gap, std::abs(cap_probability(q) - cap_probability_quadrature(q)));
    }
    check("cap_route_gap", route_gap, route_gap <= 1e-10);

    double ball_gap = 0.0;
    for (int n = 2; n <= 10; ++n) {
        for (double radius : {0.5, 1.0, 2.0, 3.0}) {
            ball_gap = std::max(ball_gap, std::abs(radius * gsa_ball_exact(n, radius) - ball_influence_radial(n, radius)));
        }
    }
    check("ball_identity_gap", ball_gap, ball_gap <= 1e-8);

    double ortho = 0.0;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double ip = gaussian_inner_product({[i](double x) { return hermite(i, x); }, i},
                                                     {[j](double x) { return hermite(j, x); }, j}, 10);
            ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    check("hermite_orthonormality", ortho, ortho <= 1e-10);

    // lower_bound_chain throws InvariantViolation on a broken chain step.
    const std::vector<int> ns{64, 256, 1024};
    const std::vector<double> alphas{0.75, 1.0, 1.25};
    double slack = INFINITY;
    for (const auto& row : scan_report(ns, alphas)) {
        slack = std::min(slack, row.chain.exact_quadrature - row.chain.chain_value);
    }
    check("chain_slack", slack, slack >= -1e-10);

    const auto body = sample_polytope({10, 1.5, 12, NormalLaw::UnitSphere}, g.seed);
    const auto spectral = estimate_influence(body, 20000, g.seed);
    const auto hermite_path = influence_from_hermite(estimate_hermite_diagonal(body, 20000, g.seed));
    check("shared_sample_gap", std::abs(spectral.value - hermite_path.value),
          std::abs(spectral.value - hermite_path.value) <= 1e-12);

    if (failures > 0) {
        emit(GlobalOptions{"json", "", g.seed, g.threads}, report);
        throw InvariantViolation("selftest: " + std::to_string(failures) + " invariant(s) violated");
    }
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical lab for the Gaussian surface area of random polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output,-o", g.output, "Write output to this file instead of stdout");
    app.add_option("--seed", g.seed, "Random seed (recorded in every row)")->capture_default_str();
    app.add_option("--threads", g.threads,
                   "Worker threads (default: NAZGSA_THREADS or hardware concurrency)");

    int cap_n = 3;
    double cap_norm = 2.0;
    double cap_r = 1.0;
    auto* cap = app.add_subcommand("cap", "Spherical cap probability, complement and bound");
    cap->add_option("--n", cap_n, "Dimension")->capture_default_str();
    cap->add_option("--norm", cap_norm, "||x||")->capture_default_str();
    cap->add_option("--r", cap_r, "Cap offset")->capture_default_str();

    BodyOptions body;
    std::size_t influence_samples = 200000;
    auto add_body = [&](CLI::App* sub) {
        sub->add_option("--n", body.n, "Dimension")->capture_default_str();
        sub->add_option("--r", body.r, "Facet offset (default n^(1/4))");
        sub->add_option("--s", body.s, "Facet count")->capture_default_str();
        sub->add_option("--law", body.law, "Normal law")
            ->check(CLI::IsMember({"unit-sphere-normals", "gaussian-normals"}))
            ->capture_default_str();
        sub->add_option("--samples", body.samples, "Monte Carlo samples")->capture_default_str();
    };
    auto* influence = app.add_subcommand("influence", "Monte Carlo convex influence, two ways");
    add_body(influence);
    influence->add_option("--ball", body.ball_radius, "Use the origin ball of this radius instead");
    auto* gsa = app.add_subcommand("gsa", "Facet Monte Carlo surface area with influence cross-check");
    add_body(gsa);
    gsa->add_option("--influence-samples", influence_samples, "Samples for the influence estimate")
        ->capture_default_str();

    QuadOptions quad_opts;
    auto add_quad = [&](CLI::App* sub, bool with_s) {
        sub->add_option("--r", quad_opts.r, "Facet offset (default n^(1/4))");
        if (with_s) {
            sub->add_option("--s", quad_opts.s, "Facet count (default: optimized)");
        }
        sub->add_option("--t", quad_opts.t, "Shell half-width (default n^(1/4))");
        sub->add_option("--nodes", quad_opts.nodes, "Initial quadrature nodes")->capture_default_str();
        sub->add_option("--rule", quad_opts.rule, "Quadrature rule")
            ->check(CLI::IsMember({"gauss-legendre", "adaptive"}))
            ->capture_default_str();
    };
    auto* quad = app.add_subcommand("quad", "Expected influence and surface area by radial quadrature");
    quad->add_option("--n", quad_opts.n, "Dimension")->capture_default_str();
    add_quad(quad, true);

    std::optional<int> optimize_n;
    auto* optimize = app.add_subcommand("optimize", "Optimal cap constant and facet counts");
    optimize->add_option("--n", optimize_n, "Also optimize the facet count at this dimension");
    add_quad(optimize, false);

    std::vector<int> scan_n{256, 1024, 4096};
    std::vector<double> scan_alpha{1.0};
    std::string svg_path;
    auto* scan = app.add_subcommand("scan", "Scan over dimensions and offset multipliers");
    scan->add_option("--n", scan_n, "Dimensions")->delimiter(',')->capture_default_str();
    scan->add_option("--alpha", scan_alpha, "Offset multipliers (r = alpha n^(1/4))")
        ->delimiter(',')
        ->capture_default_str();
    scan->add_option("--svg", svg_path, "Also write an SVG chart of ratio_to_n14");
    add_quad(scan, false);

    auto* selftest = app.add_subcommand("selftest", "Run the invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (g.threads > 0) {
            set_thread_count(g.threads);
        }
        Report report;
        if (*cap) {
            report = run_cap(g, cap_n, cap_norm, cap_r);
        } else if (*influence) {
            report = run_influence(g, body);
        } else if (*gsa) {
            report = run_gsa(g, body, influence_samples);
        } else if (*quad) {
            report = run_quad(g, quad_opts);
        } else if (*optimize) {
            if (optimize_n) {
                quad_opts.n = *optimize_n;
            }
            report = run_optimize(g, quad_opts, optimize_n.has_value());
        } else if (*scan) {
            report = run_scan(g, scan_n, scan_alpha, quad_opts, svg_path);
        } else if (*selftest) {
            report = run_selftest(g);
        }
        emit(g, report);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return kInvariant;
    }
    return kOk;
}
