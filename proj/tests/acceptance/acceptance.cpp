// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nazgsa/bounds.hpp"
#include "nazgsa/cap.hpp"
#include "nazgsa/errors.hpp"
#include "nazgsa/estimators.hpp"
#include "nazgsa/hermite.hpp"
#include "nazgsa/polytope.hpp"
#include "nazgsa/radial.hpp"
#include "nazgsa/rng.hpp"
#include "nazgsa/specfun.hpp"

using namespace nazgsa;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// GSA estimates gathered across criteria for the upper-bound sanity check.
struct GsaRecord {
    int n;
    Estimate estimate;
};
std::vector<GsaRecord> g_gsa_estimates;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome constant_recovery() {
    const auto start = std::chrono::steady_clock::now();
    const auto best = optimal_cap_constant();
    const double elapsed = seconds_since(start);
    const double c_err = std::abs(best.c1_star - std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.25));
    const double v_err = std::abs(best.value - std::exp(-1.25));
    const bool rounded = std::round(best.value * 1e4) / 1e4 == 0.2865;
    std::ostringstream d;
    d.precision(12);
    d << "c1*=" << best.c1_star << " (err " << c_err << "), constant=" << best.value << " (err "
      << v_err << "), " << elapsed << " s";
    return {c_err <= 1e-8 && v_err <= 1e-9 && rounded && elapsed < 1.0, d.str()};
}

Outcome finite_n_trend() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<int> ns{256, 1024, 4096, 16384};
    const std::vector<double> alphas{1.0};
    const auto rows = scan_report(ns, alphas);
    const double elapsed = seconds_since(start);
    const double limit = std::exp(-1.25);
    bool monotone = true;
    bool gap_shrinks = true;
    std::ostringstream d;
    d.precision(8);
    d << "ratio_to_n14:";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        d << ' ' << rows[i].chain.ratio_to_n14;
        if (i > 0) {
            monotone = monotone && rows[i].chain.ratio_to_n14 >= rows[i - 1].chain.ratio_to_n14 - 1e-4;
            gap_shrinks = gap_shrinks && std::abs(rows[i].chain.ratio_to_n14 - limit) <
                                             std::abs(rows[i - 1].chain.ratio_to_n14 - limit);
        }
    }
    d << "; nondecreasing=" << (monotone ? "yes" : "no") << ", gap shrinks="
      << (gap_shrinks ? "yes" : "no") << ", " << elapsed << " s";
    return {monotone && gap_shrinks && elapsed < 60.0, d.str()};
}

Outcome chain_dominance() {
    const std::vector<int> ns{64, 256, 1024, 4096, 16384};
    const std::vector<double> alphas{0.5, 0.75, 1.0, 1.25, 1.5};
    double worst = INFINITY;
    std::size_t cells = 0;
    try {
        for (const auto& row : scan_report(ns, alphas)) {
            worst = std::min(worst, row.chain.exact_quadrature - row.chain.chain_value);
            ++cells;
        }
        // Rule-based s as well as the optimized one.
        for (int n : {64, 256, 1024, 4096}) {
            const double r = std::pow(n, 0.25);
            const auto rep = lower_bound_chain(n, r, choose_cap_count(n, r, 1.9521640631515465));
            worst = std::min(worst, rep.exact_quadrature - rep.chain_value);
            ++cells;
        }
    } catch (const InvariantViolation& e) {
        return {false, std::string("chain step violated: ") + e.what()};
    }
    std::ostringstream d;
    d << cells << " configurations, min(exact - chain) = " << worst;
    return {worst >= -1e-10, d.str()};
}

Outcome mc_vs_quadrature() {
    const auto start = std::chrono::steady_clock::now();
    const PolytopeParams params{16, 2.0, 32, NormalLaw::UnitSphere};
    std::vector<double> values;
    for (const auto& e : estimate_over_draws(params, 200, 20000, 2024, PolytopeQuantity::Influence)) {
        values.push_back(e.value);
    }
    const auto mc = summarize(values, 2024);
    const double quad = expected_influence(16, 2.0, 32.0);
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d.precision(8);
    d << "MC " << mc.value << " +- " << mc.std_error << ", quadrature " << quad << ", z = "
      << (mc.value - quad) / mc.std_error << ", " << elapsed << " s";
    return {std::abs(mc.value - quad) <= 4.0 * mc.std_error && elapsed < 120.0, d.str()};
}

Outcome surface_influence_identity() {
    const PolytopeParams params{16, 2.0, 32, NormalLaw::UnitSphere};
    int agree = 0;
    double worst_z = 0.0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        const auto body = sample_polytope(params, derive_draw_seed(5, k));
        const auto tinf = estimate_influence(body, 200000, 100 + k);
        const auto gsa = estimate_gsa_facets(body, 20000, 200 + k);
        g_gsa_estimates.push_back({16, gsa});
        const double diff = 2.0 * gsa.value - tinf.value;
        const double se = std::hypot(2.0 * gsa.std_error, tinf.std_error);
        worst_z = std::max(worst_z, std::abs(diff) / se);
        agree += std::abs(diff) <= 4.0 * se ? 1 : 0;
    }
    std::ostringstream d;
    d << agree << "/20 draws within 4 combined stderr, max |z| = " << worst_z;
    return {agree == 20, d.str()};
}

Outcome ball_oracle() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        for (double radius : {0.5, 1.0, 2.0, 3.0}) {
            worst = std::max(worst, std::abs(radius * gsa_ball_exact(n, radius) -
                                             ball_influence_radial(n, radius)));
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "max |R*GSA - chi integral| = " << worst << ", " << elapsed << " s";
    return {worst <= 1e-8 && elapsed < 1.0, d.str()};
}

Outcome cap_correctness() {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> dim(2, 400);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double route_gap = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double norm_x = 0.1 + 30.0 * unit(gen);
        const CapQuery q{dim(gen), norm_x, norm_x * unit(gen)};
        route_gap = std::max(route_gap, std::abs(cap_probability(q) - cap_probability_quadrature(q)));
    }
    double closed_gap = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double u = k / 100.0;
        closed_gap = std::max(closed_gap, std::abs(cap_probability({3, 2.0, 2.0 * u}) - (1.0 + u) / 2.0));
        // Circle: P[cos(angle) <= u] = 1 - acos(u) / pi.
        closed_gap = std::max(closed_gap, std::abs(cap_probability({2, 1.0, u}) - (1.0 - std::acos(u) / std::numbers::pi)));
    }
    int violations = 0;
    for (int n : {5, 10, 50, 200}) {
        for (double norm_x : {0.5, 1.0, 7.0, 40.0}) {
            for (double u : {0.05, 0.1, 0.3, 0.9}) {
                const CapQuery q{n, norm_x, u * norm_x};
                violations += 1.0 - cap_probability(q) <= cap_complement_bound(q) ? 0 : 1;
            }
        }
    }
    std::ostringstream d;
    d << "route gap " << route_gap << ", closed-form gap " << closed_gap << ", bound violations "
      << violations;
    return {route_gap <= 1e-10 && closed_gap <= 1e-12 && violations == 0, d.str()};
}

Outcome tail_sandwiches() {
    int failures = 0;
    for (int k = 10; k <= 80; ++k) {
        const double t = k / 10.0;
        const auto s = mills_sandwich(t);
        const double tail = gaussian_tail(t);
        failures += s.lower <= tail && tail <= s.upper ? 0 : 1;
    }
    int tau_failures = 0;
    int points = 0;
    for (double e = std::log(2.0); e <= std::log(1e6) + 1e-12; e += 0.05) {
        const int n = static_cast<int>(std::round(std::exp(e)));
        tau_failures += cap_normalizer(n) <= std::sqrt(n / (2.0 * std::numbers::pi)) ? 0 : 1;
        ++points;
    }
    std::ostringstream d;
    d << "sandwich failures " << failures << "/71, tau failures " << tau_failures << "/" << points;
    return {failures == 0 && tau_failures == 0, d.str()};
}

Outcome hermite_suite() {
    double ortho = 0.0;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double ip = gaussian_inner_product({[i](double x) { return hermite(i, x); }, i},
                                                     {[j](double x) { return hermite(j, x); }, j}, 10);
            ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    Philox4x32 rng(3, stream_id(StreamDomain::GaussianPoints, 0));
    double pointwise = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 31;
        double sum = 0.0;
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = rng.gaussian();
            sum += hermite(2, x);
            norm2 += x * x;
        }
        pointwise = std::max(pointwise, std::abs(-std::numbers::sqrt2 * sum - (n - norm2)) /
                                            std::max(1.0, std::abs(n - norm2)));
    }
    const auto body = sample_polytope({10, 1.5, 12, NormalLaw::UnitSphere}, 31);
    const auto spectral = estimate_influence(body, 100000, 6);
    const auto hermite_path = influence_from_hermite(estimate_hermite_diagonal(body, 100000, 6));
    const double shared = std::abs(spectral.value - hermite_path.value);
    std::ostringstream d;
    d << "orthonormality " << ortho << ", pointwise " << pointwise << ", shared-sample gap " << shared;
    return {ortho <= 1e-10 && pointwise <= 1e-12 && shared <= 1e-12, d.str()};
}

Outcome upper_bound_sanity() {
    // Extra facet estimates beyond the identity check: halfspaces, slabs, and
    // gaussian-normal polytopes in several dimensions.
    g_gsa_estimates.push_back({4, estimate_gsa_facets(make_halfspace(4, 0.3), 100, 1)});
    g_gsa_estimates.push_back({1, estimate_gsa_facets(make_slab(1, 0.01), 100, 1)});
    for (std::uint64_t k = 0; k < 5; ++k) {
        const auto body = sample_polytope({12, 4.0, 20, NormalLaw::Gaussian}, derive_draw_seed(9, k));
        g_gsa_estimates.push_back({12, estimate_gsa_facets(body, 20000, 40 + k)});
    }
    int exceed = 0;
    for (const auto& rec : g_gsa_estimates) {
        exceed += rec.estimate.value <= raic_upper(rec.n) + 4.0 * rec.estimate.std_error ? 0 : 1;
    }

    const double theta = 0.01;
    const double p = 1.0 - 2.0 * gaussian_tail(theta);
    const double ratio = variance_gsa_upper(1, p, theta) / (2.0 * gaussian_pdf(theta));

    int ball_failures = 0;
    for (int n = 1; n <= 12; ++n) {
        for (double radius : {0.25, 0.5, 1.0, 2.0, 3.0, 5.0}) {
            ball_failures += gsa_ball_exact(n, radius) <=
                                     variance_gsa_upper(n, ball_volume(n, radius), radius)
                                 ? 0
                                 : 1;
        }
    }
    std::ostringstream d;
    d << g_gsa_estimates.size() << " GSA estimates, " << exceed << " above the Raic bound; slab ratio "
      << ratio << "; ball variance-bound failures " << ball_failures;
    return {exceed == 0 && ratio > 10.0 && ball_failures == 0, d.str()};
}

Outcome r_scaling() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<int> ns{4096};
    const std::vector<double> alphas{0.5, 0.75, 1.0, 1.25, 1.5};
    const auto rows = scan_report(ns, alphas);
    const double elapsed = seconds_since(start);
    std::size_t best = 0;
    std::ostringstream d;
    d.precision(6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        d << "alpha " << rows[i].alpha << ": " << rows[i].chain.ratio_to_n14 << "; ";
        if (rows[i].chain.ratio_to_n14 > rows[best].chain.ratio_to_n14) {
            best = i;
        }
    }
    d << "argmax alpha = " << rows[best].alpha << ", " << elapsed << " s";
    return {rows[best].alpha == 1.0 && elapsed < 60.0, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"constant recovery", constant_recovery},
        {"finite-n trend of E[GSA]/n^(1/4)", finite_n_trend},
        {"lower-bound chain dominance", chain_dominance},
        {"Monte Carlo vs quadrature", mc_vs_quadrature},
        {"surface/influence identity per draw", surface_influence_identity},
        {"ball oracle", ball_oracle},
        {"cap correctness", cap_correctness},
        {"tail sandwiches", tail_sandwiches},
        {"Hermite suite", hermite_suite},
        {"upper-bound sanity", upper_bound_sanity},
        {"r-scaling at n = 4096", r_scaling},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::printf("criterion %2zu %s: %s | %s\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                    criteria[i].first, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
