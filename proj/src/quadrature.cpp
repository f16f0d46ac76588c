#include "nazgsa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "nazgsa/errors.hpp"

namespace nazgsa {

namespace {

GaussRule build_gauss_legendre(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_order.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = order == 1 ? x : p1;
            const double pm = order == 1 ? 1.0 : p0;
            derivative = order * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / derivative;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

double apply_rule(const GaussRule& rule, const ScalarFunction& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

double adaptive_step(const ScalarFunction& f, double a, double b, double whole, double tolerance,
                     double rel_tol, int depth) {
    const GaussRule& rule = gauss_legendre(15);
    const double mid = 0.5 * (a + b);
    const double left = apply_rule(rule, f, a, mid);
    const double right = apply_rule(rule, f, mid, b);
    const double refined = left + right;
    if (std::abs(refined - whole) <= std::max(tolerance, rel_tol * std::abs(refined))) {
        return refined;
    }
    if (depth == 0) {
        throw NonConvergenceError("adaptive_gauss_legendre: maximum depth reached");
    }
    return adaptive_step(f, a, mid, left, tolerance, rel_tol, depth - 1) +
           adaptive_step(f, mid, b, right, tolerance, rel_tol, depth - 1);
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    require(order >= 1, "gauss_legendre: order must be >= 1");
    static std::mutex cache_mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[order];
    if (!slot) {
        slot = std::make_unique<GaussRule>(build_gauss_legendre(order));
    }
    return *slot;
}

double composite_gauss_legendre(const ScalarFunction& f, double a, double b, int panels,
                                int order) {
    require(panels >= 1, "composite_gauss_legendre: panels must be >= 1");
    const GaussRule& rule = gauss_legendre(order);
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double hi = p + 1 == panels ? b : lo + width;
        sum += apply_rule(rule, f, lo, hi);
    }
    return sum;
}

double adaptive_gauss_legendre(const ScalarFunction& f, double a, double b, double abs_tol,
                               double rel_tol, int max_depth) {
    if (a == b) {
        return 0.0;
    }
    // Panels are judged against the size of the whole integral, so a
    // singular endpoint does not force refinement down to its own scale.
    const double whole = apply_rule(gauss_legendre(15), f, a, b);
    const double tolerance = std::max(abs_tol, rel_tol * std::abs(whole));
    return adaptive_step(f, a, b, whole, tolerance, rel_tol, max_depth);
}

DoublingResult integrate_with_doubling(const ScalarFunction& f, double a, double b,
                                       std::size_t initial_nodes, double target_rel,
                                       double fail_rel, int max_doublings) {
    constexpr int kOrder = 16;
    int panels = static_cast<int>(std::max<std::size_t>(1, (initial_nodes + kOrder - 1) / kOrder));
    double previous = composite_gauss_legendre(f, a, b, panels, kOrder);
    double change = 0.0;
    for (int round = 0; round < max_doublings; ++round) {
        panels *= 2;
        const double current = composite_gauss_legendre(f, a, b, panels, kOrder);
        const double scale = std::max(std::abs(current), std::numeric_limits<double>::min());
        change = std::abs(current - previous) / scale;
        previous = current;
        if (change <= target_rel) {
            return {current, static_cast<std::size_t>(panels) * kOrder, change};
        }
    }
    if (change > fail_rel) {
        std::ostringstream msg;
        msg << "integrate_with_doubling: relative change " << change << " after "
            << static_cast<std::size_t>(panels) * kOrder << " nodes on [" << a << ", " << b << "]";
        throw NonConvergenceError(msg.str());
    }
    return {previous, static_cast<std::size_t>(panels) * kOrder, change};
}

}  // namespace nazgsa
