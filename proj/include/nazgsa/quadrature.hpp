#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace nazgsa {

/// Nodes and weights of a Gauss rule on its reference interval.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order on [-1, 1]. Rules are cached; the
/// returned reference stays valid for the life of the process.
const GaussRule& gauss_legendre(int order);

using ScalarFunction = std::function<double(double)>;

/// Sum over `panels` equal panels of an order-`order` Gauss-Legendre rule.
double composite_gauss_legendre(const ScalarFunction& f, double a, double b, int panels,
                                int order = 16);

/// Recursive bisection with a 15-point Gauss-Legendre rule, accepting a panel
/// when it agrees with the sum of its halves within max(abs_tol, rel_tol*|I|).
double adaptive_gauss_legendre(const ScalarFunction& f, double a, double b,
                               double abs_tol = 1e-15, double rel_tol = 1e-13,
                               int max_depth = 40);

/// Result of a node-doubling integration.
struct DoublingResult {
    double value = 0.0;
    std::size_t nodes = 0;
    double relative_change = 0.0;
};

/// Composite Gauss-Legendre with node doubling, starting from `initial_nodes`
/// (rounded up to whole 16-point panels). Stops when successive values agree
/// to `target_rel`; throws NonConvergenceError if after `max_doublings` the
/// change still exceeds `fail_rel`.
DoublingResult integrate_with_doubling(const ScalarFunction& f, double a, double b,
                                       std::size_t initial_nodes, double target_rel = 1e-8,
                                       double fail_rel = 1e-6, int max_doublings = 10);

}  // namespace nazgsa
