#pragma once

#include <functional>

namespace nazgsa {

struct ScalarOptimum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

/// Golden-section search for the maximizer of a unimodal f on [a, b].
/// Throws NonConvergenceError if the bracket is not narrowed to `x_tol`
/// within `max_iterations`.
ScalarOptimum golden_section_maximize(const std::function<double(double)>& f, double a,
                                      double b, double x_tol = 1e-10, int max_iterations = 500);

/// Golden-section search for the minimizer of a unimodal f on [a, b].
ScalarOptimum golden_section_minimize(const std::function<double(double)>& f, double a,
                                      double b, double x_tol = 1e-10, int max_iterations = 500);

/// Golden-section search driven by a comparison instead of function values.
/// `prefer(c, d)` returns true when c is at least as good as d. Exact
/// comparisons (e.g. computed as a cancellation-free difference) let the
/// bracket shrink far below the sqrt(epsilon) limit of value comparisons.
double golden_section_search(const std::function<bool(double, double)>& prefer, double a,
                             double b, double x_tol = 1e-14, int max_iterations = 500);

/// Global minimum of f on [a, b]: scans `grid` equispaced points, then refines
/// the best grid cell's neighbourhood by golden section.
ScalarOptimum grid_golden_minimize(const std::function<double(double)>& f, double a, double b,
                                   int grid = 256, double x_tol = 1e-12);

}  // namespace nazgsa
