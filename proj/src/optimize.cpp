#include "nazgsa/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "nazgsa/errors.hpp"

namespace nazgsa {

ScalarOptimum golden_section_minimize(const std::function<double(double)>& f, double a,
                                      double b, double x_tol, int max_iterations) {
    require(a <= b, "golden_section_minimize: empty bracket");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int iter = 0;
    while (b - a > x_tol * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (++iter > max_iterations) {
            throw NonConvergenceError("golden_section_minimize: iteration limit reached");
        }
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = fc <= fd ? c : d;
    return {x, std::min(fc, fd), iter};
}

ScalarOptimum golden_section_maximize(const std::function<double(double)>& f, double a,
                                      double b, double x_tol, int max_iterations) {
    ScalarOptimum best = golden_section_minimize([&](double x) { return -f(x); }, a, b, x_tol,
                                                 max_iterations);
    best.value = -best.value;
    return best;
}

double golden_section_search(const std::function<bool(double, double)>& prefer, double a,
                             double b, double x_tol, int max_iterations) {
    require(a <= b, "golden_section_search: empty bracket");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    int iter = 0;
    while (b - a > x_tol * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (++iter > max_iterations) {
            throw NonConvergenceError("golden_section_search: iteration limit reached");
        }
        if (prefer(c, d)) {
            b = d;
            d = c;
            c = b - inv_phi * (b - a);
        } else {
            a = c;
            c = d;
            d = a + inv_phi * (b - a);
        }
    }
    return 0.5 * (a + b);
}

ScalarOptimum grid_golden_minimize(const std::function<double(double)>& f, double a, double b,
                                   int grid, double x_tol) {
    require(grid >= 3, "grid_golden_minimize: grid must have at least 3 points");
    require(a < b, "grid_golden_minimize: empty interval");
    const double h = (b - a) / (grid - 1);
    int best = 0;
    double best_value = f(a);
    for (int i = 1; i < grid; ++i) {
        const double x = i + 1 == grid ? b : a + i * h;
        const double value = f(x);
        if (value < best_value) {
            best_value = value;
            best = i;
        }
    }
    const double lo = std::max(a, a + (best - 1) * h);
    const double hi = std::min(b, a + (best + 1) * h);
    ScalarOptimum refined = golden_section_minimize(f, lo, hi, x_tol);
    if (refined.value > best_value) {
        return {best + 1 == grid ? b : a + best * h, best_value, refined.iterations};
    }
    return refined;
}

}  // namespace nazgsa
