#include "nazgsa/hermite.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>

#include "nazgsa/errors.hpp"
#include "nazgsa/specfun.hpp"

namespace nazgsa {

double hermite(int degree, double x) {
    require(degree >= 0, "hermite: degree must be nonnegative");
    if (degree == 0) {
        return 1.0;
    }
    double previous = 1.0;
    double current = x;
    for (int j = 1; j < degree; ++j) {
        const double next = (x * current - std::sqrt(static_cast<double>(j)) * previous) /
                            std::sqrt(static_cast<double>(j + 1));
        previous = current;
        current = next;
    }
    return current;
}

std::vector<double> hermite_all(int max_degree, double x) {
    require(max_degree >= 0, "hermite_all: degree must be nonnegative");
    std::vector<double> values(static_cast<std::size_t>(max_degree) + 1);
    values[0] = 1.0;
    if (max_degree >= 1) {
        values[1] = x;
    }
    for (int j = 1; j < max_degree; ++j) {
        values[j + 1] = (x * values[j] - std::sqrt(static_cast<double>(j)) * values[j - 1]) /
                        std::sqrt(static_cast<double>(j + 1));
    }
    return values;
}

int degree(const HermiteIndex& alpha) {
    for (int a : alpha) {
        require(a >= 0, "HermiteIndex: entries must be nonnegative");
    }
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

double hermite_product(const HermiteIndex& alpha, std::span<const double> x) {
    require(alpha.size() == x.size(), "hermite_product: dimension mismatch");
    double product = 1.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        product *= hermite(alpha[i], x[i]);
    }
    return product;
}

namespace {

GaussRule build_gauss_hermite(int points) {
    // Jacobi matrix of the orthonormal recurrence: zero diagonal,
    // off-diagonal sqrt(k). Nodes are its eigenvalues, weights the squared
    // first components of the eigenvectors.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        jacobi(k, k - 1) = std::sqrt(static_cast<double>(k));
        jacobi(k - 1, k) = jacobi(k, k - 1);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (int i = 0; i < points; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = v0 * v0;
    }
    // Polish nodes with Newton on h_points (h' = sqrt(m) h_(m-1)) and recompute
    // weights from the Christoffel function 1 / sum_k h_k(x)^2.
    for (int i = 0; i < points; ++i) {
        double x = rule.nodes[i];
        for (int iter = 0; iter < 3; ++iter) {
            const auto h = hermite_all(points, x);
            const double derivative = std::sqrt(static_cast<double>(points)) * h[points - 1];
            if (derivative == 0.0) {
                break;
            }
            x -= h[points] / derivative;
        }
        rule.nodes[i] = x;
        const auto h = hermite_all(points - 1, x);
        double christoffel = 0.0;
        for (double hk : h) {
            christoffel += hk * hk;
        }
        rule.weights[i] = 1.0 / christoffel;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_hermite(int points) {
    require(points >= 1 && points <= 200, "gauss_hermite: points must be in [1, 200]");
    static std::mutex cache_mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[points];
    if (!slot) {
        slot = std::make_unique<GaussRule>(build_gauss_hermite(points));
    }
    return *slot;
}

double gaussian_inner_product(const Polynomial1d& f, const Polynomial1d& g, int max_degree) {
    require(max_degree >= 0, "gaussian_inner_product: max_degree must be nonnegative");
    require(f.degree >= 0 && g.degree >= 0, "gaussian_inner_product: degrees must be nonnegative");
    if (f.degree + g.degree > 2 * max_degree) {
        throw ValidationError("gaussian_inner_product: product degree exceeds 2 * max_degree; " +
                              std::to_string(max_degree + 1) + " nodes are not exact");
    }
    const GaussRule& rule = gauss_hermite(max_degree + 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f.eval(rule.nodes[i]) * g.eval(rule.nodes[i]);
    }
    return sum;
}

std::vector<double> hermite_coefficients(const Polynomial1d& f) {
    std::vector<double> coeffs(static_cast<std::size_t>(f.degree) + 1);
    for (int j = 0; j <= f.degree; ++j) {
        const Polynomial1d basis{[j](double x) { return hermite(j, x); }, j};
        coeffs[j] = gaussian_inner_product(f, basis, f.degree);
    }
    return coeffs;
}

double parseval_sum(const HermiteSpectrum& f, const HermiteSpectrum& g) {
    double sum = 0.0;
    for (const auto& [alpha, value] : f) {
        if (auto it = g.find(alpha); it != g.end()) {
            sum += value * it->second;
        }
    }
    return sum;
}

MeanVariance mean_variance_from_spectrum(const HermiteSpectrum& f) {
    MeanVariance result;
    for (const auto& [alpha, value] : f) {
        if (degree(alpha) == 0) {
            result.mean += value;
        } else {
            result.variance += value * value;
        }
    }
    return result;
}

double slab_hermite_coefficient(int degree, double half_width) {
    require(degree >= 0, "slab_hermite_coefficient: degree must be nonnegative");
    require(half_width > 0.0, "slab_hermite_coefficient: half-width must be positive");
    if (degree == 0) {
        return 1.0 - 2.0 * gaussian_tail(half_width);
    }
    const double density = gaussian_pdf(half_width);
    return (hermite(degree - 1, -half_width) - hermite(degree - 1, half_width)) * density /
           std::sqrt(static_cast<double>(degree));
}

}  // namespace nazgsa
