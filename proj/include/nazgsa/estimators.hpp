#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nazgsa/polytope.hpp"

namespace nazgsa {

/// Monte Carlo result. std_error is the sample standard deviation over
/// sqrt(samples).
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Points are generated in fixed-size chunks, each with its own random
/// stream, so results do not depend on the worker count and a run with more
/// samples extends (rather than reshuffles) a shorter one.
inline constexpr std::size_t kChunkSize = 4096;

/// Gaussian measure of the body: mean of the indicator over x ~ N(0, I_n).
Estimate estimate_volume(const HalfspacePolytope& body, std::size_t samples, std::uint64_t seed);
Estimate estimate_volume(const Ball& body, std::size_t samples, std::uint64_t seed);

/// Total convex influence as E[1_K(x) (n - ||x||^2)].
Estimate estimate_influence(const HalfspacePolytope& body, std::size_t samples,
                            std::uint64_t seed);
Estimate estimate_influence(const Ball& body, std::size_t samples, std::uint64_t seed);

/// Degree-2 Hermite coefficient E[1_K(x) h_2(x_i)] along coordinate
/// `coordinate` (0-based).
Estimate estimate_hermite_coefficient(const HalfspacePolytope& body, int coordinate,
                                      std::size_t samples, std::uint64_t seed);
Estimate estimate_hermite_coefficient(const Ball& body, int coordinate, std::size_t samples,
                                      std::uint64_t seed);

/// All n diagonal degree-2 coefficients from one shared point set, plus the
/// influence -sqrt(2) sum_i h_2(x_i) 1_K(x) with its pointwise standard error.
struct HermiteDiagonal {
    std::vector<Estimate> coefficients;
    Estimate influence;
};

HermiteDiagonal estimate_hermite_diagonal(const HalfspacePolytope& body, std::size_t samples,
                                          std::uint64_t seed);
HermiteDiagonal estimate_hermite_diagonal(const Ball& body, std::size_t samples,
                                          std::uint64_t seed);

/// Influence -sqrt(2) sum_i c_i from separately estimated coefficients; the
/// standard error assumes the coefficients are independent.
Estimate influence_from_hermite(std::span<const Estimate> coefficients);

/// Same identity on a shared point set; the standard error is the exact
/// pointwise one carried by the diagonal estimate.
Estimate influence_from_hermite(const HermiteDiagonal& diagonal);

/// Gaussian surface area by facets: sum_i phi(b_i) P_i, where P_i is the
/// fraction of points b_i v_i + z, z Gaussian in the hyperplane v_i-perp,
/// that satisfy every other facet constraint. Facets are independent, so
/// the standard error is the root sum of squares of the facet terms.
Estimate estimate_gsa_facets(const HalfspacePolytope& body, std::size_t samples_per_facet,
                             std::uint64_t seed);

/// Mean and standard error of a sample of independent scalar values.
Estimate summarize(std::span<const double> values, std::uint64_t seed = 0);

/// Quantities that can be averaged over random polytope draws.
enum class PolytopeQuantity { Volume, Influence, GsaFacets };

/// Seed of the k-th polytope in a batch derived from `seed`.
std::uint64_t derive_draw_seed(std::uint64_t seed, std::uint64_t draw);

/// Per-draw estimates for `draws` polytopes from `params`, each evaluated
/// with `samples_per_draw` points (per facet for GsaFacets).
std::vector<Estimate> estimate_over_draws(const PolytopeParams& params, std::size_t draws,
                                          std::size_t samples_per_draw, std::uint64_t seed,
                                          PolytopeQuantity quantity);

/// JSON row {name, value, stderr, samples, seed}.
nlohmann::json to_json(const std::string& name, const Estimate& estimate);

}  // namespace nazgsa
