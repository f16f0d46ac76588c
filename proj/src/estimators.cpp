#include "nazgsa/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <nlohmann/json.hpp>

#include "nazgsa/errors.hpp"
#include "nazgsa/parallel.hpp"
#include "nazgsa/rng.hpp"
#include "nazgsa/specfun.hpp"

namespace nazgsa {

namespace {

// Count/mean/M2 accumulator (Welford, merged with Chan's formula).
struct Moments {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const Moments& other) {
        if (other.count == 0) {
            return;
        }
        if (count == 0) {
            *this = other;
            return;
        }
        const double total = static_cast<double>(count + other.count);
        const double delta = other.mean - mean;
        mean += delta * static_cast<double>(other.count) / total;
        m2 += other.m2 + delta * delta * static_cast<double>(count) *
                             static_cast<double>(other.count) / total;
        count += other.count;
    }

    Estimate estimate(std::uint64_t seed) const {
        const double variance = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
        return {mean, std::sqrt(variance / static_cast<double>(count)), count, seed};
    }
};

// Evaluates `score(x, out)` on `samples` standard Gaussian points in R^dim
// and returns per-component moments. Chunk c draws from stream
// (domain, chunk_index(c)); chunks are merged in index order.
template <class Score, class StreamOf>
std::vector<Moments> accumulate_gaussian(int dim, std::size_t components, std::size_t samples,
                                         std::uint64_t seed, StreamOf stream_of, Score score) {
    require(samples >= 2, "estimator: at least 2 samples are required");
    const std::size_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<std::vector<Moments>> partial(chunks, std::vector<Moments>(components));
    parallel_for(chunks, [&](std::size_t c) {
        Philox4x32 rng(seed, stream_of(c));
        const std::size_t begin = c * kChunkSize;
        const std::size_t end = std::min(samples, begin + kChunkSize);
        std::vector<double> x(static_cast<std::size_t>(dim));
        std::vector<double> out(components);
        auto& moments = partial[c];
        for (std::size_t j = begin; j < end; ++j) {
            for (double& xi : x) {
                xi = rng.gaussian();
            }
            score(std::span<double>(x), std::span<double>(out));
            for (std::size_t k = 0; k < components; ++k) {
                moments[k].add(out[k]);
            }
        }
    });
    std::vector<Moments> total(components);
    for (const auto& chunk : partial) {
        for (std::size_t k = 0; k < components; ++k) {
            total[k].merge(chunk[k]);
        }
    }
    return total;
}

auto point_stream(std::size_t chunk) { return stream_id(StreamDomain::GaussianPoints, chunk); }

double squared_norm(std::span<const double> x) {
    double s = 0.0;
    for (double c : x) {
        s += c * c;
    }
    return s;
}

inline double hermite2(double x) { return (x * x - 1.0) / std::numbers::sqrt2; }

template <class Body>
Estimate volume_impl(const Body& body, std::size_t samples, std::uint64_t seed) {
    auto moments = accumulate_gaussian(body.dim(), 1, samples, seed, point_stream,
                                       [&](std::span<double> x, std::span<double> out) {
                                           out[0] = body.contains(x) ? 1.0 : 0.0;
                                       });
    return moments[0].estimate(seed);
}

template <class Body>
Estimate influence_impl(const Body& body, std::size_t samples, std::uint64_t seed) {
    const double n = body.dim();
    auto moments = accumulate_gaussian(
        body.dim(), 1, samples, seed, point_stream, [&](std::span<double> x, std::span<double> out) {
            out[0] = body.contains(x) ? n - squared_norm(x) : 0.0;
        });
    return moments[0].estimate(seed);
}

template <class Body>
Estimate hermite_coefficient_impl(const Body& body, int coordinate, std::size_t samples,
                                  std::uint64_t seed) {
    require(coordinate >= 0 && coordinate < body.dim(),
            "estimate_hermite_coefficient: coordinate out of range");
    const auto i = static_cast<std::size_t>(coordinate);
    auto moments = accumulate_gaussian(
        body.dim(), 1, samples, seed, point_stream, [&](std::span<double> x, std::span<double> out) {
            out[0] = body.contains(x) ? hermite2(x[i]) : 0.0;
        });
    return moments[0].estimate(seed);
}

template <class Body>
HermiteDiagonal hermite_diagonal_impl(const Body& body, std::size_t samples,
                                      std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(body.dim());
    // Components 0..n-1 are the coefficients, component n the pointwise influence.
    auto moments = accumulate_gaussian(
        body.dim(), n + 1, samples, seed, point_stream,
        [&](std::span<double> x, std::span<double> out) {
            if (!body.contains(x)) {
                std::fill(out.begin(), out.end(), 0.0);
                return;
            }
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = hermite2(x[i]);
                sum += out[i];
            }
            out[n] = -std::numbers::sqrt2 * sum;
        });
    HermiteDiagonal result;
    result.coefficients.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.coefficients.push_back(moments[i].estimate(seed));
    }
    result.influence = moments[n].estimate(seed);
    return result;
}

}  // namespace

Estimate estimate_volume(const HalfspacePolytope& body, std::size_t samples, std::uint64_t seed) {
    return volume_impl(body, samples, seed);
}

Estimate estimate_volume(const Ball& body, std::size_t samples, std::uint64_t seed) {
    return volume_impl(body, samples, seed);
}

Estimate estimate_influence(const HalfspacePolytope& body, std::size_t samples,
                            std::uint64_t seed) {
    return influence_impl(body, samples, seed);
}

Estimate estimate_influence(const Ball& body, std::size_t samples, std::uint64_t seed) {
    return influence_impl(body, samples, seed);
}

Estimate estimate_hermite_coefficient(const HalfspacePolytope& body, int coordinate,
                                      std::size_t samples, std::uint64_t seed) {
    return hermite_coefficient_impl(body, coordinate, samples, seed);
}

Estimate estimate_hermite_coefficient(const Ball& body, int coordinate, std::size_t samples,
                                      std::uint64_t seed) {
    return hermite_coefficient_impl(body, coordinate, samples, seed);
}

HermiteDiagonal estimate_hermite_diagonal(const HalfspacePolytope& body, std::size_t samples,
                                          std::uint64_t seed) {
    return hermite_diagonal_impl(body, samples, seed);
}

HermiteDiagonal estimate_hermite_diagonal(const Ball& body, std::size_t samples,
                                          std::uint64_t seed) {
    return hermite_diagonal_impl(body, samples, seed);
}

Estimate influence_from_hermite(std::span<const Estimate> coefficients) {
    require(!coefficients.empty(), "influence_from_hermite: no coefficients");
    double sum = 0.0;
    double variance = 0.0;
    std::size_t samples = coefficients.front().samples;
    for (const Estimate& c : coefficients) {
        sum += c.value;
        variance += c.std_error * c.std_error;
        samples = std::min(samples, c.samples);
    }
    return {-std::numbers::sqrt2 * sum, std::numbers::sqrt2 * std::sqrt(variance), samples,
            coefficients.front().seed};
}

Estimate influence_from_hermite(const HermiteDiagonal& diagonal) {
    require(!diagonal.coefficients.empty(), "influence_from_hermite: no coefficients");
    double sum = 0.0;
    for (const Estimate& c : diagonal.coefficients) {
        sum += c.value;
    }
    Estimate result = diagonal.influence;
    result.value = -std::numbers::sqrt2 * sum;
    return result;
}

Estimate estimate_gsa_facets(const HalfspacePolytope& body, std::size_t samples_per_facet,
                             std::uint64_t seed) {
    require(samples_per_facet >= 2, "estimate_gsa_facets: at least 2 samples per facet");
    const std::size_t facets = body.facet_count();
    const auto n = static_cast<std::size_t>(body.dim());
    double value = 0.0;
    double variance = 0.0;
    for (std::size_t i = 0; i < facets; ++i) {
        const std::span<const double> v = body.normal(i);
        const double b = body.offset(i);
        double frequency = 1.0;
        double freq_error = 0.0;
        if (facets > 1) {
            auto moments = accumulate_gaussian(
                body.dim(), 1, samples_per_facet, seed,
                [i](std::size_t chunk) {
                    return stream_id(StreamDomain::FacetSurface, facet_chunk_index(i, chunk));
                },
                [&](std::span<double> g, std::span<double> out) {
                    // Project onto v-perp and shift onto the facet hyperplane.
                    double along = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        along += g[k] * v[k];
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        g[k] += (b - along) * v[k];
                    }
                    out[0] = 1.0;
                    for (std::size_t j = 0; j < facets; ++j) {
                        if (j == i) {
                            continue;
                        }
                        const auto w = body.normal(j);
                        double dot = 0.0;
                        for (std::size_t k = 0; k < n; ++k) {
                            dot += g[k] * w[k];
                        }
                        if (dot > body.offset(j)) {
                            out[0] = 0.0;
                            return;
                        }
                    }
                });
            const Estimate facet = moments[0].estimate(seed);
            frequency = facet.value;
            freq_error = facet.std_error;
        }
        const double weight = gaussian_pdf(b);
        value += weight * frequency;
        variance += weight * weight * freq_error * freq_error;
    }
    return {value, std::sqrt(variance), samples_per_facet, seed};
}

Estimate summarize(std::span<const double> values, std::uint64_t seed) {
    require(!values.empty(), "summarize: no values");
    Moments m;
    for (double v : values) {
        m.add(v);
    }
    return m.estimate(seed);
}

std::uint64_t derive_draw_seed(std::uint64_t seed, std::uint64_t draw) {
    Philox4x32 rng(seed, stream_id(StreamDomain::PolytopeBatch, draw));
    const std::uint64_t hi = rng();
    return (hi << 32) | rng();
}

std::vector<Estimate> estimate_over_draws(const PolytopeParams& params, std::size_t draws,
                                          std::size_t samples_per_draw, std::uint64_t seed,
                                          PolytopeQuantity quantity) {
    require(draws >= 1, "estimate_over_draws: at least one draw");
    std::vector<Estimate> results;
    results.reserve(draws);
    for (std::size_t k = 0; k < draws; ++k) {
        const std::uint64_t draw_seed = derive_draw_seed(seed, k);
        const HalfspacePolytope body = sample_polytope(params, draw_seed);
        switch (quantity) {
            case PolytopeQuantity::Volume:
                results.push_back(estimate_volume(body, samples_per_draw, draw_seed));
                break;
            case PolytopeQuantity::Influence:
                results.push_back(estimate_influence(body, samples_per_draw, draw_seed));
                break;
            case PolytopeQuantity::GsaFacets:
                results.push_back(estimate_gsa_facets(body, samples_per_draw, draw_seed));
                break;
        }
    }
    return results;
}

nlohmann::json to_json(const std::string& name, const Estimate& estimate) {
    return {{"name", name},
            {"value", estimate.value},
            {"stderr", estimate.std_error},
            {"samples", estimate.samples},
            {"seed", estimate.seed}};
}

}  // namespace nazgsa
