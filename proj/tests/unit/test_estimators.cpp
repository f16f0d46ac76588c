#include <cmath>
#include <numbers>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "nazgsa/bounds.hpp"
#include "nazgsa/errors.hpp"
#include "nazgsa/estimators.hpp"
#include "nazgsa/parallel.hpp"
#include "nazgsa/polytope.hpp"
#include "nazgsa/radial.hpp"
#include "nazgsa/rng.hpp"
#include "nazgsa/specfun.hpp"

using namespace nazgsa;

namespace {

double combined(const Estimate& a, const Estimate& b) {
    return std::hypot(a.std_error, b.std_error);
}

// Indicator sum of the volume estimator rebuilt from the documented chunk
// layout: chunk c draws its points from stream (GaussianPoints, c).
double volume_hits(const HalfspacePolytope& k, std::size_t samples, std::uint64_t seed) {
    double hits = 0.0;
    std::vector<double> x(static_cast<std::size_t>(k.dim()));
    for (std::size_t begin = 0; begin < samples; begin += kChunkSize) {
        Philox4x32 rng(seed, stream_id(StreamDomain::GaussianPoints, begin / kChunkSize));
        for (std::size_t j = begin; j < std::min(samples, begin + kChunkSize); ++j) {
            for (double& c : x) {
                c = rng.gaussian();
            }
            hits += k.contains(x) ? 1.0 : 0.0;
        }
    }
    return hits;
}

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("volume of the whole space") {
    const auto everything = make_halfspace(5, 1e6);
    const auto e = estimate_volume(everything, 10000, 1);
    CHECK(e.value == 1.0);
    CHECK(e.std_error == 0.0);
    CHECK(e.samples == 10000);
    CHECK(e.seed == 1);
    CHECK_THROWS_AS(estimate_volume(everything, 1, 1), ValidationError);
}

TEST_CASE("volume of the 95% slab") {
    const auto slab = make_slab(1, 1.959964);
    const auto e = estimate_volume(slab, 100000, 3);
    CHECK(std::abs(e.value - 0.95) <= 3.0 * e.std_error);
    CHECK(e.std_error == doctest::Approx(std::sqrt(0.95 * 0.05 / 1e5)).epsilon(0.05));
}

TEST_CASE("volume of sphere-normal polytopes matches the radial integral") {
    const PolytopeParams params{16, 2.0, 32, NormalLaw::UnitSphere};
    const auto per_draw = estimate_over_draws(params, 2000, 64, 17, PolytopeQuantity::Volume);
    std::vector<double> values;
    for (const auto& e : per_draw) {
        values.push_back(e.value);
    }
    const auto avg = summarize(values, 17);
    const double exact = expected_volume(16, 2.0, 32.0);
    CHECK(std::abs(avg.value - exact) <= 4.0 * avg.std_error);
}

TEST_CASE("volume estimates are prefix-stable and match a direct rebuild") {
    const auto k = sample_sphere_normal_polytope({6, 1.0, 5, NormalLaw::UnitSphere}, 2);
    const std::size_t half = 2 * kChunkSize + 100;
    const auto a = estimate_volume(k, half, 55);
    const auto b = estimate_volume(k, 2 * half, 55);
    const double hits_a = volume_hits(k, half, 55);
    const double hits_b = volume_hits(k, 2 * half, 55);
    CHECK(a.value * half == doctest::Approx(hits_a).epsilon(1e-12));
    CHECK(b.value * 2 * half == doctest::Approx(hits_b).epsilon(1e-12));
    // The longer run extends the shorter: its first half reproduces hits_a.
    CHECK(hits_b >= hits_a);
}

TEST_CASE("estimates do not depend on the thread count") {
    const auto k = sample_sphere_normal_polytope({12, 1.5, 20, NormalLaw::UnitSphere}, 9);
    set_thread_count(1);
    const auto one = estimate_influence(k, 50000, 4);
    const auto gsa_one = estimate_gsa_facets(k, 5000, 4);
    set_thread_count(5);
    const auto five = estimate_influence(k, 50000, 4);
    const auto gsa_five = estimate_gsa_facets(k, 5000, 4);
    set_thread_count(0);
    CHECK(one.value == five.value);
    CHECK(one.std_error == five.std_error);
    CHECK(gsa_one.value == gsa_five.value);
}

TEST_CASE("influence of the whole space is zero in mean") {
    const auto everything = make_halfspace(6, 1e6);
    const auto e = estimate_influence(everything, 100000, 8);
    CHECK(std::abs(e.value) <= 4.0 * e.std_error);
}

TEST_CASE("ball influence matches the chi-integral oracle") {
    for (int n : {2, 4, 8}) {
        for (double radius : {0.5, 1.0, 2.0}) {
            const auto e = estimate_influence(Ball{n, radius}, 200000, 100 + n);
            CHECK(std::abs(e.value - ball_influence_radial(n, radius)) <= 4.0 * e.std_error);
        }
    }
}

TEST_CASE("spectral and Hermite influence agree on shared samples") {
    const auto k = sample_sphere_normal_polytope({10, 1.5, 12, NormalLaw::UnitSphere}, 31);
    const auto spectral = estimate_influence(k, 30000, 6);
    const auto diagonal = estimate_hermite_diagonal(k, 30000, 6);
    const auto from_hermite = influence_from_hermite(diagonal);
    CHECK(std::abs(from_hermite.value - spectral.value) <= 1e-12 * std::max(1.0, std::abs(spectral.value)));
    CHECK(diagonal.influence.value == doctest::Approx(spectral.value).epsilon(1e-12));

    // Each diagonal entry equals the single-coordinate estimator on the same points.
    for (int i : {0, 4, 9}) {
        const auto single = estimate_hermite_coefficient(k, i, 30000, 6);
        CHECK(single.value == doctest::Approx(diagonal.coefficients[static_cast<std::size_t>(i)].value).epsilon(1e-13));
    }

    // Cauchy-Schwarz: |TInf| <= sqrt(2 n sum c_i^2).
    double sum_sq = 0.0;
    for (const auto& c : diagonal.coefficients) {
        sum_sq += c.value * c.value;
    }
    CHECK(std::abs(from_hermite.value) <= std::sqrt(2.0 * 10 * sum_sq) + 4.0 * from_hermite.std_error);
}

TEST_CASE("influence_from_hermite propagation") {
    const std::vector<Estimate> zeros(4, Estimate{0.0, 0.0, 100, 1});
    CHECK(influence_from_hermite(std::span<const Estimate>(zeros)).value == 0.0);
    const std::vector<Estimate> two{{0.5, 0.03, 100, 1}, {-0.25, 0.04, 100, 1}};
    const auto e = influence_from_hermite(std::span<const Estimate>(two));
    CHECK(e.value == doctest::Approx(-std::numbers::sqrt2 * 0.25).epsilon(1e-15));
    CHECK(e.std_error == doctest::Approx(std::numbers::sqrt2 * 0.05).epsilon(1e-14));
    CHECK_THROWS_AS(influence_from_hermite(std::span<const Estimate>()), ValidationError);
}

TEST_CASE("Hermite coefficients") {
    const auto everything = make_halfspace(3, 1e6);
    const auto zero = estimate_hermite_coefficient(everything, 2, 100000, 12);
    CHECK(std::abs(zero.value) <= 4.0 * zero.std_error);
    CHECK_THROWS_AS(estimate_hermite_coefficient(everything, 3, 100, 1), ValidationError);
    CHECK_THROWS_AS(estimate_hermite_coefficient(everything, -1, 100, 1), ValidationError);

    // 1-D slab: integral of (x^2 - 1)/sqrt 2 over [-theta, theta] is -sqrt 2 theta phi(theta).
    const double theta = 1.0;
    const auto slab = estimate_hermite_coefficient(make_slab(1, theta), 0, 200000, 13);
    CHECK(std::abs(slab.value + std::numbers::sqrt2 * theta * gaussian_pdf(theta)) <= 4.0 * slab.std_error);

    // Ball: rotation invariance makes every coordinate alike.
    const Ball ball{5, 2.0};
    const auto first = estimate_hermite_coefficient(ball, 0, 100000, 14);
    for (int i = 1; i < 5; ++i) {
        const auto other = estimate_hermite_coefficient(ball, i, 100000, 14 + i);
        CHECK(std::abs(first.value - other.value) <= 4.0 * combined(first, other));
    }
}

TEST_CASE("facet surface area of halfspaces and slabs") {
    const auto h = make_halfspace(4, 0.8);
    const auto e = estimate_gsa_facets(h, 100, 1);
    CHECK(e.value == gaussian_pdf(0.8));
    CHECK(e.std_error == 0.0);
    CHECK(estimate_gsa_facets(make_halfspace(4, 1e-300), 100, 1).value == doctest::Approx(0.3989422804014327).epsilon(1e-15));

    for (double theta : {0.01, 0.5, 2.0}) {
        const auto slab = estimate_gsa_facets(make_slab(1, theta), 1000, 2);
        CHECK(slab.value == doctest::Approx(2.0 * gaussian_pdf(theta)).epsilon(1e-15));
    }
    // Slab in higher dimension: the other facet never cuts the hyperplane.
    const auto wide = estimate_gsa_facets(make_slab(7, 0.5), 1000, 2);
    CHECK(wide.value == doctest::Approx(2.0 * gaussian_pdf(0.5)).epsilon(1e-15));
}

TEST_CASE("facet surface area of the ball-like polytope approaches the sphere") {
    // Many tangent facets at offset r shrink toward the ball of radius r, whose
    // surface area is known exactly; the polytope's is larger.
    const auto k = sample_sphere_normal_polytope({3, 1.0, 2000, NormalLaw::UnitSphere}, 4);
    const auto e = estimate_gsa_facets(k, 4000, 5);
    const double sphere = gsa_ball_exact(3, 1.0);
    CHECK(e.value >= sphere - 4.0 * e.std_error);
    CHECK(e.value <= 1.1 * sphere);
}

TEST_CASE("influence equals inradius times surface area for tangent polytopes") {
    const PolytopeParams params{16, 2.0, 32, NormalLaw::UnitSphere};
    for (std::uint64_t d = 0; d < 4; ++d) {
        const auto k = sample_polytope(params, derive_draw_seed(77, d));
        const auto tinf = estimate_influence(k, 400000, 10 + d);
        auto gsa = estimate_gsa_facets(k, 40000, 20 + d);
        gsa.value *= 2.0;
        gsa.std_error *= 2.0;
        CHECK(std::abs(gsa.value - tinf.value) <= 4.0 * combined(gsa, tinf));
        CHECK(tinf.value <= std::sqrt(2.0 * 16) + 4.0 * tinf.std_error);
    }
}

TEST_CASE("influence dominates inradius times surface area for gaussian-normal polytopes") {
    const PolytopeParams params{12, 4.0, 20, NormalLaw::Gaussian};
    for (std::uint64_t d = 0; d < 4; ++d) {
        const auto k = sample_polytope(params, derive_draw_seed(78, d));
        const auto tinf = estimate_influence(k, 200000, 30 + d);
        auto gsa = estimate_gsa_facets(k, 20000, 40 + d);
        gsa.value *= k.inradius();
        gsa.std_error *= k.inradius();
        CHECK(tinf.value >= gsa.value - 4.0 * combined(gsa, tinf));
        CHECK(tinf.value <= std::sqrt(2.0 * 12) + 4.0 * tinf.std_error);
    }
}

TEST_CASE("summarize and seed derivation") {
    const std::vector<double> values{1.0, 2.0, 3.0, 4.0};
    const auto s = summarize(values, 9);
    CHECK(s.value == 2.5);
    CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)).epsilon(1e-15));
    CHECK(s.samples == 4);
    CHECK(derive_draw_seed(1, 0) == derive_draw_seed(1, 0));
    CHECK(derive_draw_seed(1, 0) != derive_draw_seed(1, 1));
    CHECK(derive_draw_seed(1, 0) != derive_draw_seed(2, 0));
}

TEST_CASE("estimate JSON rows") {
    const auto row = to_json("vol", Estimate{0.25, 0.01, 1000, 42});
    CHECK(row.at("name") == "vol");
    CHECK(row.at("value") == 0.25);
    CHECK(row.at("stderr") == 0.01);
    CHECK(row.at("samples") == 1000);
    CHECK(row.at("seed") == 42);
}

}  // TEST_SUITE
