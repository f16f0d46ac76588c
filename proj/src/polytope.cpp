#include "nazgsa/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "nazgsa/errors.hpp"
#include "nazgsa/rng.hpp"

namespace nazgsa {

std::string to_string(NormalLaw law) {
    return law == NormalLaw::UnitSphere ? "unit-sphere-normals" : "gaussian-normals";
}

NormalLaw normal_law_from_string(const std::string& name) {
    if (name == "unit-sphere-normals") {
        return NormalLaw::UnitSphere;
    }
    if (name == "gaussian-normals") {
        return NormalLaw::Gaussian;
    }
    throw ValidationError("unknown normal law: " + name);
}

HalfspacePolytope::HalfspacePolytope(int n, std::vector<double> normals,
                                     std::vector<double> offsets, NormalLaw law,
                                     std::uint64_t seed)
    : n_(n), normals_(std::move(normals)), offsets_(std::move(offsets)), law_(law), seed_(seed) {
    require(n_ >= 1, "HalfspacePolytope: dimension must be >= 1");
    require(!offsets_.empty(), "HalfspacePolytope: needs at least one facet");
    require(normals_.size() == offsets_.size() * static_cast<std::size_t>(n_),
            "HalfspacePolytope: normals/offsets size mismatch");
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        require(offsets_[i] > 0.0 && std::isfinite(offsets_[i]),
                "HalfspacePolytope: offsets must be positive and finite");
        double norm2 = 0.0;
        for (double c : normal(i)) {
            norm2 += c * c;
        }
        require(std::abs(norm2 - 1.0) <= 1e-12, "HalfspacePolytope: normals must be unit length");
    }
}

bool HalfspacePolytope::contains(std::span<const double> x) const {
    require(x.size() == static_cast<std::size_t>(n_), "contains: dimension mismatch");
    const double* row = normals_.data();
    for (std::size_t i = 0; i < offsets_.size(); ++i, row += n_) {
        double dot = 0.0;
        for (int k = 0; k < n_; ++k) {
            dot += row[k] * x[k];
        }
        if (dot > offsets_[i]) {
            return false;
        }
    }
    return true;
}

double HalfspacePolytope::inradius() const {
    return *std::min_element(offsets_.begin(), offsets_.end());
}

HalfspacePolytope HalfspacePolytope::dilate(double factor) const {
    require(factor > 0.0 && std::isfinite(factor), "dilate: factor must be positive");
    std::vector<double> scaled = offsets_;
    for (double& b : scaled) {
        b *= factor;
    }
    return HalfspacePolytope(n_, normals_, std::move(scaled), law_, seed_);
}

namespace {

void validate(const PolytopeParams& params, NormalLaw expected) {
    require(params.law == expected, "sample: params.law does not match the sampler");
    require(params.n >= 2, "sample: n must be >= 2");
    require(params.offset > 0.0 && std::isfinite(params.offset), "sample: offset must be positive");
    require(params.facets >= 1, "sample: facet count must be >= 1");
}

// Standard Gaussian vector from the facet's stream; redrawn on the
// (probability zero) all-zero outcome. Returns its norm.
double draw_gaussian_direction(Philox4x32& rng, std::span<double> out) {
    for (;;) {
        double norm2 = 0.0;
        for (double& c : out) {
            c = rng.gaussian();
            norm2 += c * c;
        }
        if (norm2 > 0.0) {
            return std::sqrt(norm2);
        }
    }
}

void normalize(std::span<double> v, double norm) {
    for (double& c : v) {
        c /= norm;
    }
}

}  // namespace

HalfspacePolytope sample_sphere_normal_polytope(const PolytopeParams& params,
                                                std::uint64_t seed) {
    validate(params, NormalLaw::UnitSphere);
    const auto n = static_cast<std::size_t>(params.n);
    std::vector<double> normals(params.facets * n);
    for (std::size_t i = 0; i < params.facets; ++i) {
        Philox4x32 rng(seed, stream_id(StreamDomain::FacetNormals, i));
        std::span<double> row(normals.data() + i * n, n);
        normalize(row, draw_gaussian_direction(rng, row));
    }
    return HalfspacePolytope(params.n, std::move(normals),
                             std::vector<double>(params.facets, params.offset),
                             NormalLaw::UnitSphere, seed);
}

HalfspacePolytope sample_gaussian_normal_polytope(const PolytopeParams& params,
                                                  std::uint64_t seed) {
    validate(params, NormalLaw::Gaussian);
    const auto n = static_cast<std::size_t>(params.n);
    std::vector<double> normals(params.facets * n);
    std::vector<double> offsets(params.facets);
    for (std::size_t i = 0; i < params.facets; ++i) {
        Philox4x32 rng(seed, stream_id(StreamDomain::FacetNormals, i));
        std::span<double> row(normals.data() + i * n, n);
        const double norm = draw_gaussian_direction(rng, row);
        normalize(row, norm);
        offsets[i] = params.offset / norm;
    }
    return HalfspacePolytope(params.n, std::move(normals), std::move(offsets), NormalLaw::Gaussian,
                             seed);
}

HalfspacePolytope sample_polytope(const PolytopeParams& params, std::uint64_t seed) {
    return params.law == NormalLaw::UnitSphere ? sample_sphere_normal_polytope(params, seed)
                                               : sample_gaussian_normal_polytope(params, seed);
}

bool Ball::contains(std::span<const double> x) const {
    require(x.size() == static_cast<std::size_t>(n), "Ball::contains: dimension mismatch");
    double norm2 = 0.0;
    for (double c : x) {
        norm2 += c * c;
    }
    return norm2 <= radius * radius;
}

HalfspacePolytope make_slab(int n, double half_width) {
    require(n >= 1, "make_slab: n must be >= 1");
    std::vector<double> normals(2 * static_cast<std::size_t>(n), 0.0);
    normals[0] = 1.0;
    normals[static_cast<std::size_t>(n)] = -1.0;
    return HalfspacePolytope(n, std::move(normals), {half_width, half_width});
}

HalfspacePolytope make_halfspace(int n, double offset) {
    require(n >= 1, "make_halfspace: n must be >= 1");
    std::vector<double> normal(static_cast<std::size_t>(n), 0.0);
    normal[0] = 1.0;
    return HalfspacePolytope(n, std::move(normal), {offset});
}

nlohmann::json to_json(const HalfspacePolytope& polytope) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < polytope.facet_count(); ++i) {
        const auto row = polytope.normal(i);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    return {{"n", polytope.dim()},
            {"variant", to_string(polytope.law())},
            {"seed", polytope.seed()},
            {"normals", std::move(rows)},
            {"offsets", polytope.offsets()}};
}

HalfspacePolytope polytope_from_json(const nlohmann::json& doc) {
    try {
        const int n = doc.at("n").get<int>();
        std::vector<double> normals;
        for (const auto& row : doc.at("normals")) {
            require(row.size() == static_cast<std::size_t>(n), "polytope json: row length != n");
            for (const auto& c : row) {
                normals.push_back(c.get<double>());
            }
        }
        return HalfspacePolytope(n, std::move(normals),
                                 doc.at("offsets").get<std::vector<double>>(),
                                 normal_law_from_string(doc.at("variant").get<std::string>()),
                                 doc.at("seed").get<std::uint64_t>());
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("polytope json: ") + e.what());
    }
}

}  // namespace nazgsa
