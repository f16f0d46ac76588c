#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace nazgsa {

/// How facet normals of a random polytope are drawn.
enum class NormalLaw {
    UnitSphere,  ///< v ~ Uniform(S^(n-1)), common offset r.
    Gaussian,    ///< g ~ N(0, I_n), common raw offset w, i.e. offset w/||g|| along g/||g||.
};

std::string to_string(NormalLaw law);
NormalLaw normal_law_from_string(const std::string& name);

/// Parameters of the random-polytope distribution: n, offset (r or w),
/// facet count s, and the normal law.
struct PolytopeParams {
    int n = 2;
    double offset = 1.0;
    std::size_t facets = 1;
    NormalLaw law = NormalLaw::UnitSphere;
};

/// Intersection of closed halfspaces {x : x.v_i <= b_i} with unit normals
/// v_i and offsets b_i > 0, so the origin is always interior. Immutable.
class HalfspacePolytope {
  public:
    HalfspacePolytope(int n, std::vector<double> normals, std::vector<double> offsets,
                      NormalLaw law = NormalLaw::UnitSphere, std::uint64_t seed = 0);

    int dim() const { return n_; }
    std::size_t facet_count() const { return offsets_.size(); }
    NormalLaw law() const { return law_; }
    std::uint64_t seed() const { return seed_; }

    std::span<const double> normal(std::size_t i) const {
        return {normals_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
    }
    double offset(std::size_t i) const { return offsets_[i]; }
    const std::vector<double>& offsets() const { return offsets_; }
    const std::vector<double>& normals() const { return normals_; }

    /// x.v_i <= b_i for every facet; stops at the first violated facet.
    bool contains(std::span<const double> x) const;

    /// Radius of the largest origin-centered ball inside the polytope.
    double inradius() const;

    /// factor * K (every offset scaled). Requires factor > 0.
    HalfspacePolytope dilate(double factor) const;

  private:
    int n_;
    std::vector<double> normals_;
    std::vector<double> offsets_;
    NormalLaw law_;
    std::uint64_t seed_;
};

/// Draw with s uniform unit normals and every offset equal to params.offset.
/// Facet i uses its own counter-based stream, so the draw is a pure function
/// of (params, seed).
HalfspacePolytope sample_sphere_normal_polytope(const PolytopeParams& params,
                                                std::uint64_t seed);

/// Draw with s standard Gaussian normals g_i and raw offset w; stored as the
/// unit normal g_i/||g_i|| with offset w/||g_i||.
HalfspacePolytope sample_gaussian_normal_polytope(const PolytopeParams& params,
                                                  std::uint64_t seed);

/// Dispatches on params.law.
HalfspacePolytope sample_polytope(const PolytopeParams& params, std::uint64_t seed);

/// Origin-centered Euclidean ball.
struct Ball {
    int n = 1;
    double radius = 1.0;

    int dim() const { return n; }
    bool contains(std::span<const double> x) const;
};

/// Symmetric slab {x : |x_1| <= half_width} in R^n as a two-facet polytope.
HalfspacePolytope make_slab(int n, double half_width);

/// A single halfspace {x : x_1 <= offset}.
HalfspacePolytope make_halfspace(int n, double offset);

/// {n, variant, seed, normals, offsets}; normals as an array of rows.
nlohmann::json to_json(const HalfspacePolytope& polytope);
HalfspacePolytope polytope_from_json(const nlohmann::json& doc);

}  // namespace nazgsa
