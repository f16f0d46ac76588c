#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "nazgsa/bounds.hpp"
#include "nazgsa/cap.hpp"
#include "nazgsa/errors.hpp"
#include "nazgsa/estimators.hpp"
#include "nazgsa/hermite.hpp"
#include "nazgsa/parallel.hpp"
#include "nazgsa/polytope.hpp"
#include "nazgsa/radial.hpp"
#include "nazgsa/report.hpp"
#include "nazgsa/specfun.hpp"

namespace py = pybind11;
using namespace nazgsa;

namespace {

QuadratureSpec make_spec(std::size_t nodes, const std::string& rule) {
    QuadratureSpec spec;
    spec.nodes = nodes;
    require(rule == "gauss-legendre" || rule == "adaptive", "rule must be gauss-legendre or adaptive");
    spec.rule = rule == "adaptive" ? QuadratureRule::Adaptive : QuadratureRule::CompositeGaussLegendre;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gaussian surface area of random polytopes: numerical core";

    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("set_thread_count", &set_thread_count, py::arg("threads"));

    m.def("gaussian_pdf", &gaussian_pdf, py::arg("x"));
    m.def("gaussian_tail", &gaussian_tail, py::arg("t"));
    m.def("mills_sandwich", [](double t) {
        const auto s = mills_sandwich(t);
        return py::make_tuple(s.lower, s.upper);
    }, py::arg("t"));
    m.def("norm_concentration_bound", &norm_concentration_bound, py::arg("n"), py::arg("t"),
          py::arg("C") = kDefaultNormConcentration);
    m.def("log_gamma", &log_gamma, py::arg("a"));
    m.def("cap_normalizer", &cap_normalizer, py::arg("n"));
    m.def("chi_log_density", &chi_log_density, py::arg("n"), py::arg("rho"));

    m.def("cap_probability", [](int n, double norm_x, double r) { return cap_probability({n, norm_x, r}); },
          py::arg("n"), py::arg("norm_x"), py::arg("r"));
    m.def("cap_probability_quadrature",
          [](int n, double norm_x, double r) { return cap_probability_quadrature({n, norm_x, r}); },
          py::arg("n"), py::arg("norm_x"), py::arg("r"));
    m.def("cap_log_complement", [](int n, double norm_x, double r) { return cap_log_complement({n, norm_x, r}); },
          py::arg("n"), py::arg("norm_x"), py::arg("r"));
    m.def("cap_complement_bound",
          [](int n, double norm_x, double r) { return cap_complement_bound({n, norm_x, r}); },
          py::arg("n"), py::arg("norm_x"), py::arg("r"));
    m.def("cap_dilation_rate", &cap_dilation_rate, py::arg("n"), py::arg("r"), py::arg("rho"));

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("value", &Estimate::value)
        .def_readonly("stderr", &Estimate::std_error)
        .def_readonly("samples", &Estimate::samples)
        .def_readonly("seed", &Estimate::seed)
        .def("__repr__", [](const Estimate& e) {
            return "Estimate(value=" + std::to_string(e.value) + ", stderr=" + std::to_string(e.std_error) + ")";
        });

    py::class_<HalfspacePolytope>(m, "Polytope")
        .def_static("sample", [](int n, double offset, std::size_t facets, const std::string& law, std::uint64_t seed) {
            return sample_polytope({n, offset, facets, normal_law_from_string(law)}, seed);
        }, py::arg("n"), py::arg("offset"), py::arg("facets"), py::arg("law") = "unit-sphere-normals",
           py::arg("seed") = 1)
        .def_static("slab", &make_slab, py::arg("n"), py::arg("half_width"))
        .def_static("halfspace", &make_halfspace, py::arg("n"), py::arg("offset"))
        .def_static("from_json", [](const std::string& text) { return polytope_from_json(nlohmann::json::parse(text)); })
        .def_property_readonly("dim", &HalfspacePolytope::dim)
        .def_property_readonly("facet_count", &HalfspacePolytope::facet_count)
        .def_property_readonly("offsets", &HalfspacePolytope::offsets)
        .def("normal", [](const HalfspacePolytope& k, std::size_t i) {
            require(i < k.facet_count(), "facet index out of range");
            const auto v = k.normal(i);
            return std::vector<double>(v.begin(), v.end());
        })
        .def("contains", [](const HalfspacePolytope& k, const std::vector<double>& x) { return k.contains(x); })
        .def("inradius", &HalfspacePolytope::inradius)
        .def("dilate", &HalfspacePolytope::dilate, py::arg("factor"))
        .def("to_json", [](const HalfspacePolytope& k) { return to_json(k).dump(); });

    py::class_<Ball>(m, "Ball")
        .def(py::init([](int n, double radius) { return Ball{n, radius}; }), py::arg("n"), py::arg("radius"))
        .def_readonly("n", &Ball::n)
        .def_readonly("radius", &Ball::radius)
        .def("contains", [](const Ball& b, const std::vector<double>& x) { return b.contains(x); });

    m.def("estimate_volume", py::overload_cast<const HalfspacePolytope&, std::size_t, std::uint64_t>(&estimate_volume),
          py::arg("body"), py::arg("samples"), py::arg("seed"));
    m.def("estimate_volume", py::overload_cast<const Ball&, std::size_t, std::uint64_t>(&estimate_volume),
          py::arg("body"), py::arg("samples"), py::arg("seed"));
    m.def("estimate_influence", py::overload_cast<const HalfspacePolytope&, std::size_t, std::uint64_t>(&estimate_influence),
          py::arg("body"), py::arg("samples"), py::arg("seed"));
    m.def("estimate_influence", py::overload_cast<const Ball&, std::size_t, std::uint64_t>(&estimate_influence),
          py::arg("body"), py::arg("samples"), py::arg("seed"));
    m.def("estimate_influence_hermite", [](const HalfspacePolytope& k, std::size_t samples, std::uint64_t seed) {
        return influence_from_hermite(estimate_hermite_diagonal(k, samples, seed));
    }, py::arg("body"), py::arg("samples"), py::arg("seed"));
    m.def("estimate_gsa_facets", &estimate_gsa_facets, py::arg("body"), py::arg("samples_per_facet"), py::arg("seed"));

    m.def("expected_influence", [](int n, double r, double s, std::size_t nodes, const std::string& rule) {
        return expected_influence(n, r, s, make_spec(nodes, rule));
    }, py::arg("n"), py::arg("r"), py::arg("s"), py::arg("nodes") = 256, py::arg("rule") = "gauss-legendre");
    m.def("expected_gsa", [](int n, double r, double s, std::size_t nodes, const std::string& rule) {
        return expected_gsa(n, r, s, make_spec(nodes, rule));
    }, py::arg("n"), py::arg("r"), py::arg("s"), py::arg("nodes") = 256, py::arg("rule") = "gauss-legendre");
    m.def("expected_volume", [](int n, double r, double s) { return expected_volume(n, r, s); },
          py::arg("n"), py::arg("r"), py::arg("s"));
    m.def("choose_cap_count", &choose_cap_count, py::arg("n"), py::arg("r"), py::arg("c1"),
          py::arg("t") = std::nullopt);
    m.def("optimal_cap_constant", [] {
        const auto c = optimal_cap_constant();
        return py::make_tuple(c.c1_star, c.value);
    });
    m.def("optimize_cap_count", [](int n, double r) {
        const auto o = optimize_cap_count(n, r);
        return py::make_tuple(o.s_star, o.gsa);
    }, py::arg("n"), py::arg("r"));
    m.def("_scan_rows_json", [](const std::vector<int>& ns, const std::vector<double>& alphas, std::uint64_t seed) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : scan_report(ns, alphas)) {
            rows.push_back(to_row(row, seed));
        }
        return rows.dump();
    }, py::arg("ns"), py::arg("alphas"), py::arg("seed") = 1);

    m.def("ball_upper", &ball_upper, py::arg("n"));
    m.def("raic_upper", &raic_upper, py::arg("n"));
    m.def("nazarov_lower", &nazarov_lower, py::arg("n"));
    m.def("gsa_ball_exact", &gsa_ball_exact, py::arg("n"), py::arg("radius"));
    m.def("ball_volume", &ball_volume, py::arg("n"), py::arg("radius"));
    m.def("ball_influence_radial", &ball_influence_radial, py::arg("n"), py::arg("radius"));
    m.def("variance_gsa_upper", &variance_gsa_upper, py::arg("n"), py::arg("volume"), py::arg("inradius"));

    m.def("hermite", &hermite, py::arg("degree"), py::arg("x"));
    m.def("gauss_hermite", [](int points) {
        const auto& rule = gauss_hermite(points);
        return py::make_tuple(rule.nodes, rule.weights);
    }, py::arg("points"));
    m.def("slab_hermite_coefficient", &slab_hermite_coefficient, py::arg("degree"), py::arg("half_width"));
}
