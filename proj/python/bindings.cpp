#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gstruve/bounds.hpp"
#include "gstruve/classes.hpp"
#include "gstruve/hypergeom.hpp"
#include "gstruve/operator.hpp"
#include "gstruve/specialfn.hpp"
#include "gstruve/verify.hpp"

namespace py = pybind11;
using namespace gstruve;

namespace {

std::vector<cplx> to_list(const PowerSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

ClassParams class_params(double alpha, cplx lambda, double mu, cplx p, cplx b, cplx c, double A, double B) {
    return ClassParams(alpha, lambda, mu, StruveParams(p, b, c), MobiusTarget(A, B));
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["passed"] = v.passed;
    d["margin"] = v.margin;
    d["samples_used"] = v.samples_used;
    d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    return d;
}

py::tuple pair(const BoundPair& b) { return py::make_tuple(b.lower, b.upper); }

}  // namespace

PYBIND11_MODULE(_gstruve, m) {
    m.doc() = "Bindings for the gstruve C++ core";
    py::register_exception<Error>(m, "GstruveError", PyExc_ValueError);

    m.def("struve_h", &struve_h, py::arg("p"), py::arg("z"), py::arg("terms") = 40);
    m.def("struve_l", &struve_l, py::arg("p"), py::arg("z"), py::arg("terms") = 40);
    m.def(
        "generalized_m",
        [](cplx p, cplx b, cplx c, cplx z, std::size_t terms) { return generalized_m(StruveParams(p, b, c), z, terms); },
        py::arg("p"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("terms") = 40);
    m.def(
        "normalized_n_series",
        [](cplx p, cplx b, cplx c, std::size_t order) { return to_list(normalized_n_series(StruveParams(p, b, c), order)); },
        py::arg("p"), py::arg("b"), py::arg("c"), py::arg("order") = kDefaultOrder);
    m.def(
        "phi_series",
        [](cplx p, cplx b, cplx c, std::size_t order) { return to_list(phi_series(StruveParams(p, b, c), order)); },
        py::arg("p"), py::arg("b"), py::arg("c"), py::arg("order") = kDefaultOrder);
    m.def(
        "apply_s",
        [](cplx p, cplx b, cplx c, std::vector<cplx> coeffs) {
            return to_list(apply_s(StruveParams(p, b, c), PowerSeries(std::move(coeffs))));
        },
        py::arg("p"), py::arg("b"), py::arg("c"), py::arg("coeffs"));
    m.def(
        "recurrence_residual",
        [](cplx p, cplx b, cplx c, std::vector<cplx> coeffs) {
            return recurrence_residual(StruveParams(p, b, c), PowerSeries(std::move(coeffs)));
        },
        py::arg("p"), py::arg("b"), py::arg("c"), py::arg("coeffs"));
    m.def(
        "f21", [](cplx a, cplx b, cplx c, cplx z, double tol) { return f21(HypergeomParams(a, b, c), z, tol); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("tol") = kF21Tolerance);

    m.def(
        "j_functional",
        [](std::vector<cplx> coeffs, cplx z, double alpha, cplx lambda, double mu, cplx p, cplx b, cplx c, double A,
           double B) {
            return j_functional(class_params(alpha, lambda, mu, p, b, c, A, B), PowerSeries(std::move(coeffs)), z);
        },
        py::arg("coeffs"), py::arg("z"), py::kw_only(), py::arg("alpha") = 0.0, py::arg("lambda_"),
        py::arg("mu"), py::arg("p"), py::arg("b"), py::arg("c"), py::arg("A"), py::arg("B"));
    m.def(
        "membership_test",
        [](std::vector<cplx> coeffs, double alpha, cplx lambda, double mu, cplx p, cplx b, cplx c, double A, double B,
           std::optional<std::vector<double>> radii, std::size_t points) {
            const std::vector<double> r = radii ? *radii : default_radii();
            return verdict_dict(membership_test(class_params(alpha, lambda, mu, p, b, c, A, B),
                                                PowerSeries(std::move(coeffs)), r, points));
        },
        py::arg("coeffs"), py::kw_only(), py::arg("alpha") = 0.0, py::arg("lambda_"), py::arg("mu"), py::arg("p"),
        py::arg("b"), py::arg("c"), py::arg("A"), py::arg("B"), py::arg("radii") = py::none(),
        py::arg("points") = kDefaultPointsPerCircle);

    m.def(
        "best_dominant_q",
        [](double beta, double A, double B, cplx z) { return best_dominant_q(DominantParams(beta, MobiusTarget(A, B)), z); },
        py::arg("beta"), py::arg("A"), py::arg("B"), py::arg("z"));
    m.def(
        "sharp_bound_h",
        [](double beta, double A, double B, cplx z) { return sharp_bound_h(DominantParams(beta, MobiusTarget(A, B)), z); },
        py::arg("beta"), py::arg("A"), py::arg("B"), py::arg("z"));
    m.def(
        "re_bounds", [](double beta, double A, double B) { return pair(re_bounds(DominantParams(beta, MobiusTarget(A, B)))); },
        py::arg("beta"), py::arg("A"), py::arg("B"));
    m.def(
        "modulus_bounds",
        [](double beta, double A, double B, double r) {
            return pair(modulus_bounds(DominantParams(beta, MobiusTarget(A, B)), r));
        },
        py::arg("beta"), py::arg("A"), py::arg("B"), py::arg("r"));
    m.def("radius_positivity", &radius_positivity, py::arg("lambda_"), py::arg("mu"), py::arg("k"));

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> trials, std::optional<double> tol) {
            const SuiteReport r = run_suite(name, SuiteOptions{seed, trials, tol});
            py::dict d;
            d["suite"] = r.suite;
            d["checks"] = r.checks.size();
            d["failures"] = r.failures();
            d["passed"] = r.passed();
            return d;
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("trials") = py::none(), py::arg("tol") = py::none());
}
