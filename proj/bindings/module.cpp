#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "numrange/algebra.hpp"
#include "numrange/geometry.hpp"
#include "numrange/range.hpp"
#include "numrange/unitize.hpp"
#include "numrange/verify.hpp"

namespace py = pybind11;
using namespace numrange;

namespace {

// the C++ API passes shared_ptr<const Algebra> around, which pybind11
// holders do not model; a thin wrapper keeps the python side simple
struct PyAlgebra {
    AlgebraPtr ptr;
    const Algebra& ref() const {
        if (!ptr) throw std::invalid_argument("empty algebra handle");
        return *ptr;
    }
};

UnitizeFlavor flavor_from_string(const std::string& s) {
    if (s == "l1") return UnitizeFlavor::L1;
    if (s == "op") return UnitizeFlavor::Op;
    throw std::invalid_argument("flavor must be 'l1' or 'op'");
}

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spatial numerical ranges, numerical radii and unitization "
              "norms for finite-dimensional complex normed algebras";

    py::register_exception<UnitizeError>(m, "UnitizeError");

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("dim",
                               [](const PyAlgebra& a) { return a.ref().dim; })
        .def_property_readonly("name",
                               [](const PyAlgebra& a) { return a.ref().name; })
        .def("multiply",
             [](const PyAlgebra& a, const Vec& x, const Vec& y) {
                 return multiply(a.ref(), x, y);
             })
        .def("norm",
             [](const PyAlgebra& a, const Vec& x) { return norm_eval(a.ref(), x); })
        .def("operator_norm",
             [](const PyAlgebra& a, const Vec& x, Complex lam) {
                 return operator_norm(a.ref(), x, lam);
             },
             py::arg("x"), py::arg("lam") = Complex(0.0))
        .def("identity",
             [](const PyAlgebra& a) -> py::object {
                 const auto e = find_identity(a.ref());
                 if (!e) return py::none();
                 return py::cast(*e);
             })
        .def("is_faithful",
             [](const PyAlgebra& a) {
                 const auto r = is_faithful(a.ref());
                 py::object w = r.witness ? py::cast(*r.witness) : py::none();
                 return py::make_tuple(r.faithful, w);
             })
        .def("is_regular",
             [](const PyAlgebra& a) {
                 const auto r = is_regular(a.ref());
                 py::object w = r.witness ? py::cast(*r.witness) : py::none();
                 return py::make_tuple(r.regular, w, r.gap);
             })
        .def("associativity_defect",
             [](const PyAlgebra& a) { return associativity_defect(a.ref()); })
        .def("to_json",
             [](const PyAlgebra& a) { return algebra_to_json(a.ref()); })
        .def("__repr__", [](const PyAlgebra& a) {
            return "<Algebra '" + a.ref().name + "' dim=" +
                   std::to_string(a.ref().dim) + ">";
        });

    py::class_<RangeEstimate>(m, "RangeEstimate")
        .def_readonly("radius", &RangeEstimate::radius)
        .def_readonly("radius_witness", &RangeEstimate::radius_witness)
        .def_property_readonly(
            "hull", [](const RangeEstimate& e) { return e.hull.vertices; })
        .def_property_readonly("points",
                               [](const RangeEstimate& e) {
                                   std::vector<Complex> out;
                                   out.reserve(e.cloud.points.size());
                                   for (const auto& pt : e.cloud.points)
                                       out.push_back(pt.z);
                                   return out;
                               })
        .def("cloud_csv",
             [](const RangeEstimate& e) { return cloud_to_csv(e.cloud); });

    m.def("algebra_from_json",
          [](const std::string& text) { return PyAlgebra{algebra_from_json(text)}; });
    m.def("make_algebra",
          [](int dim, const std::vector<Complex>& structure, double p,
             const std::string& name) {
              return PyAlgebra{make_algebra(dim, structure, PNorm{p}, name)};
          },
          py::arg("dim"), py::arg("structure"), py::arg("p"),
          py::arg("name") = std::string());
    m.def("pointwise_algebra",
          [](int dim, double p, const std::string& name) {
              return PyAlgebra{pointwise_algebra(dim, p, name)};
          },
          py::arg("dim"), py::arg("p"), py::arg("name") = std::string());

    m.def("spatial_range",
          [](const PyAlgebra& A, const Vec& a, int n_sphere, int n_dual,
             std::uint64_t seed, bool refine) {
              auto est = spatial_range(A.ref(), a, n_sphere, n_dual, seed);
              if (refine) refine_range(A.ref(), a, est, 64, 200, seed);
              return est;
          },
          py::arg("algebra"), py::arg("a"), py::arg("n_sphere") = 2000,
          py::arg("n_dual") = 50, py::arg("seed") = 0,
          py::arg("refine") = false);

    m.def("identity_range_oracle",
          [](const PyAlgebra& A, const Vec& a, int n_dirs) {
              const auto e = find_identity(A.ref());
              if (!e)
                  throw std::invalid_argument(
                      "identity_range_oracle: algebra is not unital");
              const Algebra& ref = A.ref();
              NormEvaluator ne = [&ref](const Vec& z) { return norm_eval(ref, z); };
              return support_range_at_identity(ne, *e, a, n_dirs,
                                               default_t_schedule())
                  .vertices;
          },
          py::arg("algebra"), py::arg("a"), py::arg("n_dirs") = 720);

    m.def("unitize",
          [](const PyAlgebra& A, const std::string& flavor, bool force) {
              auto U = unitize(A.ptr, flavor_from_string(flavor), force);
              return py::make_tuple(PyAlgebra{U.extended}, U.seminorm_regime);
          },
          py::arg("algebra"), py::arg("flavor"), py::arg("force") = false);

    m.def("unitization_norm",
          [](const PyAlgebra& A, const std::string& flavor, const Vec& a,
             Complex lam) {
              const auto U = unitize(A.ptr, flavor_from_string(flavor));
              return unitization_norm_eval(U, {a, lam});
          },
          py::arg("algebra"), py::arg("flavor"), py::arg("a"), py::arg("lam"));

    m.def("check",
          [](const std::string& name, const PyAlgebra& A, const Vec& a,
             Complex lam, std::uint64_t seed) {
              ToleranceProfile prof;
              prof.seed = seed;
              CheckReport r;
              if (name == "thm24")
                  r = check_thm24(A.ptr, a, prof);
              else if (name == "thm25")
                  r = check_thm25(A.ptr, a, lam, prof);
              else if (name == "thm26")
                  r = check_thm26(A.ptr, a, lam, prof);
              else if (name == "cor23")
                  r = check_cor23(A.ref(), a, prof);
              else
                  throw std::invalid_argument(
                      "check: name must be one of thm24, thm25, thm26, cor23");
              return json_loads(report_to_json(r));
          },
          py::arg("name"), py::arg("algebra"), py::arg("a"),
          py::arg("lam") = Complex(0.0), py::arg("seed") = 0);

    m.def("gallery_case_names", &gallery_case_names);
    m.def("run_gallery",
          [](std::uint64_t seed) {
              ToleranceProfile prof;
              prof.seed = seed;
              return json_loads(reports_to_json(run_gallery(prof)));
          },
          py::arg("seed") = 0);
}
