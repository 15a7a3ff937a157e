#include "grl/cfrac.hpp"
#include "grl/error.hpp"
#include "grl/examples.hpp"
#include "grl/integral_rep.hpp"
#include "grl/nevanlinna.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace grl;

namespace {

Bank bank_of(const std::string& s) {
    if (s == "upper") return Bank::upper;
    if (s == "lower") return Bank::lower;
    throw py::value_error("bank must be 'upper' or 'lower'");
}

py::dict as_dict(const QuadratureResult& q) {
    py::dict d;
    d["value"] = q.value;
    d["error_estimate"] = q.abs_error_estimate;
    d["nodes"] = q.nodes_used;
    return d;
}

} // namespace

PYBIND11_MODULE(_grl, m) {
    m.doc() = "Ratios of contiguous Gauss hypergeometric functions";

    static py::exception<Error> exc(m, "GrlError");
    // instances carry the machine-readable kind
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(exc.ptr())(e.what());
            inst.attr("kind") = e.kind();
            PyErr_SetObject(exc.ptr(), inst.ptr());
        }
    });

    m.def("hyp2f1", [](double a, double b, double c, cplx z) { return hyp2f1(Params(a, b, c), z); },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("hyp2f1_on_cut",
          [](double a, double b, double c, double x, const std::string& bank) {
              return hyp2f1_on_cut(Params(a, b, c), x, bank_of(bank));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("bank") = "upper");
    m.def("abs2_on_cut", [](double a, double b, double c, double x) { return abs2_on_cut(Params(a, b, c), x); },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));

    m.def("ratio",
          [](double a, double b, double c, int n1, int n2, int mm, cplx z) {
              return ratio(Params(a, b, c), derive_shifts(n1, n2, mm), z);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("z"));
    m.def("ratio_taylor",
          [](double a, double b, double c, int n1, int n2, int mm, int count) {
              return ratio_taylor(Params(a, b, c), derive_shifts(n1, n2, mm), count);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("count"));
    m.def("boundary_density",
          [](double a, double b, double c, int n1, int n2, int mm) {
              const auto d = boundary_density(Params(a, b, c), derive_shifts(n1, n2, mm));
              return py::make_tuple(d.B, d.P.coeffs);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n1"), py::arg("n2"), py::arg("m"),
          "(B, coefficients of P_r in ascending degree)");
    m.def("boundary_im",
          [](double a, double b, double c, int n1, int n2, int mm, double x, const std::string& bank) {
              return boundary_im(Params(a, b, c), derive_shifts(n1, n2, mm), x, bank_of(bank));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("x"),
          py::arg("bank") = "upper");

    m.def("gauss_cfrac_alphas",
          [](double a, double b, double c, int count, const std::string& kind) {
              const Params p(a, b, c);
              const CFrac f = kind == "010" ? gauss_cfrac_010(p) : gauss_cfrac_011(p);
              std::vector<double> out;
              const int last = f.terminating ? f.last() : count;
              for (int j = 0; j <= std::min(count, last); ++j) out.push_back(f.alpha(j));
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("count") = 20, py::arg("kind") = "011");
    m.def("eval_gauss_cfrac",
          [](double a, double b, double c, cplx z) { return eval_cfrac(gauss_cfrac_011(Params(a, b, c)), z); },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    m.def("runckel_check",
          [](double a, double b, double c) {
              const auto r = runckel_check(Params(a, b, c));
              py::dict d;
              d["satisfied"] = r.satisfied;
              d["condition"] = to_string(r.which);
              d["details"] = r.details;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("classify_gauss_ratio",
          [](double a, double b, double c) {
              const auto k = classify_gauss_ratio(Params(a, b, c));
              py::dict d;
              d["epsilon"] = k.epsilon;
              d["kappa"] = k.kappa;
              d["lambda"] = k.lambda;
              d["is_rational"] = k.is_rational;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("integral_representation",
          [](double a, double b, double c, int n1, int n2, int mm, cplx z, double tol) {
              const auto rep = build_representation(Params(a, b, c), derive_shifts(n1, n2, mm));
              return as_dict(eval_representation(rep, z, tol));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("z"),
          py::arg("tol") = 1e-10);
    m.def("moment_check",
          [](double a, double b, double c, int n1, int n2, int mm, const std::string& which) {
              const auto rep = build_representation(Params(a, b, c), derive_shifts(n1, n2, mm));
              Moment w = Moment::z0;
              if (which == "z1") w = Moment::z1;
              else if (which == "z01") w = Moment::z01;
              else if (which != "z0") throw py::value_error("which must be z0, z1 or z01");
              const auto r = moment_identity_check(rep, w);
              return py::make_tuple(r.lhs, r.rhs);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("which"));
    m.def("example12_identity",
          [](double z) {
              const auto r = example12_identity(z);
              return py::make_tuple(r.lhs, r.rhs, r.error_estimate);
          },
          py::arg("z"), "(z/log(1+z), 1 + z * integral, quadrature error estimate)");
    m.def("verify_example",
          [](int idx) {
              const auto& e = example_spec(idx);
              const auto r = verify_example(idx, e.params, default_z_grid());
              py::dict d;
              d["params"] = py::make_tuple(e.params.a, e.params.b, e.params.c);
              d["shifts"] = py::make_tuple(e.n1, e.n2, e.m);
              d["N"] = r.N;
              d["max_rel_error"] = r.max_rel_error;
              d["bp_formula_deviation"] = r.bp_formula_deviation;
              return d;
          },
          py::arg("index"));
}
