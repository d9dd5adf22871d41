#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "sieved/dunkl.hpp"
#include "sieved/errors.hpp"
#include "sieved/jacobi.hpp"
#include "sieved/opuc.hpp"
#include "sieved/realline.hpp"
#include "sieved/report.hpp"
#include "sieved/verification.hpp"

namespace py = pybind11;
using namespace sieved;

namespace {

template <class E>
E from_name(const std::map<std::string, E>& table, const std::string& name, const char* what) {
  const auto it = table.find(name);
  if (it == table.end()) throw ArgumentError(std::string("unknown ") + what + ": " + name);
  return it->second;
}

LForm l_form(const std::string& s) {
  return from_name<LForm>({{"reflections", LForm::reflections}, {"with_B", LForm::with_B}}, s, "L form");
}
HMode h_mode(const std::string& s) {
  return from_name<HMode>(
      {{"square", HMode::square}, {"explicit_R", HMode::explicit_R}, {"explicit_T", HMode::explicit_T}}, s, "H mode");
}
HatMode hat_mode(const std::string& s) {
  return from_name<HatMode>(
      {{"conjugated", HatMode::conjugated}, {"explicit_R", HatMode::explicit_R}, {"explicit_T", HatMode::explicit_T}},
      s, "H-hat mode");
}

std::map<int, cplx> coeff_map(const LaurentPoly& f) {
  std::map<int, cplx> out;
  for (const auto& t : f.terms()) out[t.exp] = t.coeff;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sieved Jacobi polynomials on the unit circle and their Dunkl operators";

  auto base = py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidityError>(m, "ValidityError", PyExc_RuntimeError);
  py::register_exception<PlanError>(m, "PlanError", PyExc_RuntimeError);
  py::register_exception<SymmetryError>(m, "SymmetryError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<UnsupportedComposition>(m, "UnsupportedComposition", PyExc_RuntimeError);
  (void)base;

  py::class_<JacobiParams>(m, "JacobiParams")
      .def(py::init([](double a, double b) { return JacobiParams{a, b}; }), py::arg("alpha") = 0.0,
           py::arg("beta") = 0.0)
      .def_readwrite("alpha", &JacobiParams::alpha)
      .def_readwrite("beta", &JacobiParams::beta)
      .def("__repr__", [](const JacobiParams& p) {
        return "JacobiParams(alpha=" + format_double(p.alpha) + ", beta=" + format_double(p.beta) + ")";
      });

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def(py::init([](const std::map<int, cplx>& c) { return LaurentPoly(c); }), py::arg("coeffs"))
      .def_static("monomial", &LaurentPoly::monomial, py::arg("exp"), py::arg("coeff") = cplx(1.0))
      .def_property_readonly("min_exp", &LaurentPoly::min_exp)
      .def_property_readonly("max_exp", &LaurentPoly::max_exp)
      .def("coeff", &LaurentPoly::coeff)
      .def("coeffs", &coeff_map)
      .def("derivative", py::overload_cast<>(&LaurentPoly::derivative, py::const_))
      .def("reflect", &LaurentPoly::reflect)
      .def("is_symmetric", [](const LaurentPoly& f, double tol) { return is_symmetric(f, tol); },
           py::arg("tol") = 1e-12)
      .def("x_coeffs", [](const LaurentPoly& f) { return to_x_basis(f); })
      .def("__call__", [](const LaurentPoly& f, cplx z) { return f(z); })
      .def("__call__", [](const LaurentPoly& f, const std::vector<cplx>& zs) {
        std::vector<cplx> out;
        out.reserve(zs.size());
        for (const cplx z : zs) out.push_back(f(z));
        return out;
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * cplx())
      .def(cplx() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const LaurentPoly& f) {
        std::string s = "LaurentPoly({";
        bool first = true;
        for (const auto& t : f.terms()) {
          if (!first) s += ", ";
          first = false;
          s += std::to_string(t.exp) + ": (" + format_double(t.coeff.real()) + "+" + format_double(t.coeff.imag()) +
               "j)";
        }
        return s + "})";
      });

  m.def("verblunsky", [](double a, double b, int n, int N) { return sieved_verblunsky({a, b}, N, n); },
        py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("N") = 1);
  m.def("h_norm", [](double a, double b, int n, int N) {
        return h_norm(VerblunskySequence::sieved_jacobi({a, b}, N), n);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("N") = 1);
  m.def("psi", [](double a, double b, int N, int n) { return sieved_psi({a, b}, N, n); }, py::arg("alpha"),
        py::arg("beta"), py::arg("N"), py::arg("n"));
  m.def("phi", [](double a, double b, int N, int n) { return sieved_phi({a, b}, N, n); }, py::arg("alpha"),
        py::arg("beta"), py::arg("N"), py::arg("n"));
  m.def("P", [](double a, double b, int N, int n) { return SymmetricFamily(FamilyKind::P, {a, b}, N, n)[n].z_form; },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n"));
  m.def("Q", [](double a, double b, int N, int n) { return SymmetricFamily(FamilyKind::Q, {a, b}, N, n)[n].z_form; },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n"));
  m.def("psi_case", [](int n, int N) {
        const PsiCaseDescriptor d = psi_case(n, N);
        py::dict out;
        out["case"] = to_string(d.case_id);
        out["k"] = d.k;
        out["j"] = d.j;
        out["nu"] = d.nu;
        out["power_sign"] = d.power_sign;
        return out;
      },
      py::arg("n"), py::arg("N"));
  m.def("weight_rho_N", [](double a, double b, int N, double theta) { return weight_rho_N({a, b}, N, theta); },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("theta"));

  py::class_<DunklOperator>(m, "DunklOperator")
      .def("__call__", [](const DunklOperator& op, const LaurentPoly& f, cplx z) { return op.apply(f, z); })
      .def("apply", [](const DunklOperator& op, const LaurentPoly& f, const std::vector<cplx>& zs) {
        return op.apply_many(f, zs);
      });

  m.def("K", [](double a, double b) { return build_K({a, b}); }, py::arg("alpha"), py::arg("beta"));
  m.def("L", [](double a, double b, int N, const std::string& form) { return build_L({a, b}, N, l_form(form)); },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("form") = "reflections");
  m.def("H", [](double a, double b, int N, const std::string& mode) { return build_H({a, b}, N, h_mode(mode)); },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("mode") = "explicit_R");
  m.def("H_tilde",
        [](double a, double b, int N, const std::string& mode) { return build_H_tilde({a, b}, N, h_mode(mode)); },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("mode") = "explicit_R");
  m.def("H_hat",
        [](double a, double b, int N, const std::string& mode) { return build_H_hat({a, b}, N, hat_mode(mode)); },
        py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("mode") = "conjugated");
  m.def("Y", &build_Y, py::arg("N"), py::arg("m"));
  m.def("Y_tilde", [](int N, int mm) { return build_Y_tilde(N, mm); }, py::arg("N"), py::arg("m"));

  py::class_<EigenvalueTable>(m, "Eigenvalues")
      .def(py::init([](double a, double b, int N) { return EigenvalueTable({a, b}, N); }), py::arg("alpha"),
           py::arg("beta"), py::arg("N"))
      .def("mu", &EigenvalueTable::mu)
      .def("lam", &EigenvalueTable::lambda)
      .def("lam_tilde", &EigenvalueTable::lambda_tilde)
      .def("Lambda", &EigenvalueTable::Lambda)
      .def("Xi", &EigenvalueTable::Xi)
      .def("omega", &EigenvalueTable::omega, py::arg("m"), py::arg("n"));

  py::class_<CheckDetail>(m, "CheckDetail")
      .def_readonly("name", &CheckDetail::name)
      .def_readonly("residual", &CheckDetail::residual)
      .def_readonly("tolerance", &CheckDetail::tolerance)
      .def_readonly("passed", &CheckDetail::pass)
      .def_readonly("gating", &CheckDetail::gating)
      .def_readonly("note", &CheckDetail::note);
  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("suite", &CheckReport::suite)
      .def_readonly("N", &CheckReport::N)
      .def_readonly("max_residual", &CheckReport::max_residual)
      .def_readonly("passed", &CheckReport::pass)
      .def_readonly("details", &CheckReport::details)
      .def("to_json", [](const CheckReport& r) { return to_json(r); });

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& name, double a, double b, int N, int n_max, double tol, std::uint64_t seed) {
          SuiteConfig c;
          c.params = {a, b};
          c.N = N;
          c.n_max = n_max;
          c.tolerance = tol;
          c.seed = seed;
          py::gil_scoped_release release;
          return run_suite(name, c);
        },
        py::arg("name"), py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n_max") = 40,
        py::arg("tol") = 1e-8, py::arg("seed") = 42);
}
