#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdrel/coefficients.hpp"
#include "fdrel/config.hpp"
#include "fdrel/error.hpp"
#include "fdrel/fd_relativistic.hpp"
#include "fdrel/fd_standard.hpp"
#include "fdrel/oracle.hpp"

namespace py = pybind11;
using namespace fdrel;

PYBIND11_MODULE(_fdrel, m) {
  m.doc() = "Relativistic and standard Fermi-Dirac integrals";

  static py::exception<Error> base(m, "FdrelError", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<ConvergenceError> convergence(m, "ConvergenceError", base.ptr());
  static py::exception<UsageError> usage(m, "UsageError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const ConvergenceError& e) {
      py::set_error(convergence, e.what());
    } catch (const UsageError& e) {
      py::set_error(usage, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::enum_<Method>(m, "Method")
      .value("Auto", Method::Auto)
      .value("NegEtaSeries", Method::NegEtaSeries)
      .value("LargeEtaGeneric", Method::LargeEtaGeneric)
      .value("LargeEtaHalfInt", Method::LargeEtaHalfInt)
      .value("SmallBeta", Method::SmallBeta)
      .value("LargeBetaGeneric", Method::LargeBetaGeneric)
      .value("LargeBetaHalfInt", Method::LargeBetaHalfInt)
      .value("Quadrature", Method::Quadrature);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("err_est", &EvalResult::err_est)
      .def_readonly("terms_used", &EvalResult::terms_used)
      .def_readonly("method", &EvalResult::method)
      .def("__float__", [](const EvalResult& r) { return r.value; })
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + std::to_string(r.value) + ", method=" +
               std::string(method_name(r.method)) + ")";
      });

  py::class_<Config>(m, "Config")
      .def(py::init<>())
      .def_readwrite("eta_neg_max", &Config::eta_neg_max)
      .def_readwrite("eta_big", &Config::eta_big)
      .def_readwrite("beta_big", &Config::beta_big)
      .def_readwrite("beta_small", &Config::beta_small)
      .def_readwrite("large_eta_nmax", &Config::large_eta_nmax)
      .def_readwrite("sommerfeld_terms", &Config::sommerfeld_terms)
      .def_readwrite("large_beta_kmax", &Config::large_beta_kmax)
      .def_readwrite("small_beta_nmax", &Config::small_beta_nmax)
      .def_readwrite("include_exp_small", &Config::include_exp_small)
      .def_readwrite("series_tol", &Config::series_tol)
      .def_readwrite("oracle_tol", &Config::oracle_tol)
      .def("set", [](Config& c, const std::string& k, const std::string& v) { apply_setting(c, k, v); })
      .def_static("load", [](const std::string& path) { return load_config(path); });

  m.def("method_name", [](Method me) { return std::string(method_name(me)); });

  m.def(
      "fd_rel",
      [](double q, double eta, double beta, Method method, const Config& cfg) {
        return fd_rel_eval({q, eta, beta}, method, cfg);
      },
      py::arg("q"), py::arg("eta"), py::arg("beta"), py::arg("method") = Method::Auto,
      py::arg("config") = Config{}, "F_q(eta, beta) with the chosen or automatic method");

  m.def(
      "auto_method",
      [](double q, double eta, double beta, const Config& cfg) {
        return auto_method({q, eta, beta}, cfg);
      },
      py::arg("q"), py::arg("eta"), py::arg("beta"), py::arg("config") = Config{});

  m.def(
      "fd_std", [](double q, double eta, const Config& cfg) { return fd_standard_eval(q, eta, cfg); },
      py::arg("q"), py::arg("eta"), py::arg("config") = Config{}, "standard F_q(eta)");

  m.def("fhat", [](double q, double eta, double tol) { return fhat(q, eta, tol); }, py::arg("q"),
        py::arg("eta"), py::arg("tol") = 1e-14, "F_q(eta) / Gamma(q+1), any real q");

  m.def(
      "quad_fd_rel",
      [](double q, double eta, double beta, double tol) {
        const QuadResult r = quad_fd_rel({q, eta, beta}, tol);
        return py::make_tuple(r.value, r.abs_err_est);
      },
      py::arg("q"), py::arg("eta"), py::arg("beta"), py::arg("tol") = kDefaultOracleTol,
      "quadrature reference: (value, abs_err_est)");

  m.def("a_coeffs", &a_coeffs, py::arg("q"), py::arg("beta"), py::arg("n_max"));
}
