#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pmt/cli.hpp"
#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/moments.hpp"
#include "pmt/pmt.hpp"
#include "pmt/rh.hpp"
#include "pmt/special.hpp"
#include "pmt/zeta.hpp"

namespace py = pybind11;
using pmt::Complex;

namespace {

py::dict quad_dict(const pmt::QuadResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["err_est"] = r.err_est;
  d["nodes"] = r.nodes;
  d["sigma_used"] = r.sigma_used;
  return d;
}

pmt::GammaConfig gamma_cfg(std::optional<double> sigma, std::optional<double> tol) {
  pmt::GammaConfig cfg;
  if (sigma) cfg.contour.sigma = *sigma;
  if (tol) cfg.contour.tol = *tol;
  return cfg;
}

pmt::ZetaConfig zeta_cfg(pmt::ZetaFamily family, std::optional<double> sigma,
                         std::optional<double> tol) {
  auto cfg = pmt::ZetaConfig::for_family(family);
  if (sigma) cfg.contour.sigma = *sigma;
  if (tol) cfg.contour.tol = *tol;
  return cfg;
}

py::list report_rows(const pmt::VerificationReport& rep) {
  py::list out;
  for (const auto& r : rep.rows) {
    py::dict d;
    d["name"] = r.name;
    d["table_row"] = r.table_row;
    d["z"] = r.z;
    d["computed"] = r.computed;
    d["expected"] = r.expected;
    d["abs_dev"] = r.abs_dev;
    d["tol"] = r.tol;
    d["passed"] = r.pass;
    d["note"] = r.note;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of parabolic_mellin";

  // kept alive by the module attribute for the lifetime of the interpreter
  static PyObject* error_type = py::exception<pmt::Error>(m, "PmtError").ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pmt::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(pmt::to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  const auto sigma = py::arg("sigma") = std::nullopt;
  const auto tol = py::arg("tol") = std::nullopt;

  m.def("big_g", [](Complex z, std::optional<double> s, std::optional<double> t) {
    return quad_dict(pmt::big_g(z, gamma_cfg(s, t)));
  }, py::arg("z"), sigma, tol);
  m.def("big_g_closed", &pmt::big_g_closed, py::arg("z"));
  m.def("reciprocal_gamma", [](Complex s, std::optional<double> sg, std::optional<double> t) {
    return pmt::reciprocal_gamma(s, gamma_cfg(sg, t));
  }, py::arg("s"), sigma, tol);
  m.def("gamma", [](Complex s, std::optional<double> sg, std::optional<double> t) {
    return pmt::gamma_fn(s, gamma_cfg(sg, t));
  }, py::arg("s"), sigma, tol);
  m.def("digamma", [](Complex z, std::optional<double> sg, std::optional<double> t) {
    return pmt::digamma(z, gamma_cfg(sg, t));
  }, py::arg("z"), sigma, tol);
  m.def("euler_gamma", [] { return pmt::euler_gamma(); });
  m.def("gamma_reference", &pmt::gamma_reference, py::arg("s"));

  m.def("zeta", [](Complex s, std::optional<double> sg, std::optional<double> t) {
    return pmt::riemann_zeta(s, zeta_cfg(pmt::ZetaFamily::R, sg, t));
  }, py::arg("s"), sigma, tol);
  m.def("hurwitz_zeta", [](Complex s, double a, std::optional<double> sg, std::optional<double> t) {
    return pmt::hurwitz_zeta(s, a, zeta_cfg(pmt::ZetaFamily::R, sg, t));
  }, py::arg("s"), py::arg("a"), sigma, tol);
  m.def("eta", [](Complex s, std::optional<double> sg, std::optional<double> t) {
    return pmt::eta_fn(s, zeta_cfg(pmt::ZetaFamily::D, sg, t));
  }, py::arg("s"), sigma, tol);
  m.def("jensen_oracle", &pmt::jensen_oracle, py::arg("s"));
  m.def("series_oracle", &pmt::series_oracle, py::arg("s"));
  m.def("critical_line_value", [](double tau) { return pmt::critical_line_value(tau); },
        py::arg("tau"));

  m.def("entry_names", &pmt::entry_names);
  m.def("pmt_eval", [](const std::string& entry, Complex z, const pmt::Params& params) {
    const auto e = pmt::make_entry(entry, params);
    py::dict d = quad_dict(pmt::pmt_evaluate(e, z));
    d["mode"] = e.mode == pmt::PmtMode::absolute ? "absolute" : "boundary_abel";
    return d;
  }, py::arg("entry"), py::arg("z"), py::arg("params") = pmt::Params{});
  m.def("verify_table", [](const std::vector<std::string>& names) {
    return report_rows(pmt::dictionary_verify(names));
  }, py::arg("entries") = std::vector<std::string>{});
  m.def("property_names", &pmt::property_names);
  m.def("verify_property", [](const std::string& name) {
    return report_rows(pmt::property_verify(pmt::parse_property(name)));
  }, py::arg("name"));

  m.def("chi", [](double tau) { return pmt::chi_tau(tau); }, py::arg("tau"));
  m.def("scan_zeros", [](double tau_min, double tau_max, double step) {
    pmt::ScanConfig cfg;
    cfg.tau_min = tau_min;
    cfg.tau_max = tau_max;
    cfg.coarse_step = step;
    py::list out;
    for (const auto& r : pmt::scan_zeros(cfg)) {
      py::dict d;
      d["tau"] = r.tau;
      d["residual"] = r.residual;
      d["classification"] = pmt::to_string(r.classification);
      d["zeta_modulus"] = r.zeta_modulus;
      out.append(d);
    }
    return out;
  }, py::arg("tau_min") = 10.0, py::arg("tau_max") = 30.0, py::arg("step") = 0.05);

  m.def("distribution_names", &pmt::distribution_names);
  m.def("absolute_moment", [](const std::string& dist, Complex r, double scale,
                              std::optional<double> sg) {
    const auto d = pmt::make_distribution(dist, scale);
    const auto res = pmt::absolute_moment(d, r, sg);
    py::dict out;
    out["value"] = res.value;
    out["err_est"] = res.err_est;
    out["sigma_used"] = res.sigma_used;
    out["closed_form"] = d.closed_form ? py::cast(d.closed_form(r)) : py::none();
    return out;
  }, py::arg("dist"), py::arg("r"), py::arg("scale") = 1.0, sigma);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = pmt::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
