#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "pmt/gamma.hpp"
#include "pmt/pmt.hpp"
#include "pmt/special.hpp"
#include "pmt/zeta.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using pmt::Complex;
using testutil::rel_err;

TEST_CASE("registry covers the fourteen dictionary rows") {
  const std::set<std::string> rows{
      "Rational",   "Gaussian", "Scaled Gaussian", "Perturbed Exp.", "Incomplete Gamma",
      "Monomial",   "Log-Gaussian", "Geometric",   "Alternating",    "Hurwitz",
      "Dirichlet L", "Sine",     "Cosine",          "Polylogarithms"};
  std::set<std::string> seen;
  for (const auto& name : pmt::entry_names()) seen.insert(pmt::make_entry(name).table_row);
  CHECK(seen == rows);
  CHECK(pmt::table_row_count() == 14);

  // the default verification run touches every entry
  const auto report = pmt::dictionary_verify();
  std::set<std::string> verified;
  for (const auto& row : report.rows) verified.insert(row.name);
  CHECK(verified.size() == pmt::entry_names().size());
}

TEST_CASE("dictionary rows pass") {
  const auto report = pmt::dictionary_verify();
  for (const auto& row : report.rows) {
    CAPTURE(row.name);
    CAPTURE(row.z);
    CAPTURE(row.abs_dev);
    CHECK(row.pass);
  }
  CHECK(report.all_pass());
  CHECK_NOTHROW(report.require_pass());
}

TEST_CASE("named values") {
  auto eval = [](const std::string& name, Complex z, const pmt::Params& p = {}) {
    return pmt::pmt_evaluate(pmt::make_entry(name, p), z).value;
  };
  CHECK(std::abs(eval("rational", 0.0) - ref::kRationalAtZero) < 1e-10);
  CHECK(std::abs(eval("rational", {0.3, -0.2}) - ref::kRationalAtZero) < 1e-10);
  CHECK(std::abs(eval("perturbed_exp", 0.0) - ref::kPerturbedExpAtZero) < 1e-10);
  CHECK(std::abs(eval("incomplete_gamma", 0.0) - ref::kIncompleteGammaAtZero) < 1e-6);
  CHECK(std::abs(eval("dirichlet_l", 1.0) - ref::kDirichletBetaG1) < 1e-6);
  CHECK(std::abs(eval("polylog", 0.0) - ref::kSqrtPiZeta15) < 1e-6);
  CHECK(std::abs(eval("alternating_polylog", 0.0) - ref::kMinusSqrtPiEta15) < 1e-6);
  CHECK(std::abs(eval("complex_shift", 1.0) - ref::kComplexShiftZ1K2) < 1e-6);
}

TEST_CASE("linearity") {
  const auto gauss = pmt::make_entry("gaussian").weight;
  const auto mono = pmt::make_entry("monomial").weight;
  const pmt::WeightFn mix = [&](Complex u) { return 2.0 * gauss(u) + 3.0 * mono(u); };
  pmt::ContourSpec spec = pmt::GammaConfig::default_contour();
  for (Complex z : {Complex{0.0, 0.0}, Complex{0.5, 1.0}, Complex{-1.0, -0.5}}) {
    const Complex lhs = pmt::parabolic_transform(mix, z, spec).value;
    const Complex rhs = 2.0 * pmt::parabolic_transform(gauss, z, spec).value +
                        3.0 * pmt::parabolic_transform(mono, z, spec).value;
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("entries agree with the zeta-family integrals") {
  for (Complex z : {Complex{0.0, 0.0}, Complex{0.8, 1.5}}) {
    CHECK(rel_err(pmt::pmt_eval(pmt::make_entry("geometric"), z).value, pmt::big_r(z, 1.0).value) <
          1e-12);
    CHECK(rel_err(pmt::pmt_eval(pmt::make_entry("alternating"), z).value,
                  pmt::big_d(z, 1.0).value) < 1e-12);
    CHECK(rel_err(pmt::pmt_eval(pmt::make_entry("hurwitz", {{"a", 0.7}}), z).value,
                  pmt::big_r(z, 0.7).value) < 1e-12);
  }
}

TEST_CASE("incomplete gamma closed form is self-consistent") {
  for (double nu : {1.0, 2.0, 3.5}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      for (Complex z : {Complex{0.0, 0.0}, Complex{0.25, 0.0}, Complex{1.0, 0.5}}) {
        const Complex s = z + 0.5;
        const Complex ls = std::exp(-s * std::log(lambda));
        const Complex a = pmt::big_g_closed(z) * ls * pmt::gamma_reference(nu + s) /
                          pmt::gamma_reference(s + 1.0);
        const Complex b = std::sin(std::numbers::pi * s) / s * ls * pmt::gamma_reference(nu + s);
        CHECK(rel_err(a, b) < 1e-12);
      }
    }
  }
}

TEST_CASE("incomplete gamma with nu = 1 is the scaled Gaussian") {
  for (double lambda : {0.5, 2.0}) {
    const auto inc = pmt::make_entry("incomplete_gamma", {{"nu", 1.0}, {"lambda", lambda}});
    const auto sg = pmt::make_entry("scaled_gaussian", {{"alpha", lambda}});
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.6, 0.3}}) {
      CHECK(rel_err(pmt::pmt_evaluate(inc, z).value, pmt::pmt_evaluate(sg, z).value) < 1e-6);
    }
  }
}

TEST_CASE("boundary integral of the Gaussian weight equals G") {
  const pmt::WeightFn f = [](Complex u) { return std::exp(u); };
  for (double re : {-0.35, -0.1, 0.0, 0.4, 1.0, 1.7, 2.0}) {
    for (double im : {0.0, 0.6}) {
      const Complex z{re, im};
      CAPTURE(z);
      CHECK(rel_err(pmt::boundary_integral(f, z, 0.0, 1e-10).value, pmt::big_g_closed(z)) < 1e-6);
    }
  }
}

TEST_CASE("Abel schedule") {
  pmt::AbelSchedule bad;
  bad.epsilons = {0.01, 0.02};
  CHECK_PMT_ERROR(bad.validate(), InvalidSpec);
  bad.epsilons = {};
  CHECK_PMT_ERROR(bad.validate(), InvalidSpec);
  // the damped cosine converges to its closed form
  const auto cosine = pmt::make_entry("cosine");
  const pmt::AbelSchedule sched;
  const auto r = pmt::pmt_boundary(cosine, 0.25, sched);
  CHECK(rel_err(r.value, cosine.expected(0.25)) < 1e-6);
}

TEST_CASE("operational properties") {
  for (const auto& name : pmt::property_names()) {
    if (name == "convolution") continue;  // extended profile
    const auto report = pmt::property_verify(pmt::parse_property(name));
    CAPTURE(name);
    CHECK(!report.rows.empty());
    for (const auto& row : report.rows) {
      CAPTURE(row.name);
      CAPTURE(row.z);
      CAPTURE(row.abs_dev);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("inversion recovers e^u" * doctest::description("u = -1 and u = -0.5")) {
  for (double u : {-1.0, -0.5}) {
    pmt::PropertyOptions opts;
    opts.inversion_u = u;
    const auto report = pmt::property_verify(pmt::Property::inversion, opts);
    REQUIRE(report.rows.size() == 1);
    CHECK(std::abs(report.rows[0].computed - std::exp(u)) < 1e-6);
  }
}

TEST_CASE("convolution (extended)" * doctest::skip()) {
  const auto report = pmt::property_verify(pmt::Property::convolution);
  CHECK(!report.rows.empty());
  for (const auto& row : report.rows) {
    CAPTURE(row.z);
    CHECK(row.abs_dev <= 1e-4 * std::max(1.0, std::abs(row.expected)));
  }
}

TEST_CASE("classical Mellin transform") {
  const auto g = [](double x) { return Complex{std::exp(-x), 0.0}; };
  CHECK(rel_err(pmt::classical_mellin(g, 2.5), pmt::gamma_reference(2.5)) < 1e-11);
}

TEST_CASE("report serialization") {
  const auto report = pmt::dictionary_verify({"gaussian"});
  const std::string j = report.to_json();
  CHECK(j.front() == '[');
  CHECK(j.find("\"gaussian\"") != std::string::npos);
  pmt::VerificationReport failing;
  failing.rows.push_back(pmt::compare("x", 0.0, 1.0, 2.0, 1e-6));
  CHECK_PMT_ERROR(failing.require_pass(), PropertyViolation);
}

TEST_CASE("pass rule mixes absolute and relative deviation") {
  CHECK(pmt::compare("a", 0.0, 1e-9, 0.0, 1e-8).pass);
  CHECK(pmt::compare("b", 0.0, 1000.0 + 5e-6, 1000.0, 1e-8).pass);
  CHECK_FALSE(pmt::compare("c", 0.0, 1000.0 + 5e-5, 1000.0, 1e-8).pass);
}

TEST_CASE("lookup errors") {
  CHECK_PMT_ERROR(pmt::make_entry("nope"), UnknownEntry);
  CHECK_PMT_ERROR(pmt::parse_property("nope"), UnknownEntry);
  CHECK_PMT_ERROR(pmt::make_entry("scaled_gaussian", {{"alpha", -1.0}}), InvalidArgument);
  CHECK_PMT_ERROR(pmt::make_entry("monomial", {{"k", 1.5}}), InvalidArgument);
}

TEST_CASE("absolute mode refuses sigma outside the entry window") {
  const auto geo = pmt::make_entry("geometric");
  pmt::ContourSpec spec;
  spec.sigma = 2.0;
  CHECK_PMT_ERROR(pmt::pmt_eval(geo, 0.0, spec), SigmaOutOfWindow);
}
