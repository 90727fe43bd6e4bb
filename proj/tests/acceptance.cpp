// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "pmt/contour.hpp"
#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/moments.hpp"
#include "pmt/pmt.hpp"
#include "pmt/rh.hpp"
#include "pmt/special.hpp"
#include "pmt/zeta.hpp"
#include "reference_values.hpp"

using pmt::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

struct Tally {
  bool ok = true;
  double worst = 0.0;  // largest deviation / tolerance seen
  std::string first_failure;

  void check(bool pass, double ratio, const std::string& what) {
    worst = std::max(worst, ratio);
    if (!pass && ok) first_failure = what;
    ok = ok && pass;
  }
  // |got - want| <= tol * scale
  void near(Complex got, Complex want, double tol, double scale, const std::string& what) {
    const double ratio = std::abs(got - want) / (tol * scale);
    check(ratio <= 1.0, ratio, what);
  }
};

std::string fmt(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
  return buf;
}

Tally reciprocal_gamma_grid() {
  Tally t;
  std::vector<Complex> grid;
  for (double x = -3.5; x <= 4.5; x += 1.0) grid.emplace_back(x, 0.0);
  for (Complex z : {Complex{0.5, 3}, Complex{0.5, -3}, Complex{2, 2}, Complex{2, -2}, Complex{-1.5, 1}})
    grid.push_back(z);
  for (Complex s : grid) {
    const Complex ref_gamma = pmt::gamma_reference(s);
    t.near(pmt::reciprocal_gamma(s), 1.0 / ref_gamma, 1e-9, std::abs(1.0 / ref_gamma),
           "1/Gamma at " + fmt(s));
    t.near(pmt::gamma_fn(s), ref_gamma, 1e-8, std::abs(ref_gamma), "Gamma at " + fmt(s));
  }
  return t;
}

Tally digamma_and_euler() {
  Tally t;
  t.near(pmt::euler_gamma(), 0.5772156649, 1e-8, 1.0, "euler_gamma");
  for (Complex z : {Complex{0.5, 0}, Complex{1, 0}, Complex{2, 0}, Complex{1, 1}}) {
    // central difference of Γ divided by Γ, step 1e-5
    const double h = 1e-5;
    const Complex fd = (pmt::gamma_reference(z + h) - pmt::gamma_reference(z - h)) /
                       (2 * h * pmt::gamma_reference(z));
    t.near(pmt::digamma(z), fd, 1e-6, 1.0, "digamma at " + fmt(z));
  }
  return t;
}

std::vector<Complex> zeta_grid() {
  std::vector<Complex> g;
  for (const auto& s : ref::kZeta) g.push_back(s.arg);
  return g;
}

Tally zeta_values() {
  Tally t;
  const auto grid = zeta_grid();
  for (Complex s : grid) {
    const Complex oracle = pmt::series_oracle(s);
    t.near(pmt::riemann_zeta(s), oracle, 1e-7, std::max(1.0, std::abs(oracle)), "zeta at " + fmt(s));
  }
  t.check(grid.size() == 20, 0.0, "grid size");
  t.near(pmt::riemann_zeta(0.5), -1.4603545088, 1e-7, 1.0, "zeta(1/2)");
  for (double s : {1.3, 2.5, 3.7}) {
    const Complex want = (std::pow(2.0, s) - 1.0) * pmt::riemann_zeta(s);
    t.near(pmt::hurwitz_zeta(s, 0.5), want, 1e-8, 1.0, "Hurwitz halving at " + fmt(s));
  }
  return t;
}

Tally oracle_triangle() {
  Tally t;
  for (Complex s : zeta_grid()) {
    const Complex a = pmt::riemann_zeta(s);
    const Complex b = pmt::jensen_oracle(s);
    const Complex c = pmt::series_oracle(s);
    const double scale = std::max(1.0, std::abs(c));
    t.near(a, b, 1e-7, scale, "contour vs jensen at " + fmt(s));
    t.near(a, c, 1e-7, scale, "contour vs series at " + fmt(s));
    t.near(b, c, 1e-7, scale, "jensen vs series at " + fmt(s));
  }
  t.near(pmt::jensen_oracle(0.0), -0.5, 1e-9, 1.0, "jensen zeta(0)");
  t.near(pmt::jensen_oracle(-1.0), -1.0 / 12.0, 1e-9, 1.0, "jensen zeta(-1)");
  t.near(pmt::jensen_oracle(2.0), kPi * kPi / 6.0, 1e-9, 1.0, "jensen zeta(2)");
  return t;
}

Tally critical_line() {
  Tally t;
  for (double tau : {1.0, 5.0, 10.0, 14.0, 20.0, 25.0, 30.0}) {
    const Complex want = pmt::series_oracle(Complex{0.5, tau});
    t.near(pmt::critical_line_value(tau), want, 1e-4, std::max(std::abs(want), 1e-300),
           "critical line at tau=" + std::to_string(tau));
  }
  return t;
}

Tally zero_scan() {
  Tally t;
  const auto roots = pmt::scan_zeros({});
  for (double z : ref::kZetaZeros) {
    // the frozen ordinates are zeros of the series oracle too
    t.check(std::abs(pmt::series_oracle(Complex{0.5, z})) < 1e-8, 0.0, "oracle zero check");
    if (z > 30.0) continue;
    bool found = false;
    for (const auto& r : roots)
      found = found || (std::abs(r.tau - z) < 1e-3 && r.classification == pmt::RootKind::zeta_zero);
    t.check(found, 0.0, "zero near " + std::to_string(z));
  }
  for (const auto& r : roots)
    if (r.classification == pmt::RootKind::zeta_zero) {
      bool known = false;
      for (double z : ref::kZetaZeros) known = known || std::abs(r.tau - z) < 1e-3;
      t.check(known, 0.0, "spurious zeta_zero at " + std::to_string(r.tau));
    }
  pmt::ScanConfig around_origin;
  around_origin.tau_min = -1.0;
  around_origin.tau_max = 1.0;
  const auto near0 = pmt::scan_zeros(around_origin);
  bool artifact = false;
  for (const auto& r : near0)
    artifact = artifact ||
               (std::abs(r.tau) < 1e-6 && r.classification == pmt::RootKind::symmetrization_artifact);
  t.check(artifact, 0.0, "artifact root at 0");
  return t;
}

Tally dictionary() {
  Tally t;
  const auto report = pmt::dictionary_verify();
  std::set<std::string> rows;
  for (const auto& r : report.rows) {
    rows.insert(r.table_row);
    const bool boundary = pmt::make_entry(r.name).mode == pmt::PmtMode::boundary_abel;
    t.check(r.tol == (boundary ? 1e-5 : 1e-8), 0.0, r.name + " tolerance");
    t.check(r.pass, r.abs_dev / (r.tol * std::max(1.0, std::abs(r.expected))),
            r.name + " at " + fmt(r.z));
  }
  t.check(rows.size() == 14, 0.0, "14 table rows");
  auto eval = [](const char* name, Complex z) {
    return pmt::pmt_evaluate(pmt::make_entry(name), z).value;
  };
  t.near(eval("rational", 0.0), kPi, 1e-8, kPi, "rational -> pi");
  t.near(eval("perturbed_exp", 0.0), ref::kPerturbedExpAtZero, 1e-8, 1.0, "perturbed exp z=0");
  t.near(eval("perturbed_exp", 0.5), std::sqrt(2 * kPi) * std::exp(-0.5), 1e-8, 1.0,
         "perturbed exp z=1/2");
  t.near(eval("incomplete_gamma", 0.0), 2.0 * std::tgamma(2.5), 1e-5, 2.0 * std::tgamma(2.5),
         "incomplete gamma z=0");
  return t;
}

Tally properties() {
  Tally t;
  for (const auto& name : pmt::property_names()) {
    const auto p = pmt::parse_property(name);
    for (const auto& r : pmt::property_verify(p).rows) {
      const double tol = p == pmt::Property::convolution ? 1e-4 : 1e-6;
      t.near(r.computed, r.expected, tol, std::max(1.0, std::abs(r.expected)),
             r.name + " at " + fmt(r.z));
    }
  }
  const auto inv = pmt::property_verify(pmt::Property::inversion);
  t.near(inv.rows.at(0).computed, std::exp(-1.0), 1e-6, 1.0, "inversion at u=-1");
  return t;
}

Tally moments() {
  Tally t;
  struct Case {
    pmt::MgfSpec dist;
    std::vector<Complex> orders;
  };
  const std::vector<Case> cases{
      {pmt::normal_dist(), {0.5, 1.0, 2.0, 2.5, Complex{1, 1}}},
      {pmt::laplace_dist(0.5), {1.0, 1.5}},
      {pmt::bernoulli_dist(), {0.5, 1.0, 2.0, 3.3}},
      {pmt::uniform_dist(), {0.5}},
  };
  for (const auto& c : cases) {
    for (Complex r : c.orders) {
      const Complex exact = c.dist.closed_form(r);
      t.near(pmt::absolute_moment(c.dist, r).value, exact, 1e-7, 1.0,
             c.dist.name + " r=" + fmt(r));
      if (c.dist.name == "bernoulli") t.near(exact, 1.0, 1e-15, 1.0, "bernoulli closed form");
      if (r.imag() != 0.0) continue;
      const auto mc = pmt::monte_carlo_moment(c.dist, r, 1000000, 20240613);
      const double ratio = std::abs(mc.estimate - exact) / (4.0 * mc.std_error + 1e-300);
      t.check(ratio <= 1.0 || std::abs(mc.estimate - exact) < 1e-12, ratio,
              c.dist.name + " Monte Carlo r=" + fmt(r));
    }
  }
  t.near(pmt::uniform_dist().closed_form(0.5), 2.0 / 3.0, 1e-15, 1.0, "uniform closed form");
  return t;
}

Tally vanishing() {
  Tally t;
  const auto spec = pmt::vanishing_spec();
  for (auto [x, r] : {std::pair{1.0, Complex{1, 0}}, std::pair{5.0, Complex{2, 0}},
                      std::pair{1.0, Complex{1.5, 0.5}}}) {
    const double res = pmt::vanishing_residual(x, r, spec);
    t.check(res < 1e-6, res / 1e-6, "vanishing at x=" + std::to_string(x) + " r=" + fmt(r));
  }
  return t;
}

Tally contour_independence() {
  Tally t;
  const double tol = pmt::GammaConfig{}.contour.tol;
  for (double re = -2.0; re <= 2.0; re += 1.0) {
    for (double im = -2.0; im <= 2.0; im += 1.0) {
      const Complex z{re, im};
      std::vector<Complex> v;
      for (double sigma : {0.5, 1.0, 2.0}) {
        pmt::GammaConfig cfg;
        cfg.contour.sigma = sigma;
        v.push_back(pmt::big_g(z, cfg).value);
      }
      const double scale = std::max(1.0, std::abs(v[0]));
      t.near(v[0], v[1], 10 * tol, scale, "G sigma 0.5/1 at " + fmt(z));
      t.near(v[1], v[2], 10 * tol, scale, "G sigma 1/2 at " + fmt(z));
      t.near(pmt::big_g(std::conj(z)).value, std::conj(v[1]), tol, scale, "G conjugate at " + fmt(z));
    }
  }
  auto r_cfg = pmt::ZetaConfig::for_family(pmt::ZetaFamily::R);
  auto d_cfg = pmt::ZetaConfig::for_family(pmt::ZetaFamily::D);
  const double ztol = r_cfg.contour.tol;
  for (Complex z : {Complex{0, 0}, Complex{0.5, 1}, Complex{-1, -2}, Complex{1.5, 0.5}}) {
    for (double sigma : {1.0, 1.4}) {
      auto cfg = r_cfg;
      cfg.contour.sigma = sigma;
      const Complex a = pmt::big_r(z, 1.0, cfg).value;
      const Complex b = pmt::big_r(z, 1.0, r_cfg).value;
      t.near(a, b, 10 * ztol, std::max(1.0, std::abs(b)), "R sigma at " + fmt(z));
    }
    for (double sigma : {0.8, 1.0}) {
      auto cfg = d_cfg;
      cfg.contour.sigma = sigma;
      const Complex a = pmt::big_d(z, 1.0, cfg).value;
      const Complex b = pmt::big_d(z, 1.0, d_cfg).value;
      t.near(a, b, 10 * ztol, std::max(1.0, std::abs(b)), "D sigma at " + fmt(z));
    }
    const Complex r = pmt::big_r(z).value;
    const Complex d = pmt::big_d(z).value;
    t.near(pmt::big_r(std::conj(z)).value, std::conj(r), 10 * ztol, std::max(1.0, std::abs(r)),
           "R conjugate at " + fmt(z));
    t.near(pmt::big_d(std::conj(z)).value, std::conj(d), 10 * ztol, std::max(1.0, std::abs(d)),
           "D conjugate at " + fmt(z));
  }
  return t;
}

Tally lindelof() {
  Tally t;
  std::vector<double> grid;
  for (int i = 0; i <= 300; ++i) grid.push_back(0.1 * i);
  const double target = std::sqrt(kPi / 2);
  for (const auto& row : pmt::lindelof_table(grid)) {
    t.check(row.normalized <= 10.0, row.normalized / 10.0, "bounded at " + std::to_string(row.tau));
    if (row.tau < 10.0) continue;
    const double zeta = std::abs(pmt::series_oracle(Complex{0.5, row.tau}));
    // next to a zero both factors vanish and the ratio is pure rounding
    if (zeta < 1e-2) continue;
    const double dev = std::abs(row.normalized / zeta / target - 1.0);
    t.check(dev <= 0.02, dev / 0.02, "ratio at " + std::to_string(row.tau));
  }
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
      {"reciprocal gamma and gamma on the test grid", reciprocal_gamma_grid},
      {"digamma and Euler's constant", digamma_and_euler},
      {"zeta values and Hurwitz halving", zeta_values},
      {"oracle triangle", oracle_triangle},
      {"critical line", critical_line},
      {"zero scan", zero_scan},
      {"transform dictionary", dictionary},
      {"operational properties", properties},
      {"absolute moments", moments},
      {"vanishing identity", vanishing},
      {"contour independence and conjugate symmetry", contour_independence},
      {"growth diagnostic", lindelof},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.ok = false;
      t.first_failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s  (worst dev/tol %.3g, %.2fs)%s%s\n", i + 1,
                t.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), t.worst, secs,
                t.ok ? "" : "  first failure: ", t.first_failure.c_str());
    failures += t.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
