#include "pmt/rh.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <ostream>
#include <thread>

#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/zeta.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;

ContourSpec sym_line(double sigma) {
  if (!(sigma > 0.0) || sigma >= sigma_limit(ZetaFamily::D))
    throw Error(ErrorKind::SigmaOutOfWindow, "S needs 0 < sigma < sqrt(pi/2)");
  ContourSpec spec;
  spec.sigma = sigma;
  spec.tol = 1e-12;
  spec.rel_tol = 1e-14;
  return spec;
}

ZetaConfig zeta_cfg(ZetaFamily family, double sigma) {
  ZetaConfig cfg = ZetaConfig::for_family(family);
  cfg.contour.sigma = sigma;
  return cfg;
}

void check_tau(double tau) {
  if (!(std::abs(tau) <= kTauMax))
    throw Error(ErrorKind::TauOutOfRange, "|tau| must not exceed 30");
}

// ∫ k(log u_t) / sinh(u_t) dt with log u_t = 2 log w (principal, Re w > 0).
QuadResult sinh_kernel(const std::function<Complex(Complex)>& k, double sigma) {
  const ContourSpec spec = sym_line(sigma);
  LineIntegrand f = [&](double t) {
    const Complex w{sigma, t};
    return k(2.0 * std::log(w)) / std::sinh(w * w);
  };
  return integrate_line(f, spec);
}

}  // namespace

void ScanConfig::validate() const {
  if (!(tau_min < tau_max)) throw Error(ErrorKind::InvalidArgument, "scan needs tau_min < tau_max");
  if (!(coarse_step > 0.0)) throw Error(ErrorKind::InvalidArgument, "coarse_step must be > 0");
  if (!(refine_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "refine_tol must be > 0");
  if (!(sigma > 0.0) || sigma >= sigma_limit(ZetaFamily::D))
    throw Error(ErrorKind::SigmaOutOfWindow, "scan sigma must lie in (0, sqrt(pi/2))");
  check_tau(tau_min);
  check_tau(tau_max);
}

std::string to_string(RootKind kind) {
  return kind == RootKind::zeta_zero ? "zeta_zero" : "symmetrization_artifact";
}

Complex s_symmetric(Complex z, double sigma) {
  const ZetaConfig r = zeta_cfg(ZetaFamily::R, sigma);
  const ZetaConfig d = zeta_cfg(ZetaFamily::D, sigma);
  if (sigma >= sigma_limit(ZetaFamily::D))
    throw Error(ErrorKind::SigmaOutOfWindow, "S needs 0 < sigma < sqrt(pi/2)");
  return 0.5 * (big_r(z, 1.0, r).value - big_r(-z, 1.0, r).value + big_d(z, 1.0, d).value -
                big_d(-z, 1.0, d).value);
}

Complex s_symmetric_sinh(Complex z, double sigma) {
  return -sinh_kernel([z](Complex log_u) { return std::sinh(z * log_u); }, sigma).value;
}

double chi_tau(double tau, double sigma) {
  check_tau(tau);
  const QuadResult r =
      sinh_kernel([tau](Complex log_u) { return std::sin(tau * log_u); }, sigma);
  const double slack = std::max({1e3 * r.err_est, 1e-9 * (1.0 + std::abs(r.value.real())),
                                 1e-13 * r.l1_norm});
  if (std::abs(r.value.imag()) > slack)
    throw Error(ErrorKind::NoConvergence, "𝒳 integral has a non-negligible imaginary part");
  return r.value.real();
}

std::vector<RootRecord> scan_zeros(const ScanConfig& cfg) {
  cfg.validate();
  const auto cells = static_cast<std::size_t>(std::ceil((cfg.tau_max - cfg.tau_min) / cfg.coarse_step));
  std::vector<double> grid(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i)
    grid[i] = std::min(cfg.tau_max, cfg.tau_min + static_cast<double>(i) * cfg.coarse_step);
  std::vector<double> values(grid.size());

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
  {
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < grid.size(); i += workers) values[i] = chi_tau(grid[i], cfg.sigma);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  std::vector<RootRecord> roots;
  auto record = [&](double tau, double residual, double slope) {
    RootRecord r;
    r.tau = tau;
    r.residual = residual;
    r.slope = slope;
    r.scaled_residual = residual / std::abs(big_g_closed(Complex{0.0, tau}));
    r.zeta_modulus = std::abs(series_oracle(Complex{0.5, tau}));
    r.classification =
        r.zeta_modulus < cfg.zeta_threshold ? RootKind::zeta_zero : RootKind::symmetrization_artifact;
    roots.push_back(r);
  };

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      const double h = cfg.coarse_step;
      const double lo = i > 0 ? values[i - 1] : chi_tau(grid[i] - h, cfg.sigma);
      const double hi = i + 1 < grid.size() ? values[i + 1] : chi_tau(grid[i] + h, cfg.sigma);
      record(grid[i], 0.0, (hi - lo) / (2.0 * h));
      continue;
    }
    if (i + 1 == grid.size() || values[i + 1] == 0.0) continue;
    if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;
    double a = grid[i], b = grid[i + 1];
    double fa = values[i], fb = values[i + 1];
    while (b - a > cfg.refine_tol) {
      const double m = 0.5 * (a + b);
      const double fm = chi_tau(m, cfg.sigma);
      if (fm == 0.0) {
        a = b = m;
        fa = fb = 0.0;
        break;
      }
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
        fb = fm;
      }
    }
    const double tau = 0.5 * (a + b);
    const double slope = b > a ? (fb - fa) / (b - a) : 0.0;
    record(tau, std::abs(chi_tau(tau, cfg.sigma)), slope);
  }
  return roots;
}

std::vector<LindelofRow> lindelof_table(const std::vector<double>& tau_grid, double sigma) {
  const ZetaConfig cfg = zeta_cfg(ZetaFamily::R, sigma);
  std::vector<LindelofRow> rows;
  rows.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    check_tau(tau);
    LindelofRow row;
    row.tau = tau;
    row.abs_r = std::abs(big_r(Complex{0.0, tau}, 1.0, cfg).value);
    row.normalized = row.abs_r * std::exp(-kPi * std::abs(tau) / 2.0);
    row.abs_g = std::sqrt(kPi * std::cosh(kPi * tau));
    rows.push_back(row);
  }
  return rows;
}

void write_roots_csv(std::ostream& out, const std::vector<RootRecord>& roots) {
  const auto prec = out.precision(17);
  out << "tau,residual,classification,zeta_modulus\n";
  for (const auto& r : roots)
    out << r.tau << ',' << r.residual << ',' << to_string(r.classification) << ','
        << r.zeta_modulus << '\n';
  out.precision(prec);
}

void write_lindelof_csv(std::ostream& out, const std::vector<LindelofRow>& rows) {
  const auto prec = out.precision(17);
  out << "tau,abs_r,normalized,abs_g\n";
  for (const auto& r : rows)
    out << r.tau << ',' << r.abs_r << ',' << r.normalized << ',' << r.abs_g << '\n';
  out.precision(prec);
}

}  // namespace pmt
