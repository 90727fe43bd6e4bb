#include "pmt/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/special.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;

void check_window(ZetaFamily family, double sigma) {
  if (!(sigma > 0.0) || sigma >= sigma_limit(family)) {
    throw Error(ErrorKind::SigmaOutOfWindow,
                family == ZetaFamily::R ? "R needs 0 < sigma < sqrt(pi)"
                                        : "D needs 0 < sigma < sqrt(pi/2)");
  }
}

void check_shift(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw Error(ErrorKind::InvalidArgument, "Hurwitz shift a must be > 0");
}

void check_integer_guard(Complex s) {
  if (s == Complex{1.0, 0.0}) throw Error(ErrorKind::PoleAtOne, "ζ has a pole at s = 1");
  if (near_positive_integer(s))
    throw Error(ErrorKind::NearPositiveInteger,
                "G(s - 1/2) vanishes at positive integers; use the Jensen oracle");
}

// ∫ w^{2z} e^{a w²} / (1 ∓ e^{w²}) dt
QuadResult geometric_kernel(Complex z, double a, double sign, const ContourSpec& spec) {
  spec.validate();
  const double sigma = spec.sigma;
  LineIntegrand f = [=](double t) {
    const Complex w{sigma, t};
    const Complex u = w * w;
    return std::exp(2.0 * z * std::log(w) + a * u) / (1.0 - sign * std::exp(u));
  };
  return integrate_line(f, spec);
}

// Borwein's algorithm 2 for η(s); n = 100 keeps the truncation error below
// 1e-12 up to |Im s| = 30.
Complex borwein_eta(Complex s) {
  constexpr int n = 100;
  std::array<double, n + 1> d{};
  double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[i] = n * acc;
  }
  Complex sum{0.0, 0.0};
  for (int k = n - 1; k >= 0; --k) {
    const Complex v = (d[k] - d[n]) * std::exp(-s * std::log(k + 1.0));
    sum += (k % 2 == 0) ? v : -v;
  }
  return -sum / d[n];
}

}  // namespace

double sigma_limit(ZetaFamily family) {
  return family == ZetaFamily::R ? std::sqrt(kPi) : std::sqrt(kPi / 2.0);
}

ZetaConfig ZetaConfig::for_family(ZetaFamily family) {
  ZetaConfig cfg;
  cfg.family = family;
  cfg.contour.sigma = family == ZetaFamily::R ? 1.7 : 1.2;
  cfg.contour.tol = 1e-12;
  cfg.contour.rel_tol = 1e-14;
  return cfg;
}

QuadResult big_r(Complex z, double a, const ZetaConfig& cfg) {
  check_shift(a);
  check_window(ZetaFamily::R, cfg.contour.sigma);
  return geometric_kernel(z, a, +1.0, cfg.contour);
}

QuadResult big_d(Complex z, double a, const ZetaConfig& cfg) {
  check_shift(a);
  check_window(ZetaFamily::D, cfg.contour.sigma);
  return geometric_kernel(z, a, -1.0, cfg.contour);
}

bool near_positive_integer(Complex s) {
  const double n = std::round(s.real());
  return n >= 1.0 && std::abs(s - n) <= kIntegerGuard;
}

QuadResult hurwitz_zeta_quad(Complex s, double a, const ZetaConfig& cfg) {
  check_shift(a);
  check_integer_guard(s);
  const Complex z = s - 0.5;
  const Complex g = big_g_closed(z);
  QuadResult r = big_r(z, a, cfg);
  r.value /= g;
  r.err_est /= std::abs(g);
  return r;
}

Complex hurwitz_zeta(Complex s, double a, const ZetaConfig& cfg) {
  return hurwitz_zeta_quad(s, a, cfg).value;
}

Complex riemann_zeta(Complex s, const ZetaConfig& cfg) { return hurwitz_zeta(s, 1.0, cfg); }

QuadResult eta_quad(Complex s, const ZetaConfig& cfg) {
  // η is regular at s = 1 but G(1/2) = 0 there, so only the guard applies
  if (s == Complex{1.0, 0.0})
    throw Error(ErrorKind::NearPositiveInteger, "G(s - 1/2) vanishes at s = 1");
  check_integer_guard(s);
  const Complex z = s - 0.5;
  const Complex g = big_g_closed(z);
  QuadResult r = big_d(z, 1.0, cfg);
  r.value /= g;
  r.err_est /= std::abs(g);
  return r;
}

Complex eta_fn(Complex s, const ZetaConfig& cfg) { return eta_quad(s, cfg).value; }

Complex riemann_zeta_gamma_form(Complex s, const ZetaConfig& cfg) {
  check_integer_guard(s);
  check_window(ZetaFamily::R, cfg.contour.sigma);
  cfg.contour.validate();
  const double sigma = cfg.contour.sigma;
  const Complex e = 2.0 * s - 1.0;
  LineIntegrand f = [=](double t) -> Complex {
    const Complex w{sigma, t};
    const Complex minus_u = -(w * w);
    // past Re(-u) = 700 the weight is below e^{-700} and exp would overflow
    if (minus_u.real() > 700.0) return {0.0, 0.0};
    return std::exp(e * std::log(w)) / (std::exp(minus_u) - 1.0);
  };
  const QuadResult r = integrate_line(f, cfg.contour);
  return gamma_reference(1.0 - s) / kPi * r.value;
}

Complex jensen_oracle(Complex s) {
  if (s == Complex{1.0, 0.0}) throw Error(ErrorKind::PoleAtOne, "ζ has a pole at s = 1");
  const Complex e = 1.0 - s;
  LineIntegrand f = [=](double t) {
    const Complex base{0.5, t};
    const double c = std::cosh(kPi * t);
    return std::exp(e * std::log(base)) / (4.0 * c * c);
  };
  ContourSpec spec;
  spec.step = 0.25;
  spec.tol = 1e-14;
  spec.rel_tol = 1e-15;
  const QuadResult r = integrate_line(f, spec);
  return 2.0 * kPi * r.value / (s - 1.0);
}

Complex series_oracle(Complex s) {
  if (s == Complex{1.0, 0.0}) throw Error(ErrorKind::PoleAtOne, "ζ has a pole at s = 1");
  if (s.real() < 0.0) {
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    const Complex one_minus = 1.0 - s;
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) * std::sin(kPi * s / 2.0) *
           gamma_reference(one_minus) * series_oracle(one_minus);
  }
  const Complex factor = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(factor) < 1e-12)
    throw Error(ErrorKind::EtaZetaConversionSingularity, "1 - 2^{1-s} vanishes");
  return borwein_eta(s) / factor;
}

Complex critical_line_value(double tau, const ZetaConfig& cfg) {
  if (!(std::abs(tau) <= kTauMax))
    throw Error(ErrorKind::TauOutOfRange, "critical-line evaluation is limited to |tau| <= 30");
  const Complex z{0.0, tau};
  return big_r(z, 1.0, cfg).value / big_g_closed(z);
}

QuadResult truncated_sum_residual(Complex s, int n_terms, const ZetaConfig& cfg) {
  if (n_terms < 0) throw Error(ErrorKind::InvalidArgument, "term count must be >= 0");
  return big_r(s - 0.5, n_terms + 1.0, cfg);
}

}  // namespace pmt
