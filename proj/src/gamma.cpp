#include "pmt/gamma.hpp"

#include <cmath>
#include <numbers>

#include "pmt/errors.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;

double distance_to_integer(Complex s) {
  return std::abs(s - std::round(s.real()));
}

// ∫ w^{e} e^{α w²} (2 log w)^m dt on the configured line.
QuadResult gaussian_kernel(Complex e, double alpha, int log_power, const ContourSpec& spec) {
  spec.validate();
  const double sigma = spec.sigma;
  LineIntegrand f = [=](double t) {
    const Complex w{sigma, t};
    const Complex lw = std::log(w);
    Complex v = std::exp(e * lw + alpha * w * w);
    for (int k = 0; k < log_power; ++k) v *= 2.0 * lw;
    return v;
  };
  return integrate_line(f, spec);
}

}  // namespace

ContourSpec GammaConfig::default_contour() {
  ContourSpec spec;
  spec.sigma = 1.0;
  spec.tol = 1e-12;
  spec.rel_tol = 1e-14;
  return spec;
}

QuadResult big_g(Complex z, const GammaConfig& cfg) {
  return gaussian_kernel(2.0 * z, 1.0, 0, cfg.contour);
}

Complex big_g_closed(Complex z) {
  const Complex s = z + 0.5;
  if (s.real() >= 0.5) {
    // cos(πz)Γ(s); at half-odd z the cosine is exactly zero
    if (z.imag() == 0.0 && z.real() - std::floor(z.real()) == 0.5) return {0.0, 0.0};
    return std::cos(kPi * z) * gamma_reference(s);
  }
  const Complex x = 0.5 - z;  // Re(x) > 1/2, so no reflection inside
  return kPi / gamma_reference(x);
}

QuadResult big_g_scaled(Complex z, double alpha, const GammaConfig& cfg) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error(ErrorKind::InvalidScale, "scale alpha must be > 0");
  return gaussian_kernel(2.0 * z, alpha, 0, cfg.contour);
}

QuadResult reciprocal_gamma_quad(Complex s, const GammaConfig& cfg) {
  QuadResult r = big_g(0.5 - s, cfg);
  r.value /= kPi;
  r.err_est /= kPi;
  return r;
}

Complex reciprocal_gamma(Complex s, const GammaConfig& cfg) {
  return reciprocal_gamma_quad(s, cfg).value;
}

QuadResult gamma_fn_quad(Complex s, const GammaConfig& cfg) {
  if (distance_to_integer(s) < kPoleGuard)
    throw Error(ErrorKind::NearPole, "Γ(s) via G needs s away from the integers");
  QuadResult r = big_g(s - 0.5, cfg);
  const Complex d = std::sin(kPi * s);
  r.value /= d;
  r.err_est /= std::abs(d);
  return r;
}

Complex gamma_fn(Complex s, const GammaConfig& cfg) { return gamma_fn_quad(s, cfg).value; }

QuadResult digamma_quad(Complex z, const GammaConfig& cfg) {
  if (z.real() < 0.5 && distance_to_integer(z) < kPoleGuard)
    throw Error(ErrorKind::NearPole, "ψ has poles at the non-positive integers");
  const Complex e = 1.0 - 2.0 * z;
  const QuadResult num = gaussian_kernel(e, 1.0, 1, cfg.contour);
  const QuadResult den = gaussian_kernel(e, 1.0, 0, cfg.contour);
  const double den_mag = std::abs(den.value);
  if (den_mag <= 100.0 * std::max(den.err_est, 1e-15 * den.l1_norm))
    throw Error(ErrorKind::DenominatorUnderflow,
                "denominator integral is indistinguishable from zero");
  QuadResult r = num;
  r.value = num.value / den.value;
  r.err_est = (num.err_est + std::abs(r.value) * den.err_est) / den_mag;
  r.nodes = num.nodes + den.nodes;
  return r;
}

Complex digamma(Complex z, const GammaConfig& cfg) { return digamma_quad(z, cfg).value; }

QuadResult euler_gamma_quad(const GammaConfig& cfg) {
  QuadResult r = gaussian_kernel({-1.0, 0.0}, 1.0, 1, cfg.contour);
  if (std::abs(r.value.imag()) > 1e3 * std::max(r.err_est, cfg.contour.tol))
    throw Error(ErrorKind::NoConvergence, "imaginary residue in the γ integral");
  r.value = Complex{-r.value.real() / kPi, 0.0};
  r.err_est /= kPi;
  return r;
}

double euler_gamma(const GammaConfig& cfg) { return euler_gamma_quad(cfg).value.real(); }

}  // namespace pmt
