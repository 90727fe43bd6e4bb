#pragma once

// The Gaussian-weight parabolic integral G(z) = ∫ w^{2z} e^{w²} dt and the
// Gamma-family functions read off from it.

#include "pmt/contour.hpp"
#include "pmt/special.hpp"

namespace pmt {

struct GammaConfig {
  ContourSpec contour = default_contour();
  /// Agreement tolerance (relative) against the reference Gamma.
  double oracle_tol = 1e-10;

  static ContourSpec default_contour();
};

/// G(z) by quadrature on Re(w) = sigma. Entire in z; any sigma > 0 works.
QuadResult big_g(Complex z, const GammaConfig& cfg = {});

/// π / Γ(1/2 - z), evaluated without passing through a pole: the
/// Lanczos sum is only ever called with real part >= 1/2.
Complex big_g_closed(Complex z);

/// ∫ w^{2z} e^{α w²} dt = α^{-(z+1/2)} G(z). Throws InvalidScale for alpha <= 0.
QuadResult big_g_scaled(Complex z, double alpha, const GammaConfig& cfg = {});

/// 1/Γ(s) = G(1/2 - s)/π.
Complex reciprocal_gamma(Complex s, const GammaConfig& cfg = {});

/// Γ(s) = G(s - 1/2)/sin(πs). Throws NearPole within 1e-6 of an integer.
Complex gamma_fn(Complex s, const GammaConfig& cfg = {});

/// ψ(z) as a ratio of two contour integrals with kernel w^{1-2z} e^{w²}.
/// NearPole within 1e-6 of a non-positive integer; DenominatorUnderflow when
/// the denominator integral is not resolved above its own error estimate.
Complex digamma(Complex z, const GammaConfig& cfg = {});

/// Euler's constant from -(1/π) ∫ w^{-1} e^{w²} log(w²) dt.
double euler_gamma(const GammaConfig& cfg = {});

/// Variants carrying the quadrature metadata; err_est is propagated through
/// the final division.
QuadResult reciprocal_gamma_quad(Complex s, const GammaConfig& cfg = {});
QuadResult gamma_fn_quad(Complex s, const GammaConfig& cfg = {});
QuadResult digamma_quad(Complex z, const GammaConfig& cfg = {});
QuadResult euler_gamma_quad(const GammaConfig& cfg = {});

inline constexpr double kPoleGuard = 1e-6;

}  // namespace pmt
