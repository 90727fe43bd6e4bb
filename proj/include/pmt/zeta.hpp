#pragma once

// Geometric and alternating parabolic integrals
//   R(z, a) = ∫ w^{2z} e^{a w²} / (1 - e^{w²}) dt,   0 < sigma < √π
//   D(z, a) = ∫ w^{2z} e^{a w²} / (1 + e^{w²}) dt,   0 < sigma < √(π/2)
// and the zeta-family functions obtained by dividing by G(z), s = z + 1/2.

#include "pmt/contour.hpp"

namespace pmt {

enum class ZetaFamily { R, D };

struct ZetaConfig {
  ContourSpec contour;
  ZetaFamily family = ZetaFamily::R;

  /// sigma = 1.7 for R and 1.2 for D, just inside the respective windows.
  static ZetaConfig for_family(ZetaFamily family);
};

/// Open upper edge of the sigma window: √π for R, √(π/2) for D.
double sigma_limit(ZetaFamily family);

QuadResult big_r(Complex z, double a = 1.0,
                 const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));
QuadResult big_d(Complex z, double a = 1.0,
                 const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::D));

/// ζ(s, a) = R(s - 1/2, a)/G(s - 1/2). NearPositiveInteger within 1e-3 of
/// s ∈ {1, 2, ...}, where G(s - 1/2) vanishes; PoleAtOne at s = 1.
Complex hurwitz_zeta(Complex s, double a,
                     const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));
Complex riemann_zeta(Complex s, const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));
Complex eta_fn(Complex s, const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::D));

/// With quadrature metadata; err_est is divided by |G(z)|.
QuadResult hurwitz_zeta_quad(Complex s, double a,
                             const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));
QuadResult eta_quad(Complex s, const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::D));

/// True within 1e-3 of {1, 2, ...}, where the ratio form is refused.
bool near_positive_integer(Complex s);

/// Same value as riemann_zeta, written as (Γ(1-s)/π) ∫ w^{2s-1}/(e^{-w²} - 1) dt.
Complex riemann_zeta_gamma_form(Complex s,
                                const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));

/// (s - 1)ζ(s) = 2π ∫ (1/2 + it)^{1-s} / (e^{πt} + e^{-πt})² dt.
/// Usable right up to the positive integers; PoleAtOne at s = 1.
Complex jensen_oracle(Complex s);

/// ζ(s) from the Borwein-accelerated alternating series for η, with the
/// functional equation for Re(s) < 0. EtaZetaConversionSingularity where
/// 1 - 2^{1-s} vanishes.
Complex series_oracle(Complex s);

inline constexpr double kTauMax = 30.0;
inline constexpr double kIntegerGuard = 1e-3;

/// ζ(1/2 + iτ) = R(iτ)/G(iτ); |tau| <= 30 or TauOutOfRange.
Complex critical_line_value(double tau,
                            const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));

/// ∫ w^{2s-1} e^{(N+1) w²}/(1 - e^{w²}) dt, the remainder after removing the
/// first N terms of the geometric expansion from R. Equals G(z) ζ(s, N + 1).
QuadResult truncated_sum_residual(Complex s, int n_terms,
                                  const ZetaConfig& cfg = ZetaConfig::for_family(ZetaFamily::R));

}  // namespace pmt
