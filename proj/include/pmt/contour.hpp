#pragma once

// Quadrature along the vertical line w = sigma + i t.
//
// The engine is a uniform trapezoid rule with step halving. For integrands
// analytic in a strip around the real t-axis that decay fast (Gaussian in t)
// it converges geometrically, so the difference between two successive
// levels is a reliable, if pessimistic, error estimate.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>

namespace pmt {

using Complex = std::complex<double>;

/// Integrand of the line parameter t (or of the mapped variable, see LineMap).
using LineIntegrand = std::function<Complex(double)>;

/// Optional change of variables applied before the trapezoid rule.
///  - identity: nodes are uniform in t.
///  - sinh:     t = sinh(x), nodes uniform in x; turns algebraic decay in t
///              into exponential decay in x.
enum class LineMap { identity, sinh };

struct ContourSpec {
  double sigma = 1.0;
  /// Half-width T of the t-interval. Unset means integrate_line scans the
  /// integrand for the point where it drops below tol/10 (auto_truncation).
  std::optional<double> truncation;
  /// Initial node spacing h (in the mapped variable).
  double step = 0.5;
  /// Target absolute error.
  double tol = 1e-10;
  /// Accept when the level difference falls below rel_tol times the L1 norm
  /// of the integrand. Zero disables it; needed where the integral is large.
  double rel_tol = 0.0;
  std::size_t max_nodes = std::size_t{1} << 20;
  LineMap map = LineMap::identity;
  /// Width of an erfc roll-off placed at the ends of [-T, T]; zero is a hard
  /// cut. A smooth window suppresses the truncation error of oscillatory
  /// integrands with slow algebraic decay.
  double taper = 0.0;
  /// Worker threads for node evaluation; results do not depend on it.
  unsigned threads = 1;

  /// Throws Error(InvalidSpec) on violated invariants. sigma = 0 is only
  /// accepted with allow_boundary.
  void validate(bool allow_boundary = false) const;
};

struct QuadResult {
  Complex value;
  double err_est = 0.0;
  std::size_t nodes = 0;
  double sigma_used = 0.0;
  /// Trapezoid estimate of the integral of |f|; a conditioning measure.
  double l1_norm = 0.0;
};

/// exp(e * log w) on the principal branch; w on (-inf, 0] is rejected.
Complex principal_power(Complex w, Complex e);

/// u = (sigma + i t)^2 = (sigma^2 - t^2) + 2 i sigma t.
Complex map_to_parabola(double sigma, double t);

/// Trapezoid rule on [-T, T] with step halving until two successive levels
/// agree to tol (or rel_tol * L1); err_est is the last level difference.
QuadResult integrate_line(const LineIntegrand& f, const ContourSpec& spec);

/// Same engine on an arbitrary finite interval [a, b] of the variable passed
/// to f. spec.truncation and spec.map are ignored.
QuadResult integrate_interval(const LineIntegrand& f, double a, double b,
                              const ContourSpec& spec);

/// Smallest T >= floor such that |f(t)| stays below tol/10 for |t| >= T, found
/// by an outward scan. With LineMap::sinh the scan runs in the mapped
/// variable and the returned value is sinh(X). Throws InvalidSpec if the
/// integrand has not decayed by ceiling.
double auto_truncation(const LineIntegrand& f, double tol, double floor = 8.0,
                       LineMap map = LineMap::identity, double ceiling = 1e4);

/// One-sided variant: scans t >= start and returns the first point past which
/// |f| stays below threshold.
double decay_point(const LineIntegrand& f, double start, double direction,
                   double threshold, double ceiling);

/// |∫ e^{-i t x} / w^{r+1} dt| over [-T, T]; zero in the limit T -> inf.
/// Restricted to Re(r) >= 1 where the truncated tail is controllable.
double vanishing_residual(double x, Complex r, const ContourSpec& spec);

/// Spec used for the vanishing check: sigma = 1, T = 1e4, tight tolerance.
ContourSpec vanishing_spec(double sigma = 1.0);

}  // namespace pmt
