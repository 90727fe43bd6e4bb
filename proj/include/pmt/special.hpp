#pragma once

// Classical special functions used as independent references and as
// dictionary weights. None of these go through the parabolic contour.

#include <complex>

namespace pmt {

using Complex = std::complex<double>;

/// Γ(s) by the Lanczos approximation (g = 7, 9 terms) with reflection for
/// Re(s) < 1/2. Relative accuracy is about 1e-15 away from the poles.
/// Throws Error(Pole) at non-positive integers.
Complex gamma_reference(Complex s);

/// ψ(z) by upward recurrence to |z| >= 12 and the Stirling series, with
/// reflection for Re(z) < 1/2. Throws Error(Pole) at non-positive integers.
Complex digamma_reference(Complex z);

/// ζ(s, a) by Euler-Maclaurin summation; valid for every s != 1, a > 0.
Complex hurwitz_reference(Complex s, double a);

/// Dirichlet beta β(s) = Σ (-1)^n (2n+1)^{-s}, via Hurwitz values at 1/4, 3/4.
Complex dirichlet_beta(Complex s);

/// Bernoulli number B_n (B_1 = -1/2).
double bernoulli_number(int n);

/// Upper incomplete gamma Γ(nu, x) for real nu > 0, x >= 0: series below
/// x < nu + 1, Lentz continued fraction above.
double incomplete_gamma_upper(double nu, double x);

/// Li_k(e^{-mu}) for integer k >= 1 and mu > 0.
double polylog_exp(int k, double mu);

/// Li_k(-e^{-mu}) for integer k >= 1 and mu >= 0.
double polylog_alt_exp(int k, double mu);

/// Parabolic cylinder function D_n(x) for integer n >= 0 (Hermite recurrence).
double parabolic_cylinder_int(int n, double x);

}  // namespace pmt
