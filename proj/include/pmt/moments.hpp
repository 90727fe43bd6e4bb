#pragma once

// E|X|^r = Γ(r+1)/(2π) ∫ (M(w) + M(-w)) / w^{r+1} dt on Re(w) = sigma, for
// distributions whose MGF M is finite on [-sigma, sigma].

#include <algorithm>
#include <cstdint>
#include <limits>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmt/contour.hpp"

namespace pmt {

/// Shape of M(w) along the line, which decides the quadrature setup.
enum class MgfTail {
  gaussian,     // decays like e^{-c t²}; plain trapezoid
  algebraic,    // decays like a power of t; sinh map
  oscillatory,  // bounded and oscillating; long window with erfc taper
};

struct MgfSpec {
  std::string name;
  std::function<Complex(Complex w)> mgf;
  double sigma_max = std::numeric_limits<double>::infinity();
  MgfTail tail = MgfTail::gaussian;
  /// Fills n draws from the counter-based stream keyed by seed.
  std::function<std::vector<double>(std::uint64_t seed, std::size_t n)> sampler;
  std::function<Complex(Complex r)> closed_form;

  double default_sigma() const { return std::min(1.0, 0.5 * sigma_max); }
};

MgfSpec normal_dist(double mu = 0.0, double s = 1.0);
MgfSpec laplace_dist(double b = 1.0);
MgfSpec bernoulli_dist();
MgfSpec uniform_dist();

/// Catalog names: normal, laplace, bernoulli, uniform.
const std::vector<std::string>& distribution_names();
/// Throws UnknownEntry.
MgfSpec make_distribution(const std::string& name, double scale = 1.0);

struct MomentResult {
  Complex value;
  double err_est = 0.0;
  std::size_t nodes = 0;
  double sigma_used = 0.0;
  double l1_norm = 0.0;  // ∫ |integrand| dt, for the Fubini bound
};

/// InvalidOrder for Re(r) <= 0; SigmaExceedsDomain unless 0 < sigma < sigma_max.
MomentResult absolute_moment(const MgfSpec& dist, Complex r,
                             std::optional<double> sigma = {}, double tol = 1e-10);

/// Deviation of the single-point identity |x|^r = Γ(r+1)/(2π) ∫ (e^{wx}+e^{-wx})/w^{r+1} dt.
double abs_power_check(double x, Complex r, double sigma = 1.0);

/// Upper bound on ∫ |integrand| dt used to justify Fubini:
/// e^{π|Im r|}[M(σ)+M(-σ)] √π Γ(Re r/2) / (σ^{Re r} Γ((Re r+1)/2)).
double fubini_bound(const MgfSpec& dist, Complex r, double sigma);

struct MonteCarloResult {
  Complex estimate;
  double std_error = 0.0;
};

/// Mean of |X_i|^r; NoSampler when the distribution has none.
MonteCarloResult monte_carlo_moment(const MgfSpec& dist, Complex r, std::size_t n,
                                    std::uint64_t seed);

/// Uniform double in (0, 1) for stream position index under seed.
double counter_uniform(std::uint64_t seed, std::uint64_t index);

}  // namespace pmt
