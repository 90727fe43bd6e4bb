#pragma once

// The odd combination S(z) = (R(z) - R(-z) + D(z) - D(-z))/2, its
// critical-line restriction 𝒳(τ) = ∫ sin(τ log u_t)/sinh(u_t) dt and a
// sign-change scanner for the real roots of 𝒳.

#include <iosfwd>
#include <string>
#include <vector>

#include "pmt/contour.hpp"

namespace pmt {

struct ScanConfig {
  double tau_min = 10.0;
  double tau_max = 30.0;
  double coarse_step = 0.05;
  double refine_tol = 1e-6;
  double sigma = 1.2;
  /// |ζ(1/2 + iτ*)| below this marks a zeta zero.
  double zeta_threshold = 1e-3;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
};

enum class RootKind { zeta_zero, symmetrization_artifact };

std::string to_string(RootKind kind);

struct RootRecord {
  double tau = 0.0;
  double residual = 0.0;         // |𝒳(τ*)|
  double scaled_residual = 0.0;  // |𝒳(τ*)/G(iτ*)|; 𝒳 itself grows like e^{πτ/2}
  RootKind classification = RootKind::symmetrization_artifact;
  double zeta_modulus = 0.0;
  double slope = 0.0;  // d𝒳/dτ estimated from the final bracket
};

/// Four-term definition from the R and D integrals on Re(w) = sigma.
Complex s_symmetric(Complex z, double sigma = 1.2);

/// Single integral -∫ sinh(z log u_t)/sinh(u_t) dt.
Complex s_symmetric_sinh(Complex z, double sigma = 1.2);

/// 𝒳(τ); the imaginary part of the quadrature is checked to be negligible.
/// TauOutOfRange past |tau| = 30.
double chi_tau(double tau, double sigma = 1.2);

std::vector<RootRecord> scan_zeros(const ScanConfig& cfg);

struct LindelofRow {
  double tau = 0.0;
  double abs_r = 0.0;       // |R(iτ)|
  double normalized = 0.0;  // |R(iτ)| e^{-π|τ|/2}
  double abs_g = 0.0;       // |G(iτ)| = √(π cosh πτ)
};

std::vector<LindelofRow> lindelof_table(const std::vector<double>& tau_grid, double sigma = 1.7);

void write_roots_csv(std::ostream& out, const std::vector<RootRecord>& roots);
void write_lindelof_csv(std::ostream& out, const std::vector<LindelofRow>& rows);

}  // namespace pmt
