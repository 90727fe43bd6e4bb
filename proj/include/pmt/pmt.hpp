#pragma once

// The parabolic Mellin transform 𝒫[f](z) = ∫ w^{2z} f(w²) dt, its boundary
// (sigma = 0) version with Abel damping, the dictionary of known transforms
// and numerical checks of the operational rules.

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmt/contour.hpp"

namespace pmt {

using WeightFn = std::function<Complex(Complex u)>;
using Params = std::map<std::string, double>;

enum class PmtMode { absolute, boundary_abel };

struct WeightEntry {
  std::string name;
  /// Row of the printed dictionary this entry belongs to. The polylogarithm
  /// row carries three entries (plain, alternating, complex shift).
  std::string table_row;
  WeightFn weight;
  PmtMode mode = PmtMode::absolute;
  /// Open sigma window for absolute mode.
  double sigma_lo = 0.0;
  double sigma_hi = std::numeric_limits<double>::infinity();
  double default_sigma = 1.0;
  LineMap map = LineMap::identity;
  /// Boundary entries whose integral is only Abel-summable get the damping
  /// schedule; absolutely integrable ones are evaluated once at eps = 0.
  bool damped = false;
  std::function<Complex(Complex z)> expected;
  std::vector<Complex> z_samples;
  /// Optional map of z into the half-plane where the integral converges,
  /// for weights whose transform is known to be invariant under it.
  std::function<Complex(Complex z)> continuation;
  Params params;
};

struct AbelSchedule {
  enum class Extrapolation { richardson, last };
  std::vector<double> epsilons{0.04, 0.02, 0.01, 0.005};
  Extrapolation extrapolation = Extrapolation::richardson;
  double tol = 1e-10;  // per damped integral

  void validate() const;
};

/// Registered entry names in dictionary order.
const std::vector<std::string>& entry_names();

/// Builds an entry; params override the defaults (lambda, nu, alpha, k, a).
/// Throws UnknownEntry.
WeightEntry make_entry(const std::string& name, const Params& params = {});

/// Number of distinct dictionary rows covered by the registry.
std::size_t table_row_count();

/// 𝒫[f](z) on Re(w) = cfg.sigma for an arbitrary weight.
QuadResult parabolic_transform(const WeightFn& f, Complex z, const ContourSpec& cfg,
                               LineMap map = LineMap::identity);

/// 2 cos(πz) ∫_0^∞ t^{2z} f(-t²) e^{-eps t²} dt, the sigma = 0 integral
/// with damping eps (the two half-lines combined). Needs Re(z) > -1/2.
QuadResult boundary_integral(const WeightFn& f, Complex z, double eps, double tol);

/// Damped boundary integrals at every eps of the schedule, extrapolated to
/// eps = 0 by Neville's scheme. err_est is the last extrapolant update.
QuadResult abel_limit(const WeightFn& f, Complex z, const AbelSchedule& schedule);

QuadResult pmt_eval(const WeightEntry& entry, Complex z, std::optional<ContourSpec> cfg = {});
QuadResult pmt_boundary(const WeightEntry& entry, Complex z, const AbelSchedule& schedule = {});

/// Dispatches on entry.mode.
QuadResult pmt_evaluate(const WeightEntry& entry, Complex z);

struct VerificationRow {
  std::string name;
  std::string table_row;
  Complex z;
  Complex computed;
  Complex expected;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;

  bool all_pass() const;
  /// Throws PropertyViolation naming the first failing row.
  void require_pass() const;
  std::string to_json() const;
  void append(const VerificationReport& other);
};

inline constexpr double kAbsoluteRowTol = 1e-8;
inline constexpr double kBoundaryRowTol = 1e-5;

/// Pass rule shared by all checks: |computed - expected| <= tol * max(1, |expected|).
VerificationRow compare(std::string name, Complex z, Complex computed, Complex expected,
                        double tol);

/// Runs every (entry, z) pair; empty names means the whole registry, empty
/// z_samples means each entry's own samples.
VerificationReport dictionary_verify(const std::vector<std::string>& names = {},
                                     const std::vector<Complex>& z_samples = {});

enum class Property {
  linearity,
  scaling,
  monomial_shift,
  differentiation,
  dirichlet_composition,
  mellin_link,
  convolution,
  inversion
};

const std::vector<std::string>& property_names();
Property parse_property(const std::string& name);
std::string to_string(Property p);

struct PropertyOptions {
  std::vector<Complex> z_samples;  // empty: property default
  double inversion_u = -1.0;
};

VerificationReport property_verify(Property property, const PropertyOptions& options = {});

/// ∫_0^∞ x^{s-1} g(x) dx via x = e^v.
Complex classical_mellin(const std::function<Complex(double)>& g, Complex s, double tol = 1e-12);

}  // namespace pmt
