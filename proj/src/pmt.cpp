#include "pmt/pmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/special.hpp"
#include "pmt/zeta.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

Complex cpow(Complex base, Complex e) { return std::exp(e * std::log(base)); }

double param(const Params& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Weights evaluated on the boundary only see u = -t² <= 0.
double negative_real(Complex u, const char* who) {
  if (u.imag() != 0.0 || u.real() > 0.0)
    throw Error(ErrorKind::InvalidArgument,
                std::string(who) + " weight is only implemented on the negative real axis");
  return -u.real();
}

// Σ_{n>=1} n^{-k} (n + i)^{-s}: direct sum to N - 1, then the integral of the
// summand from N plus the first two Euler-Maclaurin corrections.
Complex complex_shift_series(int k, Complex s) {
  constexpr int N = 1000;
  const Complex i{0.0, 1.0};
  auto term = [&](double n) { return std::pow(n, -k) * cpow(n + i, -s); };
  Complex head{0.0, 0.0};
  for (int n = N - 1; n >= 1; --n) head += term(n);
  // ∫_N^∞ x^{-k} (x+i)^{-s} dx = Σ_j C(-s, j) i^j N^{1-k-s-j}/(k+s+j-1)
  Complex integral{0.0, 0.0};
  Complex binom{1.0, 0.0};
  Complex ipow{1.0, 0.0};
  for (int j = 0; j < 40; ++j) {
    const Complex piece = binom * ipow * cpow(Complex{double(N), 0.0}, 1.0 - double(k) - s - double(j)) /
                          (double(k) + s + double(j) - 1.0);
    integral += piece;
    if (std::abs(piece) < 1e-20) break;
    binom *= (-s - double(j)) / double(j + 1);
    ipow *= i;
  }
  const Complex fN = term(N);
  const Complex dfN = fN * (-double(k) / N - s / (double(N) + i));
  return head + integral + 0.5 * fN - dfN / 12.0;
}

WeightEntry absolute_entry(std::string name, std::string row, WeightFn f,
                           std::function<Complex(Complex)> expected,
                           std::vector<Complex> samples, double sigma) {
  WeightEntry e;
  e.name = std::move(name);
  e.table_row = std::move(row);
  e.weight = std::move(f);
  e.expected = std::move(expected);
  e.z_samples = std::move(samples);
  e.default_sigma = sigma;
  return e;
}

WeightEntry boundary_entry(std::string name, std::string row, WeightFn f,
                           std::function<Complex(Complex)> expected,
                           std::vector<Complex> samples, bool damped) {
  WeightEntry e;
  e.name = std::move(name);
  e.table_row = std::move(row);
  e.weight = std::move(f);
  e.expected = std::move(expected);
  e.z_samples = std::move(samples);
  e.mode = PmtMode::boundary_abel;
  e.damped = damped;
  e.default_sigma = 0.0;
  return e;
}

const std::vector<std::string> kNames = {
    "rational",     "gaussian",  "scaled_gaussian", "perturbed_exp",
    "incomplete_gamma", "monomial", "log_gaussian", "geometric",
    "alternating",  "hurwitz",   "dirichlet_l",     "sine",
    "cosine",       "polylog",   "alternating_polylog", "complex_shift"};

int int_param(const Params& p, const std::string& key, int fallback, int lo) {
  const double v = param(p, key, fallback);
  if (v != std::round(v) || v < lo)
    throw Error(ErrorKind::InvalidArgument, key + " must be an integer >= " + std::to_string(lo));
  return static_cast<int>(v);
}

double positive_param(const Params& p, const std::string& key, double fallback) {
  const double v = param(p, key, fallback);
  if (!(v > 0.0) || !std::isfinite(v))
    throw Error(ErrorKind::InvalidArgument, key + " must be > 0");
  return v;
}

}  // namespace

void AbelSchedule::validate() const {
  if (epsilons.empty()) throw Error(ErrorKind::InvalidSpec, "Abel schedule is empty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw Error(ErrorKind::InvalidSpec, "Abel epsilons must be > 0");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw Error(ErrorKind::InvalidSpec, "Abel epsilons must be strictly decreasing");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidSpec, "Abel tolerance must be > 0");
}

const std::vector<std::string>& entry_names() { return kNames; }

WeightEntry make_entry(const std::string& name, const Params& p) {
  if (name == "rational") {
    auto e = absolute_entry(
        name, "Rational", [](Complex u) { return 1.0 / (1.0 - u); },
        [](Complex) { return Complex{kPi, 0.0}; }, {{-1.0, 0.0}, {-0.5, 0.5}, {1.0, 2.0}}, 0.5);
    e.sigma_hi = 1.0;
    e.map = LineMap::sinh;
    // u f(u) = f(u) - 1 and the transform of 1 vanishes, so 𝒫(z+1) = 𝒫(z);
    // the integral itself only converges for Re(z) < 1/2.
    e.continuation = [](Complex z) {
      while (z.real() > -0.5) z -= 1.0;
      return z;
    };
    return e;
  }
  if (name == "gaussian") {
    return absolute_entry(
        name, "Gaussian", [](Complex u) { return std::exp(u); }, big_g_closed,
        {{0.0, 0.0}, {0.3, 0.7}, {-1.5, 0.5}}, 1.0);
  }
  if (name == "scaled_gaussian") {
    const double alpha = positive_param(p, "alpha", 2.0);
    auto e = absolute_entry(
        name, "Scaled Gaussian", [alpha](Complex u) { return std::exp(alpha * u); },
        [alpha](Complex z) { return cpow(alpha, -(z + 0.5)) * big_g_closed(z); },
        {{0.0, 0.0}, {0.3, 0.7}, {-1.0, -0.5}}, 1.0);
    e.params = {{"alpha", alpha}};
    return e;
  }
  if (name == "perturbed_exp") {
    const double lambda = positive_param(p, "lambda", 1.0);
    auto e = absolute_entry(
        name, "Perturbed Exp.",
        [lambda](Complex u) { return std::exp(0.5 * u - lambda * std::sqrt(u)); },
        [lambda](Complex z) -> Complex {
          const double order = 2.0 * z.real();
          if (z.imag() != 0.0 || order < 0.0 || order != std::round(order))
            throw Error(ErrorKind::InvalidArgument,
                        "perturbed_exp closed form is only available for 2z = 0, 1, 2, ...");
          return std::sqrt(2.0 * kPi) * std::exp(-lambda * lambda / 4.0) *
                 parabolic_cylinder_int(static_cast<int>(order), lambda);
        },
        {{0.0, 0.0}, {0.5, 0.0}, {1.5, 0.0}}, 1.0);
    e.params = {{"lambda", lambda}};
    return e;
  }
  if (name == "incomplete_gamma") {
    const double nu = positive_param(p, "nu", 2.0);
    const double lambda = positive_param(p, "lambda", 1.0);
    auto e = boundary_entry(
        name, "Incomplete Gamma",
        [nu, lambda](Complex u) {
          return Complex{incomplete_gamma_upper(nu, lambda * negative_real(u, "incomplete_gamma")), 0.0};
        },
        [nu, lambda](Complex z) {
          const Complex s = z + 0.5;
          return std::sin(kPi * s) / s * cpow(lambda, -s) * gamma_reference(nu + s);
        },
        {{0.0, 0.0}, {0.25, 0.0}, {1.0, 0.5}}, false);
    e.params = {{"nu", nu}, {"lambda", lambda}};
    return e;
  }
  if (name == "monomial") {
    const int k = int_param(p, "k", 1, 0);
    auto e = absolute_entry(
        name, "Monomial", [k](Complex u) { return std::pow(u, k) * std::exp(u); },
        [k](Complex z) { return big_g_closed(z + double(k)); },
        {{0.0, 0.0}, {0.3, 0.7}, {-1.5, 0.5}}, 1.0);
    e.params = {{"k", double(k)}};
    return e;
  }
  if (name == "log_gaussian") {
    return absolute_entry(
        name, "Log-Gaussian", [](Complex u) { return std::exp(u) * std::log(u); },
        [](Complex z) { return big_g_closed(z) * digamma_reference(0.5 - z); },
        {{0.0, 0.0}, {0.25, 0.5}, {-1.0, 1.0}}, 1.0);
  }
  if (name == "geometric") {
    auto e = absolute_entry(
        name, "Geometric", [](Complex u) { return std::exp(u) / (1.0 - std::exp(u)); },
        [](Complex z) { return big_g_closed(z) * series_oracle(z + 0.5); },
        {{0.0, 0.0}, {1.0, 0.0}, {-0.25, 2.0}}, 1.7);
    e.sigma_hi = sigma_limit(ZetaFamily::R);
    return e;
  }
  if (name == "alternating") {
    auto e = absolute_entry(
        name, "Alternating", [](Complex u) { return std::exp(u) / (1.0 + std::exp(u)); },
        [](Complex z) {
          const Complex s = z + 0.5;
          return big_g_closed(z) * (1.0 - cpow(2.0, 1.0 - s)) * series_oracle(s);
        },
        {{0.0, 0.0}, {1.0, 0.0}, {-0.25, 2.0}}, 1.2);
    e.sigma_hi = sigma_limit(ZetaFamily::D);
    return e;
  }
  if (name == "hurwitz") {
    const double a = positive_param(p, "a", 0.5);
    auto e = absolute_entry(
        name, "Hurwitz",
        [a](Complex u) { return std::exp(a * u) / (1.0 - std::exp(u)); },
        [a](Complex z) { return big_g_closed(z) * hurwitz_reference(z + 0.5, a); },
        {{0.0, 0.0}, {2.0, 0.0}, {0.5, 1.0}}, 1.7);
    e.sigma_hi = sigma_limit(ZetaFamily::R);
    e.params = {{"a", a}};
    return e;
  }
  if (name == "dirichlet_l") {
    // χ the non-principal character mod 4 and k = 0: Σ χ(n) e^{nu} = 1/(2 cosh u)
    return boundary_entry(
        name, "Dirichlet L", [](Complex u) { return 0.5 / std::cosh(u); },
        [](Complex z) { return big_g_closed(z) * dirichlet_beta(z + 0.5); },
        {{0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}}, false);
  }
  if (name == "sine") {
    return boundary_entry(
        name, "Sine", [](Complex u) { return std::sin(u); },
        [](Complex z) { return -big_g_closed(z) * std::sin(kPi * (z + 0.5) / 2.0); },
        {{0.0, 0.0}, {0.25, 0.0}, {1.0, 0.5}}, true);
  }
  if (name == "cosine") {
    return boundary_entry(
        name, "Cosine", [](Complex u) { return std::cos(u); },
        [](Complex z) { return big_g_closed(z) * std::cos(kPi * (z + 0.5) / 2.0); },
        {{0.0, 0.0}, {0.25, 0.0}, {1.0, 0.5}}, true);
  }
  if (name == "polylog") {
    const int k = int_param(p, "k", 1, 1);
    auto e = boundary_entry(
        name, "Polylogarithms",
        [k](Complex u) { return Complex{polylog_exp(k, negative_real(u, "polylog")), 0.0}; },
        [k](Complex z) { return big_g_closed(z) * series_oracle(z + 0.5 + double(k)); },
        {{0.0, 0.0}, {0.25, 0.0}, {1.0, 1.0}}, false);
    e.params = {{"k", double(k)}};
    return e;
  }
  if (name == "alternating_polylog") {
    const int k = int_param(p, "k", 1, 1);
    auto e = boundary_entry(
        name, "Polylogarithms",
        [k](Complex u) {
          return Complex{polylog_alt_exp(k, negative_real(u, "alternating_polylog")), 0.0};
        },
        [k](Complex z) {
          const Complex s = z + 0.5 + double(k);
          return -big_g_closed(z) * (1.0 - cpow(2.0, 1.0 - s)) * series_oracle(s);
        },
        {{0.0, 0.0}, {0.25, 0.0}, {1.0, 1.0}}, false);
    e.params = {{"k", double(k)}};
    return e;
  }
  if (name == "complex_shift") {
    const int k = int_param(p, "k", 2, 1);
    auto e = boundary_entry(
        name, "Polylogarithms",
        [k](Complex u) {
          const double mu = negative_real(u, "complex_shift");
          return std::exp(Complex{0.0, -mu}) * polylog_exp(k, mu);
        },
        [k](Complex z) { return big_g_closed(z) * complex_shift_series(k, z + 0.5); },
        {{0.0, 0.0}, {0.25, 0.0}, {1.0, 0.0}}, false);
    e.params = {{"k", double(k)}};
    return e;
  }
  throw Error(ErrorKind::UnknownEntry, "unknown dictionary entry '" + name + "'");
}

std::size_t table_row_count() {
  std::vector<std::string> rows;
  for (const auto& n : kNames) {
    const std::string row = make_entry(n).table_row;
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
  }
  return rows.size();
}

QuadResult parabolic_transform(const WeightFn& f, Complex z, const ContourSpec& cfg, LineMap map) {
  cfg.validate();
  const double sigma = cfg.sigma;
  const Complex e = 2.0 * z;
  LineIntegrand g = [&](double t) {
    const Complex w{sigma, t};
    return std::exp(e * std::log(w)) * f(w * w);
  };
  ContourSpec spec = cfg;
  spec.map = map;
  if (!spec.truncation) {
    // algebraic tails under the sinh map need a wide scan in t
    const double ceiling = map == LineMap::sinh ? 1e15 : 1e4;
    spec.truncation = auto_truncation(g, spec.tol, 8.0, map, ceiling);
  }
  return integrate_line(g, spec);
}

QuadResult boundary_integral(const WeightFn& f, Complex z, double eps, double tol) {
  if (!(z.real() > -0.5))
    throw Error(ErrorKind::InvalidArgument, "boundary transform needs Re(z) > -1/2");
  if (eps < 0.0) throw Error(ErrorKind::InvalidArgument, "damping must be >= 0");
  const Complex e = 2.0 * z;
  // t = log(1 + e^x) maps the half-line onto ℝ; near t = 0 it behaves like
  // e^x, which absorbs the t^{2z} kink.
  LineIntegrand g = [&](double x) -> Complex {
    const double t = x > 35.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
    if (t == 0.0) return {0.0, 0.0};
    const double jac = 1.0 / (1.0 + std::exp(-x));
    const double t2 = t * t;
    const double damp = eps > 0.0 ? std::exp(-eps * t2) : 1.0;
    if (damp == 0.0) return {0.0, 0.0};
    return std::exp(e * std::log(t)) * f(Complex{-t2, 0.0}) * (jac * damp);
  };
  const double threshold = 0.1 * tol;
  const double lo = decay_point(g, 0.0, -1.0, threshold, 2000.0);
  const double hi = decay_point(g, 0.0, +1.0, threshold, 2000.0);
  ContourSpec spec;
  spec.step = 0.25;
  spec.tol = tol;
  spec.rel_tol = 1e-13;
  spec.max_nodes = std::size_t{1} << 22;
  spec.threads = worker_count();
  QuadResult r = integrate_interval(g, std::min(lo, -1.0) - 0.5, std::max(hi, 1.0) + 0.5, spec);
  const Complex c = 2.0 * std::cos(kPi * z);
  r.value *= c;
  r.err_est *= std::abs(c);
  r.l1_norm *= std::abs(c);
  r.sigma_used = 0.0;
  return r;
}

QuadResult abel_limit(const WeightFn& f, Complex z, const AbelSchedule& schedule) {
  schedule.validate();
  const auto& eps = schedule.epsilons;
  const std::size_t n = eps.size();
  std::vector<Complex> values(n);
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const QuadResult r = boundary_integral(f, z, eps[i], schedule.tol);
    values[i] = r.value;
    nodes += r.nodes;
  }
  if (schedule.extrapolation == AbelSchedule::Extrapolation::last || n == 1)
    return {values.back(), n > 1 ? std::abs(values[n - 1] - values[n - 2]) : 0.0, nodes, 0.0, 0.0};

  // Neville at eps = 0; estimates[k] uses the first k + 1 points.
  std::vector<Complex> p = values;
  std::vector<Complex> estimates{values[0]};
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      p[i] = (eps[i] * p[i + 1] - eps[i + k] * p[i]) / (eps[i] - eps[i + k]);
    }
    estimates.push_back(p[0]);
  }
  double prev_diff = kInf;
  double diff = 0.0;
  for (std::size_t k = 1; k < estimates.size(); ++k) {
    diff = std::abs(estimates[k] - estimates[k - 1]);
    const double floor = 100.0 * schedule.tol * std::max(1.0, std::abs(estimates[k]));
    if (k >= 2 && diff > prev_diff && diff > floor)
      throw Error(ErrorKind::ExtrapolationDivergence,
                  "Abel extrapolants do not settle as eps decreases");
    prev_diff = diff;
  }
  return {estimates.back(), diff, nodes, 0.0, 0.0};
}

QuadResult pmt_eval(const WeightEntry& entry, Complex z, std::optional<ContourSpec> cfg) {
  if (entry.mode != PmtMode::absolute)
    throw Error(ErrorKind::InvalidSpec, entry.name + " is a boundary entry; use pmt_boundary");
  ContourSpec spec;
  if (cfg) {
    spec = *cfg;
  } else {
    spec.sigma = entry.default_sigma;
    spec.tol = 1e-12;
    spec.rel_tol = 1e-14;
  }
  if (!(spec.sigma > entry.sigma_lo && spec.sigma < entry.sigma_hi))
    throw Error(ErrorKind::SigmaOutOfWindow, "sigma outside the window of " + entry.name);
  const Complex zz = entry.continuation ? entry.continuation(z) : z;
  return parabolic_transform(entry.weight, zz, spec, entry.map);
}

QuadResult pmt_boundary(const WeightEntry& entry, Complex z, const AbelSchedule& schedule) {
  if (entry.mode != PmtMode::boundary_abel)
    throw Error(ErrorKind::InvalidSpec, entry.name + " is an absolute entry; use pmt_eval");
  if (!entry.damped) return boundary_integral(entry.weight, z, 0.0, schedule.tol);
  return abel_limit(entry.weight, z, schedule);
}

QuadResult pmt_evaluate(const WeightEntry& entry, Complex z) {
  return entry.mode == PmtMode::absolute ? pmt_eval(entry, z) : pmt_boundary(entry, z);
}

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

void VerificationReport::require_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) {
      throw Error(ErrorKind::PropertyViolation,
                  r.name + ": deviation " + std::to_string(r.abs_dev) + " exceeds " +
                      std::to_string(r.tol) + (r.note.empty() ? "" : " (" + r.note + ")"));
    }
  }
}

void VerificationReport::append(const VerificationReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string VerificationReport::to_json() const {
  using nlohmann::json;
  auto cplx = [](Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; };
  json out = json::array();
  for (const auto& r : rows) {
    json j{{"name", r.name},
           {"z", cplx(r.z)},
           {"computed", cplx(r.computed)},
           {"expected", cplx(r.expected)},
           {"abs_dev", r.abs_dev},
           {"rel_dev", r.rel_dev},
           {"tol", r.tol},
           {"pass", r.pass}};
    if (!r.table_row.empty()) j["table_row"] = r.table_row;
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out.dump();
}

VerificationRow compare(std::string name, Complex z, Complex computed, Complex expected,
                        double tol) {
  VerificationRow row;
  row.name = std::move(name);
  row.z = z;
  row.computed = computed;
  row.expected = expected;
  row.abs_dev = std::abs(computed - expected);
  row.rel_dev = std::abs(expected) > 0.0 ? row.abs_dev / std::abs(expected) : row.abs_dev;
  row.tol = tol;
  row.pass = std::isfinite(row.abs_dev) && row.abs_dev <= tol * std::max(1.0, std::abs(expected));
  return row;
}

VerificationReport dictionary_verify(const std::vector<std::string>& names,
                                     const std::vector<Complex>& z_samples) {
  std::vector<WeightEntry> entries;
  for (const auto& n : names.empty() ? kNames : names) entries.push_back(make_entry(n));

  VerificationReport report;
  for (const auto& e : entries) {
    const double tol = e.mode == PmtMode::absolute ? kAbsoluteRowTol : kBoundaryRowTol;
    for (const Complex z : z_samples.empty() ? e.z_samples : z_samples) {
      VerificationRow row;
      try {
        const Complex expected = e.expected(z);
        const QuadResult r = pmt_evaluate(e, z);
        row = compare(e.name, z, r.value, expected, tol);
      } catch (const Error& err) {
        row.name = e.name;
        row.z = z;
        row.tol = tol;
        row.abs_dev = kInf;
        row.rel_dev = kInf;
        row.note = std::string(to_string(err.kind())) + ": " + err.what();
      }
      row.table_row = e.table_row;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

Complex classical_mellin(const std::function<Complex(double)>& g, Complex s, double tol) {
  const Complex e = s;
  LineIntegrand f = [&](double v) { return std::exp(e * v) * g(std::exp(v)); };
  ContourSpec spec;
  spec.tol = tol;
  spec.rel_tol = 1e-14;
  spec.truncation = auto_truncation(f, tol, 8.0, LineMap::identity, 1e3);
  return integrate_line(f, spec).value;
}

}  // namespace pmt
