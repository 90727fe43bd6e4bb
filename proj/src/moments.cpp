#include "pmt/moments.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "pmt/errors.hpp"
#include "pmt/special.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;

// Window used for bounded oscillating integrands: T = 1e4 with an erfc
// roll-off; a hard cut there would leave an O(T^{-Re r - 1}) ripple.
constexpr double kOscTruncation = 1e4;
constexpr double kOscTaper = 10.0;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Complex cpow(Complex base, Complex e) { return std::exp(e * std::log(base)); }

void check_order(Complex r) {
  if (!(r.real() > 0.0))
    throw Error(ErrorKind::InvalidOrder, "absolute moments need Re(r) > 0");
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

QuadResult integrate_moment(const LineIntegrand& f, MgfTail tail, double sigma, double tol,
                            double taper = kOscTaper) {
  ContourSpec spec;
  spec.sigma = sigma;
  spec.tol = tol;
  spec.rel_tol = 1e-14;
  switch (tail) {
    case MgfTail::gaussian:
      break;
    case MgfTail::algebraic:
      spec.map = LineMap::sinh;
      spec.truncation = auto_truncation(f, tol, 8.0, LineMap::sinh, 1e15);
      break;
    case MgfTail::oscillatory:
      spec.truncation = kOscTruncation;
      spec.taper = taper;
      spec.step = 1.0;
      spec.max_nodes = std::size_t{1} << 21;
      spec.threads = worker_count();
      break;
  }
  return integrate_line(f, spec);
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL));
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

MgfSpec normal_dist(double mu, double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "normal scale must be > 0");
  MgfSpec d;
  d.name = "normal";
  d.mgf = [mu, s](Complex w) { return std::exp(mu * w + 0.5 * s * s * w * w); };
  d.tail = MgfTail::gaussian;
  d.sampler = [mu, s](std::uint64_t seed, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; i += 2) {
      const double u1 = counter_uniform(seed, i);
      const double u2 = counter_uniform(seed, i + 1);
      const double rad = std::sqrt(-2.0 * std::log(u1));
      out[i] = mu + s * rad * std::cos(2.0 * kPi * u2);
      if (i + 1 < n) out[i + 1] = mu + s * rad * std::sin(2.0 * kPi * u2);
    }
    return out;
  };
  if (mu == 0.0) {
    d.closed_form = [s](Complex r) {
      return cpow(s, r) * cpow(2.0, r / 2.0) * gamma_reference((r + 1.0) / 2.0) / std::sqrt(kPi);
    };
  }
  return d;
}

MgfSpec laplace_dist(double b) {
  if (!(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "laplace scale must be > 0");
  MgfSpec d;
  d.name = "laplace";
  d.mgf = [b](Complex w) { return 1.0 / (1.0 - b * b * w * w); };
  d.sigma_max = 1.0 / b;
  d.tail = MgfTail::algebraic;
  d.sampler = [b](std::uint64_t seed, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = counter_uniform(seed, i) - 0.5;
      out[i] = -b * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
    }
    return out;
  };
  d.closed_form = [b](Complex r) { return cpow(b, r) * gamma_reference(r + 1.0); };
  return d;
}

MgfSpec bernoulli_dist() {
  MgfSpec d;
  d.name = "bernoulli";
  d.mgf = [](Complex w) { return std::cosh(w); };
  d.tail = MgfTail::oscillatory;
  d.sampler = [](std::uint64_t seed, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = counter_uniform(seed, i) < 0.5 ? -1.0 : 1.0;
    return out;
  };
  d.closed_form = [](Complex) { return Complex{1.0, 0.0}; };
  return d;
}

MgfSpec uniform_dist() {
  MgfSpec d;
  d.name = "uniform";
  d.mgf = [](Complex w) -> Complex {
    if (std::abs(w) < 1e-4) {
      const Complex w2 = w * w;
      return 1.0 + w2 / 6.0 + w2 * w2 / 120.0;
    }
    return std::sinh(w) / w;
  };
  d.tail = MgfTail::oscillatory;
  d.sampler = [](std::uint64_t seed, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = 2.0 * counter_uniform(seed, i) - 1.0;
    return out;
  };
  d.closed_form = [](Complex r) { return 1.0 / (r + 1.0); };
  return d;
}

const std::vector<std::string>& distribution_names() {
  static const std::vector<std::string> names = {"normal", "laplace", "bernoulli", "uniform"};
  return names;
}

MgfSpec make_distribution(const std::string& name, double scale) {
  if (name == "normal") return normal_dist(0.0, scale);
  if (name == "laplace") return laplace_dist(scale);
  if (name == "bernoulli") return bernoulli_dist();
  if (name == "uniform") return uniform_dist();
  throw Error(ErrorKind::UnknownEntry, "unknown distribution '" + name + "'");
}

MomentResult absolute_moment(const MgfSpec& dist, Complex r, std::optional<double> sigma,
                             double tol) {
  check_order(r);
  const double s = sigma.value_or(dist.default_sigma());
  if (!(s > 0.0) || !(s < dist.sigma_max))
    throw Error(ErrorKind::SigmaExceedsDomain, "sigma must lie in (0, sigma_max) of " + dist.name);
  const Complex e = -(r + 1.0);
  LineIntegrand f = [&](double t) {
    const Complex w{s, t};
    return (dist.mgf(w) + dist.mgf(-w)) * std::exp(e * std::log(w));
  };
  const QuadResult q = integrate_moment(f, dist.tail, s, tol);
  const Complex scale = gamma_reference(r + 1.0) / (2.0 * kPi);
  return {scale * q.value, std::abs(scale) * q.err_est, q.nodes, s, q.l1_norm};
}

double abs_power_check(double x, Complex r, double sigma) {
  if (x == 0.0) throw Error(ErrorKind::ZeroArgument, "the identity needs x != 0");
  check_order(r);
  const Complex e = -(r + 1.0);
  LineIntegrand f = [&](double t) {
    const Complex w{sigma, t};
    return (std::exp(w * x) + std::exp(-w * x)) * std::exp(e * std::log(w));
  };
  // the oscillation frequency is |x|; widen the roll-off for slow ones
  const double taper = std::min(kOscTruncation / 20.0, kOscTaper * std::max(1.0, 1.0 / std::abs(x)));
  const QuadResult q = integrate_moment(f, MgfTail::oscillatory, sigma, 1e-12, taper);
  const Complex value = gamma_reference(r + 1.0) / (2.0 * kPi) * q.value;
  return std::abs(value - cpow(std::abs(x), r));
}

double fubini_bound(const MgfSpec& dist, Complex r, double sigma) {
  const double a = r.real();
  const double m = std::abs(dist.mgf(sigma)) + std::abs(dist.mgf(-sigma));
  return std::exp(kPi * std::abs(r.imag())) * m * std::sqrt(kPi) * std::tgamma(a / 2.0) /
         (std::pow(sigma, a) * std::tgamma((a + 1.0) / 2.0));
}

MonteCarloResult monte_carlo_moment(const MgfSpec& dist, Complex r, std::size_t n,
                                    std::uint64_t seed) {
  if (!dist.sampler) throw Error(ErrorKind::NoSampler, dist.name + " has no sampler");
  check_order(r);
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Monte Carlo needs n >= 2");
  const std::vector<double> xs = dist.sampler(seed, n);
  std::vector<Complex> ys(n);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = std::abs(xs[i]);
    ys[i] = ax == 0.0 ? Complex{0.0, 0.0} : std::exp(r * std::log(ax));
    sum += ys[i];
  }
  const Complex mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (const Complex& y : ys) ss += std::norm(y - mean);
  return {mean, std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1)))};
}

}  // namespace pmt
