#include "pmt/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "pmt/errors.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_2 ... B_30
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

Complex lanczos_gamma(Complex s) {
  const Complex z = s - 1.0;
  Complex acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * acc;
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

// ζ(m) for m = 2 .. 95, computed once.
const std::array<double, 96>& zeta_integer_table() {
  static const std::array<double, 96> table = [] {
    std::array<double, 96> t{};
    for (int m = 2; m < 96; ++m) t[m] = hurwitz_reference(Complex{static_cast<double>(m), 0.0}, 1.0).real();
    return t;
  }();
  return table;
}

double zeta_even(int n) {
  // ζ(n) for even n >= 2 via |B_n|; used for B_n with n > 30.
  double acc = 0.0;
  for (int k = 1; k <= 64; ++k) acc += std::pow(static_cast<double>(k), -n);
  return acc;
}

}  // namespace

Complex gamma_reference(Complex s) {
  if (is_nonpositive_integer(s))
    throw Error(ErrorKind::Pole, "Γ has a pole at non-positive integers");
  if (s.real() < 0.5) {
    return kPi / (std::sin(kPi * s) * lanczos_gamma(1.0 - s));
  }
  return lanczos_gamma(s);
}

Complex digamma_reference(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()))
    throw Error(ErrorKind::Pole, "ψ has poles at the non-positive integers");
  if (z.real() < 0.5) {
    // ψ(z) = ψ(1 - z) - π cot(πz)
    return digamma_reference(1.0 - z) - kPi / std::tan(kPi * z);
  }
  Complex shift{0.0, 0.0};
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  // log z - 1/(2z) - Σ B_2k / (2k z^{2k})
  const Complex inv2 = 1.0 / (z * z);
  Complex pw = inv2;
  Complex tail{0.0, 0.0};
  for (int k = 1; k <= 8; ++k) {
    tail += kBernoulliEven[k - 1] / (2.0 * k) * pw;
    pw *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - tail;
}

double bernoulli_number(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Bernoulli index must be >= 0");
  if (n == 0) return 1.0;
  if (n == 1) return -0.5;
  if (n % 2 == 1) return 0.0;
  if (n / 2 - 1 < static_cast<int>(kBernoulliEven.size())) return kBernoulliEven[n / 2 - 1];
  // |B_2m| = 2 (2m)! ζ(2m) / (2π)^{2m}
  const double mag = 2.0 * std::exp(std::lgamma(n + 1.0) - n * std::log(2.0 * kPi)) * zeta_even(n);
  return (n / 2) % 2 == 1 ? mag : -mag;
}

Complex hurwitz_reference(Complex s, double a) {
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "Hurwitz shift a must be > 0");
  if (s == Complex{1.0, 0.0}) throw Error(ErrorKind::PoleAtOne, "ζ(s, a) has a pole at s = 1");
  // Sum the first N terms directly, then the Euler-Maclaurin tail at N + a.
  const int N = 24 + static_cast<int>(2.0 * std::abs(s));
  Complex head{0.0, 0.0};
  for (int n = N - 1; n >= 0; --n) head += std::exp(-s * std::log(n + a));
  const double x = N + a;
  const double logx = std::log(x);
  const Complex xs = std::exp(-s * logx);  // x^{-s}
  Complex tail = x * xs / (s - 1.0) + 0.5 * xs;
  // Σ_k B_2k/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1}
  Complex rising = s;  // s(s+1)...(s+2k-2)
  Complex power = xs / x;
  double factorial = 2.0;
  for (int k = 1; k <= 14; ++k) {
    const Complex term = kBernoulliEven[k - 1] / factorial * rising * power;
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(head + tail)) break;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power /= x * x;
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return head + tail;
}

Complex dirichlet_beta(Complex s) {
  return std::exp(-s * std::log(4.0)) * (hurwitz_reference(s, 0.25) - hurwitz_reference(s, 0.75));
}

double incomplete_gamma_upper(double nu, double x) {
  if (!(nu > 0.0) || x < 0.0)
    throw Error(ErrorKind::InvalidArgument, "incomplete gamma needs nu > 0 and x >= 0");
  const double gamma_nu = std::tgamma(nu);
  if (x == 0.0) return gamma_nu;
  const double prefactor = std::exp(-x + nu * std::log(x) - std::lgamma(nu));
  if (x < nu + 1.0) {
    // P(nu, x) series
    double ap = nu;
    double del = 1.0 / nu;
    double sum = del;
    for (int n = 0; n < 1000; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-17) break;
    }
    return gamma_nu * (1.0 - sum * prefactor);
  }
  // Q(nu, x) continued fraction, modified Lentz
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - nu;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - nu);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return gamma_nu * prefactor * h;
}

double polylog_exp(int k, double mu) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "polylog order must be >= 1");
  if (!(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "Li_k(e^{-mu}) needs mu > 0");
  if (k == 1) return -std::log(-std::expm1(-mu));
  if (mu > 1.0) {
    double acc = 0.0;
    for (int n = 1; n < 200; ++n) {
      const double term = std::exp(-n * mu) / std::pow(static_cast<double>(n), k);
      acc += term;
      if (term < 1e-18 * acc) break;
    }
    return acc;
  }
  // Li_k(e^{-mu}) = (-mu)^{k-1}/(k-1)! (H_{k-1} - ln mu) + Σ_{j != k-1} ζ(k-j) (-mu)^j / j!
  double harmonic = 0.0;
  for (int i = 1; i <= k - 1; ++i) harmonic += 1.0 / i;
  double acc = std::pow(-mu, k - 1) / std::tgamma(static_cast<double>(k)) * (harmonic - std::log(mu));
  double power = 1.0;  // (-mu)^j / j!
  for (int j = 0; j < 90 && k - j > -90; ++j) {
    if (j > 0) power *= -mu / j;
    if (j == k - 1) continue;
    const int m = k - j;
    double zeta_m;
    if (m >= 2) {
      zeta_m = zeta_integer_table()[m];
    } else if (m == 0) {
      zeta_m = -0.5;
    } else {
      // ζ(-n) = (-1)^n B_{n+1} / (n+1)
      const int n = -m;
      zeta_m = ((n % 2 == 0) ? 1.0 : -1.0) * bernoulli_number(n + 1) / (n + 1);
    }
    const double term = zeta_m * power;
    acc += term;
    if (j > k + 4 && std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

double polylog_alt_exp(int k, double mu) {
  if (mu == 0.0) {
    // Li_k(-1) = -η(k)
    if (k == 1) return -std::log(2.0);
    const double zk = hurwitz_reference(Complex{static_cast<double>(k), 0.0}, 1.0).real();
    return -(1.0 - std::pow(2.0, 1.0 - k)) * zk;
  }
  // Li_k(-q) = 2^{1-k} Li_k(q^2) - Li_k(q)
  return std::pow(2.0, 1.0 - k) * polylog_exp(k, 2.0 * mu) - polylog_exp(k, mu);
}

double parabolic_cylinder_int(int n, double x) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "parabolic cylinder order must be >= 0");
  const double d0 = std::exp(-0.25 * x * x);
  if (n == 0) return d0;
  double prev = d0;
  double cur = x * d0;
  for (int k = 1; k < n; ++k) {
    const double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace pmt
