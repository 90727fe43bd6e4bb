#include <cmath>
#include <numbers>

#include "pmt/errors.hpp"
#include "pmt/gamma.hpp"
#include "pmt/pmt.hpp"
#include "pmt/zeta.hpp"

namespace pmt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPropertyTol = 1e-6;
constexpr double kConvolutionTol = 1e-4;

const std::vector<std::string> kPropertyNames = {
    "linearity",   "scaling",     "monomial_shift", "differentiation",
    "dirichlet_composition", "mellin_link", "convolution", "inversion"};

Complex cpow(Complex base, Complex e) { return std::exp(e * std::log(base)); }

ContourSpec line(double sigma) {
  ContourSpec spec;
  spec.sigma = sigma;
  spec.tol = 1e-12;
  spec.rel_tol = 1e-14;
  return spec;
}

Complex transform(const WeightFn& f, Complex z, double sigma = 1.0) {
  return parabolic_transform(f, z, line(sigma)).value;
}

Complex gauss(Complex u) { return std::exp(u); }

std::vector<Complex> samples_or(const PropertyOptions& o, std::vector<Complex> fallback) {
  return o.z_samples.empty() ? fallback : o.z_samples;
}

std::string label(const std::string& base, const std::string& detail) {
  return detail.empty() ? base : base + "[" + detail + "]";
}

std::string fmt(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

// (e^u ⋆ e^u)(-t²) = ∫_0^∞ e^{-y - t²/y} dy/y; with y = t e^x this is
// ∫ e^{-2t cosh x} dx.
Complex gaussian_self_convolution(Complex u) {
  if (u.imag() != 0.0 || !(u.real() < 0.0))
    throw Error(ErrorKind::InvalidArgument, "convolution weight is evaluated on u < 0 only");
  const double t = std::sqrt(-u.real());
  LineIntegrand inner = [t](double x) { return Complex{std::exp(-2.0 * t * std::cosh(x)), 0.0}; };
  ContourSpec spec;
  spec.step = 0.5;
  spec.tol = 1e-14;
  spec.rel_tol = 1e-15;
  spec.truncation = std::acosh(std::max(1.0, 19.0 / t)) + 0.5;
  return integrate_line(inner, spec).value;
}

}  // namespace

const std::vector<std::string>& property_names() { return kPropertyNames; }

Property parse_property(const std::string& name) {
  for (std::size_t i = 0; i < kPropertyNames.size(); ++i)
    if (kPropertyNames[i] == name) return static_cast<Property>(i);
  throw Error(ErrorKind::UnknownEntry, "unknown property '" + name + "'");
}

std::string to_string(Property p) { return kPropertyNames.at(static_cast<std::size_t>(p)); }

VerificationReport property_verify(Property property, const PropertyOptions& o) {
  VerificationReport rep;
  const std::string name = to_string(property);
  auto add = [&](const std::string& detail, Complex z, Complex lhs, Complex rhs, double tol) {
    rep.rows.push_back(compare(label(name, detail), z, lhs, rhs, tol));
  };

  switch (property) {
    case Property::linearity: {
      auto combo = [](Complex u) { return 2.0 * std::exp(u) + 3.0 * u * std::exp(u); };
      auto shifted = [](Complex u) { return u * std::exp(u); };
      for (Complex z : samples_or(o, {{0.0, 0.0}, {0.3, 0.7}, {-1.0, 0.5}}))
        add("", z, transform(combo, z), 2.0 * transform(gauss, z) + 3.0 * transform(shifted, z),
            kPropertyTol);
      break;
    }
    case Property::scaling: {
      for (double alpha : {0.5, 2.0, 3.0, 4.0}) {
        auto scaled = [alpha](Complex u) { return std::exp(alpha * u); };
        for (Complex z : samples_or(o, {{0.0, 0.0}, {0.3, 0.7}, {-1.0, 0.5}}))
          add("alpha=" + fmt(alpha), z, transform(scaled, z),
              cpow(alpha, -(z + 0.5)) * transform(gauss, z), kPropertyTol);
      }
      break;
    }
    case Property::monomial_shift: {
      for (int k : {1, 2}) {
        auto mono = [k](Complex u) { return std::pow(u, k) * std::exp(u); };
        for (Complex z : samples_or(o, {{0.0, 0.0}, {0.3, 0.7}, {-1.5, 0.5}}))
          add("k=" + std::to_string(k), z, transform(mono, z), big_g(z + double(k)).value,
              kPropertyTol);
      }
      break;
    }
    case Property::differentiation: {
      constexpr double h = 1e-4;
      auto logw = [](Complex u) { return std::exp(u) * std::log(u); };
      for (Complex z : samples_or(o, {{0.0, 0.0}, {0.3, 0.4}, {-0.7, 0.0}}))
        add("", z, transform(logw, z), (big_g(z + h).value - big_g(z - h).value) / (2.0 * h),
            kPropertyTol);
      break;
    }
    case Property::dirichlet_composition: {
      auto geo = [](Complex u) { return std::exp(u) / (1.0 - std::exp(u)); };
      for (Complex z : samples_or(o, {{1.0, 0.0}, {0.8, 0.5}, {2.2, 0.0}}))
        add("", z, transform(geo, z, 1.7), big_g_closed(z) * series_oracle(z + 0.5), kPropertyTol);
      break;
    }
    case Property::mellin_link: {
      // convention: 𝒫[f](z) = cos(πz) ℳ[x ↦ f(-x)](z + 1/2)
      for (Complex z : samples_or(o, {{0.0, 0.0}, {0.5, 0.5}, {1.2, 0.0}})) {
        const Complex rhs =
            std::cos(kPi * z) *
            classical_mellin([](double x) { return Complex{std::exp(-x), 0.0}; }, z + 0.5);
        add("gaussian", z, transform(gauss, z), rhs, kPropertyTol);
      }
      auto geo = [](Complex u) { return std::exp(u) / (1.0 - std::exp(u)); };
      for (Complex z : samples_or(o, {{0.8, 0.0}, {1.0, 0.5}, {2.0, 0.0}})) {
        const Complex rhs =
            std::cos(kPi * z) *
            classical_mellin([](double x) { return Complex{1.0 / std::expm1(x), 0.0}; }, z + 0.5);
        add("geometric", z, transform(geo, z, 1.7), rhs, kPropertyTol);
      }
      break;
    }
    case Property::convolution: {
      for (Complex z : samples_or(o, {{0.0, 0.0}, {0.25, 0.0}, {0.3, 0.2}})) {
        const Complex lhs = boundary_integral(gaussian_self_convolution, z, 0.0, 1e-10).value;
        const Complex g = big_g(z).value;
        add("", z, lhs, g * g / std::cos(kPi * z), kConvolutionTol);
      }
      break;
    }
    case Property::inversion: {
      const double u = o.inversion_u;
      if (!(u < 0.0))
        throw Error(ErrorKind::InvalidArgument, "inversion is checked on the negative real axis");
      // z = iτ (γ = 0); F from quadrature, sec(πz) = 1/cosh(πτ)
      LineIntegrand f = [u](double tau) {
        const Complex z{0.0, tau};
        return big_g(z).value / std::cosh(kPi * tau) * cpow(-u, -(z + 0.5));
      };
      ContourSpec spec;
      spec.tol = 1e-12;
      spec.rel_tol = 1e-14;
      const Complex value = integrate_line(f, spec).value / (2.0 * kPi);
      add("u=" + fmt(u), Complex{0.0, 0.0}, value, std::exp(u), kPropertyTol);
      break;
    }
  }
  return rep;
}

}  // namespace pmt
