#include "pmt/contour.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <span>
#include <sstream>
#include <thread>
#include <vector>

#include "pmt/errors.hpp"

namespace pmt {
namespace {

constexpr std::size_t kParallelThreshold = 4096;
constexpr std::size_t kLeafBlock = 16;

// Fixed-shape tree reduction: the association order depends only on the
// length of the input, never on how the values were produced.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.size() <= kLeafBlock) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Fills out[i] = g(x0 + i * dx) for i in [0, out.size()).
void evaluate_nodes(const LineIntegrand& g, double x0, double dx,
                    std::span<Complex> out, unsigned threads) {
  const std::size_t n = out.size();
  if (threads <= 1 || n < kParallelThreshold) {
    for (std::size_t i = 0; i < n; ++i) out[i] = g(x0 + static_cast<double>(i) * dx);
    return;
  }
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n / 1024));
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&, lo, hi, w] {
        try {
          for (std::size_t i = lo; i < hi; ++i) out[i] = g(x0 + static_cast<double>(i) * dx);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
}

struct Level {
  Complex integral;
  double l1;
};

Level trapezoid(std::span<const Complex> values, double h) {
  const Complex ends = 0.5 * (values.front() + values.back());
  const Complex sum = pairwise_sum(values) - ends;
  std::vector<double> mags(values.size());
  std::transform(values.begin(), values.end(), mags.begin(),
                 [](const Complex& v) { return std::abs(v); });
  const double l1 = pairwise_sum(std::span<const double>(mags)) -
                    0.5 * (mags.front() + mags.back());
  return {sum * h, l1 * h};
}

LineIntegrand guarded(const LineIntegrand& f) {
  return [&f](double x) -> Complex {
    Complex v;
    try {
      v = f(x);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IntegrandFailure) throw;
      throw Error(ErrorKind::IntegrandFailure,
                  "integrand failed at " + std::to_string(x) + ": " + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite integrand value at " << x;
      throw Error(ErrorKind::IntegrandFailure, os.str());
    }
    return v;
  };
}

}  // namespace

void ContourSpec::validate(bool allow_boundary) const {
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); };
  if (!std::isfinite(sigma) || sigma < 0.0) bad("sigma must be >= 0");
  if (sigma == 0.0 && !allow_boundary) bad("sigma = 0 is only valid in boundary mode");
  if (truncation && !(*truncation > 0.0)) bad("truncation must be > 0");
  if (!(step > 0.0)) bad("step must be > 0");
  if (!(tol > 0.0)) bad("tol must be > 0");
  if (rel_tol < 0.0) bad("rel_tol must be >= 0");
  if (max_nodes < 16) bad("max_nodes must be >= 16");
  if (taper < 0.0) bad("taper must be >= 0");
}

Complex principal_power(Complex w, Complex e) {
  if (w == Complex{0.0, 0.0}) {
    if (e.real() > 0.0) return {0.0, 0.0};
    throw Error(ErrorKind::ZeroBase, "0 raised to an exponent with Re <= 0");
  }
  if (w.imag() == 0.0 && w.real() < 0.0)
    throw Error(ErrorKind::BranchCut, "base lies on the branch cut (-inf, 0]");
  return std::exp(e * std::log(w));
}

Complex map_to_parabola(double sigma, double t) {
  return {sigma * sigma - t * t, 2.0 * sigma * t};
}

QuadResult integrate_interval(const LineIntegrand& f, double a, double b,
                              const ContourSpec& spec) {
  spec.validate(true);
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
    throw Error(ErrorKind::InvalidSpec, "integration interval must satisfy a < b");

  const LineIntegrand g = guarded(f);
  std::size_t intervals =
      std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil((b - a) / spec.step)));
  if (intervals + 1 > spec.max_nodes)
    throw Error(ErrorKind::InvalidSpec, "initial node count exceeds max_nodes");
  double h = (b - a) / static_cast<double>(intervals);

  std::vector<Complex> values(intervals + 1);
  evaluate_nodes(g, a, h, values, spec.threads);
  Level prev = trapezoid(values, h);

  constexpr int kMinLevels = 2;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1;; ++level) {
    const std::size_t next_intervals = intervals * 2;
    if (next_intervals + 1 > spec.max_nodes) {
      std::ostringstream os;
      os.precision(3);
      os << "trapezoid did not converge within " << spec.max_nodes
         << " nodes (last difference " << err << ", tol " << spec.tol << ")";
      throw Error(ErrorKind::NoConvergence, os.str());
    }
    std::vector<Complex> odd(intervals);
    evaluate_nodes(g, a + 0.5 * h, h, odd, spec.threads);
    std::vector<Complex> merged(next_intervals + 1);
    for (std::size_t i = 0; i < intervals; ++i) {
      merged[2 * i] = values[i];
      merged[2 * i + 1] = odd[i];
    }
    merged.back() = values.back();
    values.swap(merged);
    intervals = next_intervals;
    h *= 0.5;

    const Level cur = trapezoid(values, h);
    err = std::abs(cur.integral - prev.integral);
    const double accept = std::max(spec.tol, spec.rel_tol * cur.l1);
    prev = cur;
    if (level >= kMinLevels && err <= accept) {
      return {cur.integral, err, values.size(), spec.sigma, cur.l1};
    }
  }
}

QuadResult integrate_line(const LineIntegrand& f, const ContourSpec& spec) {
  spec.validate(true);
  const double T =
      spec.truncation ? *spec.truncation : auto_truncation(f, spec.tol, 8.0, spec.map);
  const double L = spec.taper;
  if (L > 0.0 && T <= 10.0 * L)
    throw Error(ErrorKind::InvalidSpec, "taper width must be below T/10");
  const double taper_center = T - 5.0 * L;

  auto window = [&](double t) {
    return L > 0.0 ? 0.5 * std::erfc((std::abs(t) - taper_center) / L) : 1.0;
  };

  if (spec.map == LineMap::sinh) {
    const double X = std::asinh(T);
    LineIntegrand g = [&](double x) {
      const double t = std::sinh(x);
      return f(t) * (std::cosh(x) * window(t));
    };
    return integrate_interval(g, -X, X, spec);
  }
  if (L > 0.0) {
    LineIntegrand g = [&](double t) { return f(t) * window(t); };
    return integrate_interval(g, -T, T, spec);
  }
  return integrate_interval(f, -T, T, spec);
}

double decay_point(const LineIntegrand& f, double start, double direction,
                   double threshold, double ceiling) {
  constexpr double kProbe = 0.125;
  double last_above = start;
  bool seen_above = false;
  for (double d = 0.0; d <= ceiling; d += kProbe) {
    const double x = start + direction * d;
    const double mag = std::abs(f(x));
    if (!(mag < threshold)) {  // NaN counts as "not yet decayed"
      last_above = x;
      seen_above = true;
    } else {
      const double since = std::abs(x - last_above);
      const double reach = std::abs(last_above - start);
      if (since > std::max(4.0, 0.5 * reach)) return seen_above ? last_above : start;
    }
  }
  // ran into the ceiling: a shorter quiet stretch is accepted there
  if (std::abs(start + direction * ceiling - last_above) > 4.0) return last_above;
  throw Error(ErrorKind::InvalidSpec, "integrand does not decay within the scan range");
}

double auto_truncation(const LineIntegrand& f, double tol, double floor, LineMap map,
                       double ceiling) {
  const double threshold = 0.1 * tol;
  if (map == LineMap::sinh) {
    LineIntegrand g = [&](double x) { return f(std::sinh(x)) * std::cosh(x); };
    const double xmax = std::asinh(ceiling);
    const double hi = decay_point(g, 0.0, +1.0, threshold, xmax);
    const double lo = decay_point(g, 0.0, -1.0, threshold, xmax);
    const double X = std::max(hi, -lo) + 1.0;
    return std::max(floor, std::sinh(X));
  }
  const double hi = decay_point(f, 0.0, +1.0, threshold, ceiling);
  const double lo = decay_point(f, 0.0, -1.0, threshold, ceiling);
  return std::max(floor, std::max(hi, -lo) + 0.5);
}

ContourSpec vanishing_spec(double sigma) {
  ContourSpec spec;
  spec.sigma = sigma;
  spec.truncation = 1e4;
  spec.step = 0.25;
  spec.tol = 1e-9;
  spec.max_nodes = std::size_t{1} << 21;
  return spec;
}

double vanishing_residual(double x, Complex r, const ContourSpec& spec) {
  if (!(x > 0.0)) throw Error(ErrorKind::InvalidArgument, "vanishing identity needs x > 0");
  if (r.real() < 1.0)
    throw Error(ErrorKind::InvalidOrder, "vanishing check is restricted to Re(r) >= 1");
  spec.validate();
  const double sigma = spec.sigma;
  const Complex minus_exponent = -(r + 1.0);
  LineIntegrand f = [&](double t) {
    const Complex w{sigma, t};
    return std::exp(Complex{0.0, -t * x} + minus_exponent * std::log(w));
  };
  return std::abs(integrate_line(f, spec).value);
}

}  // namespace pmt
