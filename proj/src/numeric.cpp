#include "ehverify/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ehverify/error.hpp"

namespace ehverify {

namespace {

double cubic_value(double p, double q, double t) { return (t * t + p) * t + q; }

// One or two guarded Newton steps; keeps the iterate only when the residual
// strictly improves, so multiple roots are left where the closed form put them.
double polish_root(double p, double q, double t) {
  for (int i = 0; i < 2; ++i) {
    const double ft = cubic_value(p, q, t);
    const double dft = 3.0 * t * t + p;
    if (ft == 0.0 || dft == 0.0) break;
    const double cand = t - ft / dft;
    if (!std::isfinite(cand) || std::abs(cubic_value(p, q, cand)) >= std::abs(ft)) break;
    t = cand;
  }
  return t;
}

}  // namespace

CubicRoots solve_depressed_cubic(double p, double q, double tol) {
  if (!std::isfinite(p) || !std::isfinite(q) || !(tol > 0.0))
    fail("invalid-argument", "solve_depressed_cubic: p, q finite and tol > 0 required");

  CubicRoots out;
  out.discriminant = p * p * p / 27.0 + q * q / 4.0;

  if (out.discriminant > 0.0) {
    out.branch = CubicBranch::CardanoReal;
    const double s = std::sqrt(out.discriminant);
    const double t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
    out.roots = {polish_root(p, q, t)};
  } else {
    out.branch = CubicBranch::Trigonometric;
    if (p == 0.0) {
      // discriminant <= 0 with p = 0 forces q = 0: triple root at the origin
      out.roots = {0.0, 0.0, 0.0};
    } else {
      const double m = 2.0 * std::sqrt(-p / 3.0);
      const double arg =
          std::clamp(-3.0 * q * std::sqrt(-3.0 * p) / (2.0 * p * p), -1.0, 1.0);
      const double alpha = std::acos(arg);  // in [0, pi]
      out.roots.resize(3);
      for (int k = 0; k < 3; ++k)
        out.roots[k] = polish_root(p, q, m * std::cos((alpha - 2.0 * M_PI * k) / 3.0));
      std::sort(out.roots.begin(), out.roots.end(), std::greater<>());
    }
  }

  for (const double t : out.roots) {
    const double bound = tol * (1.0 + std::abs(t * t * t));
    if (!(std::abs(cubic_value(p, q, t)) <= bound))
      fail("no-convergence", "solve_depressed_cubic: residual bound violated");
  }
  return out;
}

double bisect_largest_root(const std::function<double(double)>& fn, double lo,
                           double hi, double tol, int grid) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi) || !(tol > 0.0))
    fail("invalid-argument", "bisect_largest_root: need finite lo < hi and tol > 0");
  grid = std::max(grid, 2);

  // Walk the grid downward from hi so the first bracket found is the largest;
  // everything already passed is known positive.
  double above_x = hi;
  double above_v = fn(hi);
  if (!std::isfinite(above_v))
    fail("invalid-argument", "bisect_largest_root: fn(hi) not finite");
  if (above_v == 0.0) return hi;
  if (above_v < 0.0)
    fail("no-root", "bisect_largest_root: fn(hi) < 0, no positive tail");

  double a = 0.0, b = 0.0;
  bool bracketed = false;
  for (int i = grid - 1; i >= 0; --i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / grid;
    const double v = fn(x);
    if (!std::isfinite(v))
      fail("invalid-argument", "bisect_largest_root: fn not finite on grid");
    if (v == 0.0) return x;  // root on a grid point, fn > 0 above it
    if (v < 0.0) {
      a = x;
      b = above_x;
      bracketed = true;
      break;
    }
    above_x = x;
    above_v = v;
  }
  if (!bracketed) fail("no-root", "bisect_largest_root: no sign change on grid");

  double mid = 0.5 * (a + b);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (a + b);
    const double v = fn(mid);
    if (v == 0.0) return mid;
    if (v < 0.0)
      a = mid;
    else
      b = mid;
    const double eps = std::numeric_limits<double>::epsilon();
    if (b - a <= 4.0 * eps * std::max(1.0, std::abs(mid))) break;
  }
  mid = 0.5 * (a + b);
  if (!(std::abs(fn(mid)) <= tol))
    fail("no-convergence", "bisect_largest_root: |fn| above tol at the bisection limit");
  return mid;
}

double fd_derivative(const std::function<double(double)>& fn, double r, int order,
                     double domain_lo, double domain_hi) {
  if (order != 1 && order != 2)
    fail("invalid-argument", "fd_derivative: order must be 1 or 2");
  if (!std::isfinite(r)) fail("invalid-argument", "fd_derivative: r must be finite");

  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(1.0, std::abs(r));
  double h = (order == 1 ? std::cbrt(eps) : std::pow(eps, 0.25)) * scale;
  // Snap h so that r + h and r - h are exactly representable offsets.
  volatile double probe = r + h;
  h = probe - r;
  if (h == 0.0) fail("invalid-argument", "fd_derivative: step underflow");

  if (r - h <= domain_lo || r + h >= domain_hi)
    fail("too-close-to-boundary", "fd_derivative: stencil leaves the domain");

  const auto stencil = [&](double hh) {
    if (order == 1) return (fn(r + hh) - fn(r - hh)) / (2.0 * hh);
    return (fn(r + hh) - 2.0 * fn(r) + fn(r - hh)) / (hh * hh);
  };
  // Both stencils are O(h^2); one Richardson step removes the leading term.
  const double coarse = stencil(h);
  const double fine = stencil(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

ExtrapolationResult extrapolate_limit(const std::vector<Sample>& samples,
                                      int inverse_power) {
  if (samples.size() < 3)
    fail("insufficient-samples", "extrapolate_limit: need at least 3 samples");
  if (inverse_power < 1)
    fail("invalid-argument", "extrapolate_limit: inverse_power must be >= 1");

  const size_t n = samples.size();
  std::vector<double> u(n), t(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& s = samples[i];
    if (!(s.x > 0.0) || !std::isfinite(s.x) || !std::isfinite(s.value))
      fail("invalid-argument", "extrapolate_limit: samples must be finite with x > 0");
    if (i > 0 && !(s.x > samples[i - 1].x))
      fail("invalid-argument", "extrapolate_limit: x must be strictly increasing");
    u[i] = std::pow(s.x, -inverse_power);
    t[i] = s.value;
  }

  // Neville tableau evaluated at u = 0; t[n-1] walks down the diagonal.
  double previous_diagonal = t[n - 1];
  for (size_t j = 1; j < n; ++j) {
    if (j == n - 1) previous_diagonal = t[n - 1];
    for (size_t i = n - 1; i >= j; --i) {
      t[i] = (u[i - j] * t[i] - u[i] * t[i - 1]) / (u[i - j] - u[i]);
      if (i == j) break;
    }
  }

  ExtrapolationResult out;
  out.limit = t[n - 1];
  out.error_estimate = std::abs(t[n - 1] - previous_diagonal);
  out.samples_used = static_cast<int>(n);
  return out;
}

}  // namespace ehverify
