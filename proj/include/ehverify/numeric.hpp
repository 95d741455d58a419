#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace ehverify {

enum class CubicBranch {
  CardanoReal,    // positive discriminant: single real root
  Trigonometric,  // non-positive discriminant: three real roots
};

struct CubicRoots {
  double discriminant = 0.0;  // p^3/27 + q^2/4
  CubicBranch branch = CubicBranch::CardanoReal;
  std::vector<double> roots;  // descending, multiplicity preserved
};

/// Real roots of the depressed cubic t^3 + p t + q = 0.
/// Every returned root satisfies |t^3 + p t + q| <= tol * (1 + |t|^3).
CubicRoots solve_depressed_cubic(double p, double q, double tol = 1e-10);

/// Largest r* in [lo, hi] with fn(r*) = 0 and fn > 0 on (r*, hi],
/// located by a downward grid scan followed by bisection.
/// Throws "no-root" when no sign change exists on the grid.
double bisect_largest_root(const std::function<double(double)>& fn, double lo,
                           double hi, double tol = 1e-12, int grid = 1024);

/// Central finite difference with one Richardson refinement.
/// order = 1 or 2. Steps stay inside (domain_lo, domain_hi); a point within
/// one step of the boundary raises "too-close-to-boundary".
double fd_derivative(const std::function<double(double)>& fn, double r,
                     int order,
                     double domain_lo = -std::numeric_limits<double>::infinity(),
                     double domain_hi = std::numeric_limits<double>::infinity());

struct Sample {
  double x;
  double value;
};

struct ExtrapolationResult {
  double limit = 0.0;
  double error_estimate = 0.0;  // magnitude of the last tableau correction
  int samples_used = 0;
};

/// Neville extrapolation of samples(x) to x -> infinity, polynomial in
/// x^(-inverse_power). The default models even-power decay L + c1/x^2 + ...;
/// inverse_power = 1 fits {1, 1/x, 1/x^2, ...}. Requires >= 3 samples at
/// strictly increasing positive x ("insufficient-samples" otherwise).
ExtrapolationResult extrapolate_limit(const std::vector<Sample>& samples,
                                      int inverse_power = 2);

}  // namespace ehverify
