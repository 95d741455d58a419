#pragma once

// Independent numeric oracles and fixture generators shared by the test
// binaries. Everything here deliberately avoids the library's own closed
// forms: quadrature instead of the volume formula, bisection instead of the
// root formulas, finite differences instead of analytic derivatives.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "ehverify/families.hpp"

namespace oracles {

inline bool near(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool near_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Composite Simpson on [a, b]; panels must be even.
inline double simpson(const std::function<double(double)>& fn, double a,
                      double b, int panels) {
  const double h = (b - a) / panels;
  double acc = fn(a) + fn(b);
  for (int i = 1; i < panels; ++i)
    acc += fn(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Volume of the fiber quotient by quadrature of the coframe volume form
// (1/8) sin(theta) over theta in [0, pi], phi in [0, 2 pi], psi in
// [0, 4 pi / n]. The angular factors are constant, so only the theta
// integral needs panels.
inline double quotient_volume_quadrature(int n) {
  const double pi = std::acos(-1.0);
  const double theta = simpson([](double t) { return std::sin(t); }, 0.0, pi, 512);
  return 0.125 * theta * (2.0 * pi) * (4.0 * pi / n);
}

// Uniform draw helpers with a caller-owned engine so every test seeds its own.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random admissible parameters. B spans two decades around 1; C is drawn
// inside the family's admissible region with some margin from the boundary.
inline ehverify::FamilySpec random_type1(std::mt19937_64& rng) {
  const double B = uniform(rng, 0.1, 10.0);
  const int n = uniform_int(rng, 3, 8);
  const double bound = (n - 2.0) * (n - 2.0) / (12.0 * B);
  const double C = uniform(rng, -2.0, bound);
  return ehverify::type1_construct(B, n, C);
}

inline ehverify::FamilySpec random_type2(std::mt19937_64& rng) {
  // draws stay in C <= C2, the region where a smooth bolt exists; beyond C4
  // the squared radius equation has only a spurious sign branch and
  // construction refuses
  const double B = uniform(rng, 0.1, 10.0);
  const int n = uniform_int(rng, 3, 8);
  const auto k = ehverify::type2_constants(B, n, 0.0);
  const double C = uniform(rng, std::min(-2.0, 2.0 * k.C1), k.C2);
  return ehverify::type2_construct(B, n, C);
}

// Log-spaced radii in [lo, hi].
inline std::vector<double> log_radii(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  return out;
}

}  // namespace oracles
