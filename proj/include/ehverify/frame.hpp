#pragma once

#include <array>
#include <functional>

#include "ehverify/profiles.hpp"

namespace ehverify {

/// A radial function together with its first two derivatives: eval(r, k).
struct RadialFunction {
  std::function<double(double, int)> eval;
  double operator()(double r, int k = 0) const { return eval(r, k); }
};

/// Orthonormal coframe data for g = u^-2 dr^2 + b^2 (s1^2 + s2^2) + c^2 s3^2
/// on a Bianchi IX base with ds1 = 2 s2 ^ s3 (cyclic).
struct BiaxialMetric {
  RadialFunction u, b, c;
  double domain_start = 0.0;
};

/// Frame instantiation of a profile: ClassicEH/ZeroScalar/TypeI use
/// (u, b, c) = (f, r, r f); TypeII uses (sqrt(1+B r^2) f, r, r f);
/// Hyperbolic uses (sqrt(1+B r^2), r, r).
BiaxialMetric make_metric(const RadialProfile& profile);

/// Same instantiation, but f' and f'' replaced by fd_derivative of f.
/// Serves as the independent derivative route for cross-checks.
BiaxialMetric make_metric_fd(const RadialProfile& profile);

/// Nonzero connection one-form coefficients on the legs they multiply:
/// w21 = w31 = u b'/b, w41 = u c'/c, w34 = w42 = c/b^2, w23 = 2/c - c/b^2.
struct ConnectionCoefficients {
  double w21, w31, w41, w34, w42, w23;
};

ConnectionCoefficients connection(const BiaxialMetric& metric, double r);

/// Full orthonormal-frame curvature at one radius.
struct CurvatureFrame {
  double r = 0.0;
  ConnectionCoefficients conn{};
  double riemann[4][4][4][4] = {};  // R^i_{jkl}, zero-based frame indices
  std::array<double, 4> ricci_diag{};
  double scalar = 0.0;

  /// Sectional curvature of the frame plane (i, j), one-based indices.
  double sectional(int i, int j) const;
};

CurvatureFrame curvature(const BiaxialMetric& metric, double r);

/// Residual of the family's displayed scalar-curvature identity at r
/// (scalar minus its constant target; identically the ODE defect).
double scalar_ode_residual(const RadialProfile& profile, double r);

struct WeylDualNorms {
  double sd_norm;   // Frobenius norm of the self-dual Weyl block
  double asd_norm;  // Frobenius norm of the anti-self-dual Weyl block
};

/// Both dual-part norms for orientation e1^e2^e3^e4.
WeylDualNorms weyl_dual_norms(const BiaxialMetric& metric, double r);

/// Norm of the self-dual Weyl block (the part that vanishes for the
/// anti-self-dual reference metric); flip_orientation swaps the blocks.
double weyl_asd_residual(const BiaxialMetric& metric, double r,
                         bool flip_orientation = false);

/// Static extension g~ = -v^2 dt^2 + g: frame curvature blocks that involve
/// the time leg, plus the 5D Ricci diagonal assembled from the 4D one.
struct Curvature5D {
  std::array<double, 4> r0i0i{};  // R~^0_{i 0 i}, i = 1..4 (array index i-1)
  double ricci_00 = 0.0;          // R~_00 frame component
  std::array<double, 4> ricci_diag{};
};

Curvature5D curvature_5d(const BiaxialMetric& metric, const RadialFunction& lapse,
                         double r);

}  // namespace ehverify
