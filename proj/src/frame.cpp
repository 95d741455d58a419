#include "ehverify/frame.hpp"

#include <cmath>

#include "ehverify/error.hpp"
#include "ehverify/numeric.hpp"

namespace ehverify {

namespace {

RadialFunction radial_identity() {
  return {[](double r, int k) {
    if (k == 0) return r;
    return k == 1 ? 1.0 : 0.0;
  }};
}

// c = r f and derivatives from f's.
RadialFunction radial_times(const RadialFunction& f) {
  return {[f](double r, int k) {
    if (k == 0) return r * f(r, 0);
    if (k == 1) return f(r, 0) + r * f(r, 1);
    return 2.0 * f(r, 1) + r * f(r, 2);
  }};
}

RadialFunction profile_f(const RadialProfile& profile) {
  return {[profile](double r, int k) { return eval(profile, r, k); }};
}

RadialFunction profile_f_fd(const RadialProfile& profile) {
  const double lo = profile.r_min;
  return {[profile, lo](double r, int k) {
    if (k == 0) return eval(profile, r, 0);
    const auto value = [profile](double x) { return eval(profile, x, 0); };
    return fd_derivative(value, r, k, lo);
  }};
}

// u = sqrt(1 + B r^2) and derivatives.
RadialFunction sqrt_conformal(double B) {
  return {[B](double r, int k) {
    const double s = std::sqrt(1.0 + B * r * r);
    if (k == 0) return s;
    if (k == 1) return B * r / s;
    return B / (s * s * s);
  }};
}

// u = sqrt(1 + B r^2) f(r) and derivatives.
RadialFunction sqrt_conformal_times(double B, const RadialFunction& f) {
  return {[B, f](double r, int k) {
    const double s = std::sqrt(1.0 + B * r * r);
    const double s1 = B * r / s;
    if (k == 0) return s * f(r, 0);
    if (k == 1) return s1 * f(r, 0) + s * f(r, 1);
    const double s2 = B / (s * s * s);
    return s2 * f(r, 0) + 2.0 * s1 * f(r, 1) + s * f(r, 2);
  }};
}

BiaxialMetric assemble_metric(const RadialProfile& profile, const RadialFunction& f) {
  BiaxialMetric metric;
  metric.domain_start = profile.r_min;
  metric.b = radial_identity();
  metric.c = radial_times(f);
  switch (profile.family) {
    case Family::Hyperbolic:
      metric.u = sqrt_conformal(profile.B);
      metric.c = radial_identity();
      break;
    case Family::TypeII:
      metric.u = sqrt_conformal_times(profile.B, f);
      break;
    default:
      metric.u = f;
      break;
  }
  return metric;
}

struct FrameData {
  double u, u1, b, b1, b2, c, c1, c2;
  double P, Q, S, T;      // connection coefficients
  double P1, Q1, S1, T1;  // radial derivatives
};

FrameData frame_data(const BiaxialMetric& metric, double r) {
  if (!(r > metric.domain_start))
    fail("outside-domain", "frame: r must lie beyond the domain start");
  FrameData d{};
  d.u = metric.u(r, 0);
  d.u1 = metric.u(r, 1);
  d.b = metric.b(r, 0);
  d.b1 = metric.b(r, 1);
  d.b2 = metric.b(r, 2);
  d.c = metric.c(r, 0);
  d.c1 = metric.c(r, 1);
  d.c2 = metric.c(r, 2);
  if (!(d.b > 0.0) || !(d.c > 0.0) || !(d.u > 0.0))
    fail("outside-domain", "frame: u, b, c must be positive");

  d.P = d.u * d.b1 / d.b;
  d.Q = d.u * d.c1 / d.c;
  d.S = d.c / (d.b * d.b);
  d.T = 2.0 / d.c - d.S;

  d.P1 = d.u1 * d.b1 / d.b + d.u * d.b2 / d.b - d.u * d.b1 * d.b1 / (d.b * d.b);
  d.Q1 = d.u1 * d.c1 / d.c + d.u * d.c2 / d.c - d.u * d.c1 * d.c1 / (d.c * d.c);
  d.S1 = d.c1 / (d.b * d.b) - 2.0 * d.c * d.b1 / (d.b * d.b * d.b);
  d.T1 = -2.0 * d.c1 / (d.c * d.c) - d.S1;
  return d;
}

}  // namespace

BiaxialMetric make_metric(const RadialProfile& profile) {
  return assemble_metric(profile, profile_f(profile));
}

BiaxialMetric make_metric_fd(const RadialProfile& profile) {
  return assemble_metric(profile, profile_f_fd(profile));
}

ConnectionCoefficients connection(const BiaxialMetric& metric, double r) {
  const FrameData d = frame_data(metric, r);
  return {d.P, d.P, d.Q, d.S, d.S, d.T};
}

double CurvatureFrame::sectional(int i, int j) const {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
    fail("invalid-argument", "sectional: need distinct one-based frame indices");
  // K_ij = R_{ijij} = -R^j_{iij} with the metric the frame identity.
  return riemann[i - 1][j - 1][i - 1][j - 1];
}

CurvatureFrame curvature(const BiaxialMetric& metric, double r) {
  const FrameData d = frame_data(metric, r);

  // Curvature two-forms from the structure equations; each has exactly two
  // frame components for this ansatz.
  const double X = d.u * (d.P1 + d.P * d.b1 / d.b);
  const double Y = 2.0 * d.P / d.c - d.T * d.P - d.S * d.Q;
  const double Z1 = d.u * (d.Q1 + d.Q * d.c1 / d.c);
  const double Z2 = 2.0 * d.Q * d.c / (d.b * d.b) - 2.0 * d.S * d.P;
  const double M = d.u * (d.S1 + d.S * d.b1 / d.b);
  const double N = 2.0 * d.S / d.c - d.P * d.Q - d.T * d.S;
  const double V = d.u * (d.T1 + d.T * d.c1 / d.c);
  const double W = 2.0 * d.T * d.c / (d.b * d.b) - d.P * d.P - d.S * d.S;

  CurvatureFrame out;
  out.r = r;
  out.conn = {d.P, d.P, d.Q, d.S, d.S, d.T};

  const auto set = [&out](int i, int j, int k, int l, double value) {
    // one-based (i j | k l); fills the antisymmetries in both index pairs
    out.riemann[i - 1][j - 1][k - 1][l - 1] = value;
    out.riemann[i - 1][j - 1][l - 1][k - 1] = -value;
    out.riemann[j - 1][i - 1][k - 1][l - 1] = -value;
    out.riemann[j - 1][i - 1][l - 1][k - 1] = value;
  };

  set(2, 1, 1, 2, X);
  set(2, 1, 3, 4, Y);
  set(3, 1, 1, 3, X);
  set(3, 1, 4, 2, Y);
  set(4, 1, 1, 4, Z1);
  set(4, 1, 2, 3, Z2);
  set(3, 4, 1, 2, M);
  set(3, 4, 3, 4, N);
  set(4, 2, 1, 3, M);
  set(4, 2, 4, 2, N);
  set(2, 3, 1, 4, V);
  set(2, 3, 2, 3, W);

  for (int i = 0; i < 4; ++i) {
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += out.riemann[k][i][k][i];
    out.ricci_diag[i] = sum;
    out.scalar += sum;
  }
  return out;
}

double scalar_ode_residual(const RadialProfile& profile, double r) {
  if (!(r > 0.0)) fail("singular-radius", "scalar_ode_residual: r must be positive");
  const double B = profile.B;
  const double r2 = r * r;
  const double fsq = eval_fsq(profile, r, 0);
  const double d1 = eval_fsq(profile, r, 1);
  const double d2 = eval_fsq(profile, r, 2);

  switch (profile.family) {
    case Family::TypeI: {
      const double lhs = -d2 - 7.0 / r * d1 - 8.0 / r2 * (fsq - 1.0);
      return lhs - (-24.0 * B);
    }
    case Family::TypeII: {
      const double lhs = -((1.0 + B * r2) * d2 + (7.0 / r + 8.0 * B * r) * d1 +
                           (8.0 / r2 + 12.0 * B) * fsq - 8.0 / r2);
      return lhs - (-12.0 * B);
    }
    case Family::ClassicEH:
    case Family::ZeroScalar: {
      // scalar-flat members of the TypeI-shaped ansatz with B = 0 there
      const double lhs = -d2 - 7.0 / r * d1 - 8.0 / r2 * (fsq - 1.0);
      return lhs;
    }
    case Family::Hyperbolic: {
      // constant-curvature reference: engine scalar must equal -12B
      const BiaxialMetric metric = make_metric(profile);
      return curvature(metric, r).scalar - (-12.0 * B);
    }
  }
  fail("invalid-argument", "scalar_ode_residual: unknown family");
}

namespace {

// Orthogonal bases of self-dual / anti-self-dual two-forms, rows (i, j, sign):
// sd_a = (e^1^e^a+1 + dual) / sqrt(2), asd likewise with the minus sign.
struct TwoForm {
  double comp[4][4] = {};
};

TwoForm dual_basis_form(int a, double sign) {
  // a = 0,1,2 pairs (1,2)&(3,4), (1,3)&(4,2), (1,4)&(2,3), one-based
  static const int pair[3][4][2] = {
      {{1, 2}, {3, 4}, {0, 0}, {0, 0}},
      {{1, 3}, {4, 2}, {0, 0}, {0, 0}},
      {{1, 4}, {2, 3}, {0, 0}, {0, 0}},
  };
  TwoForm w;
  const double inv = 1.0 / std::sqrt(2.0);
  const int i0 = pair[a][0][0] - 1, j0 = pair[a][0][1] - 1;
  const int i1 = pair[a][1][0] - 1, j1 = pair[a][1][1] - 1;
  w.comp[i0][j0] = inv;
  w.comp[j0][i0] = -inv;
  w.comp[i1][j1] = sign * inv;
  w.comp[j1][i1] = -sign * inv;
  return w;
}

}  // namespace

WeylDualNorms weyl_dual_norms(const BiaxialMetric& metric, double r) {
  const CurvatureFrame frame = curvature(metric, r);

  // Weyl in the orthonormal frame, dimension four.
  double weyl[4][4][4][4];
  const auto& R = frame.riemann;
  const auto ric = [&](int i, int j) {
    if (i != j) return 0.0;  // Ricci is diagonal for this ansatz
    return frame.ricci_diag[i];
  };
  const auto kron = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          weyl[i][j][k][l] =
              R[i][j][k][l] -
              0.5 * (kron(i, k) * ric(j, l) - kron(i, l) * ric(j, k) +
                     kron(j, l) * ric(i, k) - kron(j, k) * ric(i, l)) +
              frame.scalar / 6.0 *
                  (kron(i, k) * kron(j, l) - kron(i, l) * kron(j, k));
        }

  // Weyl as an operator on two-forms: (W om)_ij = 1/2 W_ijkl om_kl,
  // projected onto the dual bases; <al, be> = 1/2 al_ij be_ij.
  const auto block_norm = [&](double sign) {
    double sum = 0.0;
    for (int a = 0; a < 3; ++a) {
      const TwoForm fa = dual_basis_form(a, sign);
      for (int b = 0; b < 3; ++b) {
        const TwoForm fb = dual_basis_form(b, sign);
        double entry = 0.0;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
              for (int l = 0; l < 4; ++l)
                entry += 0.25 * fa.comp[i][j] * weyl[i][j][k][l] * fb.comp[k][l];
        sum += entry * entry;
      }
    }
    return std::sqrt(sum);
  };

  return {block_norm(+1.0), block_norm(-1.0)};
}

double weyl_asd_residual(const BiaxialMetric& metric, double r,
                         bool flip_orientation) {
  const WeylDualNorms norms = weyl_dual_norms(metric, r);
  return flip_orientation ? norms.asd_norm : norms.sd_norm;
}

Curvature5D curvature_5d(const BiaxialMetric& metric, const RadialFunction& lapse,
                         double r) {
  const FrameData d = frame_data(metric, r);
  const double v = lapse(r, 0);
  if (!(v > 0.0)) fail("degenerate-lapse", "curvature_5d: lapse must be positive");
  const double v1 = lapse(r, 1);
  const double v2 = lapse(r, 2);

  Curvature5D out;
  const double usq = d.u * d.u;
  out.r0i0i[0] = -(v2 * usq + v1 * d.u1 * d.u) / v;
  out.r0i0i[1] = -(v1 * usq / v) * (d.b1 / d.b);
  out.r0i0i[2] = out.r0i0i[1];
  out.r0i0i[3] = -(v1 * usq / v) * (d.c1 / d.c);

  out.ricci_00 = -(out.r0i0i[0] + out.r0i0i[1] + out.r0i0i[2] + out.r0i0i[3]);

  const CurvatureFrame base = curvature(metric, r);
  for (int i = 0; i < 4; ++i) out.ricci_diag[i] = base.ricci_diag[i] + out.r0i0i[i];
  return out;
}

}  // namespace ehverify
