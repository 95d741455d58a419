#include "ehverify/einstein5d.hpp"

#include <algorithm>
#include <cmath>

#include "ehverify/error.hpp"

namespace ehverify {

namespace {

StaticExtension make_extension(const FamilySpec& base, LapseKind kind, double c1,
                               double c2) {
  StaticExtension ext;
  ext.base = base;
  ext.lapse = kind;
  ext.c1 = c1;
  ext.c2 = c2;
  ext.lambda = -6.0 * base.B;
  return ext;
}

}  // namespace

StaticExtension make_affine_extension(const FamilySpec& base, double c1, double c2) {
  return make_extension(base, LapseKind::AffineR2, c1, c2);
}

StaticExtension make_sqrt_extension(const FamilySpec& base, double c1, double c2) {
  return make_extension(base, LapseKind::SqrtBr2, c1, c2);
}

RadialFunction lapse_function(const StaticExtension& ext) {
  const double c1 = ext.c1;
  const double c2 = ext.c2;
  if (ext.lapse == LapseKind::AffineR2) {
    return {[c1, c2](double r, int k) {
      if (k == 0) return 0.5 * c1 * r * r + c2;
      if (k == 1) return c1 * r;
      return c1;
    }};
  }
  const double B = ext.base.B;
  return {[B, c1, c2](double r, int k) {
    const double s = std::sqrt(1.0 + B * r * r);
    if (k == 0) return c1 * s + c2;
    if (k == 1) return c1 * B * r / s;
    return c1 * B / (s * s * s);
  }};
}

double einstein_residual(const StaticExtension& ext, double r) {
  const BiaxialMetric metric = make_metric(profile(ext.base));
  const Curvature5D curv = curvature_5d(metric, lapse_function(ext), r);
  const double target = 2.0 / 3.0 * ext.lambda;
  // frame components: R~_00 must equal target * g~_00 = -target
  double defect = std::abs(curv.ricci_00 + target);
  for (int i = 0; i < 4; ++i)
    defect = std::max(defect, std::abs(curv.ricci_diag[i] - target));
  return defect;
}

double einstein_residual(const StaticExtension& ext,
                         const std::vector<double>& radii) {
  double defect = 0.0;
  for (double r : radii) defect = std::max(defect, einstein_residual(ext, r));
  return defect;
}

std::vector<double> report_radii(const FamilySpec& base, int count, double span) {
  if (count < 2) fail("invalid-argument", "report_radii: count >= 2");
  const double lo = std::max(base.r0 * 1.05, 1e-3);
  const double hi = span * std::max({base.r0, 1.0, 1.0 / std::sqrt(base.B)});
  std::vector<double> radii(count);
  for (int i = 0; i < count; ++i)
    radii[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  return radii;
}

Type1ObstructionReport type1_obstruction_report(const FamilySpec& base, double c1,
                                                double c2) {
  if (base.family != Family::TypeI)
    fail("invalid-argument", "type1_obstruction_report: TypeI base required");
  const RadialProfile prof = profile(base);
  const StaticExtension ext = make_affine_extension(base, c1, c2);
  const RadialFunction v = lapse_function(ext);

  Type1ObstructionReport report;
  report.radii = report_radii(base);
  for (const double r : report.radii) {
    const double fsq = eval_fsq(prof, r, 0);
    const double ffp = 0.5 * eval_fsq(prof, r, 1);  // f f'
    const double ode = fsq * v(r, 2) - fsq / r * v(r, 1);
    const double angular = ffp * v(r, 1) - 4.0 * base.C / std::pow(r, 4) * v(r, 0);
    report.lapse_ode_residual.push_back(ode);
    report.angular_residual.push_back(angular);
    report.max_lapse_ode_residual =
        std::max(report.max_lapse_ode_residual, std::abs(ode));
    report.max_angular_residual =
        std::max(report.max_angular_residual, std::abs(angular));
  }

  // both constraints hold only with a constant lapse, whose time-time
  // curvature vanishes instead of reaching (2/3)|lambda|
  const StaticExtension constant = make_affine_extension(base, 0.0, 1.0);
  double defect = 0.0;
  const BiaxialMetric metric = make_metric(prof);
  for (const double r : report.radii) {
    const Curvature5D curv = curvature_5d(metric, lapse_function(constant), r);
    defect = std::max(defect, std::abs(curv.ricci_00 + 2.0 / 3.0 * ext.lambda));
  }
  report.constant_lapse_defect = defect;
  return report;
}

Type2UniquenessReport type2_uniqueness_report(const FamilySpec& base, double c1,
                                              double c2) {
  if (base.family != Family::TypeII)
    fail("invalid-argument", "type2_uniqueness_report: TypeII base required");
  const RadialProfile prof = profile(base);
  const StaticExtension ext = make_sqrt_extension(base, c1, c2);
  const RadialFunction v = lapse_function(ext);
  const double B = base.B;

  Type2UniquenessReport report;
  report.radii = report_radii(base);
  double constraint_scale = 0.0;
  for (const double r : report.radii) {
    const double f = eval(prof, r, 0);
    const double f1 = eval(prof, r, 1);
    const double s = std::sqrt(1.0 + B * r * r);
    const double h = s * f;  // 5D radial frame factor
    const double hsq = h * h;
    const double h1h = B * r * f * f + 0.5 * (1.0 + B * r * r) * 2.0 * f * f1;
    const double ode =
        hsq * v(r, 2) - (hsq / r + f1 * hsq / f - h1h) * v(r, 1);
    const double constraint =
        base.C * (4.0 + 3.0 * B * r * r) * c1 - 4.0 * base.A * c2;
    report.lapse_ode_residual.push_back(ode);
    report.constraint.push_back(constraint);
    report.max_lapse_ode_residual =
        std::max(report.max_lapse_ode_residual, std::abs(ode));
    report.max_constraint = std::max(report.max_constraint, std::abs(constraint));
    constraint_scale = std::max(
        constraint_scale, std::abs(base.C * (4.0 + 3.0 * B * r * r) * c1) +
                              std::abs(4.0 * base.A * c2));
    report.max_einstein_residual =
        std::max(report.max_einstein_residual, einstein_residual(ext, r));
  }
  report.constraint_identically_zero =
      report.max_constraint <= 1e-12 * (1.0 + constraint_scale);
  return report;
}

}  // namespace ehverify
