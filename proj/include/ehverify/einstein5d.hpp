#pragma once

#include <vector>

#include "ehverify/families.hpp"
#include "ehverify/frame.hpp"

namespace ehverify {

enum class LapseKind {
  AffineR2,     // v = (c1/2) r^2 + c2
  SqrtBr2,      // v = c1 sqrt(1 + B r^2) + c2
};

/// Static metric -v^2 dt^2 + g over a constructed base, with the
/// cosmological constant the base's scalar curvature demands (-6B).
struct StaticExtension {
  FamilySpec base;
  LapseKind lapse = LapseKind::SqrtBr2;
  double c1 = 1.0;
  double c2 = 0.0;
  double lambda = 0.0;  // -6B
};

StaticExtension make_affine_extension(const FamilySpec& base, double c1, double c2);
StaticExtension make_sqrt_extension(const FamilySpec& base, double c1, double c2);

RadialFunction lapse_function(const StaticExtension& ext);

/// max_i |R~_ii - (2/3) lambda g~_ii| in the 5D orthonormal frame at r
/// (g~_00 = -1, spatial identity).
double einstein_residual(const StaticExtension& ext, double r);

/// Max of the pointwise residual over a radius list.
double einstein_residual(const StaticExtension& ext,
                         const std::vector<double>& radii);

/// Log-spaced radii in (r0, span * max(r0, scale)] used by the report samplers.
std::vector<double> report_radii(const FamilySpec& base, int count = 64,
                                 double span = 100.0);

/// TypeI: residuals of the two lapse constraints for v = (c1/2) r^2 + c2.
/// The first (radial/fiber equality) vanishes identically for this v; the
/// second couples (B, C, A) to (c1, c2) and forces c1 = 0, after which the
/// time-time component cannot reach its Einstein value (defect 4B).
struct Type1ObstructionReport {
  std::vector<double> radii;
  std::vector<double> lapse_ode_residual;   // f^2 v'' - (f^2/r) v'
  std::vector<double> angular_residual;     // (f f') v' - (4C/r^4) v
  double max_lapse_ode_residual = 0.0;
  double max_angular_residual = 0.0;
  double constant_lapse_defect = 0.0;       // einstein residual with v = 1
};

Type1ObstructionReport type1_obstruction_report(const FamilySpec& base,
                                                double c1, double c2);

/// TypeII: v = c1 sqrt(1+B r^2) + c2 solves the lapse equation for every
/// (c1, c2); the remaining algebraic constraint C (4+3B r^2) c1 - 4 A c2
/// vanishes identically only when C = 0 and c2 = 0.
struct Type2UniquenessReport {
  std::vector<double> radii;
  std::vector<double> lapse_ode_residual;   // h^2 v'' - (h^2/r + f' h^2/f - h' h) v'
  std::vector<double> constraint;           // C (4+3B r^2) c1 - 4 A c2
  double max_lapse_ode_residual = 0.0;
  double max_constraint = 0.0;
  bool constraint_identically_zero = false;
  double max_einstein_residual = 0.0;       // full 5D defect with this lapse
};

Type2UniquenessReport type2_uniqueness_report(const FamilySpec& base,
                                              double c1, double c2);

}  // namespace ehverify
