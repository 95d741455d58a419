#pragma once

#include <string>

namespace ehverify {

enum class Family {
  ClassicEH,   // f^2 = 1 - B/r^4
  ZeroScalar,  // f^2 = 1 - 2A/r^2 - B/r^4
  TypeI,       // f^2 = 1 + C/r^2 + A/r^4 + B r^2
  TypeII,      // f^2 = 1 + sqrt(1+B r^2) C/r^4 + A/r^4
  Hyperbolic,  // f = 1
};

const char* family_name(Family family);
Family family_from_name(const std::string& name);  // "parse-error" if unknown

/// Radial profile f(r) of one metric family, plus the start of its domain.
struct RadialProfile {
  Family family = Family::Hyperbolic;
  double B = 1.0;  // curvature scale, > 0
  double A = 0.0;
  double C = 0.0;
  double r_min = 0.0;  // bolt radius (largest zero of f); 0 when none
};

/// f^2 and its radial derivatives (k = 0, 1, 2), closed forms per family.
/// r <= 0 raises "singular-radius".
double eval_fsq(const RadialProfile& profile, double r, int k = 0);

/// f and its radial derivatives (k = 0, 1, 2).
/// r < r_min raises "outside-domain"; f^2 < 0 raises "negative-square";
/// k >= 1 at the bolt radius itself raises "outside-domain" (f' -> infinity).
double eval(const RadialProfile& profile, double r, int k = 0);

RadialProfile classic_eh_profile(double B);
RadialProfile hyperbolic_profile(double B);
RadialProfile zero_scalar_profile(double B, double A);  // r_min closed form

/// Ad-hoc profiles with r_min resolved by a downward scan + bisection of f^2;
/// r_min = 0 when f^2 has no positive zero.
RadialProfile type1_profile(double B, double A, double C);
RadialProfile type2_profile(double B, double A, double C);

}  // namespace ehverify
