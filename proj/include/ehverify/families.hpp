#pragma once

#include "ehverify/profiles.hpp"

namespace ehverify {

enum class Admissibility {
  ClosedForm,   // parameters fixed by a closed form, no branch choice
  CaseCardano,  // single-real-root branch of the degree-three resolvent
  CaseTrig,     // trigonometric branch (non-positive discriminant)
};

const char* admissibility_name(Admissibility a);

/// A constructed metric: family, parameters, bolt data, branch taken.
struct FamilySpec {
  Family family = Family::Hyperbolic;
  double B = 1.0;
  int n = 1;  // bolt order: the period of the circle fiber is 4 pi / n
  double C = 0.0;
  double A = 0.0;
  double r0 = 0.0;  // bolt radius (= profile r_min)
  Admissibility admissibility = Admissibility::ClosedForm;
  double psi_period = 0.0;  // 4 pi / n
};

/// Constants controlling the TypeII resolvent cubic at (B, n):
/// p, q, discriminant for the given C; C1 <= C2 are the nonzero roots of
/// discriminant(C) = 0, C3 <= C4 the roots of q(C) = 0. The _alt values are
/// the (n^4-4)-factor variant of C3/C4, retained for comparison only: the
/// q(C) = 0 roots carry (n^2-4).
struct TypeIIConstants {
  double p = 0.0;
  double q = 0.0;
  double discriminant = 0.0;
  double C1 = 0.0, C2 = 0.0;
  double C3 = 0.0, C4 = 0.0;
  double C3_alt = 0.0, C4_alt = 0.0;
};

TypeIIConstants type2_constants(double B, int n, double C);

/// TypeI bolt solution: requires n >= 3 and C <= (n-2)^2 / (12 B)
/// ("inadmissible-C" otherwise). r0 and A in closed form, then
/// f(r0) = 0 and h(r0) = n are re-verified numerically.
FamilySpec type1_construct(double B, int n, double C);

/// TypeII bolt solution via the resolvent cubic in r0^2: the branch is chosen
/// from C against C1/C2/C4, A = -r0^4 - sqrt(1+B r0^2) C, and the construction
/// re-verifies the cubic residual, h(r0) = n, and f > 0 beyond the bolt.
/// Admissible iff C <= C2 or C > C4.
FamilySpec type2_construct(double B, int n, double C);

/// Scalar-flat bolt solution: n >= 2, A = -((n-2)/2) sqrt(B/(n-1)),
/// r0 = (B/(n-1))^(1/4). n = 2 reduces to the classic profile.
FamilySpec zero_scalar_construct(double B, int n);

FamilySpec classic_eh_spec(double B);   // n = 2
FamilySpec hyperbolic_spec(double B);   // n = 1, no bolt

/// The radial profile carried by a spec.
RadialProfile profile(const FamilySpec& spec);

/// Smoothness function h(r) = u (f + r f') in per-family closed form;
/// h(r0) = n is the no-cone-angle condition at the bolt.
double smoothness_h(const FamilySpec& spec, double r);

/// h(r0) - n.
double smoothness_residual(const FamilySpec& spec);

}  // namespace ehverify
