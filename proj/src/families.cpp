#include "ehverify/families.hpp"

#include <cmath>
#include <string>

#include "ehverify/error.hpp"
#include "ehverify/numeric.hpp"

namespace ehverify {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_scale(double B) {
  if (!(B > 0.0) || !std::isfinite(B))
    fail("invalid-argument", "B must be positive and finite");
}

// Post-construction checks shared by the bolt families: the profile vanishes
// at r0, the cone angle closes (h(r0) = n), and f^2 stays positive beyond the
// bolt so r0 really is the largest root.
void verify_bolt(const FamilySpec& spec) {
  const RadialProfile prof = profile(spec);
  const double fsq0 = eval_fsq(prof, spec.r0, 0);
  if (!(std::abs(fsq0) <= 1e-10 * (1.0 + std::abs(spec.A) + std::abs(spec.C))))
    fail("no-convergence", "construct: f^2(r0) does not vanish");
  if (!(std::abs(smoothness_residual(spec)) <= 1e-9 * spec.n))
    fail("smoothness-violated",
         "construct: cone angle condition h(r0) = n violated; the root "
         "solves the squared radius equation on a spurious sign branch");
  const double hi = 1e3 * std::max(1.0, 1.0 / std::sqrt(spec.B));
  for (int i = 1; i <= 256; ++i) {
    // geometric sweep of (r0, hi]
    const double r = spec.r0 * std::pow(hi / std::max(spec.r0, 1e-6), i / 256.0);
    if (r <= spec.r0) continue;
    if (!(eval_fsq(prof, r, 0) > 0.0))
      fail("no-convergence", "construct: f^2 not positive beyond the bolt");
  }
}

}  // namespace

const char* admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::ClosedForm: return "closed-form";
    case Admissibility::CaseCardano: return "case-cardano";
    case Admissibility::CaseTrig: return "case-trig";
  }
  fail("invalid-argument", "admissibility_name: unknown value");
}

TypeIIConstants type2_constants(double B, int n, double C) {
  require_scale(B);
  if (n < 3) fail("inadmissible-n", "type2_constants: n >= 3 required");

  const double nn = static_cast<double>(n);
  const double m = nn * nn - 4.0;
  const double B2 = B * B;

  TypeIIConstants k;
  k.p = (12.0 * nn * B2 * C - m * m) / (48.0 * B2);
  k.q = (-m * m * m + 18.0 * nn * m * B2 * C - 54.0 * B2 * B2 * C * C) /
        (864.0 * B2 * B);
  k.discriminant = k.p * k.p * k.p / 27.0 + k.q * k.q / 4.0;

  const double w = nn * nn + 12.0;
  k.C1 = (nn * nn * nn - 36.0 * nn - w * std::sqrt(w)) / (27.0 * B2);
  k.C2 = (nn * nn * nn - 36.0 * nn + w * std::sqrt(w)) / (27.0 * B2);

  const double root = std::sqrt(3.0 * nn * nn + 24.0);
  k.C3 = m * (3.0 * nn - root) / (18.0 * B2);
  k.C4 = m * (3.0 * nn + root) / (18.0 * B2);

  const double m_alt = nn * nn * nn * nn - 4.0;
  k.C3_alt = m_alt * (3.0 * nn - root) / (18.0 * B2);
  k.C4_alt = m_alt * (3.0 * nn + root) / (18.0 * B2);
  return k;
}

FamilySpec type1_construct(double B, int n, double C) {
  require_scale(B);
  if (n < 3) fail("inadmissible-n", "type1_construct: n >= 3 required");
  const double nn = static_cast<double>(n);
  const double bound = (nn - 2.0) * (nn - 2.0) / (12.0 * B);
  if (!(C <= bound))
    fail("inadmissible-C", "type1_construct: C must be <= (n-2)^2/(12B)");

  const double disc = (nn - 2.0) * (nn - 2.0) - 12.0 * B * C;
  const double r0 = std::sqrt((nn - 2.0 + std::sqrt(disc)) / (6.0 * B));
  const double A = (1.0 - 2.0 * nn + std::sqrt(disc)) / 3.0 * std::pow(r0, 4);

  FamilySpec spec{Family::TypeI, B, n, C, A, r0,
                  Admissibility::ClosedForm, 4.0 * kPi / nn};
  verify_bolt(spec);
  return spec;
}

FamilySpec type2_construct(double B, int n, double C) {
  require_scale(B);
  if (n < 3) fail("inadmissible-n", "type2_construct: n >= 3 required");
  const TypeIIConstants k = type2_constants(B, n, C);
  const bool below = C <= k.C2;
  const bool above = C > k.C4;
  if (!below && !above)
    fail("inadmissible-C", "type2_construct: C in the excluded interval (C2, C4]");

  const double nn = static_cast<double>(n);
  const double shift = (nn * nn - 4.0) / (12.0 * B);

  double x = 0.0;
  Admissibility branch;
  if (C < k.C1 || above) {
    // positive discriminant: single real root
    branch = Admissibility::CaseCardano;
    const double s = std::sqrt(std::max(k.discriminant, 0.0));
    x = std::cbrt(-k.q / 2.0 + s) + std::cbrt(-k.q / 2.0 - s);
  } else {
    // C1 <= C <= C2: three real roots, largest via the arccos form
    branch = Admissibility::CaseTrig;
    if (k.p >= 0.0) {
      x = 0.0;  // p = 0 forces q = 0 here: triple root
    } else {
      const double arg = std::clamp(
          -3.0 * k.q * std::sqrt(-3.0 * k.p) / (2.0 * k.p * k.p), -1.0, 1.0);
      x = 2.0 * std::sqrt(-k.p / 3.0) * std::cos(std::acos(arg) / 3.0);
    }
  }

  const double t0 = x + shift;
  if (!(t0 > 0.0))
    fail("no-positive-root", "type2_construct: resolvent root not positive");

  // residual of the cubic in t = r0^2, in its monic displayed form
  const double t_residual = t0 * t0 * t0 +
                            (4.0 - nn * nn) / (4.0 * B) * t0 * t0 +
                            nn * C / 4.0 * t0 - B * C * C / 16.0;
  const double t_scale = 1.0 + std::abs(t0 * t0 * t0) +
                         std::abs((4.0 - nn * nn) / (4.0 * B) * t0 * t0) +
                         std::abs(nn * C / 4.0 * t0) + std::abs(B * C * C / 16.0);
  if (!(std::abs(t_residual) <= 1e-10 * t_scale))
    fail("no-convergence", "type2_construct: resolvent residual too large");

  const double r0 = std::sqrt(t0);
  const double A = -t0 * t0 - std::sqrt(1.0 + B * t0) * C;

  FamilySpec spec{Family::TypeII, B, n, C, A, r0, branch, 4.0 * kPi / nn};
  verify_bolt(spec);
  return spec;
}

FamilySpec zero_scalar_construct(double B, int n) {
  require_scale(B);
  if (n < 2) fail("inadmissible-n", "zero_scalar_construct: n >= 2 required");
  const double nn = static_cast<double>(n);
  const double A = -(nn - 2.0) / 2.0 * std::sqrt(B / (nn - 1.0));
  const double r0 = std::pow(B / (nn - 1.0), 0.25);

  FamilySpec spec{Family::ZeroScalar, B, n, 0.0, A, r0,
                  Admissibility::ClosedForm, 4.0 * kPi / nn};
  verify_bolt(spec);
  return spec;
}

FamilySpec classic_eh_spec(double B) {
  require_scale(B);
  FamilySpec spec{Family::ClassicEH, B, 2, 0.0, 0.0, std::pow(B, 0.25),
                  Admissibility::ClosedForm, 2.0 * kPi};
  verify_bolt(spec);
  return spec;
}

FamilySpec hyperbolic_spec(double B) {
  require_scale(B);
  return {Family::Hyperbolic, B, 1, 0.0, 0.0, 0.0,
          Admissibility::ClosedForm, 4.0 * kPi};
}

RadialProfile profile(const FamilySpec& spec) {
  return {spec.family, spec.B, spec.A, spec.C, spec.r0};
}

double smoothness_h(const FamilySpec& spec, double r) {
  if (!(r > 0.0)) fail("singular-radius", "smoothness_h: r must be positive");
  const double B = spec.B;
  const double r2 = r * r;
  const double r4 = r2 * r2;
  switch (spec.family) {
    case Family::TypeI:
      return 1.0 - spec.A / r4 + 2.0 * B * r2;
    case Family::TypeII: {
      const double s = std::sqrt(1.0 + B * r2);
      return s * (1.0 - spec.A / r4) - spec.C / r4 - B * spec.C / (2.0 * r2);
    }
    case Family::ClassicEH:
    case Family::ZeroScalar:
      return 1.0 + B / r4;
    case Family::Hyperbolic:
      return std::sqrt(1.0 + B * r2);
  }
  fail("invalid-argument", "smoothness_h: unknown family");
}

double smoothness_residual(const FamilySpec& spec) {
  if (spec.family == Family::Hyperbolic)
    return smoothness_h(spec, 1e-300) - spec.n;  // h(0+) = 1 = n
  return smoothness_h(spec, spec.r0) - spec.n;
}

}  // namespace ehverify
