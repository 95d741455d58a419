#include "ehverify/profiles.hpp"

#include <cmath>

#include "ehverify/error.hpp"
#include "ehverify/numeric.hpp"

namespace ehverify {

const char* family_name(Family family) {
  switch (family) {
    case Family::ClassicEH: return "classic-eh";
    case Family::ZeroScalar: return "zero-scalar";
    case Family::TypeI: return "type1";
    case Family::TypeII: return "type2";
    case Family::Hyperbolic: return "hyperbolic";
  }
  fail("invalid-argument", "family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "classic-eh") return Family::ClassicEH;
  if (name == "zero-scalar") return Family::ZeroScalar;
  if (name == "type1") return Family::TypeI;
  if (name == "type2") return Family::TypeII;
  if (name == "hyperbolic") return Family::Hyperbolic;
  fail("parse-error", "unknown family name: " + name);
}

double eval_fsq(const RadialProfile& profile, double r, int k) {
  if (!(r > 0.0)) fail("singular-radius", "eval_fsq: r must be positive");
  if (k < 0 || k > 2) fail("invalid-argument", "eval_fsq: k must be 0, 1 or 2");

  const double B = profile.B;
  const double A = profile.A;
  const double C = profile.C;
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double r4 = r2 * r2;
  const double r5 = r4 * r;
  const double r6 = r4 * r2;

  switch (profile.family) {
    case Family::Hyperbolic:
      return k == 0 ? 1.0 : 0.0;
    case Family::ClassicEH:
      if (k == 0) return 1.0 - B / r4;
      if (k == 1) return 4.0 * B / r5;
      return -20.0 * B / r6;
    case Family::ZeroScalar:
      if (k == 0) return 1.0 - 2.0 * A / r2 - B / r4;
      if (k == 1) return 4.0 * A / r3 + 4.0 * B / r5;
      return -12.0 * A / r4 - 20.0 * B / r6;
    case Family::TypeI:
      if (k == 0) return 1.0 + C / r2 + A / r4 + B * r2;
      if (k == 1) return -2.0 * C / r3 - 4.0 * A / r5 + 2.0 * B * r;
      return 6.0 * C / r4 + 20.0 * A / r6 + 2.0 * B;
    case Family::TypeII: {
      const double s = std::sqrt(1.0 + B * r2);
      if (k == 0) return 1.0 + (s * C + A) / r4;
      if (k == 1) return C * (B * r / (s * r4) - 4.0 * s / r5) - 4.0 * A / r5;
      return C * (B / (s * s * s * r4) - 8.0 * B / (s * r4) + 20.0 * s / r6) +
             20.0 * A / r6;
    }
  }
  fail("invalid-argument", "eval_fsq: unknown family");
}

double eval(const RadialProfile& profile, double r, int k) {
  if (!(r > 0.0)) fail("singular-radius", "eval: r must be positive");
  if (k < 0 || k > 2) fail("invalid-argument", "eval: k must be 0, 1 or 2");
  if (r < profile.r_min) fail("outside-domain", "eval: r below the bolt radius");

  const double fsq = eval_fsq(profile, r, 0);
  if (fsq < -1e-10) fail("negative-square", "eval: f^2 < 0 inside the stated domain");
  const double f = std::sqrt(std::max(fsq, 0.0));
  if (k == 0) return f;

  if (f == 0.0)
    fail("outside-domain", "eval: derivative undefined where f vanishes");
  const double d1 = eval_fsq(profile, r, 1) / (2.0 * f);
  if (k == 1) return d1;
  return (eval_fsq(profile, r, 2) - 2.0 * d1 * d1) / (2.0 * f);
}

namespace {

void require_positive_scale(double B, const char* who) {
  if (!(B > 0.0) || !std::isfinite(B))
    fail("invalid-argument", std::string(who) + ": B must be positive and finite");
}

// Largest positive zero of f^2, or 0 when none exists below hi.
double scan_bolt_radius(const RadialProfile& profile, double hi) {
  const auto fsq = [&](double r) { return eval_fsq(profile, r, 0); };
  try {
    return bisect_largest_root(fsq, 1e-8 * hi, hi, 1e-11, 4096);
  } catch (const Error& e) {
    if (e.code() == std::string("no-root")) return 0.0;
    throw;
  }
}

}  // namespace

RadialProfile classic_eh_profile(double B) {
  require_positive_scale(B, "classic_eh_profile");
  return {Family::ClassicEH, B, 0.0, 0.0, std::pow(B, 0.25)};
}

RadialProfile hyperbolic_profile(double B) {
  require_positive_scale(B, "hyperbolic_profile");
  return {Family::Hyperbolic, B, 0.0, 0.0, 0.0};
}

RadialProfile zero_scalar_profile(double B, double A) {
  require_positive_scale(B, "zero_scalar_profile");
  // r^4 f^2 = r^4 - 2A r^2 - B: largest root of the quadratic in r^2.
  const double t = A + std::sqrt(A * A + B);
  return {Family::ZeroScalar, B, A, 0.0, std::sqrt(t)};
}

RadialProfile type1_profile(double B, double A, double C) {
  require_positive_scale(B, "type1_profile");
  RadialProfile profile{Family::TypeI, B, A, C, 0.0};
  const double hi = 10.0 * std::max({1.0, std::sqrt(std::abs(A)), std::abs(C),
                                     1.0 / std::sqrt(B)});
  profile.r_min = scan_bolt_radius(profile, hi);
  return profile;
}

RadialProfile type2_profile(double B, double A, double C) {
  require_positive_scale(B, "type2_profile");
  RadialProfile profile{Family::TypeII, B, A, C, 0.0};
  const double hi = 10.0 * std::max({1.0, std::sqrt(std::abs(A)), std::abs(C),
                                     1.0 / std::sqrt(B)});
  profile.r_min = scan_bolt_radius(profile, hi);
  return profile;
}

}  // namespace ehverify
