#pragma once

#include <array>
#include <optional>

#include "ehverify/families.hpp"

namespace ehverify {

/// One slice of the energy integrand for an asymptotically hyperbolic
/// profile, relative to the hyperbolic reference frame at the same radius.
struct MassAspect {
  double r = 0.0;
  double div_term = 0.0;        // referenced divergence of the metric deviation
  double trace_term = 0.0;      // referenced radial derivative of its trace
  double algebraic_term = 0.0;  // sqrt(B) (a_11 - g_11 tr a) contribution
  double integrand = 0.0;       // (div - trace - algebraic) sqrt(1+B r^2)/sqrt(B)
};

/// Requires an asymptotically hyperbolic profile (TypeII or Hyperbolic);
/// other families raise "not-ALH".
MassAspect mass_aspect(const RadialProfile& profile, double r);

/// Fiber-quotient boundary volume 2 pi^2 / n.
double volume_s3_quotient(int n);

/// Closed-form Hawking-type mass -(5/6) (n^2-4)^2 / (16 B) of the bolt
/// solution with the matching asymptotics.
double bolt_hawking_mass(double B, int n);

struct EnergyReport {
  FamilySpec spec;
  std::array<MassAspect, 3> samples{};  // at r_max/4, r_max/2, r_max
  double volume_factor = 0.0;           // 2 pi^2 / n
  double raw_limit = 0.0;               // extrapolated (1/(4 Vol)) * slice integral
  double error_estimate = 0.0;
  double closed_form = 0.0;             // A sqrt(B)
  std::optional<double> kappa;          // raw_limit / closed_form when defined
};

/// Evaluates the slice integrals at {r_max/4, r_max/2, r_max} and
/// extrapolates r -> infinity with the {1, 1/r, 1/r^2} model.
/// Preconditions: ALH spec ("not-ALH"), r_max >= 100 r0, and the
/// extrapolation error must come in under tol ("not-converged").
/// tol is read relative to max(1, |A sqrt(B)|) since the limit itself
/// scales with A sqrt(B).
EnergyReport total_energy(const FamilySpec& spec, double r_max, double tol = 1e-6);

}  // namespace ehverify
