#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ehverify/einstein5d.hpp"
#include "ehverify/error.hpp"
#include "ehverify/families.hpp"
#include "ehverify/frame.hpp"
#include "oracles.hpp"

using namespace ehverify;

TEST_CASE("einstein5d: extension bookkeeping") {
  const FamilySpec base = type2_construct(1.0, 3, 0.0);
  const StaticExtension ext = make_sqrt_extension(base, 2.0, 0.5);
  CHECK(ext.lambda == -6.0);
  CHECK(ext.lapse == LapseKind::SqrtBr2);
  CHECK(make_affine_extension(base, 1.0, 0.0).lapse == LapseKind::AffineR2);

  const RadialFunction v = lapse_function(ext);
  const double s = std::sqrt(1.0 + 4.0);
  CHECK(oracles::near(v(2.0, 0), 2.0 * s + 0.5, 1e-14));
  CHECK(oracles::near(v(2.0, 1), 2.0 * 2.0 / s, 1e-14));
  CHECK(oracles::near(v(2.0, 2), 2.0 / (s * s * s), 1e-14));

  const RadialFunction w = lapse_function(make_affine_extension(base, 3.0, -1.0));
  CHECK(oracles::near(w(2.0, 0), 5.0, 1e-15));
  CHECK(oracles::near(w(2.0, 1), 6.0, 1e-15));
  CHECK(oracles::near(w(2.0, 2), 3.0, 1e-15));
}

TEST_CASE("einstein5d: report radii are log-spaced over the far region") {
  const FamilySpec base = type2_construct(1.0, 3, 0.0);
  const std::vector<double> radii = report_radii(base);
  REQUIRE(radii.size() == 64);
  CHECK(oracles::near(radii.front(), 1.05 * base.r0, 1e-12));
  CHECK(oracles::near(radii.back(), 100.0 * base.r0, 1e-10));
  for (size_t i = 1; i < radii.size(); ++i) CHECK(radii[i] > radii[i - 1]);
  CHECK_THROWS_WITH_AS(report_radii(base, 1),
                       doctest::Contains("invalid-argument"), Error);
}

TEST_CASE("einstein5d: square-root lapse over the C = 0 family is Einstein") {
  for (auto [B, n] : std::vector<std::pair<double, int>>{
           {1.0, 3}, {4.0, 5}, {0.1, 4}, {10.0, 6}}) {
    const FamilySpec spec = type2_construct(B, n, 0.0);
    const StaticExtension ext = make_sqrt_extension(spec, 1.0, 0.0);
    CHECK(einstein_residual(ext, report_radii(spec)) <= 1e-9);
    CHECK(einstein_residual(ext, 2.0 * spec.r0) <= 1e-9);

    // rescaling t absorbs c1, so the residual is invariant under it
    const StaticExtension scaled = make_sqrt_extension(spec, 2.7, 0.0);
    CHECK(einstein_residual(scaled, report_radii(spec)) <= 1e-9);
  }
}

TEST_CASE("einstein5d: hyperbolic base with the same lapse is also Einstein") {
  const FamilySpec hyp = hyperbolic_spec(2.0);
  const StaticExtension ext = make_sqrt_extension(hyp, 1.0, 0.0);
  CHECK(einstein_residual(ext, report_radii(hyp)) <= 5e-9);
}

TEST_CASE("einstein5d: constant lapse misses the time-time equation by 4B") {
  const FamilySpec spec = type2_construct(1.0, 3, 0.0);
  const StaticExtension ext = make_affine_extension(spec, 0.0, 1.0);
  const BiaxialMetric metric = make_metric(profile(spec));
  const Curvature5D curv = curvature_5d(metric, lapse_function(ext), 2.0);
  // a constant lapse contributes no time-leg curvature at all
  CHECK(curv.ricci_00 == 0.0);
  CHECK(einstein_residual(ext, 2.0) >= 4.0 - 1e-12);
}

TEST_CASE("einstein5d: nonzero C breaks the Einstein property") {
  const FamilySpec spec = type2_construct(1.0, 3, 0.1);
  const StaticExtension ext = make_sqrt_extension(spec, 1.0, 0.0);
  CHECK(einstein_residual(ext, report_radii(spec)) >= 1e-4);
}

TEST_CASE("einstein5d: linear-lapse obstruction chain") {
  // the affine lapse satisfies the first (radial/fiber) equation for free
  const FamilySpec spec = type1_construct(1.0, 3, 0.05);
  const Type1ObstructionReport rep = type1_obstruction_report(spec, 1.0, 0.0);
  REQUIRE(rep.radii.size() == rep.lapse_ode_residual.size());
  REQUIRE(rep.radii.size() == rep.angular_residual.size());
  CHECK(rep.max_lapse_ode_residual <= 1e-9);
  // but the angular equation rejects every nonconstant affine lapse
  CHECK(rep.max_angular_residual > 1e-3);

  // nonconstant lapse fails even at C = 0, through the f f' v' term
  const FamilySpec at0 = type1_construct(1.0, 3, 0.0);
  CHECK(type1_obstruction_report(at0, 1.0, 0.0).max_angular_residual > 1e3);

  // constant lapse with C != 0 still trips the angular equation
  CHECK(type1_obstruction_report(spec, 0.0, 1.0).max_angular_residual > 1e-3);

  // constant lapse with C = 0 passes both equations and then loses the
  // time-time component by exactly 4B
  const Type1ObstructionReport flat = type1_obstruction_report(at0, 0.0, 1.0);
  CHECK(flat.max_lapse_ode_residual == 0.0);
  CHECK(flat.max_angular_residual == 0.0);
  CHECK(oracles::near_rel(flat.constant_lapse_defect, 4.0, 1e-10));

  CHECK_THROWS_WITH_AS(
      type1_obstruction_report(type2_construct(1.0, 3, 0.0), 1.0, 0.0),
      doctest::Contains("invalid-argument"), Error);
}

TEST_CASE("einstein5d: square-root lapse uniqueness constraint") {
  // the lapse equation holds for every (c1, c2); only the algebraic
  // constraint C (4 + 3 B r^2) c1 - 4 A c2 separates Einstein from not
  const FamilySpec clean = type2_construct(1.0, 3, 0.0);
  const Type2UniquenessReport good = type2_uniqueness_report(clean, 1.0, 0.0);
  CHECK(good.max_lapse_ode_residual <= 1e-10);
  CHECK(good.constraint_identically_zero);
  CHECK(good.max_constraint <= 1e-12);
  CHECK(good.max_einstein_residual <= 1e-9);

  // c2 != 0 with A != 0 leaves a constant constraint -4 A c2 = 0.625
  const Type2UniquenessReport shifted = type2_uniqueness_report(clean, 1.0, 0.1);
  CHECK(shifted.max_lapse_ode_residual <= 1e-10);
  CHECK(!shifted.constraint_identically_zero);
  CHECK(oracles::near(shifted.max_constraint, 0.625, 1e-12));
  CHECK(shifted.max_einstein_residual > 1e-2);

  // C != 0 grows the constraint like r^2; the stored vector matches the
  // closed form at every sampled radius
  const FamilySpec dirty = type2_construct(1.0, 3, 0.5);
  const Type2UniquenessReport rep = type2_uniqueness_report(dirty, 1.0, 0.0);
  CHECK(!rep.constraint_identically_zero);
  CHECK(rep.max_einstein_residual > 1e-2);
  REQUIRE(rep.radii.size() == rep.constraint.size());
  for (size_t i = 0; i < rep.radii.size(); i += 13) {
    const double r = rep.radii[i];
    const double expect = 0.5 * (4.0 + 3.0 * r * r);
    CHECK(oracles::near_rel(rep.constraint[i], expect, 1e-12));
  }

  CHECK_THROWS_WITH_AS(
      type2_uniqueness_report(type1_construct(1.0, 3, 0.0), 1.0, 0.0),
      doctest::Contains("invalid-argument"), Error);
}

TEST_CASE("einstein5d: five-dimensional assembly agrees with the fd route") {
  const FamilySpec spec = type2_construct(1.0, 3, 0.0);
  const StaticExtension ext = make_sqrt_extension(spec, 1.0, 0.0);
  const BiaxialMetric analytic = make_metric(profile(spec));
  const BiaxialMetric fd = make_metric_fd(profile(spec));
  const RadialFunction v = lapse_function(ext);
  for (double r : {1.5, 2.0, 5.0, 20.0}) {
    const Curvature5D a = curvature_5d(analytic, v, r);
    const Curvature5D b = curvature_5d(fd, v, r);
    CHECK(oracles::near(a.ricci_00, b.ricci_00, 1e-6));
    for (int i = 0; i < 4; ++i) {
      CHECK(oracles::near(a.ricci_diag[i], b.ricci_diag[i], 1e-6));
      CHECK(oracles::near(a.r0i0i[i], b.r0i0i[i], 1e-6));
    }
  }
}
