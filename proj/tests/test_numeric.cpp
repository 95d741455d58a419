#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ehverify/energy.hpp"
#include "ehverify/error.hpp"
#include "ehverify/numeric.hpp"
#include "ehverify/profiles.hpp"
#include "oracles.hpp"

using namespace ehverify;

namespace {

double cubic_residual(double p, double q, double t) {
  return std::abs(t * t * t + p * t + q);
}

}  // namespace

TEST_CASE("cubic: triple root at zero") {
  const CubicRoots sol = solve_depressed_cubic(0.0, 0.0);
  CHECK(sol.roots.size() == 3);
  for (double t : sol.roots) CHECK(t == 0.0);
  CHECK(sol.discriminant == 0.0);
  CHECK(sol.branch == CubicBranch::Trigonometric);
}

TEST_CASE("cubic: double root, discriminant zero") {
  // t^3 - 3t + 2 = (t - 1)^2 (t + 2)
  const CubicRoots sol = solve_depressed_cubic(-3.0, 2.0);
  REQUIRE(sol.roots.size() == 3);
  CHECK(sol.branch == CubicBranch::Trigonometric);
  CHECK(oracles::near(sol.roots[0], 1.0, 1e-7));
  CHECK(oracles::near(sol.roots[1], 1.0, 1e-7));
  CHECK(oracles::near(sol.roots[2], -2.0, 1e-10));
}

TEST_CASE("cubic: three simple roots, descending order") {
  // t^3 - 7t - 6 = (t - 3)(t + 1)(t + 2)
  const CubicRoots sol = solve_depressed_cubic(-7.0, -6.0);
  REQUIRE(sol.roots.size() == 3);
  CHECK(sol.branch == CubicBranch::Trigonometric);
  CHECK(oracles::near(sol.roots[0], 3.0, 1e-12));
  CHECK(oracles::near(sol.roots[1], -1.0, 1e-12));
  CHECK(oracles::near(sol.roots[2], -2.0, 1e-12));
}

TEST_CASE("cubic: positive discriminant, single real root") {
  // t^3 + 3t - 4 = (t - 1)(t^2 + t + 4)
  const CubicRoots sol = solve_depressed_cubic(3.0, -4.0);
  REQUIRE(sol.roots.size() == 1);
  CHECK(sol.branch == CubicBranch::CardanoReal);
  CHECK(sol.discriminant > 0.0);
  CHECK(oracles::near(sol.roots[0], 1.0, 1e-12));
}

TEST_CASE("cubic: bolt cubic shifts back to 5/4") {
  // monic cubic in t = r0^2 for (B=1, n=3, C=0): t^3 - (5/4) t^2 = 0;
  // depressed via t = x + 5/12
  const double shift = 5.0 / 12.0;
  const double p = -shift * shift * 3.0;
  const double q = -2.0 * shift * shift * shift;
  const CubicRoots sol = solve_depressed_cubic(p, q);
  REQUIRE(!sol.roots.empty());
  const double t0 = sol.roots[0] + shift;
  CHECK(oracles::near(t0, 1.25, 1e-12));
  CHECK(cubic_residual(p, q, sol.roots[0]) <= 1e-12 * (1.0 + std::abs(t0)));
}

TEST_CASE("cubic: residual bound over random coefficients") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    const double p = oracles::uniform(rng, -10.0, 10.0);
    const double q = oracles::uniform(rng, -10.0, 10.0);
    const CubicRoots sol = solve_depressed_cubic(p, q);
    const bool single = sol.discriminant > 0.0;
    CHECK(sol.roots.size() == (single ? 1u : 3u));
    for (double t : sol.roots)
      CHECK(cubic_residual(p, q, t) <= 1e-10 * (1.0 + std::abs(t * t * t)));
  }
}

TEST_CASE("bisect: largest of several roots") {
  auto fn = [](double r) { return (r - 1.0) * (r - 2.0) * (r - 3.0); };
  CHECK(oracles::near(bisect_largest_root(fn, 0.0, 10.0), 3.0, 1e-10));
}

TEST_CASE("bisect: classic profile root") {
  const RadialProfile prof = classic_eh_profile(1.0);
  auto fn = [&](double r) { return eval_fsq(prof, r, 0); };
  CHECK(oracles::near(bisect_largest_root(fn, 0.5, 2.0), 1.0, 1e-10));
}

TEST_CASE("bisect: bolt radii match the closed forms") {
  {
    RadialProfile prof;
    prof.family = Family::TypeII;
    prof.B = 1.0;
    prof.A = -25.0 / 16.0;
    auto fn = [&](double r) { return eval_fsq(prof, r, 0); };
    CHECK(oracles::near(bisect_largest_root(fn, 0.5, 3.0), std::sqrt(1.25), 1e-10));
  }
  {
    RadialProfile prof;
    prof.family = Family::TypeI;
    prof.B = 1.0;
    prof.A = -4.0 / 27.0;
    auto fn = [&](double r) { return eval_fsq(prof, r, 0); };
    CHECK(oracles::near(bisect_largest_root(fn, 0.1, 2.0), std::sqrt(1.0 / 3.0),
                        1e-10));
  }
}

TEST_CASE("bisect: no sign change raises no-root") {
  auto fn = [](double r) { return r * r + 1.0; };
  CHECK_THROWS_WITH_AS(bisect_largest_root(fn, 0.0, 5.0),
                       doctest::Contains("no-root"), Error);
}

TEST_CASE("fd: polynomial and trig derivatives") {
  CHECK(oracles::near(fd_derivative([](double r) { return r * r; }, 2.0, 1), 4.0,
                      1e-9));
  CHECK(oracles::near(fd_derivative([](double r) { return std::sin(r); }, 0.0, 1),
                      1.0, 1e-10));
  CHECK(oracles::near(fd_derivative([](double r) { return std::sin(r); }, 0.7, 2),
                      -std::sin(0.7), 1e-7));
}

TEST_CASE("fd: matches a closed-form second derivative") {
  RadialProfile prof;
  prof.family = Family::TypeI;
  prof.B = 1.0;
  prof.C = 2.0;
  prof.A = -1.0;
  auto fn = [&](double r) { return eval_fsq(prof, r, 0); };
  // (f^2)'' = 2B + 6C/r^4 + 20A/r^6 = 2 + 0.75 - 0.3125 at r = 2
  CHECK(oracles::near(fd_derivative(fn, 2.0, 2), 2.4375, 1e-7));
  CHECK(oracles::near(eval_fsq(prof, 2.0, 2), 2.4375, 1e-13));
}

TEST_CASE("fd: boundary guard") {
  auto fn = [](double r) { return std::sqrt(r); };
  CHECK_THROWS_WITH_AS(fd_derivative(fn, 1e-9, 1, 0.0),
                       doctest::Contains("too-close-to-boundary"), Error);
}

TEST_CASE("extrapolate: exact even-power model") {
  const double L = 3.5;
  std::vector<Sample> samples;
  for (double x : {10.0, 20.0, 40.0})
    samples.push_back({x, L + 1.0 / (x * x)});
  const ExtrapolationResult res = extrapolate_limit(samples);
  CHECK(oracles::near(res.limit, L, 1e-8));
  CHECK(res.samples_used == 3);
}

TEST_CASE("extrapolate: constant samples") {
  std::vector<Sample> samples{{1.0, 2.0}, {2.0, 2.0}, {4.0, 2.0}};
  const ExtrapolationResult res = extrapolate_limit(samples);
  CHECK(res.limit == 2.0);
  CHECK(res.error_estimate == 0.0);
}

TEST_CASE("extrapolate: needs three samples") {
  std::vector<Sample> samples{{1.0, 2.0}, {2.0, 2.0}};
  CHECK_THROWS_WITH_AS(extrapolate_limit(samples),
                       doctest::Contains("insufficient-samples"), Error);
}

TEST_CASE("extrapolate: inverse linear model") {
  const double L = -1.25;
  std::vector<Sample> samples;
  for (double x : {50.0, 100.0, 200.0, 400.0})
    samples.push_back({x, L + 3.0 / x + 0.5 / (x * x)});
  const ExtrapolationResult res = extrapolate_limit(samples, 1);
  CHECK(oracles::near(res.limit, L, 1e-9));
}

TEST_CASE("extrapolate: mass-aspect slices reach the closed-form limit") {
  const FamilySpec spec = type2_construct(1.0, 3, 0.0);
  const RadialProfile prof = profile(spec);
  std::vector<Sample> samples;
  for (double r : {1e2, 1e3, 1e4}) {
    const MassAspect aspect = mass_aspect(prof, r);
    samples.push_back({r, aspect.integrand * r * r * r / 4.0});
  }
  const ExtrapolationResult res = extrapolate_limit(samples);
  // kappa * A sqrt(B) with kappa = 1/4
  CHECK(oracles::near(res.limit, -25.0 / 64.0, 1e-6));
}
