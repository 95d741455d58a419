// pybind11 surface: constructors, curvature, smoothness, energy, the static
// extension reports, and the cubic solver. Reports cross as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>

#include "ehverify/einstein5d.hpp"
#include "ehverify/energy.hpp"
#include "ehverify/error.hpp"
#include "ehverify/families.hpp"
#include "ehverify/frame.hpp"
#include "ehverify/numeric.hpp"
#include "ehverify/profiles.hpp"

namespace py = pybind11;
using namespace ehverify;

namespace {

FamilySpec construct(const std::string& family, double B, int n, double C) {
  switch (family_from_name(family)) {
    case Family::TypeI: return type1_construct(B, n, C);
    case Family::TypeII: return type2_construct(B, n, C);
    case Family::ZeroScalar:
      if (C != 0.0) fail("parse-error", "zero-scalar takes no C parameter");
      return zero_scalar_construct(B, n);
    case Family::ClassicEH:
      if (C != 0.0) fail("parse-error", "classic-eh takes no C parameter");
      return classic_eh_spec(B);
    case Family::Hyperbolic:
      if (C != 0.0) fail("parse-error", "hyperbolic takes no C parameter");
      return hyperbolic_spec(B);
  }
  fail("parse-error", "unknown family");
}

double default_r_max(const FamilySpec& spec) {
  return 1000.0 * std::max({spec.r0, 1.0, 1.0 / std::sqrt(spec.B)});
}

py::list riemann_nested(const CurvatureFrame& frame) {
  py::list out;
  for (int a = 0; a < 4; ++a) {
    py::list la;
    for (int b = 0; b < 4; ++b) {
      py::list lb;
      for (int c = 0; c < 4; ++c) {
        py::list lc;
        for (int d = 0; d < 4; ++d) lc.append(frame.riemann[a][b][c][d]);
        lb.append(lc);
      }
      la.append(lb);
    }
    out.append(la);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "curvature and energy verification for bolt metric families";

  py::register_exception<Error>(m, "Error");

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_property_readonly(
          "family", [](const FamilySpec& s) { return family_name(s.family); })
      .def_readonly("B", &FamilySpec::B)
      .def_readonly("n", &FamilySpec::n)
      .def_readonly("C", &FamilySpec::C)
      .def_readonly("A", &FamilySpec::A)
      .def_readonly("r0", &FamilySpec::r0)
      .def_readonly("psi_period", &FamilySpec::psi_period)
      .def_property_readonly("admissibility",
                             [](const FamilySpec& s) {
                               return admissibility_name(s.admissibility);
                             })
      .def("__repr__", [](const FamilySpec& s) {
        return py::str("FamilySpec(family='{}', B={}, n={}, C={}, A={}, r0={})")
            .format(family_name(s.family), s.B, s.n, s.C, s.A, s.r0);
      });

  m.def("construct", &construct, py::arg("family"), py::arg("B"), py::arg("n"),
        py::arg("C") = 0.0,
        "Solve for the bolt data of one family member; raises Error with an "
        "admissibility code when the parameters are rejected.");

  m.def("fsq",
        [](const FamilySpec& spec, double r, int k) {
          return eval_fsq(profile(spec), r, k);
        },
        py::arg("spec"), py::arg("r"), py::arg("k") = 0,
        "f^2 and its radial derivatives in closed form.");

  m.def("smoothness_h", &smoothness_h, py::arg("spec"), py::arg("r"),
        "h(r) = u (f + r f'); h(r0) = n closes the cone angle at the bolt.");
  m.def("smoothness_residual", &smoothness_residual, py::arg("spec"),
        "h(r0) - n.");

  m.def("curvature",
        [](const FamilySpec& spec, double r) {
          const CurvatureFrame frame = curvature(make_metric(profile(spec)), r);
          py::dict out;
          out["r"] = frame.r;
          out["scalar"] = frame.scalar;
          out["ricci_diag"] = frame.ricci_diag;
          out["riemann"] = riemann_nested(frame);
          return out;
        },
        py::arg("spec"), py::arg("r"),
        "Orthonormal-frame curvature at one radius: scalar, Ricci diagonal, "
        "and the full Riemann tensor as nested lists.");

  m.def("weyl_asd_residual",
        [](const FamilySpec& spec, double r, bool flip) {
          return weyl_asd_residual(make_metric(profile(spec)), r, flip);
        },
        py::arg("spec"), py::arg("r"), py::arg("flip_orientation") = false,
        "Norm of the self-dual Weyl block (zero for the anti-self-dual "
        "reference metric).");

  m.def("total_energy",
        [](const FamilySpec& spec, double r_max, double tol) {
          const EnergyReport rep = total_energy(
              spec, r_max > 0.0 ? r_max : default_r_max(spec), tol);
          py::dict out;
          out["raw_limit"] = rep.raw_limit;
          out["closed_form"] = rep.closed_form;
          out["kappa"] = rep.kappa.has_value() ? py::cast(*rep.kappa)
                                               : py::none().cast<py::object>();
          out["volume_factor"] = rep.volume_factor;
          out["error_estimate"] = rep.error_estimate;
          return out;
        },
        py::arg("spec"), py::arg("r_max") = 0.0, py::arg("tol") = 1e-6,
        "Extrapolated renormalized-volume energy limit; r_max = 0 picks "
        "1000 max(r0, 1, 1/sqrt(B)).");

  m.def("bolt_hawking_mass", &bolt_hawking_mass, py::arg("B"), py::arg("n"),
        "-(5/6) (n^2-4)^2 / (16 B).");

  m.def("type2_constants",
        [](double B, int n, double C) {
          const TypeIIConstants k = type2_constants(B, n, C);
          py::dict out;
          out["p"] = k.p;
          out["q"] = k.q;
          out["discriminant"] = k.discriminant;
          out["C1"] = k.C1;
          out["C2"] = k.C2;
          out["C3"] = k.C3;
          out["C4"] = k.C4;
          return out;
        },
        py::arg("B"), py::arg("n"), py::arg("C"),
        "Depressed-cubic data and the admissibility thresholds at (B, n).");

  m.def("solve_depressed_cubic",
        [](double p, double q) {
          const CubicRoots roots = solve_depressed_cubic(p, q);
          py::dict out;
          out["discriminant"] = roots.discriminant;
          out["branch"] = roots.branch == CubicBranch::CardanoReal
                              ? "cardano"
                              : "trigonometric";
          out["roots"] = roots.roots;
          return out;
        },
        py::arg("p"), py::arg("q"),
        "Real roots of t^3 + p t + q = 0, descending.");

  m.def("einstein_check",
        [](const FamilySpec& spec, double c1, double c2) {
          py::dict out;
          out["lambda"] = -6.0 * spec.B;
          if (spec.family == Family::TypeI) {
            const Type1ObstructionReport rep =
                type1_obstruction_report(spec, c1, c2);
            out["lapse"] = "affine";
            out["max_lapse_ode_residual"] = rep.max_lapse_ode_residual;
            out["max_angular_residual"] = rep.max_angular_residual;
            out["constant_lapse_defect"] = rep.constant_lapse_defect;
            out["einstein"] = false;
            return out;
          }
          if (spec.family == Family::TypeII) {
            const Type2UniquenessReport rep =
                type2_uniqueness_report(spec, c1, c2);
            out["lapse"] = "sqrt";
            out["max_lapse_ode_residual"] = rep.max_lapse_ode_residual;
            out["max_constraint"] = rep.max_constraint;
            out["constraint_identically_zero"] = rep.constraint_identically_zero;
            out["max_einstein_residual"] = rep.max_einstein_residual;
            out["einstein"] = rep.max_einstein_residual <= 1e-9;
            return out;
          }
          if (spec.family == Family::Hyperbolic) {
            const StaticExtension ext = make_sqrt_extension(spec, c1, c2);
            const double residual = einstein_residual(ext, report_radii(spec));
            out["lapse"] = "sqrt";
            out["max_einstein_residual"] = residual;
            out["einstein"] = residual <= 1e-9;
            return out;
          }
          fail("invalid-argument",
               "einstein_check: no static extension for this family");
        },
        py::arg("spec"), py::arg("c1") = 1.0, py::arg("c2") = 0.0,
        "Static-extension report for the family's lapse ansatz.");
}
