import math

import pytest

import ehverify


def test_construct_fixture():
    spec = ehverify.construct("type2", B=1.0, n=3, C=0.0)
    assert spec.r0 == pytest.approx(1.1180339887498949, rel=1e-12)
    assert spec.A == pytest.approx(-1.5625, rel=1e-12)
    assert spec.admissibility == "case-trig"
    assert spec.psi_period == pytest.approx(4 * math.pi / 3, rel=1e-12)
    assert abs(ehverify.smoothness_residual(spec)) < 1e-12


def test_construct_rejects_the_gap():
    with pytest.raises(ehverify.Error, match="inadmissible-C"):
        ehverify.construct("type2", B=1.0, n=3, C=1.0)
    with pytest.raises(ehverify.Error, match="parse-error"):
        ehverify.construct("nosuch", B=1.0, n=3)


def test_scalar_curvature_constants():
    type2 = ehverify.construct("type2", B=2.0, n=4, C=-0.5)
    for r in (1.5 * type2.r0, 10.0, 250.0):
        assert ehverify.curvature(type2, r)["scalar"] == pytest.approx(
            -12 * 2.0, rel=1e-9
        )
    type1 = ehverify.construct("type1", B=0.5, n=5, C=0.3)
    frame = ehverify.curvature(type1, 4.0)
    assert frame["scalar"] == pytest.approx(-24 * 0.5, rel=1e-9)
    # Ricci diagonal follows the family table
    want = -6 * 0.5 + 2 * 0.3 / 4.0**4
    assert frame["ricci_diag"][0] == pytest.approx(want, rel=1e-9)
    riemann = frame["riemann"]
    assert len(riemann) == 4 and len(riemann[1][2][3]) == 4


def test_classic_reference_is_ricci_flat():
    spec = ehverify.construct("classic-eh", B=1.0, n=2)
    frame = ehverify.curvature(spec, 3.0)
    assert all(abs(x) < 1e-12 for x in frame["ricci_diag"])
    assert ehverify.weyl_asd_residual(spec, 3.0) < 1e-12


def test_energy_limit_and_kappa():
    spec = ehverify.construct("type2", B=1.0, n=3, C=0.0)
    report = ehverify.total_energy(spec)
    assert report["closed_form"] == pytest.approx(-1.5625, rel=1e-12)
    assert report["kappa"] == pytest.approx(0.25, abs=1e-6)
    assert report["raw_limit"] == pytest.approx(-0.390625, abs=1e-6)

    flat = ehverify.construct("hyperbolic", B=1.0, n=1)
    assert ehverify.total_energy(flat)["raw_limit"] == 0.0
    assert ehverify.total_energy(flat)["kappa"] is None

    assert ehverify.bolt_hawking_mass(1.0, 3) == pytest.approx(-125 / 96, rel=1e-12)


def test_cubic_solver_and_constants():
    # t^3 - 7t + 6 = (t-1)(t-2)(t+3)
    out = ehverify.solve_depressed_cubic(-7.0, 6.0)
    assert out["branch"] == "trigonometric"
    assert out["roots"] == pytest.approx([2.0, 1.0, -3.0], rel=1e-10)

    k = ehverify.type2_constants(1.0, 3, 0.0)
    assert k["C2"] == pytest.approx(0.5642255405212089, rel=1e-12)
    assert k["C1"] < k["C3"] < k["C2"] < k["C4"]


def test_einstein_check_reports():
    good = ehverify.construct("type2", B=1.0, n=3, C=0.0)
    report = ehverify.einstein_check(good, c1=1.0, c2=0.0)
    assert report["einstein"] is True
    assert report["constraint_identically_zero"] is True
    assert report["lambda"] == -6.0

    broken = ehverify.construct("type2", B=1.0, n=3, C=-0.5)
    assert ehverify.einstein_check(broken)["einstein"] is False

    obstructed = ehverify.construct("type1", B=1.0, n=4, C=0.1)
    report = ehverify.einstein_check(obstructed, c1=1.0, c2=0.0)
    assert report["einstein"] is False
    assert report["max_lapse_ode_residual"] < 1e-9
    assert report["max_angular_residual"] > 1.0
    assert report["constant_lapse_defect"] == pytest.approx(4.0, rel=1e-9)


def test_profile_evaluation():
    spec = ehverify.construct("type2", B=1.0, n=3, C=0.0)
    assert ehverify.fsq(spec, spec.r0) == pytest.approx(0.0, abs=1e-12)
    assert ehverify.smoothness_h(spec, spec.r0) == pytest.approx(3.0, rel=1e-12)
    with pytest.raises(ehverify.Error, match="singular-radius"):
        ehverify.fsq(spec, 0.0)
