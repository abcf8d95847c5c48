import json
import math

import pytest

import dyonosc


def test_forward_map_norm():
    u = [0.3, -1.2, 0.8, 2.0]
    x = dyonosc.forward_map(u)
    assert len(x) == 3
    u2 = sum(c * c for c in u)
    assert math.isclose(math.sqrt(sum(c * c for c in x)), u2, rel_tol=1e-12)
    assert abs(dyonosc.euler_residual(u)) < 1e-12 * u2 * u2


def test_hurwitz_rows_are_orthogonal():
    u = [0.1 * (k + 1) for k in range(8)]
    h = dyonosc.hurwitz_matrix(u)
    u2 = sum(c * c for c in u)
    for a in range(8):
        for b in range(8):
            dot = sum(h[a][k] * h[b][k] for k in range(8))
            assert abs(dot - (u2 if a == b else 0.0)) < 1e-12 * u2


def test_spectra():
    osc4 = dyonosc.spectrum("osc4", levels=3, omega=1.0)
    assert [l["energy"] for l in osc4] == pytest.approx([2.0, 3.0, 4.0])
    assert [l["degeneracy"] for l in osc4] == [1, 4, 10]
    ycm = dyonosc.spectrum("ycm5", levels=2, e2=1.0)
    assert [l["energy"] for l in ycm] == pytest.approx([-0.125, -0.08])
    assert dyonosc.ycm_degeneracy(2, 0) == 6
    assert sum(dyonosc.ycm_degeneracy(2, t) for t in (0, 1)) == 36


def test_errors_are_typed():
    with pytest.raises(dyonosc.DyonoscError, match="domain-error"):
        dyonosc.spectrum("osc4", levels=3, omega=-1.0)
    with pytest.raises(ValueError):
        dyonosc.forward_map([1.0, 2.0, 3.0])


def test_special_functions():
    assert dyonosc.hermite(3, 0.5) == pytest.approx(8 * 0.125 - 12 * 0.5)
    assert dyonosc.clebsch_gordan("1/2", "1/2", "1/2", "-1/2", 1, 0) == pytest.approx(math.sqrt(0.5))
    assert dyonosc.wigner_d(1, 0, 0, 0.7) == pytest.approx(math.cos(0.7))


def test_fields():
    assert dyonosc.vortex_circulation(1.0, 3.0) == pytest.approx(-2 * math.pi, rel=1e-10)
    b = math.pi / 3
    assert dyonosc.dirac_circulation(0.5, 1.0, b) == pytest.approx(-math.pi * (1 - math.cos(b)), rel=1e-9)
    a = dyonosc.yang_potentials([0, 1, 0, 0, 0])
    assert a[0] == pytest.approx([0, 0, 0, 0, 1])


def test_oracle():
    ev = dyonosc.solve_radial(2, 0, "harmonic", k=3)
    assert ev == pytest.approx([1.0, 3.0, 5.0], abs=1e-3)


def test_verify_and_cli():
    rows = dyonosc.verify("degeneracy")
    assert all(r["pass"] for r in rows)
    assert any(r["detail"] == "36=36" for r in rows)
    code, out, err = dyonosc.run_cli(["map", "--direction", "osc2dyon", "--E", "4"])
    assert code == 0
    rec = json.loads(out)
    assert rec["rows"][0] == {"quantity": "e2", "value": 1.0}
    code, _, err = dyonosc.run_cli(["map", "--direction", "dyon2osc", "--eps", "0.5"])
    assert code == 1
    assert "no-bound-state" in err
