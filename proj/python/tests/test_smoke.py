import cmath
import math
import os
from pathlib import Path

import pytest

import cquat

SCENARIOS = Path(os.environ.get("CQUAT_SCENARIO_DIR", Path(__file__).resolve().parents[2] / "scenarios"))


def test_multiplication_table():
    e = [cquat.Quaternion.basis(k) for k in range(1, 5)]
    assert e[2] * e[3] == e[0]
    assert e[2] * e[2] == cquat.Quaternion.zero()
    assert e[0] * e[2] == e[2]
    assert e[2] * e[0] == cquat.Quaternion.zero()
    assert cquat.Quaternion.one() * e[3] == e[3]


def test_embedding():
    xi1, xi2 = cquat.xi_coordinates((1, 2, 3))
    assert xi1 == 4 + 5j
    assert xi2 == -2 + 7j
    assert cquat.embed((1, 0, 0)) == cquat.Quaternion.one()
    assert cquat.is_independent(cquat.GeneratorTriple.standard())
    assert not cquat.is_independent(cquat.GeneratorTriple(1, 1, 2, 2))


def test_maps_and_integrals():
    square = cquat.MonogenicMap("right", ["pow 2", "pow 2"])
    assert square((1, 0, 0)) == cquat.Quaternion.one()
    assert square.gateaux_residual((0.1, 0.2, 0.3), (0, 1, 0), 1e-3) < 1e-2

    circle = cquat.Curve.circle((0, 0, 0), 1.0)
    assert math.isclose(cquat.mes(circle, 10000), 2 * math.pi, rel_tol=1e-6)
    value = cquat.integrate(circle, square.as_generic(), "right", 512)
    assert value.norm() < 1e-12

    conj = cquat.GenericMap.from_terms([(1, "id", "conj_xi1")])
    refined = cquat.refine_until(circle, conj, "right", 1e-8)
    assert refined["converged"]
    assert abs(refined["value"][0] - 2j * math.pi) < 1e-7
    product = cquat.integrate(circle, conj, "left", 300)
    oracle = cquat.integrate_componentwise(circle, conj, "left", 300)
    assert (product - oracle).norm() < 1e-13


def test_evaluation_error():
    pole = cquat.MonogenicMap("right", ["rational [1] / [-1, 1] poles [1]", "id"])
    with pytest.raises(cquat.EvaluationError):
        pole((1, 0, 0))


def test_verify_default_scenario():
    code, report = cquat.verify(str(SCENARIOS / "default.scn"), "neg")
    assert code == 0
    assert report.startswith("format = cquat-report/1")
    with pytest.raises(cquat.ScenarioError):
        cquat.verify(str(SCENARIOS / "degenerate.scn"))
