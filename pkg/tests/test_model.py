"""Vector field, equilibria, Jacobian and existence conditions."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fraclv.model import (
    EQUILIBRIUM_KINDS,
    ModelParams,
    equilibria,
    existence_report,
    jacobian,
    rhs,
)
from fraclv.presets import PRESETS
from fraclv.spectral import eigenvalues

from oracles import multiset_distance

EX1 = PRESETS["example1"].params
EX2 = PRESETS["example2"].params
EX3 = PRESETS["example3"].params

positive_coeff = st.floats(min_value=0.25, max_value=4.0)
params_strategy = st.builds(
    ModelParams, *(positive_coeff for _ in range(7))
)


def test_params_reject_nonpositive():
    with pytest.raises(ValueError):
        ModelParams(3, 0.5, 4, 3, 4, 9, 0.0)
    with pytest.raises(ValueError):
        ModelParams(-1, 0.5, 4, 3, 4, 9, 4)


def test_rhs_vanishes_at_interior_equilibrium():
    np.testing.assert_allclose(rhs(EX2, [1.0, 1.0, 1.5]), 0.0, atol=1e-12)


def test_rhs_at_origin():
    assert np.array_equal(rhs(EX1, [0.0, 0.0, 0.0]), np.zeros(3))


def test_rhs_hand_substitution():
    # x(a1 - a2 x - y - z) = 0.5 * 1.75, y((1-a3) + a4 x) = 0.9 * (-1.5),
    # z((1-a5) + a6 x + a7 y) = 0.1 * 5.1
    np.testing.assert_allclose(
        rhs(EX1, [0.5, 0.9, 0.1]), [0.875, -1.35, 0.51], atol=1e-12
    )


def test_equilibria_example1():
    eqs = {eq.kind: eq for eq in equilibria(EX1)}
    np.testing.assert_allclose(eqs["E1"].point, [6.0, 0.0, 0.0])
    assert eqs["E1"].admissible
    np.testing.assert_allclose(eqs["E2"].point, [1.0 / 3.0, 0.0, 17.0 / 6.0], atol=1e-12)
    np.testing.assert_allclose(eqs["E4"].point, [1.0, -1.5, 4.0], atol=1e-12)
    assert not eqs["E4"].admissible


def test_equilibria_example3_repaired_coefficients():
    eqs = {eq.kind: eq for eq in equilibria(EX3)}
    np.testing.assert_allclose(eqs["E1"].point, [160.0, 0.0, 0.0])
    np.testing.assert_allclose(eqs["E2"].point, [2.0 / 3.0, 0.0, 71.7 / 9.0], atol=1e-12)
    np.testing.assert_allclose(eqs["E3"].point, [3.0, 7.85, 0.0], atol=1e-12)
    np.testing.assert_allclose(eqs["E4"].point, [3.0, -5.25, 13.1], atol=1e-12)
    assert not eqs["E4"].admissible


@given(params=params_strategy)
@settings(max_examples=60)
def test_origin_always_present_and_admissible(params):
    eqs = equilibria(params)
    assert tuple(eq.kind for eq in eqs) == EQUILIBRIUM_KINDS
    assert np.array_equal(eqs[0].point, np.zeros(3))
    assert eqs[0].admissible
    assert eqs[1].admissible  # E1 = (a1/a2, 0, 0) with positive coefficients


@given(params=params_strategy)
@settings(max_examples=60)
def test_fixed_point_residual(params):
    # closed forms must zero the field; bound point size so float rounding
    # stays under the coefficient-relative budget
    eqs = equilibria(params)
    for eq in eqs:
        if np.max(np.abs(eq.point)) > 50.0:
            continue
        tol = 1e-12 * max(1.0, *params.as_tuple())
        assert np.max(np.abs(rhs(params, eq.point))) <= tol


@pytest.mark.parametrize("params", [EX1, EX2, EX3])
def test_fixed_point_residual_presets(params):
    tol = 1e-12 * max(1.0, *params.as_tuple())
    for eq in equilibria(params):
        assert np.max(np.abs(rhs(params, eq.point))) <= tol


@given(
    params=params_strategy,
    x=st.floats(-5, 5),
    y=st.floats(-5, 5),
    z=st.floats(-5, 5),
)
@settings(max_examples=60)
def test_axis_invariance_is_exact(params, x, y, z):
    assert rhs(params, [x, 0.0, z])[1] == 0.0
    assert rhs(params, [x, y, 0.0])[2] == 0.0


def test_jacobian_at_origin_is_diagonal():
    np.testing.assert_array_equal(
        jacobian(EX1, [0.0, 0.0, 0.0]), np.diag([3.0, -3.0, -3.0])
    )


@given(params=params_strategy)
@settings(max_examples=40)
def test_jacobian_off_diagonals_vanish_at_origin(params):
    j = jacobian(params, [0.0, 0.0, 0.0])
    assert np.count_nonzero(j - np.diag(np.diag(j))) == 0


def test_jacobian_spectrum_example2_interior():
    spec = eigenvalues(jacobian(EX2, [1.0, 1.0, 1.5]))
    printed = [complex(0.276, -4.123), complex(0.276, 4.123), complex(-1.053, 0.0)]
    assert multiset_distance(spec.eigenvalues, printed) < 1e-2


def test_jacobian_matches_finite_differences():
    rng = np.random.default_rng(7)
    h = 1e-5
    for _ in range(100):
        params = ModelParams(*rng.uniform(0.3, 3.0, 7))
        point = rng.uniform(0.1, 3.0, 3)
        j = jacobian(params, point)
        fd = np.empty((3, 3))
        for col in range(3):
            dp = np.zeros(3)
            dp[col] = h
            fd[:, col] = (rhs(params, point + dp) - rhs(params, point - dp)) / (2.0 * h)
        assert np.max(np.abs(fd - j)) < 1e-6


def test_e1_spectrum_literal_form():
    # J(E1) is triangular: spectrum is {-a1, 1-a3+a1*a4/a2, 1-a5+a1*a6/a2}
    for params in (EX1, EX2, EX3):
        a1, a2, a3, a4, a5, a6, a7 = params.as_tuple()
        e1 = {eq.kind: eq for eq in equilibria(params)}["E1"]
        spec = eigenvalues(jacobian(params, e1.point))
        literal = [-a1, 1.0 - a3 + a1 * a4 / a2, 1.0 - a5 + a1 * a6 / a2]
        scale = max(1.0, max(abs(v) for v in literal))
        assert multiset_distance(spec.eigenvalues, literal) < 1e-9 * scale


def test_existence_report_example1():
    report = existence_report(EX1)
    e4_rows = {name: ok for kind, name, ok in report if kind == "E4"}
    assert e4_rows["y >= 0: a4*(a5 - 1) >= a6*(a3 - 1)"] is False  # y4 = -1.5
    assert all(ok for kind, name, ok in report if kind in ("E0", "E1"))


def test_existence_report_example2_all_admissible():
    assert all(ok for _, _, ok in existence_report(EX2))
    assert all(eq.admissible for eq in equilibria(EX2))


def test_degenerate_a3_boundary():
    # a3 = 1 makes every (a3 - 1) term vanish: E3 = (0, a1*a4/a4, 0) = (0, a1, 0);
    # a4 = 2 keeps the division exact in floats
    params = ModelParams(3.0, 0.5, 1.0, 2.0, 4.0, 9.0, 4.0)
    e3 = {eq.kind: eq for eq in equilibria(params)}["E3"]
    assert e3.point[0] == 0.0
    assert e3.point[1] == params.a1
    assert e3.point[2] == 0.0
    np.testing.assert_allclose(rhs(params, e3.point), 0.0, atol=1e-13)
