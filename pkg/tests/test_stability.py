"""Stability criteria: cone, CF theorem, CF disk, regions and reports."""

import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from fraclv.presets import PRESETS
from fraclv.stability import (
    caputo_stable,
    cf_disk_verdict,
    cf_stable_disk,
    cf_stable_theorem,
    classify_region,
    equilibrium_report,
    table1_conditions,
)

EX1 = PRESETS["example1"].params
EX2 = PRESETS["example2"].params
EX3 = PRESETS["example3"].params


# ---------------------------------------------------------------------------
# cone criterion


def test_cone_stable_spiral_at_high_order():
    spec = [complex(-0.083, 2.914), complex(-0.083, -2.914), -2.0]
    assert caputo_stable(spec, 0.98).stable


def test_positive_real_eigenvalue_never_cone_stable():
    for alpha in (0.05, 0.3, 0.66, 0.98, 1.0):
        verdict = caputo_stable([15.0, -1.0, -1.0], alpha)
        assert not verdict.stable
        tags = dict((w, tag) for w, tag in verdict.per_eigenvalue)
        assert tags[complex(15.0)] is None


def test_cone_interior_example2():
    spec = [complex(0.276, 4.123), complex(0.276, -4.123), -1.053]
    assert caputo_stable(spec, 0.6).stable
    assert abs(cmath.phase(complex(0.276, 4.123))) > 0.3 * math.pi


def test_zero_eigenvalue_unstable():
    assert not caputo_stable([0.0, -1.0, -2.0], 0.5).stable


def test_cone_boundary_counts_unstable():
    # |arg| exactly alpha*pi/2 (open condition)
    assert not caputo_stable([complex(1.0, 1.0), -1.0, -1.0], 0.5).stable


def test_cone_at_order_one_is_classical():
    assert caputo_stable([complex(-0.01, 5.0), complex(-0.01, -5.0), -1.0], 1.0).stable
    assert not caputo_stable([complex(0.0, 5.0), complex(0.0, -5.0), -1.0], 1.0).stable


def test_verdict_structure():
    verdict = caputo_stable([complex(-1, 2), complex(-1, -2), 3.0], 0.5)
    assert verdict.operator == "caputo"
    assert verdict.stable == all(tag is not None for _, tag in verdict.per_eigenvalue)
    assert len(verdict.per_eigenvalue) == 3


# ---------------------------------------------------------------------------
# CF theorem criterion


def test_cf_theorem_mixed_conditions():
    # {-3, -3, 3} at alpha 0.6: threshold 2.5. Only the modulus condition can
    # admit +3; the negatives satisfy both the modulus and half-plane forms
    # (the conditions overlap), and the verdict records the first match.
    verdict = cf_stable_theorem([-3.0, -3.0, 3.0], 0.6)
    assert verdict.stable
    tags = [tag for _, tag in verdict.per_eigenvalue]
    assert tags[2] == "1"
    assert tags[0] in ("1", "3") and tags[1] in ("1", "3")


def test_cf_theorem_left_half_plane():
    for alpha in (0.1, 0.5, 0.9):
        verdict = cf_stable_theorem([-1.0, -1.0, -1.0], alpha)
        assert verdict.stable
        assert all(tag == "3" for _, tag in verdict.per_eigenvalue)


def test_cf_theorem_example1_low_order():
    # 2.727 > 1/(2*0.34) = 1.470...; 16 >= 1/0.34 = 2.94...
    verdict = cf_stable_theorem(
        [complex(-0.25, 2.727), complex(-0.25, -2.727), 16.0], 0.66
    )
    assert verdict.stable


def test_cf_theorem_rejects_order_one():
    with pytest.raises(ValueError):
        cf_stable_theorem([-1.0, -1.0, -1.0], 1.0)


def test_cf_theorem_excludes_threshold_point():
    alpha = 0.5  # threshold exactly 2
    verdict = cf_stable_theorem([2.0, -1.0, -1.0], alpha)
    assert not verdict.stable


# ---------------------------------------------------------------------------
# CF disk criterion


def test_disk_examples():
    assert cf_stable_disk(6.0, 0.6)  # |6 - 1.25| > 1.25
    assert not cf_stable_disk(1.25, 0.6)  # center
    assert cf_stable_disk(-1e-12, 0.6)  # left half-plane
    assert not cf_stable_disk(0.0, 0.6)  # on the circle
    assert not cf_stable_disk(2.5, 0.6)  # on the circle at 1/(1-alpha)


def test_disk_verdict_wraps_spectrum():
    verdict = cf_disk_verdict([6.0, -1.0, complex(1.0, 3.0)], 0.6)
    assert verdict.operator == "cf-disk"
    assert verdict.stable
    assert all(tag == "disk" for _, tag in verdict.per_eigenvalue)


def test_disk_rejects_order_one():
    with pytest.raises(ValueError):
        cf_stable_disk(1.0, 1.0)


# ---------------------------------------------------------------------------
# region classes


def test_region_examples():
    assert classify_region(complex(-1.0, 5.0), 0.5) == "A"
    assert classify_region(1.333, 0.6) == "C"
    assert classify_region(6.0, 0.6) == "D"
    # cone-stable but inside the disk
    assert classify_region(complex(0.5, 0.8), 0.6) == "B"


@given(
    re=st.floats(-20.0, 20.0),
    im=st.floats(-20.0, 20.0),
    alpha=st.floats(0.05, 0.95),
)
@settings(max_examples=300)
def test_region_partition_is_total_and_consistent(re, im, alpha):
    lam = complex(re, im)
    region = classify_region(lam, alpha)
    cone = caputo_stable([lam], alpha).stable
    disk = cf_stable_disk(lam, alpha)
    expected = {(True, True): "A", (True, False): "B",
                (False, False): "C", (False, True): "D"}[(cone, disk)]
    assert region == expected


# ---------------------------------------------------------------------------
# closed-form condition table


def test_table1_origin_row_tracks_order():
    rows_high = dict(table1_conditions(EX1, 0.98, "E0"))
    assert rows_high["cf: a1 > 1/(1-alpha)"] is False  # 3 < 50
    rows_low = dict(table1_conditions(EX1, 0.66, "E0"))
    assert rows_low["cf: a1 > 1/(1-alpha)"] is True  # 3 > 2.94


def test_table1_e2_chain_example1():
    rows = dict(table1_conditions(EX1, 0.98, "E2"))
    assert rows["caputo: (a5-1)/a6 < a1/a2"] is True  # 1/3 < 6
    assert rows["caputo: a1/a2 < (a3-1)/a4"] is False  # 6 > 1
    # raw audit booleans; the operative verdict still comes from the spectrum


def test_table1_e4_rows_exist():
    rows = table1_conditions(EX2, 0.6, "E4")
    names = [name for name, _ in rows]
    assert any("routh-hurwitz" in n for n in names)
    assert any("characteristic roots" in n for n in names)


def test_table1_rejects_unknown_kind():
    with pytest.raises(ValueError):
        table1_conditions(EX1, 0.5, "E9")


# ---------------------------------------------------------------------------
# full reports


def _stable_kinds(reports, which):
    out = []
    for rep in reports:
        verdict = getattr(rep, which)
        if verdict is not None and verdict.stable:
            out.append(rep.equilibrium.kind)
    return out


def test_report_example1_high_order():
    reports = equilibrium_report(EX1, 0.98)
    assert _stable_kinds(reports, "caputo") == ["E2"]
    assert _stable_kinds(reports, "cf_theorem") == ["E2"]


def test_report_example2():
    reports = equilibrium_report(EX2, 0.6)
    assert _stable_kinds(reports, "caputo") == ["E4"]
    assert _stable_kinds(reports, "cf_theorem") == ["E0", "E1", "E3", "E4"]


def test_report_example3_repaired():
    reports = equilibrium_report(EX3, 0.4)
    assert _stable_kinds(reports, "caputo") == ["E2"]
    assert _stable_kinds(reports, "cf_theorem") == ["E0", "E1", "E2", "E3", "E4"]


def test_report_structure_and_regions():
    reports = equilibrium_report(EX1, 0.66)
    assert [rep.equilibrium.kind for rep in reports] == ["E0", "E1", "E2", "E3", "E4"]
    for rep in reports:
        assert len(rep.spectrum.eigenvalues) == 3
        assert rep.regions is not None and len(rep.regions) == 3
        assert set(rep.regions) <= {"A", "B", "C", "D"}
        assert rep.table1
        # disk stability is implied by any theorem pass, per eigenvalue
        for (w, tag), region in zip(rep.cf_theorem.per_eigenvalue, rep.regions):
            if tag is not None:
                assert region in ("A", "D")


def test_report_at_order_one_marks_cf_not_applicable():
    reports = equilibrium_report(EX1, 1.0)
    for rep in reports:
        assert rep.cf_theorem is None
        assert rep.cf_disk is None
        assert rep.regions is None
        assert rep.table1 == ()
    assert _stable_kinds(reports, "caputo") == ["E2"]


def test_spectrum_like_inputs_accepted():
    from fraclv.spectral import eigenvalues
    from fraclv.model import jacobian
    spec = eigenvalues(jacobian(EX1, [0.0, 0.0, 0.0]))
    assert caputo_stable(spec, 0.5).stable == caputo_stable(list(spec.eigenvalues), 0.5).stable
