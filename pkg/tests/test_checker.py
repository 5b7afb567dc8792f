import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gammalcm.checker import (
    DEFAULT_GRID,
    TOLERANCE_FLOOR,
    ConsistentUpTo,
    GridSpec,
    Mode,
    Violation,
    cm_sign_table,
    finite_difference_crosscheck,
    inclusion_demo,
    lcm_sign_table,
    sign_table,
    sweep,
    sweep_values,
)
from gammalcm.errors import DomainError, RemovablePointError
from gammalcm.families import (
    CodingGain,
    GeneralRatio,
    HAlphaY,
    HBeta,
    MeasureRep,
    PAlpha,
    QiBerg,
    ShiftedRootRatio,
)
from gammalcm.specfun import gamma_ratio
from gammalcm.theorem import Region, classify

SQRT_PI = math.sqrt(math.pi)
TWO_SQRT_PI = 2.0 * SQRT_PI
SMALL_GRID = GridSpec(0.02, 50.0, 40)


# --- GridSpec --------------------------------------------------------------------


def test_grid_values():
    g = GridSpec(1.0, 100.0, 3)
    assert np.allclose(g.values(), [1.0, 10.0, 100.0], rtol=1e-15)
    assert np.allclose(GridSpec(-1.0, 1.0, 5, "linear").values(), [-1, -0.5, 0, 0.5, 1])
    assert DEFAULT_GRID.as_dict() == {"x_min": 0.01, "x_max": 100.0, "points": 200, "spacing": "log"}


@pytest.mark.parametrize(
    "args,error",
    [((1.0, 1.0, 5), DomainError), ((2.0, 1.0, 5), DomainError), ((1.0, 2.0, 1), ValueError),
     ((0.0, 2.0, 5), DomainError), ((1.0, 2.0, 5, "cubic"), ValueError), ((1.0, math.inf, 5), DomainError)],
)
def test_grid_validation(args, error):
    with pytest.raises(error):
        GridSpec(*args)


# --- sign tables -------------------------------------------------------------------


def test_coding_gain_lcm_consistent():
    table = lcm_sign_table(CodingGain(), DEFAULT_GRID, 10)
    assert isinstance(table.verdict, ConsistentUpTo)
    assert table.verdict.order == 10 and table.verdict.grid == DEFAULT_GRID
    assert table.entries.shape == (10, 200)
    assert np.all(table.entries >= -table.tolerances)
    assert table.orders == tuple(range(1, 11))


def test_equal_parameters_all_zero():
    table = lcm_sign_table(GeneralRatio(1.4, 1.4, 1.0))
    assert np.array_equal(table.entries, np.zeros_like(table.entries))
    assert table.verdict.ok


def test_shifted_root_ratio_negative_alpha_violates_on_linear_grid():
    grid = GridSpec(-0.4, 50.0, 64, "linear")
    table = lcm_sign_table(ShiftedRootRatio(-0.5), grid, 5)
    assert isinstance(table.verdict, Violation)
    assert table.verdict.confirmation == "series-only"


def test_shifted_root_ratio_positive_alpha_consistent():
    assert lcm_sign_table(ShiftedRootRatio(0.5)).verdict.ok


def test_violation_is_minimal():
    table = lcm_sign_table(GeneralRatio(1.0, 0.5, 1.0), SMALL_GRID, 6)
    v = table.verdict
    assert isinstance(v, Violation) and v.confirmation == "double-path"
    bad = table.entries < -table.tolerances
    first_row = int(np.flatnonzero(bad.any(axis=1))[0])
    assert v.k == table.orders[first_row]
    assert v.x == table.xs[int(np.flatnonzero(bad[first_row])[0])]
    assert v.value == table.entries[first_row, int(np.flatnonzero(bad[first_row])[0])]


def test_rows_order_and_flags():
    table = lcm_sign_table(GeneralRatio(1.0, 0.5, 1.0), GridSpec(0.1, 1.0, 3), 2)
    rows = list(table.rows())
    assert [(k, round(x, 12)) for k, x, _, _ in rows] == [(1, 0.1), (1, round(math.sqrt(0.1), 12)), (1, 1.0),
                                                         (2, 0.1), (2, round(math.sqrt(0.1), 12)), (2, 1.0)]
    assert {flag for *_, flag in rows} <= {"ok", "violation"}


def test_tolerance_model():
    table = lcm_sign_table(CodingGain(), SMALL_GRID, 6)
    mags = np.abs(table.entries)
    for r in range(mags.shape[0]):
        for i in range(mags.shape[1]):
            local = mags[r, max(0, i - 1): i + 2].max()
            assert table.tolerances[r, i] == TOLERANCE_FLOOR * max(1.0, local)


def test_cm_examples():
    inv = MeasureRep(1.0, 0.0)
    table = cm_sign_table(inv, GridSpec(0.1, 10.0, 20), 8)
    assert table.verdict.ok
    for r, k in enumerate(table.orders):
        want = [math.factorial(k) / x ** (k + 1) for x in table.xs]
        assert np.allclose(table.entries[r], want, rtol=1e-14)
    const = cm_sign_table(MeasureRep(0.0, 1.0), GridSpec(0.1, 10.0, 20), 5)
    assert np.array_equal(const.entries[0], np.ones(20))
    assert np.array_equal(const.entries[1:], np.zeros((5, 20)))
    assert cm_sign_table(CodingGain(), DEFAULT_GRID, 8).verdict.ok


def test_removable_point_proximity_propagates():
    with pytest.raises(RemovablePointError):
        lcm_sign_table(PAlpha(1.0), GridSpec(0.1, 10.0, 3))  # grid hits x = 1 exactly


@pytest.mark.parametrize(
    "spec,grid",
    [(CodingGain(), DEFAULT_GRID), (QiBerg(), DEFAULT_GRID), (ShiftedRootRatio(0.5), DEFAULT_GRID),
     (HBeta(2.0, 1.0, 0.5), DEFAULT_GRID), (PAlpha(1.5), DEFAULT_GRID), (HAlphaY(1.0, 0.2), DEFAULT_GRID),
     (GeneralRatio(2.0, 0.5, 3.0), DEFAULT_GRID), (MeasureRep(0.5, 0.1, ((2.0, 1.0), (7.0, 3.0))), DEFAULT_GRID)],
    ids=lambda v: v.text() if hasattr(v, "text") else "grid",
)
def test_mode_coherence(spec, grid):
    lcm = lcm_sign_table(spec, grid, 8)
    if lcm.verdict.ok:
        assert cm_sign_table(spec, grid, 8).verdict.ok


def test_determinism():
    spec = QiBerg()
    one = lcm_sign_table(spec, SMALL_GRID, 10)
    two = lcm_sign_table(spec, SMALL_GRID, 10)
    assert one.entries.tobytes() == two.entries.tobytes()


def test_sign_table_rejects_bad_order():
    with pytest.raises(ValueError):
        sign_table(CodingGain(), SMALL_GRID, 0)
    with pytest.raises(ValueError):
        sign_table(CodingGain(), SMALL_GRID, 26)


# --- theorem agreement and duality ------------------------------------------------------


@settings(max_examples=15, deadline=None)
@given(st.floats(0.1, 4.0), st.floats(0.1, 4.0), st.floats(1.0, 3.0))
def test_theorem_agreement(a, b, stretch):
    if abs(a - b) < 1e-3:
        return
    threshold = gamma_ratio(b, a)
    c = threshold * stretch if a > b else threshold / stretch
    region = classify(a, b, c).region
    spec = GeneralRatio(a, b, c)
    if region is Region.CASE1_LCM:
        assert lcm_sign_table(spec, SMALL_GRID, 10).verdict.ok
    else:
        assert region is Region.CASE2_RECIPROCAL_LCM
        assert lcm_sign_table(spec.reciprocal(), SMALL_GRID, 10).verdict.ok


@settings(max_examples=20, deadline=None)
@given(st.floats(0.1, 5.0), st.floats(0.1, 5.0), st.floats(0.1, 10.0))
def test_reciprocal_duality(a, b, c):
    spec = GeneralRatio(a, b, c)
    left = lcm_sign_table(spec, SMALL_GRID, 8).entries
    right = lcm_sign_table(spec.reciprocal(), SMALL_GRID, 8).entries
    assert np.all(np.abs(left + right) <= 1e-13 * np.maximum(1.0, np.abs(left)))


# --- inclusion demo -------------------------------------------------------------------


@pytest.mark.parametrize(
    "m", [MeasureRep(1.0, 0.0), MeasureRep(0.0, 0.0, ((1.0, 1.0),)), MeasureRep(0.5, 0.1, ((2.0, 1.0), (7.0, 3.0)))],
    ids=lambda m: m.text(),
)
def test_inclusion_demo_examples(m):
    report = inclusion_demo(m)
    assert report.consistent
    assert report.lcm.mode is Mode.LCM and report.cm.mode is Mode.CM
    assert report.lcm.max_order == 8


def test_inclusion_demo_type_check():
    with pytest.raises(TypeError):
        inclusion_demo(CodingGain())


# --- finite-difference cross-check -------------------------------------------------------


def test_crosscheck_examples():
    assert finite_difference_crosscheck(CodingGain(), 2.0, 1)[2] < 1e-7
    series_value, fd_value, rel_err = finite_difference_crosscheck(GeneralRatio(1.2, 1.2, 1.0), 0.8, 3)
    assert series_value == 0.0 and fd_value == 0.0 and rel_err == 0.0
    assert finite_difference_crosscheck(QiBerg(), 1.5, 2)[2] < 1e-6


@pytest.mark.parametrize("spec", [HBeta(2.0, 1.0, 0.5), PAlpha(1.5), HAlphaY(0.5, 0.2), ShiftedRootRatio(0.5)],
                         ids=lambda s: s.text())
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_crosscheck_families(spec, k):
    assert finite_difference_crosscheck(spec, 2.3, k)[2] < 1e-6


def test_crosscheck_boundary_and_order():
    with pytest.raises(DomainError):
        finite_difference_crosscheck(CodingGain(), 1e-6, 1)
    with pytest.raises(ValueError):
        finite_difference_crosscheck(CodingGain(), 1.0, 5)


# --- sweeps ------------------------------------------------------------------------------


def test_sweep_values():
    assert sweep_values(1.0, 2.5, 0.05)[-1] == pytest.approx(2.5)
    assert len(sweep_values(1.0, 2.5, 0.05)) == 31
    assert sweep_values(2.0, 1.0, 0.1) == []
    with pytest.raises(ValueError):
        sweep_values(0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        sweep_values(0.0, 1.0, 1e-5)


def test_c_sweep_transition_at_threshold():
    values = sweep_values(1.0, 2.5, 0.05)
    rows = sweep("general-ratio:a=1,b=0.5", "c", values)
    assert [r.param for r in rows] == values
    for row in rows:
        assert row.label == ("violation" if row.param < SQRT_PI else "consistent"), row.param


def test_sweep_empty_and_iff_family():
    assert sweep("general-ratio:a=1,b=0.5", "c", []) == []
    rows = sweep("shifted-root-ratio", "alpha", [-0.5, 0.5])
    assert [r.label for r in rows] == ["violation", "consistent"]


def test_sweep_records_errors():
    rows = sweep("general-ratio:a=1,b=0.5", "c", [-1.0, 2.0])
    assert rows[0].label == "error" and "ParseError" in rows[0].error
    assert rows[1].label == "consistent"


def test_sweep_independent_of_workers():
    values = sweep_values(1.5, 2.0, 0.1)
    serial = sweep("general-ratio:a=1,b=0.5", "c", values, SMALL_GRID, 6)
    parallel = sweep("general-ratio:a=1,b=0.5", "c", values, SMALL_GRID, 6, workers=3)
    assert serial == parallel
