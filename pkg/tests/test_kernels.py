"""Three-bracket kernel, region decomposition, bilinear operator checks."""

from __future__ import annotations

import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from youngbound.grids import Grid, SampledFunction, SampledKernel2d
from youngbound.kernels import (
    REGION_TO_ITEM,
    KernelParams,
    PreconditionError,
    RegionParams,
    decomposition_residual,
    kernel_f,
    kernel_table,
    region_codes,
    region_of,
    region_table,
    t_f,
    t_theta_f,
    theta_kernel,
    verify_lemma_intestimates,
    verify_prop_tf_bounds,
)

from oracles import direct_bilinear_tf

GRID32 = Grid(1, 8.0, 32)


def smooth_pair(grid, seed):
    rng = np.random.default_rng(seed)
    ax = grid.axis()
    env = np.exp(-(ax ** 2) / 8.0)
    f = env * rng.standard_normal(grid.n)
    g = env * rng.standard_normal(grid.n)
    return SampledFunction(grid, f + 0j), SampledFunction(grid, g + 0j)


# ---------------------------------------------------------------------------
# Kernel values
# ---------------------------------------------------------------------------

def test_kernel_frozen_values():
    assert kernel_f(0, 0, KernelParams((0, 0, 0))) == 1.0
    assert kernel_f(3, 1, KernelParams((1, 1, 1))) == pytest.approx(0.1)
    assert kernel_f(5, 5, KernelParams((0, 2, 0))) == pytest.approx(1.0)


def test_kernel_two_dimensional_points():
    params = KernelParams((1, 0, 0), d=2)
    assert kernel_f((3, 4), (0, 0), params) == pytest.approx(1 / math.sqrt(26.0))


def test_kernel_table_matches_pointwise():
    params = KernelParams((F(1, 2), 1, F(3, 2)))
    table = kernel_table(GRID32, params)
    ax = GRID32.axis()
    for i in (0, 7, 16, 31):
        for j in (3, 16, 30):
            assert table.values[i, j] == pytest.approx(
                kernel_f(ax[i], ax[j], params), rel=1e-12
            )


def test_kernel_params_validation():
    with pytest.raises(ValueError):
        KernelParams((1, 1), d=1)  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        KernelParams((1, 1, 1), d=3)


# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------

def test_region_frozen_values():
    params = RegionParams()
    assert region_of(10, 1, params) == 1
    assert region_of(10, 9.9, params) == 2
    assert region_of(0, 0, params) == 3
    assert region_of(20, 31, params) == 4
    assert region_of(20, -30, params) == 5


def test_region_params_validation():
    with pytest.raises(ValueError):
        RegionParams(delta=F(3, 2))
    with pytest.raises(ValueError):
        RegionParams(delta=F(1, 2), R=7)  # below 4/delta


def test_region_boundary_ties():
    params = RegionParams(delta=F(1, 2), R=8)
    # |x| = R exactly stays in region 3 (the clause is non-strict).
    assert region_of(8, -4, params) == 3
    # <x-y> = <y> exactly lands in region 4 (non-strict there too).
    assert region_of(20, 10, params) == 4


@settings(max_examples=60)
@given(
    st.floats(min_value=-40, max_value=40, allow_nan=False),
    st.floats(min_value=-40, max_value=40, allow_nan=False),
)
def test_prop_region_codes_agree_with_pointwise(x, y):
    params = RegionParams()
    codes = region_codes(np.array([x]), np.array([y]), params)
    assert codes[0] == region_of(x, y, params)


def test_region_table_is_a_partition():
    table = region_table(Grid(1, 16.0, 256), RegionParams())
    assert set(np.unique(table)) <= {1, 2, 3, 4, 5}


def test_region_to_item_mapping():
    assert REGION_TO_ITEM == {1: 1, 2: 2, 3: 3, 4: 4, 5: 4}


# ---------------------------------------------------------------------------
# Bilinear operator
# ---------------------------------------------------------------------------

def test_tf_matches_quadratic_oracle():
    params = KernelParams((F(1, 2), F(1, 4), 1))
    table = kernel_table(GRID32, params)
    f, g = smooth_pair(GRID32, 5)
    fast = t_f(table, f, g).values
    slow = direct_bilinear_tf(table.values, f.values, g.values, GRID32.h)
    assert np.max(np.abs(fast - slow)) < 1e-10


def test_tf_callable_kernel_matches_table():
    params = KernelParams((1, 0, F(1, 2)))
    table = kernel_table(GRID32, params)
    f, g = smooth_pair(GRID32, 6)

    def callable_kernel(x, y):
        bx = np.sqrt(1.0 + x * x)
        by = np.sqrt(1.0 + y * y)
        return bx ** -1.0 * by ** -0.5

    a = t_f(table, f, g).values
    b = t_f(callable_kernel, f, g, block_rows=7).values
    assert np.max(np.abs(a - b)) < 1e-12


def test_tf_is_bilinear():
    params = KernelParams((0, 1, 0))
    table = kernel_table(GRID32, params)
    f1, g = smooth_pair(GRID32, 7)
    f2, _ = smooth_pair(GRID32, 8)
    combo = SampledFunction(GRID32, 2.0 * f1.values - 3.0 * f2.values)
    lhs = t_f(table, combo, g).values
    rhs = 2.0 * t_f(table, f1, g).values - 3.0 * t_f(table, f2, g).values
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_theta_swaps_translated_argument():
    """T_{Theta F}(f, g) must equal T_F(g, f) and the remapped-table route."""
    params = KernelParams((0, F(1, 2), F(1, 2)))
    table = kernel_table(GRID32, params)
    f, g = smooth_pair(GRID32, 9)
    via_swap = t_theta_f(table, f, g).values
    assert np.max(np.abs(via_swap - t_f(table, g, f).values)) == 0.0
    remapped = t_f(theta_kernel(table), g, f).values
    # The remapped table loses the index band pushed off the grid, so
    # compare away from the edges where both routes are fully supported.
    inner = slice(8, 24)
    assert np.max(np.abs(via_swap[inner] - remapped[inner])) < 1e-9


def test_tf_rejects_mismatched_inputs():
    table = kernel_table(GRID32, KernelParams((0, 0, 0)))
    f, _ = smooth_pair(GRID32, 1)
    other = SampledFunction(
        Grid(1, 4.0, 32), np.ones(32, dtype=np.complex128)
    )
    with pytest.raises(ValueError):
        t_f(table, f, other)
    with pytest.raises(ValueError):
        t_f(table, other, other)


# ---------------------------------------------------------------------------
# Decomposition identity
# ---------------------------------------------------------------------------

def test_decomposition_residual_vanishes():
    grid = Grid(1, 16.0, 256)
    kparams = KernelParams((F(1, 2), F(1, 3), 1))
    rparams = RegionParams()
    for seed in (0, 1):
        f, g = smooth_pair(grid, seed)
        assert decomposition_residual(grid, kparams, rparams, f, g) <= 1e-12


def test_decomposition_residual_zero_inputs():
    grid = Grid(1, 16.0, 64)
    zero = SampledFunction(grid, np.zeros(grid.n, dtype=np.complex128))
    res = decomposition_residual(
        grid, KernelParams((1, 1, 1)), RegionParams(), zero, zero
    )
    assert res == 0.0


# ---------------------------------------------------------------------------
# Slice-norm envelopes
# ---------------------------------------------------------------------------

def test_slice_envelope_region_one_smoke():
    report = verify_lemma_intestimates(
        1,
        KernelParams((1, 1, 1)),
        RegionParams(),
        2,
        scan_range=(1.0, 32.0),
        quad_points=4001,
    )
    assert report.region == 1 and report.item == 1
    assert report.passed
    assert report.max_ratio <= 3.0 * report.median_ratio + 1e-12
    assert len(report.scan_values) + len(report.excluded_empty) > 0


def test_slice_envelope_rejects_bad_region():
    with pytest.raises(ValueError):
        verify_lemma_intestimates(
            6, KernelParams((1, 1, 1)), RegionParams(), 2
        )


def test_slice_report_serializes():
    import json

    report = verify_lemma_intestimates(
        3,
        KernelParams((0, 1, 1)),
        RegionParams(),
        "inf",
        scan_range=(1.0, 16.0),
        quad_points=2001,
    )
    assert json.dumps(report.to_dict())


# ---------------------------------------------------------------------------
# Operator-bound stress
# ---------------------------------------------------------------------------

def test_prop_tf_bounds_case_one_passes():
    report = verify_prop_tf_bounds(1, (2, 1, 2), trials=2, seed=3)
    assert report.passed
    assert report.case == 1
    assert all(abs(s) <= 0.05 for s in report.slopes)


def test_prop_tf_bounds_rejects_negative_functional():
    with pytest.raises(PreconditionError):
        verify_prop_tf_bounds(1, (1, 1, 1))


def test_prop_tf_bounds_rejects_cap_breach():
    # R(p) = 1/2 but 1/p0 = 1/4: case 1 does not apply.
    with pytest.raises(PreconditionError):
        verify_prop_tf_bounds(1, (4, 4, 2))


def test_prop_tf_bounds_validates_arguments():
    with pytest.raises(ValueError):
        verify_prop_tf_bounds(4, (2, 1, 2))
    with pytest.raises(ValueError):
        verify_prop_tf_bounds(1, (2, 1, 2), kernel="spikes")


def test_prop_tf_bounds_flat_kernel_mode():
    report = verify_prop_tf_bounds(2, (2, 2, 2), trials=2, kernel="ones")
    assert report.kernel == "ones"
    assert report.scales == [1.0]
    assert report.passed
