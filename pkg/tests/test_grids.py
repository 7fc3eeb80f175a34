"""Grid engine: transforms, convolution, norms, short-time table."""

from __future__ import annotations

import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra import numpy as hnp

from youngbound.grids import (
    Grid,
    GridMismatchError,
    ResolutionError,
    ResolutionWarning,
    SampledFunction,
    SampledKernel2d,
    bracket,
    convolve,
    fourier_lebesgue_norm,
    fourier_transform,
    gaussian_resolution_guard,
    inverse_fourier_transform,
    mixed_norm_2d,
    modulation_norm,
    stft,
    weighted_lebesgue_norm,
)

from oracles import (
    direct_convolution,
    direct_dft_centered,
    direct_stft_point,
    gaussian_lp_norm,
    loop_weighted_norm,
    trapezoid_weighted_norm,
)

GRID = Grid(1, 16.0, 1024)
SQRT_PI = math.sqrt(math.pi)


def sample(grid, func):
    return SampledFunction(grid, func(grid.axis()).astype(np.complex128))


def gaussian(alpha):
    return lambda x: np.exp(-alpha * x * x)


# ---------------------------------------------------------------------------
# Grid bookkeeping
# ---------------------------------------------------------------------------

def test_grid_validation():
    with pytest.raises(ValueError):
        Grid(3, 16.0, 64)
    with pytest.raises(ValueError):
        Grid(1, -1.0, 64)
    with pytest.raises(ValueError):
        Grid(1, 16.0, 48)  # not a power of two
    with pytest.raises(ValueError):
        Grid(1, 16.0, 4)


def test_grid_spacing_and_axis():
    g = Grid(1, 16.0, 1024)
    assert g.h == pytest.approx(1 / 32)
    ax = g.axis()
    assert ax[0] == pytest.approx(-16.0)
    assert ax[g.n // 2] == 0.0
    assert ax[-1] == pytest.approx(16.0 - g.h)


def test_dual_grid_is_an_involution():
    g = Grid(1, 12.0, 256)
    assert g.dual().dual() == g
    assert g.dual().extent == pytest.approx(math.pi * g.n / (2 * g.extent))


def test_bracket_values():
    assert bracket(0) == 1.0
    assert bracket(3) == pytest.approx(math.sqrt(10.0))
    assert bracket((3, 4)) == pytest.approx(math.sqrt(26.0))


# ---------------------------------------------------------------------------
# Fourier transform
# ---------------------------------------------------------------------------

def test_standard_gaussian_is_a_fixed_point():
    f = sample(GRID, gaussian(0.5))
    fhat = fourier_transform(f)
    expected = np.exp(-fhat.grid.axis() ** 2 / 2.0)
    assert np.max(np.abs(fhat.values - expected)) < 1e-12


def test_gaussian_transform_closed_form():
    # e^{-x^2} maps to 2^{-1/2} e^{-xi^2/4}
    f = sample(GRID, gaussian(1.0))
    fhat = fourier_transform(f)
    xi = fhat.grid.axis()
    expected = np.exp(-xi * xi / 4.0) / math.sqrt(2.0)
    assert np.max(np.abs(fhat.values - expected)) < 1e-12


def test_transform_matches_direct_dft():
    g = Grid(1, 10.0, 128)
    rng = np.random.default_rng(3)
    envelope = np.exp(-g.axis() ** 2 / 4.0)
    vals = envelope * rng.standard_normal(g.n)
    f = SampledFunction(g, vals.astype(np.complex128))
    fast = fourier_transform(f, boundary_tol=None).values
    slow = direct_dft_centered(vals, g.h, g.extent)
    assert np.max(np.abs(fast - slow)) < 1e-10 * np.max(np.abs(slow))


def test_parseval_on_the_grid():
    f = sample(GRID, lambda x: np.exp(-0.3 * x * x) * np.cos(x))
    fhat = fourier_transform(f)
    a = weighted_lebesgue_norm(f, 2, 0)
    b = weighted_lebesgue_norm(fhat, 2, 0)
    assert a == pytest.approx(b, rel=1e-8)


def test_round_trip_is_exact():
    f = sample(GRID, lambda x: np.exp(-0.2 * x * x) * (1.0 + np.sin(2 * x)))
    back = inverse_fourier_transform(fourier_transform(f))
    assert back.grid == f.grid
    assert np.max(np.abs(back.values - f.values)) < 1e-12


def test_under_resolved_transform_is_refused():
    # A spike this narrow pushes mass to the edge of the dual box.
    f = sample(Grid(1, 16.0, 64), gaussian(400.0))
    with pytest.raises(ResolutionError):
        fourier_transform(f)


# ---------------------------------------------------------------------------
# Convolution
# ---------------------------------------------------------------------------

def test_convolve_matches_quadratic_oracle():
    g = Grid(1, 8.0, 64)
    rng = np.random.default_rng(11)
    envelope = np.exp(-g.axis() ** 2 / 2.0)
    fv = envelope * rng.standard_normal(g.n)
    gv = envelope * rng.standard_normal(g.n)
    fast = convolve(SampledFunction(g, fv + 0j), SampledFunction(g, gv + 0j))
    slow = direct_convolution(fv, gv, g.h)
    assert np.max(np.abs(fast.values - slow)) < 1e-9


def test_indicator_self_convolution_at_zero():
    # Rectangle rule on chi_{[-1,1]} * chi_{[-1,1]} at 0: h per sample in
    # the overlap, 2/h + 1 samples, so the value is exactly 2 + h.
    g = Grid(1, 16.0, 1024)
    ind = SampledFunction(g, (np.abs(g.axis()) <= 1.0).astype(np.complex128))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ResolutionWarning)
        out = convolve(ind, ind)
    assert out.values[g.n // 2].real == pytest.approx(2.0 + g.h, abs=1e-12)


def test_gaussian_self_convolution_closed_form():
    f = sample(GRID, gaussian(1.0))
    out = convolve(f, f)
    expected = math.sqrt(math.pi / 2.0) * np.exp(-GRID.axis() ** 2 / 2.0)
    assert np.max(np.abs(out.values - expected)) < 1e-10


def test_convolution_theorem():
    f = sample(GRID, gaussian(0.7))
    g = sample(GRID, lambda x: np.exp(-0.4 * x * x) * np.cos(x / 2))
    lhs = fourier_transform(convolve(f, g)).values
    rhs = (
        math.sqrt(2.0 * math.pi)
        * fourier_transform(f).values
        * fourier_transform(g).values
    )
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_convolve_rejects_mismatched_grids():
    f = sample(Grid(1, 16.0, 256), gaussian(1.0))
    g = sample(Grid(1, 8.0, 256), gaussian(1.0))
    with pytest.raises(GridMismatchError):
        convolve(f, g)


def test_edge_heavy_input_warns():
    g = Grid(1, 4.0, 64)
    f = sample(g, gaussian(0.05))  # visibly truncated at |x| = 4
    with pytest.warns(ResolutionWarning):
        convolve(f, f)


# ---------------------------------------------------------------------------
# Weighted norms
# ---------------------------------------------------------------------------

def test_gaussian_l2_norm_closed_form():
    for alpha in (0.25, 1.0, 3.0):
        f = sample(GRID, gaussian(alpha))
        assert weighted_lebesgue_norm(f, 2, 0) == pytest.approx(
            (math.pi / (2 * alpha)) ** 0.25, rel=1e-10
        )


def test_gaussian_lp_norms_match_closed_form():
    f = sample(GRID, gaussian(1.0))
    for p in (1, 2, 4):
        assert weighted_lebesgue_norm(f, p, 0) == pytest.approx(
            gaussian_lp_norm(1.0, p), rel=1e-10
        )


def test_weighted_norm_matches_trapezoid_quadrature():
    f = sample(GRID, gaussian(0.5))
    fast = weighted_lebesgue_norm(f, 3, 0.5)
    slow = trapezoid_weighted_norm(gaussian(0.5), 3, 0.5)
    assert fast == pytest.approx(slow, rel=1e-8)


def test_sup_norm_with_weight():
    f = sample(GRID, gaussian(1.0))
    # <x>^{-1} e^{-x^2} peaks at the origin with value 1.
    assert weighted_lebesgue_norm(f, "inf", -1) == pytest.approx(1.0)


def test_norm_rejects_non_finite_samples():
    vals = np.ones(GRID.n, dtype=np.complex128)
    vals[5] = np.nan
    with pytest.raises(ValueError):
        weighted_lebesgue_norm(SampledFunction(GRID, vals), 2, 0)


def test_norm_rejects_exponents_below_one():
    f = sample(GRID, gaussian(1.0))
    with pytest.raises(ValueError):
        weighted_lebesgue_norm(f, 0.5, 0)


smooth_arrays = hnp.arrays(
    np.float64,
    64,
    elements=st.floats(min_value=-5, max_value=5, allow_nan=False),
)


@settings(max_examples=40)
@given(smooth_arrays, st.sampled_from([1, 2, 3, "inf"]), st.sampled_from([-1, 0, 1]))
def test_prop_norm_matches_python_loop(vals, p, t):
    g = Grid(1, 4.0, 64)
    fast = weighted_lebesgue_norm(SampledFunction(g, vals + 0j), p, t)
    pf = math.inf if p == "inf" else p
    slow = loop_weighted_norm(vals, g.h, g.axis(), pf, t)
    assert fast == pytest.approx(slow, rel=1e-12, abs=1e-12)


@settings(max_examples=30)
@given(smooth_arrays)
def test_prop_norm_is_monotone_in_the_weight(vals):
    g = Grid(1, 4.0, 64)
    f = SampledFunction(g, vals + 0j)
    low = weighted_lebesgue_norm(f, 2, -1)
    mid = weighted_lebesgue_norm(f, 2, 0)
    high = weighted_lebesgue_norm(f, 2, 1)
    assert low <= mid + 1e-12
    assert mid <= high + 1e-12


@settings(max_examples=30)
@given(smooth_arrays, smooth_arrays)
def test_prop_cauchy_schwarz_on_the_grid(a, b):
    g = Grid(1, 4.0, 64)
    fa = SampledFunction(g, a + 0j)
    fb = SampledFunction(g, b + 0j)
    prod = SampledFunction(g, (a * b) + 0j)
    lhs = weighted_lebesgue_norm(prod, 1, 0)
    rhs = weighted_lebesgue_norm(fa, 2, 0) * weighted_lebesgue_norm(fb, 2, 0)
    assert lhs <= rhs * (1 + 1e-12) + 1e-12


def test_refinement_converges():
    errors = []
    target = SQRT_PI ** 0.5  # continuum L^2 norm of e^{-x^2/2}
    for n in (64, 128, 256):
        f = sample(Grid(1, 16.0, n), gaussian(0.5))
        errors.append(abs(weighted_lebesgue_norm(f, 2, 0) - target))
    assert errors[1] <= errors[0] and errors[2] <= errors[1]


# ---------------------------------------------------------------------------
# Transform-side norms
# ---------------------------------------------------------------------------

def test_fourier_lebesgue_norm_frozen_values():
    f = sample(GRID, gaussian(0.5))
    assert fourier_lebesgue_norm(f, 2, 0) == pytest.approx(math.pi ** 0.25, rel=1e-10)
    assert fourier_lebesgue_norm(f, "inf", 0) == pytest.approx(1.0, rel=1e-10)


# ---------------------------------------------------------------------------
# Short-time transform
# ---------------------------------------------------------------------------

def test_stft_matches_direct_sum_at_sample_points():
    g = Grid(1, 8.0, 128)
    f = sample(g, lambda x: np.exp(-x * x) * (1 + 0.5 * np.sin(x)))
    w = sample(g, gaussian(0.5))
    table = stft(f, w, stride=16)
    for row, idx in enumerate(range(0, g.n, 16)):
        for freq in (10, 64, 100):
            ref = direct_stft_point(f.values, w.values, g.h, g.extent, idx, freq)
            assert table.values[row, freq] == pytest.approx(ref, abs=1e-12)


def test_stft_validates_inputs():
    g = Grid(1, 8.0, 128)
    f = sample(g, gaussian(1.0))
    w = sample(g, gaussian(0.5))
    with pytest.raises(ValueError):
        stft(f, w, stride=3)  # 3 does not divide 128
    with pytest.raises(ValueError):
        stft(f, SampledFunction(g, np.zeros(g.n, dtype=np.complex128)))
    other = sample(Grid(1, 4.0, 128), gaussian(0.5))
    with pytest.raises(GridMismatchError):
        stft(f, other)


def test_moyal_identity_for_gaussians():
    g = Grid(1, 16.0, 512)
    f = sample(g, gaussian(0.5))
    w = sample(g, gaussian(0.5))
    # || V_phi f ||_{L^2(x,xi)} = ||f||_2 ||phi||_2 = sqrt(pi) here.
    total = modulation_norm(f, w, 2, 2, 0, 0, space="M", stride=1)
    assert total == pytest.approx(SQRT_PI, rel=1e-6)


def test_modulation_orders_coincide_when_exponents_match():
    g = Grid(1, 16.0, 512)
    f = sample(g, lambda x: np.exp(-0.7 * x * x) * (1 + 0.2 * np.cos(x)))
    w = sample(g, gaussian(0.5))
    m = modulation_norm(f, w, 2, 2, 0.25, -0.5, space="M", stride=4)
    wnorm = modulation_norm(f, w, 2, 2, 0.25, -0.5, space="W", stride=4)
    assert m == pytest.approx(wnorm, rel=1e-12)


def test_modulation_norm_rejects_unknown_space():
    g = Grid(1, 16.0, 512)
    f = sample(g, gaussian(1.0))
    w = sample(g, gaussian(0.5))
    with pytest.raises(ValueError):
        modulation_norm(f, w, 2, 2, 0, 0, space="X")


# ---------------------------------------------------------------------------
# Mixed norms of two-argument kernels
# ---------------------------------------------------------------------------

def _kernel_on(grid, func):
    """Sample a two-argument kernel F(x, y) over a one-dimensional grid."""
    ax = grid.axis()
    return SampledKernel2d(grid, func(ax[:, None], ax[None, :]) + 0j)


def test_mixed_norm_separable_kernel():
    g = Grid(1, 8.0, 128)
    kernel = _kernel_on(g, lambda x, y: np.exp(-x * x) * np.exp(-2.0 * y * y))
    got = mixed_norm_2d(kernel, 2, 3, order=1)
    expected = gaussian_lp_norm(1.0, 2) * gaussian_lp_norm(2.0, 3)
    assert got == pytest.approx(expected, rel=1e-10)
    # Same factorization either way around for a separable kernel.
    assert mixed_norm_2d(kernel, 2, 3, order=2) == pytest.approx(got, rel=1e-10)


def test_mixed_norm_order_matters_for_entangled_kernels():
    g = Grid(1, 8.0, 64)
    kernel = _kernel_on(
        g, lambda x, y: np.exp(-((x - y) ** 2)) * np.exp(-0.1 * y * y)
    )
    one = mixed_norm_2d(kernel, 1, 4, order=1)
    two = mixed_norm_2d(kernel, 1, 4, order=2)
    assert one != pytest.approx(two, rel=1e-3)


def test_mixed_norm_validates_order():
    g = Grid(1, 8.0, 64)
    kernel = _kernel_on(g, lambda x, y: np.exp(-x * x - y * y))
    with pytest.raises(ValueError):
        mixed_norm_2d(kernel, 2, 2, order=3)


# ---------------------------------------------------------------------------
# Resolution guard
# ---------------------------------------------------------------------------

def test_gaussian_resolution_guard():
    gaussian_resolution_guard(Grid(1, 16.0, 256), 1.0)
    with pytest.raises(ResolutionError):
        gaussian_resolution_guard(Grid(1, 4.0, 256), 0.01)
    with pytest.raises(ValueError):
        gaussian_resolution_guard(Grid(1, 16.0, 256), -1.0)
