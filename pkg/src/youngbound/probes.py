"""Numerical witnesses: scaling ladders, translation probes, sweeps.

Each probe measures a ratio of norms along a one-parameter family and fits
a power law.  The exact theory predicts the slope, so a probe both
calibrates the numerics (does the fit match the prediction?) and, when the
predicted slope has the unbounded sign, witnesses that no uniform constant
can exist.

Two families do all the work:

- GaussianFamily: f_j = <.>^{-t_j} e^{-alpha |x|^2} with 0 < alpha <= 1.
  Spreading alpha -> 0 drives the total-weight conditions.
- BumpFamily: a fixed C^2 plateau bump translated to +/- x0.  The
  convolution f1 * f2 is independent of x0 exactly, while the product of
  the weighted input norms scales like <x0>^{t1 + t2}; separating offsets
  drives the pairwise conditions.

The boundedness sweep is the converse direction: for a tuple the exact
checker classifies as Bounded, the measured ratio must stay flat and
uniformly bounded along the whole ladder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exponents import (
    Classification,
    Exponent,
    ParamTuple,
    Verdict,
    check_convolution,
    check_modulation,
    check_multiplication,
    young_functional,
)
from .grids import (
    Grid,
    SampledFunction,
    convolve,
    fourier_lebesgue_norm,
    gaussian_resolution_guard,
    inverse_fourier_transform,
    modulation_norm,
    stft,
    weight_array,
    weighted_lebesgue_norm,
)
from .kernels import PreconditionError

__all__ = [
    "GaussianFamily",
    "BumpFamily",
    "ProbeReport",
    "TranslationReport",
    "BoundReport",
    "SweepReport",
    "fit_power_law",
    "gaussian_norm_slope",
    "gaussian_necessity_probe",
    "translation_necessity_probe",
    "gaussian_lower_bound_check",
    "boundedness_sweep",
    "DEFAULT_ALPHAS",
]

TWO_PI = 2.0 * math.pi

DEFAULT_ALPHAS = tuple(2.0 ** (-k / 2.0) for k in range(13))
MODULATION_ALPHAS = tuple(2.0 ** (-k / 2.0) for k in range(9))

PROBE_GRID = Grid(1, 48.0, 4096)
TRANSLATION_GRID = Grid(1, 32.0, 2048)
LOWER_BOUND_GRID = Grid(1, 18.0, 1024)
MODULATION_GRID = Grid(1, 24.0, 2048)

SWEEP_FLAVORS = (
    "convolution",
    "multiplication",
    "modulation-convolution",
    "modulation-multiplication",
)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianFamily:
    """f_j = <.>^{-t_j} e^{-alpha |x|^2} for a weight triple t."""

    t: tuple[Fraction, Fraction, Fraction]
    d: int = 1

    def __post_init__(self) -> None:
        if self.d != 1:
            raise NotImplementedError("Gaussian probe families run in d = 1")
        object.__setattr__(self, "t", tuple(Fraction(v) for v in self.t))

    def member(self, j: int, alpha: float, grid: Grid) -> SampledFunction:
        if not (0.0 < alpha <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
        gaussian_resolution_guard(grid, alpha)
        x = grid.axis()
        vals = (1.0 + x * x) ** (float(-self.t[j]) / 2.0) * np.exp(-alpha * x * x)
        return SampledFunction(grid, vals)


@dataclass(frozen=True)
class BumpFamily:
    """A C^2 plateau bump: 1 on [-plateau, plateau], quintic falloff.

    The transition is the smoothstep 6u^5 - 15u^4 + 10u^3, so the profile
    is twice continuously differentiable and supported in radius
    plateau + width, which must not exceed 2.
    """

    plateau: float = 1.0
    width: float = 0.25

    def __post_init__(self) -> None:
        if not (self.plateau >= 1.0 and self.width > 0.0):
            raise ValueError("plateau must be >= 1 and width positive")
        if self.plateau + self.width > 2.0:
            raise ValueError("support radius plateau + width must be <= 2")

    @property
    def support_radius(self) -> float:
        return self.plateau + self.width

    def profile(self, x: np.ndarray) -> np.ndarray:
        r = np.abs(np.asarray(x, dtype=float))
        u = np.clip((self.plateau + self.width - r) / self.width, 0.0, 1.0)
        return u * u * u * (10.0 + u * (-15.0 + 6.0 * u))

    def sample(self, grid: Grid, center: float = 0.0) -> SampledFunction:
        if grid.d != 1:
            raise NotImplementedError("bump probe families run in d = 1")
        return SampledFunction(grid, self.profile(grid.axis() - center))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class ProbeReport:
    kind: str
    ladder_x: list[float]
    ladder_y: list[float]
    fitted_slope: float
    predicted_slope: float
    r_squared: float
    tol: float
    passed: bool
    witnessed: bool | None = None
    permutation: tuple[int, int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ladder_x": self.ladder_x,
            "ladder_y": self.ladder_y,
            "fitted_slope": self.fitted_slope,
            "predicted_slope": self.predicted_slope,
            "r_squared": self.r_squared,
            "tol": self.tol,
            "passed": self.passed,
            "witnessed": self.witnessed,
            "permutation": list(self.permutation) if self.permutation else None,
        }


@dataclass
class TranslationReport:
    offsets: list[float]
    products: list[float]
    conv_norms: list[float]
    fitted_slope: float
    predicted_slope: float
    r_squared: float
    conv_variation: float
    permutation: tuple[int, int, int]
    passed: bool
    witnessed: bool

    def to_dict(self) -> dict:
        return {
            "offsets": self.offsets,
            "products": self.products,
            "conv_norms": self.conv_norms,
            "fitted_slope": self.fitted_slope,
            "predicted_slope": self.predicted_slope,
            "r_squared": self.r_squared,
            "conv_variation": self.conv_variation,
            "permutation": list(self.permutation),
            "passed": self.passed,
            "witnessed": self.witnessed,
        }


@dataclass
class BoundReport:
    t1: str
    t2: str
    alpha: float
    window: float
    constant: float
    min_convolution: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "t1": self.t1,
            "t2": self.t2,
            "alpha": self.alpha,
            "window": self.window,
            "constant": self.constant,
            "min_convolution": self.min_convolution,
            "passed": self.passed,
        }


@dataclass
class SweepReport:
    flavor: str
    space: str | None
    classification: str
    theorem_used: str
    scales: list[float]
    ratios: list[float]
    fitted_slope: float
    spread: float
    passed: bool
    identity_rel_error: float | None = None

    def to_dict(self) -> dict:
        return {
            "flavor": self.flavor,
            "space": self.space,
            "classification": self.classification,
            "theorem_used": self.theorem_used,
            "scales": self.scales,
            "ratios": self.ratios,
            "fitted_slope": self.fitted_slope,
            "spread": self.spread,
            "passed": self.passed,
            "identity_rel_error": self.identity_rel_error,
        }


# ---------------------------------------------------------------------------
# Fitting
# ---------------------------------------------------------------------------

def fit_power_law(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares line through (log x, log y): (slope, intercept, r^2).

    All inputs must be strictly positive; a flat ladder fits slope zero with
    r^2 = 1 by convention (the residual test would be 0/0 otherwise).
    """
    xa = np.asarray(xs, dtype=float)
    ya = np.asarray(ys, dtype=float)
    if xa.size < 2:
        raise ValueError("need at least two ladder points to fit")
    if np.any(xa <= 0.0) or np.any(ya <= 0.0):
        raise ValueError("power-law fit requires positive data")
    lx = np.log(xa)
    ly = np.log(ya)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    total = ly - ly.mean()
    ss_tot = float(np.dot(total, total))
    ss_res = float(np.dot(resid, resid))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res <= 1e-20 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return float(slope), float(intercept), r2


# ---------------------------------------------------------------------------
# Probes
# ---------------------------------------------------------------------------

def gaussian_norm_slope(
    p,
    t,
    *,
    d: int = 1,
    alphas: Sequence[float] | None = None,
    grid: Grid | None = None,
    tol: float = 0.05,
) -> ProbeReport:
    """Calibration probe: || <.>^{-t} e^{-alpha |.|^2} ||_{L^p_t} ladder.

    The family weight cancels the norm weight exactly, so the norm equals
    (pi / (p alpha))^{d/(2p)} and the slope against log(1/alpha) is d/(2p)
    for every t.  A failure here means the grid or the norms are wrong, not
    the mathematics.
    """
    if d != 1:
        raise NotImplementedError("gaussian_norm_slope runs in d = 1")
    pe = Exponent.of(p)
    tw = Fraction(t)
    grid = grid or PROBE_GRID
    alphas = list(alphas) if alphas is not None else list(DEFAULT_ALPHAS)
    fam = GaussianFamily((tw, tw, tw))
    values = [
        weighted_lebesgue_norm(fam.member(0, a, grid), pe, tw) for a in alphas
    ]
    inv = [1.0 / a for a in alphas]
    slope, _, r2 = fit_power_law(inv, values)
    predicted = float(Fraction(d, 2) * pe.reciprocal())
    passed = abs(slope - predicted) <= tol and r2 >= 0.99
    return ProbeReport(
        kind="norm_slope",
        ladder_x=alphas,
        ladder_y=values,
        fitted_slope=slope,
        predicted_slope=predicted,
        r_squared=r2,
        tol=tol,
        passed=passed,
    )


_PAIR_TO_PERM = {
    (1, 2): (0, 1, 2),
    (0, 2): (1, 0, 2),
    (0, 1): (2, 0, 1),
}


def _permute_blocks(params: ParamTuple, perm: tuple[int, int, int]) -> ParamTuple:
    return ParamTuple(
        d=params.d,
        p=tuple(params.p[i] for i in perm),
        t=tuple(params.t[i] for i in perm),
    )


def _slot1_nonneg_permutation(t) -> tuple[int, int, int]:
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (2, 1, 0), (1, 2, 0), (2, 0, 1)):
        if t[perm[1]] >= 0:
            return perm
    raise PreconditionError(
        "all weights are negative; no slot permutation puts a nonnegative "
        "weight in position 1, which the spreading lower bound requires"
    )


def gaussian_necessity_probe(
    params: ParamTuple,
    *,
    alphas: Sequence[float] | None = None,
    grid: Grid | None = None,
    tol: float = 0.05,
) -> ProbeReport:
    """Spreading probe for the total-weight condition.

    Measures rho(alpha) = ||f1 * f2||_{L^{p0'}_{-t0}} divided by the product
    of the input norms along the Gaussian family and fits the slope against
    log(1/alpha); the predicted value is (d R(p) - sum t) / 2.  A positive
    predicted slope means the ratio blows up as the bumps spread, so a
    passing fit witnesses unboundedness.

    The three slots are permuted (trilinear duality) so that slot 1 carries
    a nonnegative weight, which the prediction's lower bound needs; the
    permutation used is recorded in the report.
    """
    if params.d != 1:
        raise NotImplementedError("gaussian_necessity_probe runs in d = 1")
    perm = _slot1_nonneg_permutation(params.t)
    work = _permute_blocks(params, perm)
    grid = grid or PROBE_GRID
    alphas = list(alphas) if alphas is not None else list(DEFAULT_ALPHAS)

    fam = GaussianFamily(work.t)
    p0c = work.p[0].conjugate()
    ratios = []
    for a in alphas:
        f1 = fam.member(1, a, grid)
        f2 = fam.member(2, a, grid)
        num = weighted_lebesgue_norm(convolve(f1, f2), p0c, -work.t[0])
        den = weighted_lebesgue_norm(f1, work.p[1], work.t[1]) * \
            weighted_lebesgue_norm(f2, work.p[2], work.t[2])
        ratios.append(num / den)
    inv = [1.0 / a for a in alphas]
    slope, _, r2 = fit_power_law(inv, ratios)
    predicted = float(
        (params.d * young_functional(work.p) - sum(work.t)) / 2
    )
    passed = abs(slope - predicted) <= tol and r2 >= 0.99
    return ProbeReport(
        kind="gaussian_necessity",
        ladder_x=alphas,
        ladder_y=ratios,
        fitted_slope=slope,
        predicted_slope=predicted,
        r_squared=r2,
        tol=tol,
        passed=passed,
        witnessed=passed and predicted > 0,
        permutation=perm,
    )


def translation_necessity_probe(
    params: ParamTuple,
    offsets: Sequence[float] = (2.0, 4.0, 8.0, 16.0),
    *,
    pair: tuple[int, int] = (1, 2),
    grid: Grid | None = None,
    family: BumpFamily | None = None,
    tol: float = 0.05,
    constancy_tol: float = 1e-10,
) -> TranslationReport:
    """Separation probe for a pairwise weight condition.

    Translating the two bumps to +/- x0 leaves their convolution literally
    unchanged (the offsets cancel), so the output norm is constant, while
    the product of the weighted input norms scales like <x0>^{t_j + t_k}.
    The slope is fitted against log x0 (not log <x0>: the bracket's
    curvature at small offsets biases the fit outside tolerance).

    ``pair`` names the weight pair to witness; trilinear duality rotates
    that pair into slots (1, 2) and the permutation is recorded.  A passing
    fit with negative predicted slope witnesses unboundedness: the ratio
    output-norm over input-norms grows without bound.
    """
    if params.d != 1:
        raise NotImplementedError("translation_necessity_probe runs in d = 1")
    key = tuple(sorted(pair))
    if key not in _PAIR_TO_PERM:
        raise ValueError(f"pair must name two distinct slots, got {pair}")
    perm = _PAIR_TO_PERM[key]
    work = _permute_blocks(params, perm)
    grid = grid or TRANSLATION_GRID
    fam = family or BumpFamily()

    offs = [float(v) for v in offsets]
    if len(offs) < 2 or any(b <= a for a, b in zip(offs, offs[1:])):
        raise ValueError("offsets must be strictly increasing")
    if offs[0] <= 0:
        raise ValueError("offsets must be positive")
    h = grid.h
    for x0 in offs:
        if abs(x0 / h - round(x0 / h)) > 1e-9:
            raise ValueError(
                f"offset {x0} is not a multiple of the grid spacing {h}; "
                "the exact-translation argument needs sample-aligned shifts"
            )
    reach = offs[-1] + fam.support_radius
    if reach > grid.extent - 2 * h:
        raise ValueError(
            f"support overflow: offset {offs[-1]} pushes the bump (radius "
            f"{fam.support_radius}) outside the box of extent {grid.extent}"
        )

    p0c = work.p[0].conjugate()
    products = []
    conv_norms = []
    for x0 in offs:
        f1 = fam.sample(grid, +x0)
        f2 = fam.sample(grid, -x0)
        conv_norms.append(
            weighted_lebesgue_norm(convolve(f1, f2), p0c, -work.t[0])
        )
        products.append(
            weighted_lebesgue_norm(f1, work.p[1], work.t[1])
            * weighted_lebesgue_norm(f2, work.p[2], work.t[2])
        )
    slope, _, r2 = fit_power_law(offs, products)
    predicted = float(work.t[1] + work.t[2])
    base = conv_norms[0]
    variation = max(abs(v - base) for v in conv_norms) / base
    passed = (
        abs(slope - predicted) <= tol
        and r2 >= 0.99
        and variation <= constancy_tol
    )
    return TranslationReport(
        offsets=offs,
        products=products,
        conv_norms=conv_norms,
        fitted_slope=slope,
        predicted_slope=predicted,
        r_squared=r2,
        conv_variation=variation,
        permutation=perm,
        passed=passed,
        witnessed=passed and predicted < 0,
    )


def gaussian_lower_bound_check(
    t1,
    t2,
    alpha: float,
    *,
    d: int = 1,
    window: float = 8.0,
    grid: Grid | None = None,
) -> BoundReport:
    """Pointwise floor for the convolution of two weighted Gaussians.

    Checks that f1 * f2 >= c <x>^{d - t1 - t2} e^{-3 alpha |x|^2} holds on
    |x| <= window with a single constant c > 0 (the reported value is the
    measured minimum of the quotient).  Requires t1 >= 0: the annulus
    argument behind the envelope pairs the y and x - y brackets, and a
    negative weight in slot 1 breaks that pairing.
    """
    if d != 1:
        raise NotImplementedError("gaussian_lower_bound_check runs in d = 1")
    t1f = Fraction(t1)
    t2f = Fraction(t2)
    if t1f < 0:
        raise PreconditionError(
            f"slot-1 weight must be nonnegative for the envelope, got {t1f}"
        )
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    grid = grid or LOWER_BOUND_GRID
    gaussian_resolution_guard(grid, alpha)
    if window >= grid.extent:
        raise ValueError("window must sit strictly inside the box")

    fam = GaussianFamily((Fraction(0), t1f, t2f))
    f1 = fam.member(1, alpha, grid)
    f2 = fam.member(2, alpha, grid)
    if not np.any(np.abs(f1.values) > 0) or not np.any(np.abs(f2.values) > 0):
        raise ValueError("degenerate (identically zero) family member")
    conv = convolve(f1, f2)
    x = grid.axis()
    mask = np.abs(x) <= window
    g = conv.values.real[mask]
    envelope = (1.0 + x[mask] ** 2) ** (float(d - t1f - t2f) / 2.0) * np.exp(
        -3.0 * alpha * x[mask] ** 2
    )
    quotient = g / envelope
    constant = float(np.min(quotient))
    min_conv = float(np.min(g))
    return BoundReport(
        t1=str(t1f),
        t2=str(t2f),
        alpha=alpha,
        window=window,
        constant=constant,
        min_convolution=min_conv,
        passed=constant > 0.0 and min_conv > 0.0,
    )


# ---------------------------------------------------------------------------
# Boundedness sweep
# ---------------------------------------------------------------------------

def _xi_convolve_rows(a: np.ndarray, b: np.ndarray, dxi: float) -> np.ndarray:
    """Row-wise convolution along the dual axis, centered layout, exact pad."""
    n = a.shape[1]
    spec = np.fft.fft(a, n=2 * n, axis=1) * np.fft.fft(b, n=2 * n, axis=1)
    full = np.fft.ifft(spec, axis=1)
    return full[:, n // 2 : n // 2 + n] * dxi


def _stft_product_identity_error(
    f1: SampledFunction,
    f2: SampledFunction,
    stride: int,
) -> float:
    """Relative sup error in the short-time product identity.

    With windows phi1 = phi2 = e^{-|y|^2/4} and phi = phi1 phi2, the table
    of f1 f2 under phi equals (2 pi)^{-1/2} times the row-wise dual-axis
    convolution of the tables of f1 and f2.
    """
    grid = f1.grid
    x = grid.axis()
    phi_half = SampledFunction(grid, np.exp(-x * x / 4.0))
    phi = SampledFunction(grid, np.exp(-x * x / 2.0))
    product = SampledFunction(grid, f1.values * f2.values)
    lhs = stft(product, phi, stride).values
    v1 = stft(f1, phi_half, stride).values
    v2 = stft(f2, phi_half, stride).values
    rhs = _xi_convolve_rows(v1, v2, grid.dual_spacing) * (TWO_PI ** -0.5)
    scale = float(np.max(np.abs(lhs)))
    if scale == 0.0:
        return float(np.max(np.abs(rhs)))
    return float(np.max(np.abs(lhs - rhs))) / scale


def boundedness_sweep(
    params: ParamTuple,
    flavor: str,
    *,
    space: str = "M",
    scales: Sequence[float] | None = None,
    grid: Grid | None = None,
    stride: int = 8,
    slope_tol: float = 0.05,
    spread_cap: float = 4.0,
    identity_tol: float = 1e-6,
) -> SweepReport:
    """Consistency sweep for a tuple the exact checker calls Bounded.

    Runs the flavor's Gaussian ladder and requires the measured norm ratio
    to stay flat (fitted slope within ``slope_tol`` against log(1/alpha))
    and uniformly bounded (max/min at most ``spread_cap``).  Refuses to run
    on tuples that are not classified Bounded: a sweep on an unbounded
    tuple would only confirm the probe results, and on an undetermined one
    it proves nothing either way.

    Flavor families:

    - convolution: x-side weighted Gaussians, ratio in weighted Lebesgue
      norms;
    - multiplication: transform-side family (the hats are weighted
      Gaussians on the dual grid, the functions are synthesized by the
      inverse transform), ratio in Fourier-side norms;
    - modulation-convolution / modulation-multiplication: plain Gaussians
      against the standard window, ratio in the space-``space`` norms; the
      multiplication flavor also cross-checks the short-time product
      identity at the middle scale and folds that error into PASS.
    """
    if flavor not in SWEEP_FLAVORS:
        raise ValueError(f"flavor must be one of {SWEEP_FLAVORS}, got {flavor!r}")
    if params.d != 1:
        raise NotImplementedError("boundedness_sweep runs in d = 1")

    if flavor == "convolution":
        verdict = check_convolution(params)
    elif flavor == "multiplication":
        verdict = check_multiplication(params)
    else:
        verdict = check_modulation(params, flavor.split("-", 1)[1], space)
    if verdict.classification is not Classification.BOUNDED:
        raise PreconditionError(
            f"boundedness_sweep needs a Bounded verdict, got "
            f"{verdict.classification.value} for flavor {flavor!r}"
        )

    modulation = flavor.startswith("modulation")
    if scales is None:
        scales = MODULATION_ALPHAS if modulation else DEFAULT_ALPHAS
    alphas = [float(a) for a in scales]
    if grid is None:
        grid = MODULATION_GRID if modulation else PROBE_GRID

    identity_err: float | None = None
    ratios: list[float] = []

    if flavor == "convolution":
        fam = GaussianFamily(params.t)
        p0c = params.p[0].conjugate()
        for a in alphas:
            f1 = fam.member(1, a, grid)
            f2 = fam.member(2, a, grid)
            num = weighted_lebesgue_norm(convolve(f1, f2), p0c, -params.t[0])
            den = weighted_lebesgue_norm(f1, params.p[1], params.t[1]) * \
                weighted_lebesgue_norm(f2, params.p[2], params.t[2])
            ratios.append(num / den)
    elif flavor == "multiplication":
        assert params.q is not None and params.s is not None
        dual = grid.dual()
        xi = dual.axis()
        q0c = params.q[0].conjugate()
        for a in alphas:
            gaussian_resolution_guard(dual, a)
            funcs = []
            for j in (1, 2):
                hat = (1.0 + xi * xi) ** (float(-params.s[j]) / 2.0) * np.exp(
                    -a * xi * xi
                )
                funcs.append(
                    inverse_fourier_transform(SampledFunction(dual, hat))
                )
            g1, g2 = funcs
            product = SampledFunction(g1.grid, g1.values * g2.values)
            num = fourier_lebesgue_norm(product, q0c, -params.s[0])
            den = fourier_lebesgue_norm(g1, params.q[1], params.s[1]) * \
                fourier_lebesgue_norm(g2, params.q[2], params.s[2])
            ratios.append(num / den)
    else:
        assert params.q is not None and params.s is not None
        x = grid.axis()
        window = SampledFunction(grid, np.exp(-x * x / 2.0))
        p0c = params.p[0].conjugate()
        q0c = params.q[0].conjugate()
        mult = flavor.endswith("multiplication")
        for a in alphas:
            gaussian_resolution_guard(grid, a)
            f1 = SampledFunction(grid, np.exp(-a * x * x))
            f2 = SampledFunction(grid, np.exp(-a * x * x))
            if mult:
                target = SampledFunction(grid, f1.values * f2.values)
            else:
                target = convolve(f1, f2)
            num = modulation_norm(
                target, window, p0c, q0c, -params.s[0], -params.t[0],
                space=space, stride=stride,
            )
            den = 1.0
            for j, fj in ((1, f1), (2, f2)):
                den *= modulation_norm(
                    fj, window, params.p[j], params.q[j],
                    params.s[j], params.t[j], space=space, stride=stride,
                )
            ratios.append(num / den)
        if mult:
            mid = alphas[len(alphas) // 2]
            f1 = SampledFunction(grid, np.exp(-mid * x * x))
            f2 = SampledFunction(grid, np.exp(-mid * x * x))
            identity_err = _stft_product_identity_error(f1, f2, stride)

    inv = [1.0 / a for a in alphas]
    slope, _, _ = fit_power_law(inv, ratios)
    spread = max(ratios) / min(ratios)
    passed = abs(slope) <= slope_tol and spread <= spread_cap
    if identity_err is not None:
        passed = passed and identity_err <= identity_tol

    return SweepReport(
        flavor=flavor,
        space=space if modulation else None,
        classification=verdict.classification.value,
        theorem_used=verdict.theorem_used,
        scales=alphas,
        ratios=ratios,
        fitted_slope=slope,
        spread=spread,
        passed=passed,
        identity_rel_error=identity_err,
    )
