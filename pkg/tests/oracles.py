"""Independent reference computations the test suite checks against.

Everything in this module is deliberately slow and dumb: nested loops,
direct O(n^2) sums, high-resolution trapezoid quadrature, a second coding
of the exact threshold functionals.  None of it imports the package, so
agreement between these references and the fast implementations is
evidence, not circularity.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

TWO_PI = 2.0 * math.pi
HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Continuum norms by quadrature
# ---------------------------------------------------------------------------

def trapezoid_weighted_norm(func, p, t, lo=-60.0, hi=60.0, n=240001):
    """(integral of |func|^p <x>^{tp})^{1/p} by trapezoid rule; sup at p = inf.

    The rule differs from the package's rectangle rule, so matching values
    are a genuine cross-check rather than the same sum twice.
    """
    xs = np.linspace(lo, hi, n)
    mag = np.abs(func(xs)) * (1.0 + xs * xs) ** (float(t) / 2.0)
    if math.isinf(p):
        return float(np.max(mag))
    return float(np.trapezoid(mag ** float(p), xs) ** (1.0 / float(p)))


def gaussian_lp_norm(alpha, p, d=1):
    """Closed form || e^{-alpha |x|^2} ||_{L^p(R^d)} = (pi/(p alpha))^{d/(2p)}."""
    return (math.pi / (p * alpha)) ** (d / (2.0 * p))


# ---------------------------------------------------------------------------
# Direct grid sums (quadratic cost, no FFT anywhere)
# ---------------------------------------------------------------------------

def loop_weighted_norm(vals, h, axis_vals, p, t):
    """Rectangle-rule weighted norm as an explicit python loop."""
    total = 0.0
    best = 0.0
    for v, x in zip(vals, axis_vals):
        m = abs(v) * (1.0 + x * x) ** (float(t) / 2.0)
        best = max(best, m)
        if not math.isinf(p):
            total += m ** float(p)
    if math.isinf(p):
        return best
    return (total * h) ** (1.0 / float(p))


def direct_convolution(fvals, gvals, h):
    """(f * g)[i] = h * sum_j f[j] g[i - j + n/2] with zero fill outside."""
    n = len(fvals)
    out = np.zeros(n, dtype=np.complex128)
    for i in range(n):
        acc = 0.0 + 0.0j
        for j in range(n):
            k = i - j + n // 2
            if 0 <= k < n:
                acc += fvals[j] * gvals[k]
        out[i] = acc * h
    return out


def direct_dft_centered(vals, h, extent):
    """fhat[m] = h (2 pi)^{-1/2} sum_j f(x_j) e^{-i xi_m x_j} on centered axes."""
    n = len(vals)
    xs = (np.arange(n) - n // 2) * h
    xis = (np.arange(n) - n // 2) * (math.pi / extent)
    out = np.empty(n, dtype=np.complex128)
    for m in range(n):
        out[m] = np.sum(vals * np.exp(-1j * xis[m] * xs))
    return out * h / math.sqrt(TWO_PI)


def direct_bilinear_tf(kernel_matrix, fvals, gvals, h):
    """T_F(f, g)(x_i) = h * sum_j F[i, j] f[j] g[i - j + n/2], zero outside."""
    n = len(fvals)
    out = np.zeros(n, dtype=np.complex128)
    for i in range(n):
        acc = 0.0 + 0.0j
        for j in range(n):
            k = i - j + n // 2
            if 0 <= k < n:
                acc += kernel_matrix[i, j] * fvals[j] * gvals[k]
        out[i] = acc * h
    return out


def direct_stft_point(fvals, wvals, h, extent, shift_index, freq_index):
    """One sample of the short-time transform by direct summation.

    The window is translated by shift_index - n/2 whole samples with zero
    fill, matching the lattice convention x = axis()[shift_index].
    """
    n = len(fvals)
    shift = shift_index - n // 2
    shifted = np.zeros(n, dtype=np.complex128)
    if shift >= 0:
        if shift < n:
            shifted[shift:] = np.conj(wvals[: n - shift])
    else:
        if -shift < n:
            shifted[:shift] = np.conj(wvals[-shift:])
    xs = (np.arange(n) - n // 2) * h
    xi = (freq_index - n // 2) * (math.pi / extent)
    return np.sum(fvals * shifted * np.exp(-1j * xi * xs)) * h / math.sqrt(TWO_PI)


# ---------------------------------------------------------------------------
# Log-log regression
# ---------------------------------------------------------------------------

def fit_power_law(xs, ys):
    """Least-squares slope of log y against log x via numpy.polyfit."""
    coeffs = np.polyfit(np.log(np.asarray(xs, dtype=float)),
                        np.log(np.asarray(ys, dtype=float)), 1)
    return float(coeffs[0])


def synthetic_power_samples(exponent, constant=3.0, noise=0.0, seed=7, count=13):
    """y = c x^m with optional multiplicative noise, for regressor soundness."""
    rng = np.random.default_rng(seed)
    xs = np.geomspace(1.0, 64.0, count)
    ys = constant * xs ** exponent
    if noise:
        ys = ys * (1.0 + noise * (2.0 * rng.random(count) - 1.0))
    return xs, ys


# ---------------------------------------------------------------------------
# Exact threshold functionals, coded a second time
# ---------------------------------------------------------------------------

def ref_threshold_maxmin(x):
    """max over orderings (a,b,c) of min(x_a, max(1/2, min(x_b, x_c))).

    Spelled as explicit loops over index triples rather than a generator
    over itertools.permutations.
    """
    xs = tuple(Fraction(v) for v in x)
    best = None
    for a in range(3):
        for b in range(3):
            for c in range(3):
                if len({a, b, c}) != 3:
                    continue
                inner = xs[b] if xs[b] <= xs[c] else xs[c]
                mid = inner if inner >= HALF else HALF
                cand = xs[a] if xs[a] <= mid else mid
                if best is None or cand > best:
                    best = cand
    return best


def ref_threshold_cases(x):
    """Case form through sorting: top below 1/2, bottom above 1/2, else 1/2."""
    xs = sorted(Fraction(v) for v in x)
    if xs[2] < HALF:
        return xs[2]
    if xs[0] > HALF:
        return xs[0]
    return HALF


def ref_threshold_floor(x):
    """max(1/2, min(x))."""
    xs = sorted(Fraction(v) for v in x)
    return xs[0] if xs[0] > HALF else HALF


def ref_gap_functional(x):
    """2 - x0 - x1 - x2 as an exact rational."""
    xs = tuple(Fraction(v) for v in x)
    return Fraction(2) - xs[0] - xs[1] - xs[2]
