"""Exact exponent arithmetic for Young-type boundedness questions.

Everything in this module is symbolic: Lebesgue exponents are rationals in
[1, oo] with oo a first-class value, weights are rationals, and every
comparison is exact. The floating-point numerics live elsewhere; this module
is the part that must never be wrong by a rounding error.

Notation used throughout (x denotes a triple of reciprocals, x_j = 1/p_j):

    R(p)  = 2 - 1/p0 - 1/p1 - 1/p2
    G(x)  = 2 - x0 - x1 - x2
    H0(x) = max over permutations (a,b,c) of min(x_a, max(1/2, min(x_b, x_c)))
    H1(x) = max(x) if all x_j < 1/2;  min(x) if all x_j > 1/2;  else 1/2
    H2(x) = max(1/2, min(x))

The checkers classify a parameter tuple as Bounded, Unbounded, or
Undetermined and return a trace of every comparison performed, so a caller
can always reconstruct why a verdict was reached.  Sufficient and necessary
conditions are kept separate on purpose: a verdict of Undetermined means the
sufficient conditions failed while no necessary condition was violated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Sequence

__all__ = [
    "Exponent",
    "INF",
    "Weight",
    "ExponentError",
    "Classification",
    "ConditionRecord",
    "Verdict",
    "ParamTuple",
    "conjugate",
    "young_functional",
    "g_functional",
    "h0",
    "h1",
    "h2",
    "lemma_equivalence_holds",
    "remark_bound",
    "check_convolution",
    "check_multiplication",
    "check_modulation",
    "check_weak_proposition",
    "binding_condition",
]

Weight = Fraction

HALF = Fraction(1, 2)
ZERO = Fraction(0)

MODULATION_FLAVORS = ("convolution", "multiplication")
MODULATION_SPACES = ("M", "W")


class ExponentError(ValueError):
    """Raised when a value cannot be interpreted as an exponent in [1, oo]."""


@dataclass(frozen=True)
class Exponent:
    """A Lebesgue exponent: a rational in [1, oo) or infinity.

    ``value`` is ``None`` exactly when the exponent is infinite.  Use the
    module constant ``INF`` rather than spelling ``Exponent(None)``.
    """

    value: Fraction | None

    def __post_init__(self) -> None:
        if self.value is None:
            return
        if isinstance(self.value, float):
            raise ExponentError(
                f"exponents must be exact rationals, got float {self.value!r}"
            )
        try:
            v = Fraction(self.value)
        except (TypeError, ValueError) as exc:
            raise ExponentError(f"not a rational exponent: {self.value!r}") from exc
        if v < 1:
            raise ExponentError(f"exponent must lie in [1, oo], got {v}")
        object.__setattr__(self, "value", v)

    @classmethod
    def of(cls, value: "Exponent | Fraction | int | str | None") -> "Exponent":
        """Coerce ints, Fractions, strings, or None (= oo) to an Exponent."""
        if isinstance(value, Exponent):
            return value
        if value is None:
            return INF
        if isinstance(value, str):
            return cls.parse(value)
        return cls(Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "Exponent":
        """Parse ``"inf"``, an integer literal, or ``"a/b"``.

        Decimal literals are rejected; exponents are exact by contract.
        """
        text = text.strip()
        if text in ("inf", "oo"):
            return INF
        if "." in text:
            raise ExponentError(f"decimal exponents are not accepted: {text!r}")
        try:
            return cls(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ExponentError(f"bad exponent literal: {text!r}") from exc

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def reciprocal(self) -> Fraction:
        """1/p as an exact rational; the reciprocal of oo is 0."""
        return ZERO if self.value is None else 1 / self.value

    def conjugate(self) -> "Exponent":
        """Hoelder conjugate p' with 1/p + 1/p' = 1 (1' = oo, oo' = 1)."""
        if self.value is None:
            return Exponent(Fraction(1))
        if self.value == 1:
            return INF
        return Exponent(1 / (1 - 1 / self.value))

    def _key(self) -> tuple[int, Fraction]:
        return (1, ZERO) if self.value is None else (0, self.value)

    def __lt__(self, other: "Exponent") -> bool:
        return self._key() < Exponent.of(other)._key()

    def __le__(self, other: "Exponent") -> bool:
        return self._key() <= Exponent.of(other)._key()

    def __gt__(self, other: "Exponent") -> bool:
        return self._key() > Exponent.of(other)._key()

    def __ge__(self, other: "Exponent") -> bool:
        return self._key() >= Exponent.of(other)._key()

    def __float__(self) -> float:
        return float("inf") if self.value is None else float(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"Exponent({self})"


INF = Exponent(None)

ExponentTriple = tuple[Exponent, Exponent, Exponent]
WeightTriple = tuple[Fraction, Fraction, Fraction]


def _exponent_triple(values: Sequence) -> ExponentTriple:
    items = tuple(Exponent.of(v) for v in values)
    if len(items) != 3:
        raise ValueError(f"expected an exponent triple, got {len(items)} entries")
    return items  # type: ignore[return-value]


def _weight_triple(values: Sequence) -> WeightTriple:
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError(f"weights must be exact rationals, got float {v!r}")
        out.append(Fraction(v))
    if len(out) != 3:
        raise ValueError(f"expected a weight triple, got {len(out)} entries")
    return tuple(out)  # type: ignore[return-value]


@dataclass(frozen=True)
class ParamTuple:
    """Parameters of a trilinear boundedness question.

    ``p`` and ``t`` are always present (exponent and weight blocks for the
    convolution side); ``q`` and ``s`` may be omitted for pure convolution
    checks and are required by the multiplication and modulation checkers.
    """

    d: int
    p: ExponentTriple
    t: WeightTriple = (ZERO, ZERO, ZERO)
    q: ExponentTriple | None = None
    s: WeightTriple | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.d!r}")
        object.__setattr__(self, "p", _exponent_triple(self.p))
        object.__setattr__(self, "t", _weight_triple(self.t))
        if self.q is not None:
            object.__setattr__(self, "q", _exponent_triple(self.q))
        if self.s is not None:
            object.__setattr__(self, "s", _weight_triple(self.s))


class Classification(str, Enum):
    BOUNDED = "Bounded"
    UNBOUNDED = "Unbounded"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ConditionRecord:
    """One comparison performed by a checker.

    ``relation`` is the relation that was *tested* ('>=', '>', '<=', or '='
    for strictness triggers).  ``satisfied`` says whether it held.  Entries
    with ids starting with ``alt_`` are informational (an alternate reading
    of the strictness trigger) and never bind the verdict.
    """

    condition_id: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    satisfied: bool
    strictness_required: bool = False

    def to_dict(self) -> dict:
        return {
            "condition_id": self.condition_id,
            "lhs": str(self.lhs),
            "relation": self.relation,
            "rhs": str(self.rhs),
            "satisfied": self.satisfied,
            "strictness_required": self.strictness_required,
        }


@dataclass(frozen=True)
class Verdict:
    classification: Classification
    theorem_used: str
    trace: tuple[ConditionRecord, ...]

    def to_dict(self) -> dict:
        return {
            "classification": self.classification.value,
            "theorem_used": self.theorem_used,
            "trace": [rec.to_dict() for rec in self.trace],
        }


def conjugate(p: Exponent) -> Exponent:
    """Hoelder conjugate of ``p``."""
    return Exponent.of(p).conjugate()


def young_functional(p: Sequence) -> Fraction:
    """R(p) = 2 - 1/p0 - 1/p1 - 1/p2, an exact rational in [-1, 2]."""
    triple = _exponent_triple(p)
    return Fraction(2) - sum(e.reciprocal() for e in triple)


def g_functional(x: Sequence) -> Fraction:
    """G(x) = 2 - x0 - x1 - x2 on reciprocal coordinates."""
    xs = _weight_triple(x)
    return Fraction(2) - sum(xs)


def h0(x: Sequence) -> Fraction:
    """max over permutations (a,b,c) of min(x_a, max(1/2, min(x_b, x_c)))."""
    xs = _weight_triple(x)
    return max(
        min(xs[a], max(HALF, min(xs[b], xs[c])))
        for a, b, c in permutations(range(3))
    )


def h1(x: Sequence) -> Fraction:
    """Case form: max(x) below 1/2, min(x) above 1/2, else exactly 1/2."""
    xs = _weight_triple(x)
    if all(v < HALF for v in xs):
        return max(xs)
    if all(v > HALF for v in xs):
        return min(xs)
    return HALF


def h2(x: Sequence) -> Fraction:
    """H2(x) = max(1/2, min(x))."""
    xs = _weight_triple(x)
    return max(HALF, min(xs))


def lemma_equivalence_holds(x: Sequence) -> bool:
    """Exact check of the threshold equivalence at a reciprocal triple.

    Returns True iff H0(x) == H1(x) and, for each H in (H0, H1, H2), the
    condition 0 <= G(x) <= 1/2 holds exactly when 0 <= G(x) <= H(x) holds.
    """
    xs = _weight_triple(x)
    g = g_functional(xs)
    candidates = (h0(xs), h1(xs), h2(xs))
    if candidates[0] != candidates[1]:
        return False
    base = ZERO <= g <= HALF
    return all((ZERO <= g <= h) == base for h in candidates)


def remark_bound(p: Sequence) -> Fraction:
    """The sharp replacement for the 1/2 threshold: H2 of the reciprocals."""
    triple = _exponent_triple(p)
    return h2(tuple(e.reciprocal() for e in triple))


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------

_PAIRS = ((0, 1), (0, 2), (1, 2))


def _pairwise_records(weights: WeightTriple, wname: str) -> list[ConditionRecord]:
    recs = []
    for j, k in _PAIRS:
        lhs = weights[j] + weights[k]
        recs.append(
            ConditionRecord(f"pair_{wname}{j}{k}", lhs, ">=", ZERO, lhs >= ZERO)
        )
    return recs


def _young_check(
    d: int,
    exps: ExponentTriple,
    weights: WeightTriple,
    *,
    wname: str,
    ename: str,
    theorem: str,
    alt_weights: WeightTriple | None,
    alt_wname: str,
    range_upper: Fraction,
) -> Verdict:
    """Shared engine behind the convolution and multiplication checkers.

    Necessity first (pairwise sums and the total-weight floor hold whenever
    the map is bounded, with no side hypotheses), then the sufficient
    conditions with the strictness clause.
    """
    r = young_functional(exps)
    dr = d * r
    trace: list[ConditionRecord] = []

    pair_recs = _pairwise_records(weights, wname)
    trace.extend(pair_recs)
    total = sum(weights)
    total_rec = ConditionRecord(f"total_{wname}", total, ">=", dr, total >= dr)
    trace.append(total_rec)

    if not all(rec.satisfied for rec in pair_recs):
        return Verdict(Classification.UNBOUNDED, "necessity_pairwise", tuple(trace))
    if not total_rec.satisfied:
        return Verdict(Classification.UNBOUNDED, "necessity_total", tuple(trace))

    lo = ConditionRecord(f"young_range_{ename}_lo", r, ">=", ZERO, r >= ZERO)
    hi = ConditionRecord(
        f"young_range_{ename}_hi", r, "<=", range_upper, r <= range_upper
    )
    trace.extend((lo, hi))

    triggered = False
    for j in range(3):
        eq = weights[j] == dr
        triggered = triggered or eq
        trace.append(
            ConditionRecord(f"strict_trigger_{wname}{j}", weights[j], "=", dr, eq)
        )
    if alt_weights is not None:
        # Informational only: the alternate (textual) reading of the trigger
        # compares the other weight block against the same threshold.
        for j in range(3):
            trace.append(
                ConditionRecord(
                    f"alt_strict_{alt_wname}{j}",
                    alt_weights[j],
                    "=",
                    dr,
                    alt_weights[j] == dr,
                )
            )

    sufficient = lo.satisfied and hi.satisfied
    if r > ZERO and triggered:
        strict_rec = ConditionRecord(
            f"total_{wname}_strict", total, ">", dr, total > dr,
            strictness_required=True,
        )
        trace.append(strict_rec)
        sufficient = sufficient and strict_rec.satisfied

    if sufficient:
        return Verdict(Classification.BOUNDED, theorem, tuple(trace))
    return Verdict(Classification.UNDETERMINED, "none", tuple(trace))


def check_convolution(
    params: ParamTuple, *, range_bound: Fraction | None = None
) -> Verdict:
    """Classify weighted convolution L^{p1}_{t1} x L^{p2}_{t2} -> L^{p0'}_{-t0}.

    Bounded when 0 <= R(p) <= 1/2, all pairwise sums t_j + t_k are
    nonnegative, and sum(t) >= d R(p), strictly whenever R(p) > 0 and some
    t_j equals d R(p).  Unbounded when a pairwise sum is negative or
    sum(t) < d R(p); these are necessary regardless of any range condition.
    Everything else is Undetermined.

    The strictness trigger is evaluated on the t_j (the reading used by the
    proof); when ``params.s`` is present the alternate textual reading
    (trigger on s_j) is recorded in the trace as informational ``alt_``
    entries.  ``range_bound`` replaces the 1/2 threshold; the documented
    equivalence with ``remark_bound(p)`` is exercised by the test suite.
    """
    upper = HALF if range_bound is None else Fraction(range_bound)
    return _young_check(
        params.d,
        params.p,
        params.t,
        wname="t",
        ename="p",
        theorem="weighted_young_convolution",
        alt_weights=params.s,
        alt_wname="s",
        range_upper=upper,
    )


def check_multiplication(
    params: ParamTuple, *, range_bound: Fraction | None = None
) -> Verdict:
    """Classify weighted multiplication on Fourier-Lebesgue spaces.

    Mirrors :func:`check_convolution` with the roles of (p, t) taken by
    (q, s): the transform swaps pointwise products and convolutions, so the
    same inequalities decide both questions.
    """
    if params.q is None or params.s is None:
        raise ValueError("multiplication check requires the q and s blocks")
    upper = HALF if range_bound is None else Fraction(range_bound)
    return _young_check(
        params.d,
        params.q,
        params.s,
        wname="s",
        ename="q",
        theorem="fourier_lebesgue_multiplication",
        alt_weights=params.t,
        alt_wname="t",
        range_upper=upper,
    )


def check_modulation(params: ParamTuple, flavor: str, space: str) -> Verdict:
    """Classify convolution or multiplication on modulation-type spaces.

    Both necessity families are evaluated first, regardless of flavor: the
    pairwise and total conditions on (p, t) and on (q, s).  Any violation
    gives Unbounded citing that condition.  Otherwise the flavor-matched
    sufficient conditions are checked:

    - convolution: 0 <= R(p) <= 1/2, R(q) <= 1, total t floor with the
      strictness clause on the t_j, and sum(s) >= 0;
    - multiplication: the mirror image (roles of (p, t) and (q, s) swapped).

    ``space`` ("M" or "W") selects the label only; the conditions are
    identical for both space families.
    """
    if flavor not in MODULATION_FLAVORS:
        raise ValueError(f"flavor must be one of {MODULATION_FLAVORS}, got {flavor!r}")
    if space not in MODULATION_SPACES:
        raise ValueError(f"space must be one of {MODULATION_SPACES}, got {space!r}")
    if params.q is None or params.s is None:
        raise ValueError("modulation check requires the q and s blocks")

    d = params.d
    rp = young_functional(params.p)
    rq = young_functional(params.q)
    drp = d * rp
    drq = d * rq

    trace: list[ConditionRecord] = []
    t_pairs = _pairwise_records(params.t, "t")
    s_pairs = _pairwise_records(params.s, "s")
    total_t = sum(params.t)
    total_s = sum(params.s)
    total_t_rec = ConditionRecord("total_t", total_t, ">=", drp, total_t >= drp)
    total_s_rec = ConditionRecord("total_s", total_s, ">=", drq, total_s >= drq)
    trace.extend(t_pairs)
    trace.append(total_t_rec)
    trace.extend(s_pairs)
    trace.append(total_s_rec)

    if not all(rec.satisfied for rec in t_pairs + s_pairs):
        return Verdict(Classification.UNBOUNDED, "necessity_pairwise", tuple(trace))
    if not (total_t_rec.satisfied and total_s_rec.satisfied):
        return Verdict(Classification.UNBOUNDED, "necessity_total", tuple(trace))

    if flavor == "convolution":
        main_r, main_dr, main_name = rp, drp, "p"
        main_weights, main_total, main_w = params.t, total_t, "t"
        cap_r, cap_name = rq, "q"
        other_total, other_w = total_s, "s"
    else:
        main_r, main_dr, main_name = rq, drq, "q"
        main_weights, main_total, main_w = params.s, total_s, "s"
        cap_r, cap_name = rp, "p"
        other_total, other_w = total_t, "t"

    lo = ConditionRecord(
        f"young_range_{main_name}_lo", main_r, ">=", ZERO, main_r >= ZERO
    )
    hi = ConditionRecord(
        f"young_range_{main_name}_hi", main_r, "<=", HALF, main_r <= HALF
    )
    cap = ConditionRecord(
        f"holder_cap_{cap_name}", cap_r, "<=", Fraction(1), cap_r <= 1
    )
    nonneg = ConditionRecord(
        f"total_{other_w}_nonneg", other_total, ">=", ZERO, other_total >= ZERO
    )
    trace.extend((lo, hi, cap, nonneg))

    triggered = False
    for j in range(3):
        eq = main_weights[j] == main_dr
        triggered = triggered or eq
        trace.append(
            ConditionRecord(
                f"strict_trigger_{main_w}{j}", main_weights[j], "=", main_dr, eq
            )
        )
    sufficient = lo.satisfied and hi.satisfied and cap.satisfied and nonneg.satisfied
    if main_r > ZERO and triggered:
        strict_rec = ConditionRecord(
            f"total_{main_w}_strict", main_total, ">", main_dr, main_total > main_dr,
            strictness_required=True,
        )
        trace.append(strict_rec)
        sufficient = sufficient and strict_rec.satisfied

    if sufficient:
        return Verdict(
            Classification.BOUNDED, f"modulation_{flavor}_{space}", tuple(trace)
        )
    return Verdict(Classification.UNDETERMINED, "none", tuple(trace))


def check_weak_proposition(params: ParamTuple) -> Verdict:
    """Classify via the weaker sufficient conditions (strict pair form).

    Bounded when 0 < R(p) <= 1/2, all pairwise sums are nonnegative with at
    least two of them strictly positive, and sum(t) > d R(p) strictly.
    Anything else is Undetermined: these hypotheses are sufficient only, so
    their failure proves nothing.
    """
    d = params.d
    r = young_functional(params.p)
    dr = d * r
    trace: list[ConditionRecord] = []

    lo = ConditionRecord("young_range_p_lo_strict", r, ">", ZERO, r > ZERO)
    hi = ConditionRecord("young_range_p_hi", r, "<=", HALF, r <= HALF)
    trace.extend((lo, hi))

    pair_recs = _pairwise_records(params.t, "t")
    trace.extend(pair_recs)
    strict_count = sum(
        1 for (j, k) in _PAIRS if params.t[j] + params.t[k] > ZERO
    )
    count_rec = ConditionRecord(
        "weak_strict_count", Fraction(strict_count), ">=", Fraction(2),
        strict_count >= 2,
    )
    trace.append(count_rec)

    total = sum(params.t)
    total_rec = ConditionRecord(
        "total_t_strict", total, ">", dr, total > dr, strictness_required=True
    )
    trace.append(total_rec)

    if all(
        rec.satisfied
        for rec in (lo, hi, count_rec, total_rec, *pair_recs)
    ):
        return Verdict(
            Classification.BOUNDED, "weak_young_convolution", tuple(trace)
        )
    return Verdict(Classification.UNDETERMINED, "none", tuple(trace))


def binding_condition(verdict: Verdict) -> str:
    """The condition id that decided the verdict, for report tables.

    For Unbounded verdicts: the first violated condition.  For Bounded
    verdicts whose trace carries a strictness requirement: that condition id
    (so strict rows can be marked).  Otherwise the empty string.
    """
    if verdict.classification is Classification.UNBOUNDED:
        for rec in verdict.trace:
            if not rec.satisfied and not rec.condition_id.startswith("alt_"):
                return rec.condition_id
        return ""
    if verdict.classification is Classification.BOUNDED:
        for rec in verdict.trace:
            if rec.strictness_required:
                return rec.condition_id
        return ""
    for rec in verdict.trace:
        if not rec.satisfied and not rec.condition_id.startswith(
            ("alt_", "strict_trigger_")
        ):
            return rec.condition_id
    return ""
