"""Scenario files and reproducible run records.

A scenario is a small ``key = value`` text file that pins every input of a
command: the flavor, the exponent and weight triples, probe settings, grid
overrides.  Values that enter the exact checkers are written as integers,
fractions (``4/3``), or ``inf``; decimal literals are rejected there so a
scenario can never silently lose exactness.  Grid sizes, tolerances, and
ladder values are ordinary floats.

Every command run is summarised in a :class:`RunRecord`: the resolved
scenario (defaults included, canonically stringified), the JSON-safe
results, the exit code, and enough version information to replay the run.
Two records of the same run differ only in their timestamps.
"""

from __future__ import annotations

import json
import platform
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import metadata

from .exponents import Exponent, ExponentError

__all__ = [
    "ScenarioError",
    "RunRecord",
    "RECORD_VERSION",
    "parse_scenario_text",
    "resolve_scenario",
    "canonical_value",
    "package_versions",
]

RECORD_VERSION = 1

_WEIGHT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class ScenarioError(ValueError):
    """A scenario file or resolved scenario is malformed."""


# ---------------------------------------------------------------------------
# Token parsing
# ---------------------------------------------------------------------------

def _parse_exponent(tok: str, key: str) -> Exponent:
    try:
        return Exponent.parse(tok)
    except ExponentError as exc:
        raise ScenarioError(f"{key}: {exc}") from exc


def _parse_weight(tok: str, key: str) -> Fraction:
    tok = tok.strip()
    if not _WEIGHT_RE.match(tok):
        raise ScenarioError(
            f"{key}: weights must be integers or fractions like -1/2, "
            f"got {tok!r} (decimals are not accepted)"
        )
    return Fraction(tok)


def _parse_int(tok: str, key: str) -> int:
    try:
        return int(tok.strip())
    except ValueError as exc:
        raise ScenarioError(f"{key}: expected an integer, got {tok!r}") from exc


def _parse_float(tok: str, key: str) -> float:
    try:
        value = float(tok.strip())
    except ValueError as exc:
        raise ScenarioError(f"{key}: expected a number, got {tok!r}") from exc
    if value != value or value in (float("inf"), float("-inf")):
        raise ScenarioError(f"{key}: expected a finite number, got {tok!r}")
    return value


def _split_list(tok: str, key: str, *, length: int | None = None) -> list[str]:
    parts = [part.strip() for part in tok.split(",")]
    if any(not part for part in parts):
        raise ScenarioError(f"{key}: empty entry in list {tok!r}")
    if length is not None and len(parts) != length:
        raise ScenarioError(
            f"{key}: expected {length} comma-separated entries, got {len(parts)}"
        )
    return parts


def _parse_field(kind: str, tok: str, key: str):
    if kind == "exponent":
        return _parse_exponent(tok, key)
    if kind == "exponent_triple":
        return tuple(_parse_exponent(p, key) for p in _split_list(tok, key, length=3))
    if kind == "weight":
        return _parse_weight(tok, key)
    if kind == "weight_triple":
        return tuple(_parse_weight(p, key) for p in _split_list(tok, key, length=3))
    if kind == "int":
        return _parse_int(tok, key)
    if kind == "float":
        return _parse_float(tok, key)
    if kind == "float_list":
        return tuple(_parse_float(p, key) for p in _split_list(tok, key))
    if kind == "int_pair":
        return tuple(_parse_int(p, key) for p in _split_list(tok, key, length=2))
    if kind == "str":
        return tok.strip()
    raise AssertionError(f"unknown field kind {kind!r}")


def canonical_value(value) -> str:
    """Render a resolved scenario value in its canonical text form."""
    if isinstance(value, (Exponent, Fraction, int, str)):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return ",".join(canonical_value(v) for v in value)
    raise AssertionError(f"cannot canonicalise {value!r}")


# ---------------------------------------------------------------------------
# Scenario files
# ---------------------------------------------------------------------------

def parse_scenario_text(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines into a raw string map.

    ``#`` starts a comment, blank lines are skipped, keys are normalised to
    lower-case snake case, and duplicate keys are an error.
    """
    entries: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(
                f"line {lineno}: expected 'key = value', got {raw_line.strip()!r}"
            )
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        value = value.strip()
        if not key:
            raise ScenarioError(f"line {lineno}: missing key")
        if not value:
            raise ScenarioError(f"line {lineno}: missing value for {key!r}")
        if key in entries:
            raise ScenarioError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


@dataclass(frozen=True)
class _Field:
    kind: str
    required: bool = False
    default: object = None
    choices: tuple[str, ...] | None = None


_GRID_FIELDS = {
    "grid_n": _Field("int"),
    "grid_l": _Field("float"),
}

_CHECK_FIELDS = {
    "flavor": _Field("str", required=True, choices=("convolution", "multiplication")),
    "setting": _Field(
        "str", default="lebesgue", choices=("lebesgue", "modulation", "weak")
    ),
    "space": _Field("str", choices=("M", "W")),
    "d": _Field("int", default=1),
    "p": _Field("exponent_triple", required=True),
    "t": _Field("weight_triple", default=(Fraction(0), Fraction(0), Fraction(0))),
    "q": _Field("exponent_triple"),
    "s": _Field("weight_triple"),
}

_PROBE_FIELDS: dict[str, dict[str, _Field]] = {
    "gaussian": {
        "d": _Field("int", default=1),
        "p": _Field("exponent_triple", required=True),
        "t": _Field("weight_triple", default=(Fraction(0),) * 3),
        "alphas": _Field("float_list"),
        "tol": _Field("float", default=0.05),
        **_GRID_FIELDS,
    },
    "translation": {
        "d": _Field("int", default=1),
        "p": _Field("exponent_triple", required=True),
        "t": _Field("weight_triple", default=(Fraction(0),) * 3),
        "pair": _Field("int_pair", default=(1, 2)),
        "offsets": _Field("float_list", default=(2.0, 4.0, 8.0, 16.0)),
        "tol": _Field("float", default=0.05),
        **_GRID_FIELDS,
    },
    "lower-bound": {
        "t1": _Field("weight", required=True),
        "t2": _Field("weight", required=True),
        "alpha": _Field("float", required=True),
        "window": _Field("float", default=8.0),
        **_GRID_FIELDS,
    },
    "norm-slope": {
        "exponent": _Field("exponent", required=True),
        "weight": _Field("weight", default=Fraction(0)),
        "alphas": _Field("float_list"),
        "tol": _Field("float", default=0.05),
        **_GRID_FIELDS,
    },
    "boundedness": {
        "d": _Field("int", default=1),
        "flavor": _Field(
            "str",
            required=True,
            choices=(
                "convolution",
                "multiplication",
                "modulation-convolution",
                "modulation-multiplication",
            ),
        ),
        "space": _Field("str", default="M", choices=("M", "W")),
        "p": _Field("exponent_triple", required=True),
        "t": _Field("weight_triple", default=(Fraction(0),) * 3),
        "q": _Field("exponent_triple"),
        "s": _Field("weight_triple"),
        "stride": _Field("int", default=8),
        "tol": _Field("float", default=0.05),
        "spread_cap": _Field("float", default=4.0),
        **_GRID_FIELDS,
    },
}

_VERIFY_FIELDS: dict[str, dict[str, _Field]] = {
    "slices": {
        "region": _Field("int", required=True),
        "p": _Field("exponent", required=True),
        "t": _Field("weight_triple", required=True),
        "delta": _Field("float", default=0.5),
        "radius": _Field("float", default=8.0),
        "scan_lo": _Field("float", default=1.0),
        "scan_hi": _Field("float", default=100.0),
        "ratio_cap": _Field("float", default=3.0),
    },
    "operator": {
        "case": _Field("int", required=True),
        "p": _Field("exponent_triple", required=True),
        "trials": _Field("int", default=4),
        "kernel": _Field("str", default="bumps", choices=("bumps", "ones")),
        "slope_tol": _Field("float", default=0.05),
        "spread_cap": _Field("float", default=10.0),
        **_GRID_FIELDS,
    },
}

_SWEEP_FIELDS = {
    "flavor": _Field("str", required=True, choices=("convolution", "multiplication")),
    "d": _Field("int", default=1),
    "p": _Field("exponent_triple"),
    "q": _Field("exponent_triple"),
    "t_min": _Field("weight", required=True),
    "t_max": _Field("weight", required=True),
    "t_step": _Field("weight", required=True),
}


def _apply_schema(entries: dict[str, str], fields: dict[str, _Field], label: str):
    values: dict[str, object] = {}
    unknown = sorted(set(entries) - set(fields))
    if unknown:
        raise ScenarioError(
            f"{label}: unknown key(s) {', '.join(unknown)}; "
            f"accepted keys are {', '.join(sorted(fields))}"
        )
    for key, spec in fields.items():
        if key in entries:
            value = _parse_field(spec.kind, entries[key], key)
            if spec.choices is not None and value not in spec.choices:
                raise ScenarioError(
                    f"{key}: must be one of {', '.join(spec.choices)}, got {value!r}"
                )
            values[key] = value
        elif spec.required:
            raise ScenarioError(f"{label}: missing required key {key!r}")
        elif spec.default is not None:
            values[key] = spec.default
    return values


def _validate_check(values: dict[str, object]) -> None:
    flavor = values["flavor"]
    setting = values["setting"]
    if setting == "weak" and flavor != "convolution":
        raise ScenarioError("the weak-type family covers convolution only")
    if setting != "modulation" and "space" in values:
        raise ScenarioError("'space' applies only when setting = modulation")
    needs_q = flavor == "multiplication" or setting == "modulation"
    if needs_q and "q" not in values:
        raise ScenarioError(f"flavor/setting {flavor}/{setting} requires 'q'")
    if flavor == "multiplication" and setting != "modulation" and "s" not in values:
        raise ScenarioError("multiplication requires the transform weights 's'")
    if not needs_q and ("q" in values or "s" in values):
        raise ScenarioError("'q'/'s' apply only to multiplication or modulation")
    if setting == "modulation":
        values.setdefault("space", "M")
        values.setdefault("s", (Fraction(0), Fraction(0), Fraction(0)))
    if values["d"] < 1:
        raise ScenarioError(f"d must be a positive integer, got {values['d']}")


def _validate_probe(values: dict[str, object]) -> None:
    kind = values["kind"]
    if kind == "boundedness":
        # The transform-side family defaults to mirroring the x-side one.
        values.setdefault("q", values["p"])
        values.setdefault("s", values["t"])
    if kind == "translation":
        pair = values["pair"]
        if tuple(sorted(pair)) not in ((0, 1), (0, 2), (1, 2)):
            raise ScenarioError(f"pair must name two distinct slots in 0..2, got {pair}")
    if kind == "lower-bound" and values["alpha"] <= 0:
        raise ScenarioError(f"alpha must be positive, got {values['alpha']}")


def _validate_verify(values: dict[str, object]) -> None:
    which = values["which"]
    if which == "slices":
        if not 1 <= values["region"] <= 5:
            raise ScenarioError(f"region must be in 1..5, got {values['region']}")
        if not 0 < values["delta"] < 1:
            raise ScenarioError(f"delta must lie in (0, 1), got {values['delta']}")
        if values["scan_lo"] >= values["scan_hi"]:
            raise ScenarioError("scan_lo must be smaller than scan_hi")
    else:
        if values["case"] not in (1, 2, 3):
            raise ScenarioError(f"case must be 1, 2, or 3, got {values['case']}")
        if values["trials"] < 1:
            raise ScenarioError("trials must be at least 1")


def _validate_sweep(values: dict[str, object]) -> None:
    if values["flavor"] == "multiplication":
        if "q" not in values:
            raise ScenarioError("multiplication sweeps require 'q'")
        # The x-side block mirrors the transform side unless given explicitly.
        values.setdefault("p", values["q"])
    else:
        if "p" not in values:
            raise ScenarioError("convolution sweeps require 'p'")
        if "q" in values:
            raise ScenarioError("'q' applies only to multiplication sweeps")
    if values["t_step"] <= 0:
        raise ScenarioError(f"t_step must be positive, got {values['t_step']}")
    if values["t_min"] > values["t_max"]:
        raise ScenarioError("t_min must not exceed t_max")
    if values["d"] < 1:
        raise ScenarioError(f"d must be a positive integer, got {values['d']}")


def resolve_scenario(command: str, entries: dict[str, str]) -> dict[str, object]:
    """Validate raw entries against a command's schema and fill defaults.

    Returns the typed value map.  The canonical string echo for a record is
    produced separately by :func:`canonical_value` so that defaulted keys
    appear alongside explicit ones.
    """
    if command == "check":
        values = _apply_schema(entries, _CHECK_FIELDS, "check")
        _validate_check(values)
        return values
    if command == "probe":
        kind = entries.get("kind")
        if kind is None:
            raise ScenarioError("probe: missing required key 'kind'")
        kind = kind.strip()
        if kind not in _PROBE_FIELDS:
            raise ScenarioError(
                f"kind: must be one of {', '.join(sorted(_PROBE_FIELDS))}, got {kind!r}"
            )
        rest = {k: v for k, v in entries.items() if k != "kind"}
        values = _apply_schema(rest, _PROBE_FIELDS[kind], f"probe kind {kind!r}")
        values["kind"] = kind
        _validate_probe(values)
        return values
    if command == "verify-lemmas":
        which = entries.get("which")
        if which is None:
            raise ScenarioError("verify-lemmas: missing required key 'which'")
        which = which.strip()
        if which not in _VERIFY_FIELDS:
            raise ScenarioError(
                f"which: must be 'slices' or 'operator', got {which!r}"
            )
        rest = {k: v for k, v in entries.items() if k != "which"}
        values = _apply_schema(rest, _VERIFY_FIELDS[which], f"verify {which}")
        values["which"] = which
        _validate_verify(values)
        return values
    if command == "sweep":
        values = _apply_schema(entries, _SWEEP_FIELDS, "sweep")
        _validate_sweep(values)
        return values
    raise ScenarioError(f"unknown command {command!r}")


def scenario_echo(values: dict[str, object]) -> dict[str, str]:
    """Canonical string form of a resolved scenario, defaults included."""
    return {key: canonical_value(value) for key, value in sorted(values.items())}


# ---------------------------------------------------------------------------
# Run records
# ---------------------------------------------------------------------------

def package_versions() -> dict[str, str]:
    try:
        dist = metadata.version("artifact")
    except metadata.PackageNotFoundError:  # not installed, e.g. direct source use
        dist = "0+unknown"
    import numpy

    return {
        "artifact": dist,
        "numpy": numpy.__version__,
        "python": platform.python_version(),
    }


@dataclass
class RunRecord:
    """Everything needed to audit or replay one command invocation."""

    command: str
    scenario: dict[str, str]
    results: dict
    exit_code: int
    seed: int | None
    started_at: str
    finished_at: str
    versions: dict[str, str]
    record_version: int = RECORD_VERSION

    def to_json(self) -> str:
        payload = {
            "record_version": self.record_version,
            "command": self.command,
            "scenario": self.scenario,
            "results": self.results,
            "exit_code": self.exit_code,
            "seed": self.seed,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "versions": self.versions,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"not a run record: {exc}") from exc
        if not isinstance(data, dict):
            raise ScenarioError("not a run record: top level must be an object")
        version = data.get("record_version")
        if version != RECORD_VERSION:
            raise ScenarioError(
                f"unsupported record version {version!r} (expected {RECORD_VERSION})"
            )
        try:
            return cls(
                command=data["command"],
                scenario=dict(data["scenario"]),
                results=data["results"],
                exit_code=int(data["exit_code"]),
                seed=data["seed"],
                started_at=data["started_at"],
                finished_at=data["finished_at"],
                versions=dict(data["versions"]),
                record_version=version,
            )
        except KeyError as exc:
            raise ScenarioError(f"run record is missing field {exc}") from exc
