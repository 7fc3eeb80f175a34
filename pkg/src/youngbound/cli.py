"""Command line front end.

Four subcommands, each driven by a scenario file:

- ``check``: classify a parameter tuple with the exact checkers;
- ``probe``: run a numerical witness or calibration ladder;
- ``verify-lemmas``: stress the slice envelopes or the operator bounds;
- ``sweep``: tabulate verdicts over a cubic grid of weights.

Exit codes are part of the contract: 0 means Bounded or a clean PASS,
1 means Unbounded, a witnessed violation, or a failed verification,
2 means the request was malformed or refused, and 3 means Undetermined
or inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import sys
from datetime import datetime, timezone
from fractions import Fraction
from itertools import product
from pathlib import Path

from .exponents import (
    Classification,
    ParamTuple,
    Verdict,
    binding_condition,
    check_convolution,
    check_modulation,
    check_multiplication,
    check_weak_proposition,
)
from .grids import Grid
from .kernels import (
    KernelParams,
    PreconditionError,
    RegionParams,
    verify_lemma_intestimates,
    verify_prop_tf_bounds,
)
from .probes import (
    boundedness_sweep,
    gaussian_lower_bound_check,
    gaussian_necessity_probe,
    gaussian_norm_slope,
    translation_necessity_probe,
)
from .scenario import (
    RunRecord,
    ScenarioError,
    canonical_value,
    package_versions,
    parse_scenario_text,
    resolve_scenario,
    scenario_echo,
)

__all__ = ["main", "build_parser"]

EXIT_PASS = 0
EXIT_WITNESS = 1
EXIT_MALFORMED = 2
EXIT_INCONCLUSIVE = 3

MAX_SWEEP_ROWS = 10_000

SEP = "=" * 70
SUBSEP = "-" * 70

_CLASS_EXIT = {
    Classification.BOUNDED: EXIT_PASS,
    Classification.UNBOUNDED: EXIT_WITNESS,
    Classification.UNDETERMINED: EXIT_INCONCLUSIVE,
}

_SETTING_LABEL = {
    "lebesgue": "weighted Lebesgue",
    "modulation": "modulation space",
    "weak": "weak-type extension",
}


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


def _grid_override(values: dict, *, d: int = 1) -> Grid | None:
    n = values.get("grid_n")
    extent = values.get("grid_l")
    if n is None and extent is None:
        return None
    if n is None or extent is None:
        raise ScenarioError("grid_n and grid_l must be given together")
    return Grid(d, float(extent), int(n))


def _params_line(values: dict) -> str:
    parts = [f"d={values.get('d', 1)}"]
    for key in ("p", "t", "q", "s"):
        if key in values:
            parts.append(f"{key}={canonical_value(values[key])}")
    return "  ".join(parts)


def _trace_lines(verdict: Verdict) -> list[str]:
    lines = []
    for rec in verdict.trace:
        if rec.condition_id.startswith(("strict_trigger_", "alt_strict_")):
            # Trigger rows record whether the clause fires, not a pass/fail.
            mark = "fired " if rec.satisfied else " idle "
        else:
            mark = "  ok  " if rec.satisfied else "BROKEN"
        strict = "  [strict]" if rec.strictness_required else ""
        lines.append(
            f"  [{mark}] {rec.condition_id}: "
            f"{rec.lhs} {rec.relation} {rec.rhs}{strict}"
        )
    return lines


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _cmd_check(values: dict, args) -> tuple[dict, int, list[str], list[list]]:
    params = ParamTuple(
        d=values["d"],
        p=values["p"],
        t=values["t"],
        q=values.get("q"),
        s=values.get("s"),
    )
    flavor = values["flavor"]
    setting = values["setting"]
    if setting == "lebesgue":
        if flavor == "convolution":
            verdict = check_convolution(params)
        else:
            verdict = check_multiplication(params)
    elif setting == "modulation":
        verdict = check_modulation(params, flavor=flavor, space=values["space"])
    else:
        verdict = check_weak_proposition(params)

    code = _CLASS_EXIT[verdict.classification]
    results = {
        "verdict": verdict.to_dict(),
        "binding_condition": binding_condition(verdict),
    }

    title = f"check: {flavor} in the {_SETTING_LABEL[setting]} setting"
    if setting == "modulation":
        title += f" ({values['space']})"
    lines = [SEP, title, _params_line(values), SEP]
    lines.extend(_trace_lines(verdict))
    lines.append(SUBSEP)
    lines.append(
        f"verdict: {verdict.classification.value}"
        f"   (theorem_used: {verdict.theorem_used})"
    )
    binding = results["binding_condition"]
    if binding:
        lines.append(f"binding condition: {binding}")
    lines.append(SEP)

    rows: list[list] = [
        ["condition_id", "lhs", "relation", "rhs", "satisfied", "strict"]
    ]
    for rec in verdict.trace:
        rows.append(
            [
                rec.condition_id,
                str(rec.lhs),
                rec.relation,
                str(rec.rhs),
                rec.satisfied,
                rec.strictness_required,
            ]
        )
    return results, code, lines, rows


# ---------------------------------------------------------------------------
# probe
# ---------------------------------------------------------------------------

def _ladder_rows(xs, ys, xname: str, yname: str) -> list[list]:
    rows: list[list] = [[xname, yname]]
    rows.extend([x, y] for x, y in zip(xs, ys))
    return rows


def _cmd_probe(values: dict, args) -> tuple[dict, int, list[str], list[list]]:
    kind = values["kind"]
    grid = _grid_override(values, d=values.get("d", 1))
    lines = [SEP, f"probe: {kind}", SEP]

    if kind == "gaussian":
        params = ParamTuple(d=values["d"], p=values["p"], t=values["t"])
        report = gaussian_necessity_probe(
            params, alphas=values.get("alphas"), grid=grid, tol=values["tol"]
        )
        code = (
            EXIT_WITNESS
            if report.witnessed
            else (EXIT_PASS if report.passed else EXIT_INCONCLUSIVE)
        )
        lines.insert(2, _params_line(values))
        lines.append(
            f"fitted slope {report.fitted_slope:+.4f}  "
            f"predicted {report.predicted_slope:+.4f}  "
            f"r^2 {report.r_squared:.5f}"
        )
        lines.append(f"fit within tolerance: {'yes' if report.passed else 'NO'}")
        lines.append(
            "violation witnessed: "
            + ("YES (ratio grows without bound)" if report.witnessed else "no")
        )
        rows = _ladder_rows(report.ladder_x, report.ladder_y, "x", "ratio")
        results = {"report": report.to_dict()}

    elif kind == "translation":
        params = ParamTuple(d=values["d"], p=values["p"], t=values["t"])
        report = translation_necessity_probe(
            params,
            values["offsets"],
            pair=tuple(values["pair"]),
            grid=grid,
            tol=values["tol"],
        )
        code = (
            EXIT_WITNESS
            if report.witnessed
            else (EXIT_PASS if report.passed else EXIT_INCONCLUSIVE)
        )
        lines.insert(2, _params_line(values) + f"  pair={canonical_value(values['pair'])}")
        lines.append(
            f"fitted slope {report.fitted_slope:+.4f}  "
            f"predicted {report.predicted_slope:+.4f}  "
            f"r^2 {report.r_squared:.5f}"
        )
        lines.append(f"output-norm variation: {report.conv_variation:.3e}")
        lines.append(
            "violation witnessed: "
            + ("YES (input norm product collapses)" if report.witnessed else "no")
        )
        rows = [["offset", "product", "conv_norm"]]
        rows.extend(
            [o, pr, cn]
            for o, pr, cn in zip(report.offsets, report.products, report.conv_norms)
        )
        results = {"report": report.to_dict()}

    elif kind == "lower-bound":
        report = gaussian_lower_bound_check(
            values["t1"],
            values["t2"],
            values["alpha"],
            window=values["window"],
            grid=grid,
        )
        code = EXIT_PASS if report.passed else EXIT_INCONCLUSIVE
        lines.insert(2, f"t1={values['t1']}  t2={values['t2']}  alpha={values['alpha']}")
        lines.append(f"envelope constant: {report.constant:.6e}")
        lines.append(f"minimum of the convolution on the window: {report.min_convolution:.6e}")
        lines.append(f"positive floor holds: {'yes' if report.passed else 'NO'}")
        rows = [["t1", "t2", "alpha", "window", "constant", "passed"]]
        rows.append(
            [report.t1, report.t2, report.alpha, report.window, report.constant, report.passed]
        )
        results = {"report": report.to_dict()}

    elif kind == "norm-slope":
        report = gaussian_norm_slope(
            values["exponent"],
            values["weight"],
            alphas=values.get("alphas"),
            grid=grid,
            tol=values["tol"],
        )
        code = EXIT_PASS if report.passed else EXIT_INCONCLUSIVE
        lines.insert(2, f"exponent={values['exponent']}  weight={values['weight']}")
        lines.append(
            f"fitted slope {report.fitted_slope:+.6f}  "
            f"predicted {report.predicted_slope:+.6f}  "
            f"r^2 {report.r_squared:.6f}"
        )
        lines.append("calibration: " + ("PASS" if report.passed else "FAIL"))
        rows = _ladder_rows(report.ladder_x, report.ladder_y, "x", "norm")
        results = {"report": report.to_dict()}

    else:  # boundedness
        params = ParamTuple(
            d=values["d"],
            p=values["p"],
            t=values["t"],
            q=values["q"],
            s=values["s"],
        )
        report = boundedness_sweep(
            params,
            values["flavor"],
            space=values["space"],
            grid=grid,
            stride=values["stride"],
            slope_tol=values["tol"],
            spread_cap=values["spread_cap"],
        )
        if report.passed:
            code = EXIT_PASS
        elif report.fitted_slope > values["tol"]:
            code = EXIT_WITNESS
        else:
            code = EXIT_INCONCLUSIVE
        lines.insert(2, _params_line(values) + f"  flavor={values['flavor']}")
        lines.append(f"checker verdict: {report.classification} ({report.theorem_used})")
        lines.append(
            f"ratio ladder slope {report.fitted_slope:+.4f}  spread {report.spread:.3f}"
        )
        if report.identity_rel_error is not None:
            lines.append(f"product identity error: {report.identity_rel_error:.3e}")
        lines.append("flat and uniformly bounded: " + ("PASS" if report.passed else "FAIL"))
        rows = _ladder_rows(report.scales, report.ratios, "alpha", "ratio")
        results = {"report": report.to_dict()}

    lines.append(SEP)
    return results, code, lines, rows


# ---------------------------------------------------------------------------
# verify-lemmas
# ---------------------------------------------------------------------------

def _cmd_verify(values: dict, args) -> tuple[dict, int, list[str], list[list]]:
    which = values["which"]
    if which == "slices":
        report = verify_lemma_intestimates(
            values["region"],
            KernelParams(t=values["t"], d=1),
            RegionParams(delta=values["delta"], R=values["radius"]),
            values["p"],
            scan_range=(values["scan_lo"], values["scan_hi"]),
            ratio_cap=values["ratio_cap"],
        )
        code = EXIT_PASS if report.passed else EXIT_WITNESS
        lines = [
            SEP,
            f"verify slice envelope: region {report.region} (item {report.item})",
            f"p={report.p}  t={','.join(report.t)}",
            SEP,
            f"scan points kept: {len([r for r in report.ratios if r is not None])}"
            f"  empty slices excluded: {len(report.excluded_empty)}"
            f"  under-resolved: {len(report.under_resolved)}",
            f"max ratio {report.max_ratio:.4f}  median {report.median_ratio:.4f}"
            f"  cap {values['ratio_cap']:.2f} x median",
            "envelope verdict: " + ("PASS" if report.passed else "FAIL"),
        ]
        if report.notes:
            lines.append(f"note: {report.notes}")
        lines.append(SEP)
        rows: list[list] = [["scan_value", "slice_norm", "envelope", "ratio"]]
        rows.extend(
            [v, n, e, r]
            for v, n, e, r in zip(
                report.scan_values, report.slice_norms, report.envelopes, report.ratios
            )
        )
        return {"report": report.to_dict()}, code, lines, rows

    report = verify_prop_tf_bounds(
        values["case"],
        values["p"],
        trials=values["trials"],
        seed=args.seed if args.seed is not None else 0,
        grid=_grid_override(values),
        kernel=values["kernel"],
        slope_tol=values["slope_tol"],
        spread_cap=values["spread_cap"],
    )
    code = EXIT_PASS if report.passed else EXIT_WITNESS
    lines = [
        SEP,
        f"verify operator bound: case {report.case}  p={','.join(report.p)}"
        f"  kernel={report.kernel}",
        SEP,
        f"dual scale r = {report.r if report.r != float('inf') else 'inf'}",
        f"per-trial dilation slopes: "
        + ", ".join(f"{s:+.4f}" for s in report.slopes),
        f"ratio spread {report.spread:.3f} (max {report.max_ratio:.4e}, "
        f"min {report.min_ratio:.4e})",
        "operator bound verdict: " + ("PASS" if report.passed else "FAIL"),
    ]
    if report.notes:
        lines.append(f"note: {report.notes}")
    lines.append(SEP)
    rows = [["trial", "scale", "ratio"]]
    for trial, trial_ratios in enumerate(report.ratios):
        for scale, ratio in zip(report.scales, trial_ratios):
            rows.append([trial, scale, ratio])
    return {"report": report.to_dict()}, code, lines, rows


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _weight_ladder(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    out = []
    w = lo
    while w <= hi:
        out.append(w)
        w += step
    return out


def _cmd_sweep(values: dict, args) -> tuple[dict, int, list[str], list[list]]:
    ladder = _weight_ladder(values["t_min"], values["t_max"], values["t_step"])
    count = len(ladder) ** 3
    if count > MAX_SWEEP_ROWS:
        raise ScenarioError(
            f"sweep would emit {count} rows, above the cap of {MAX_SWEEP_ROWS}; "
            f"shrink the weight range or enlarge t_step"
        )

    flavor = values["flavor"]
    d = values["d"]
    weight_names = ("t0", "t1", "t2") if flavor == "convolution" else ("s0", "s1", "s2")
    rows: list[list] = [[*weight_names, "classification", "binding", "strict"]]
    counts = {c.value: 0 for c in Classification}
    records = []
    for w0, w1, w2 in product(ladder, repeat=3):
        w = (w0, w1, w2)
        if flavor == "convolution":
            verdict = check_convolution(ParamTuple(d=d, p=values["p"], t=w))
        else:
            verdict = check_multiplication(
                ParamTuple(d=d, p=values["p"], t=w, q=values["q"], s=w)
            )
        strict = any(rec.strictness_required for rec in verdict.trace)
        binding = binding_condition(verdict)
        counts[verdict.classification.value] += 1
        rows.append(
            [str(w0), str(w1), str(w2), verdict.classification.value, binding, strict]
        )
        records.append(
            {
                "weights": [str(w0), str(w1), str(w2)],
                "classification": verdict.classification.value,
                "binding_condition": binding,
                "strictness_engaged": strict,
            }
        )

    results = {
        "flavor": flavor,
        "ladder": [str(w) for w in ladder],
        "row_count": count,
        "counts": counts,
        "rows": records,
    }

    lines = [SEP, f"sweep: {flavor}  {_params_line(values)}", SEP]
    widths = [max(len(str(row[i])) for row in rows) for i in range(6)]
    for row in rows:
        lines.append(
            "  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip()
        )
    lines.append(SUBSEP)
    lines.append(
        f"{count} rows: "
        + "  ".join(f"{name} {num}" for name, num in sorted(counts.items()))
    )
    lines.append(SEP)
    return results, EXIT_PASS, lines, rows


_HANDLERS = {
    "check": _cmd_check,
    "probe": _cmd_probe,
    "verify-lemmas": _cmd_verify,
    "sweep": _cmd_sweep,
}


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngbound",
        description="Exact checkers and numerical witnesses for weighted "
        "Young-type boundedness questions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--scenario", required=True, metavar="PATH",
        help="scenario file with key = value lines",
    )
    common.add_argument(
        "--out", metavar="PATH", help="write the JSON run record to this path"
    )
    common.add_argument("--seed", type=int, default=None, help="seed for randomised verifiers")
    common.add_argument(
        "--grid-n", type=int, default=None, dest="grid_n",
        help="override the grid point count (power of two)",
    )
    common.add_argument(
        "--grid-L", type=float, default=None, dest="grid_l",
        help="override the grid half-width",
    )
    common.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="stdout format (default: table)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "check", parents=[common],
        help="classify a parameter tuple with the exact checkers",
    )
    sub.add_parser(
        "probe", parents=[common],
        help="run a numerical witness or calibration ladder",
    )
    sub.add_parser(
        "verify-lemmas", parents=[common],
        help="stress the slice envelopes or the mixed-norm operator bounds",
    )
    sub.add_parser(
        "sweep", parents=[common],
        help="tabulate verdicts over a cubic grid of weights",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = _utc_now()

    try:
        text = Path(args.scenario).read_text()
    except OSError as exc:
        print(f"error: cannot read scenario file: {exc}", file=sys.stderr)
        return EXIT_MALFORMED

    try:
        entries = parse_scenario_text(text)
        if args.grid_n is not None:
            entries["grid_n"] = str(args.grid_n)
        if args.grid_l is not None:
            entries["grid_l"] = repr(args.grid_l)
        values = resolve_scenario(args.command, entries)
        results, code, lines, rows = _HANDLERS[args.command](values, args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except PreconditionError as exc:
        print(f"error: precondition not met: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED

    record = RunRecord(
        command=args.command,
        scenario=scenario_echo(values),
        results=results,
        exit_code=code,
        seed=args.seed,
        started_at=started,
        finished_at=_utc_now(),
        versions=package_versions(),
    )

    if args.format == "table":
        print("\n".join(lines))
    elif args.format == "json":
        print(record.to_json())
    else:
        writer = csv.writer(sys.stdout)
        writer.writerows(rows)

    if args.out:
        Path(args.out).write_text(record.to_json() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
