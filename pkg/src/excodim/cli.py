"""Command-line front end.

Subcommands: bounds, exact, slope, example, apps singular, apps lines,
oracle excess, oracle singular, selftest.  Every run echoes its full
configuration; JSON is the canonical machine format and CSV is available for
sweep commands only.  Exit codes: 0 ok, 1 internal invariant violation,
2 argument error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import applications as apps
from . import strata
from .combinatorics import ExtInt, h_min
from .errors import BudgetError, InvariantError, ParameterError
from .fforacle import (
    excess_experiment,
    gf,
    poonen_sample,
    restriction_codim,
    singular_experiment,
)
from .fforacle.experiments import DEFAULT_SEED
from .fforacle.fields import parse_field


def _jsonable(value):
    if isinstance(value, ExtInt):
        return "inf" if value.is_infinite else int(value)
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


class Report:
    """Collected results of one run, renderable as text, JSON, or CSV."""

    def __init__(self, config: dict):
        self.config = {k: _jsonable(v) for k, v in config.items()}
        self.results: list[dict] = []
        self.warnings: list[str] = []
        self.rows: list[dict] | None = None  # sweep commands only
        self._start = time.perf_counter()

    def add(self, name: str, value, kind: str, ref: str):
        self.results.append(
            {"name": name, "value": _jsonable(value), "kind": kind, "paper_ref": ref}
        )

    def warn(self, message: str):
        self.warnings.append(message)

    def set_rows(self, rows: list[dict]):
        self.rows = [{k: _jsonable(v) for k, v in row.items()} for row in rows]
        self.add("sweep", self.rows, "exact", "one entry per parameter point")

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "results": self.results,
            "warnings": self.warnings,
            "runtime_ms": (time.perf_counter() - self._start) * 1000.0,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2)
        if fmt == "csv":
            if self.rows is None:
                raise ParameterError("csv output is only available for sweep commands")
            keys: list[str] = []
            for row in self.rows:
                for k in row:
                    if k not in keys:
                        keys.append(k)
            lines = [",".join(keys)]
            for row in self.rows:
                lines.append(",".join(str(row.get(k, "")) for k in keys))
            return "\n".join(lines)
        lines = ["config: " + json.dumps(self.config)]
        for res in self.results:
            if res["name"] == "sweep":
                lines.append("sweep rows:")
                for row in res["value"]:
                    lines.append("  " + json.dumps(row))
                continue
            lines.append(f"{res['name']:<28} = {res['value']}  [{res['kind']}] ({res['paper_ref']})")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"bad degree list {text!r}") from exc
    if not degrees:
        raise ParameterError("empty degree list")
    return degrees


def _sorted_degrees(report: Report, degrees: tuple[int, ...]) -> tuple[int, ...]:
    ordered = tuple(sorted(degrees))
    if ordered != degrees:
        report.warn(
            f"degrees {list(degrees)} reordered to {list(ordered)}; "
            f"the bounds depend on sorted order"
        )
    return ordered


def _resolve_threads(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("EXCODIM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- subcommand implementations -------------------------------------------------


def _cmd_bounds(args) -> Report:
    degrees = _parse_degrees(args.degrees)
    report = Report(
        {"command": "bounds", "r": args.r, "a": args.a, "degrees": degrees,
         "format": args.format}
    )
    degrees = _sorted_degrees(report, degrees)
    analysis = strata.analyze_spans(args.r, args.a, degrees)
    report.add("base_codim", analysis.base_codim, "exact",
               "base span stratum, closed form")
    for s in analysis.strata:
        kind = "exact" if s.exact else "lower_bound"
        report.add(f"stratum_b{s.b}", s.value, kind,
                   f"span-{s.b} stratum bound, argmin {list(s.argmin_indices)}")
    report.add("runner_up", analysis.runner_up, "lower_bound",
               "minimum over the non-base strata")
    report.add("gap", analysis.gap if analysis.gap is not None else "undefined",
               "lower_bound", "runner_up minus base")
    report.add("verdict", analysis.verdict, "exact",
               "UniqueMaxLinear iff the gap is strictly positive")
    return report


def _cmd_exact(args) -> Report:
    degrees = _parse_degrees(args.degrees)
    report = Report(
        {"command": "exact", "r": args.r, "a": args.a, "degrees": degrees,
         "format": args.format}
    )
    degrees = _sorted_degrees(report, degrees)
    value = strata.span_stratum_exact(args.r, args.a, degrees)
    report.add("base_codim", value, "exact", "base span stratum, closed form")
    return report


def _cmd_slope(args) -> Report:
    degrees = _parse_degrees(args.degrees)
    report = Report(
        {"command": "slope", "r": args.r, "degrees": degrees, "format": args.format}
    )
    degrees = _sorted_degrees(report, degrees)
    in_cone = strata.nr_hypothesis(degrees)
    report.add("in_cone", in_cone, "exact",
               "d_i <= d_1 + C(d_1,2)(i-1) for every i")
    k = len(degrees)
    if in_cone and k >= args.r >= 2:
        gap = strata.slope_gap(args.r, k, degrees[0])
        report.add("guaranteed_gap", gap, "lower_bound",
                   "line stratum vs every other stratum")
        # excess k - r + 1 puts the base stratum at span dimension 1 (lines)
        analysis = strata.analyze_spans(args.r, k - args.r + 1, degrees)
        report.add("base_codim", analysis.base_codim, "exact",
                   "base span stratum, closed form")
        report.add("computed_gap", analysis.gap, "lower_bound",
                   "runner_up minus base for this sequence")
        report.add("verdict", analysis.verdict, "exact",
                   "UniqueMaxLinear iff the gap is strictly positive")
    elif not in_cone:
        report.warn("degree sequence outside the slope cone; no gap guarantee")
    return report


def _cmd_example(args) -> Report:
    report = Report({"command": "example", "format": args.format})
    w = strata.worked_example()
    report.add("degrees", w.degrees, "exact", "the running example")
    report.add("line_stratum_codim", w.line_codim, "exact", "span-1 stratum")
    for stage in w.stages:
        report.add(f"chain_b{stage.b}", [v for _, v in stage.candidates], "exact",
                   "candidate condition sums, one-form-at-a-time order")
        report.add(f"chain_b{stage.b}_min", stage.chain_min, "exact",
                   "minimum of the chain")
        report.add(f"stratum_b{stage.b}_bound", stage.bound, "lower_bound",
                   "after subtracting the plane moduli")
    report.add("summary", w.summary, "exact", "bound per span dimension")
    report.add("codim", w.codim, "exact", "codimension of the whole locus")
    report.add("second_largest_lower_bound", w.second_largest_lower_bound,
               "lower_bound", "runner-up stratum")
    report.add("verdict", w.verdict, "exact", "dominant stratum")
    return report


def _cmd_apps_singular(args) -> Report:
    report = Report(
        {"command": "apps singular", "r": args.r, "ell": args.ell,
         "sweep": args.sweep, "r_min": args.r_min, "r_max": args.r_max,
         "ell_min": args.ell_min, "ell_max": args.ell_max, "format": args.format}
    )
    if args.sweep:
        rows = []
        for r in range(args.r_min, args.r_max + 1):
            for ell in range(args.ell_min, args.ell_max + 1):
                rep = apps.char2_threshold_report(r, ell)
                row = {"r": r, "ell": ell, "parity": rep.parity, "d": rep.d,
                       "holds": rep.holds}
                for name, value in rep.margins:
                    row[name] = value
                rows.append(row)
        report.set_rows(rows)
        return report
    if args.r is None or args.ell is None:
        raise ParameterError("apps singular needs --r and --ell (or --sweep)")
    rep = apps.char2_threshold_report(args.r, args.ell)
    report.add("parity", rep.parity, "exact", "degree parity")
    report.add("fudge_degree", rep.d, "exact", "degree of the squared fudge factors")
    for name, value in rep.margins:
        report.add(f"margin[{name}]", value, "exact", "dominance margin, must be > 0")
    report.add("holds", rep.holds, "exact",
               "line stratum dominates (plane-curve case holds unconditionally)")
    report.add("singular_line_codim", apps.singular_line_codim(args.r, args.ell),
               "exact", "codimension of the singular-along-a-line locus")
    return report


def _cmd_apps_lines(args) -> Report:
    report = Report(
        {"command": "apps lines", "r": args.r, "d": args.d, "sweep": args.sweep,
         "r_min": args.r_min, "r_max": args.r_max, "d_min": args.d_min,
         "d_max": args.d_max, "format": args.format}
    )
    if args.sweep:
        rows = []
        for r in range(args.r_min, args.r_max + 1):
            for d in range(args.d_min, args.d_max + 1):
                verdict = apps.lines_verdict(r, d)
                rows.append({
                    "r": r, "d": d,
                    "maximal_components": "|".join(sorted(verdict.maximal_components)),
                    "universal_gap": verdict.universal_gap,
                })
        report.set_rows(rows)
        return report
    if args.r is None or args.d is None:
        raise ParameterError("apps lines needs --r and --d (or --sweep)")
    verdict = apps.lines_verdict(args.r, args.d)
    report.add("maximal_components", sorted(verdict.maximal_components), "exact",
               "dominant loci among smooth forms with extra lines through a point")
    report.add("universal_gap",
               verdict.universal_gap if verdict.universal_gap is not None else "n/a",
               "exact", "plane vs Eckardt gap on the universal hypersurface")
    if args.r >= 2:
        pr = apps.prop2r1_report(args.r) if args.r >= 2 else None
        report.add("tuple_max_codim", pr["max_codim"], "exact",
                   "line component for degrees 2..r+1")
        report.add("tuple_second_codim", pr["second_codim"], "exact",
                   "vanishing lowest-degree form component")
        report.add("tuple_gap", pr["gap"], "exact", "difference of the two")
    return report


def _cmd_oracle_excess(args) -> Report:
    degrees = _parse_degrees(args.degrees)
    threads = _resolve_threads(args.threads)
    report = Report(
        {"command": "oracle excess", "r": args.r, "a": args.a, "degrees": degrees,
         "field": args.field, "mode": args.mode, "trials": args.trials,
         "seed": args.seed, "m_max": args.m_max, "threads": threads,
         "format": args.format}
    )
    degrees = _sorted_degrees(report, degrees)
    field = parse_field(args.field)
    result = excess_experiment(
        args.r, degrees, args.a, field, mode=args.mode, trials=args.trials,
        seed=args.seed, workers=threads, m_max=args.m_max,
    )
    _add_experiment(report, result)
    return report


def _cmd_oracle_singular(args) -> Report:
    threads = _resolve_threads(args.threads)
    report = Report(
        {"command": "oracle singular", "r": args.r, "ell": args.ell,
         "field": args.field, "mode": args.mode, "trials": args.trials,
         "seed": args.seed, "threads": threads, "format": args.format}
    )
    field = parse_field(args.field)
    result = singular_experiment(
        args.r, args.ell, field, mode=args.mode, trials=args.trials,
        seed=args.seed, workers=threads,
    )
    _add_experiment(report, result)
    return report


def _add_experiment(report: Report, result):
    report.add("mode", result.mode, "exact", "exhaustive or sampled")
    report.add("trials", result.trials, "exact", "tuples examined")
    report.add("hits", result.hits, "exact", "tuples inside the locus")
    report.add("est_codim",
               result.est_codim if result.est_codim is not None else "inconclusive",
               "estimate", "negated log_q hit rate; heuristic at desk scale")
    report.add("predicted_codim", result.predicted_codim, "exact",
               "closed-form prediction")
    report.add("status", result.status, "exact",
               "inconclusive when nothing hit (never an infinite estimate)")
    for w in result.warnings:
        report.warn(w)


SELFTEST_CHECKS = [
    ("h_min(4,1,6)", lambda: h_min(4, 1, 6), 25),
    ("h_min(4,2,5)", lambda: h_min(4, 2, 5), 51),
    ("h_min(4,4,3)", lambda: h_min(4, 4, 3), 35),
    ("h_min(1,1,9)", lambda: h_min(1, 1, 9), 10),
    ("f_lower(4,1,(3,4,5,6))", lambda: int(strata.f_lower(4, 1, (3, 4, 5, 6))[0]), 25),
    ("f_lower argmin", lambda: strata.f_lower(4, 1, (3, 4, 5, 6))[1], (4,)),
    ("f_lower(3,2,(3,4,5,6))", lambda: int(strata.f_lower(3, 2, (3, 4, 5, 6))[0]), 35),
    ("f_lower(2,3,(3,4,5,6))", lambda: int(strata.f_lower(2, 3, (3, 4, 5, 6))[0]), 33),
    ("g_lower(4,1,3,...)", lambda: int(strata.g_lower(4, 1, 3, (3, 4, 5, 6))), 31),
    ("g_lower(4,1,2,...)", lambda: int(strata.g_lower(4, 1, 2, (3, 4, 5, 6))), 27),
    ("g_lower(4,1,1,...)", lambda: int(strata.g_lower(4, 1, 1, (3, 4, 5, 6))), 16),
    ("span_exact(4,1,(2,3,4,5))", lambda: strata.span_stratum_exact(4, 1, (2, 3, 4, 5)), 12),
    ("h_gap(4,1,4,...)", lambda: int(strata.h_gap(4, 1, 4, (3, 4, 5, 6))), 9),
    ("equal-degree gap at b=2", lambda: int(strata.h_gap(5, 1, 2, (3,) * 5)), 7),
    ("equal-degree gap at b=r", lambda: int(strata.h_gap(5, 2, 5, (3,) * 6)), 16),
    ("analysis gap", lambda: int(strata.analyze_spans(4, 1, (3, 4, 5, 6)).gap), 9),
    ("analysis verdict", lambda: strata.analyze_spans(4, 1, (3, 4, 5, 6)).verdict,
     strata.UNIQUE_MAX_LINEAR),
    ("worked example codim", lambda: strata.worked_example().codim, 16),
    ("worked example runner-up", lambda: strata.worked_example().second_largest_lower_bound, 25),
    ("nr_hypothesis((2,2,100))", lambda: strata.nr_hypothesis((2, 2, 100)), False),
    ("slope_gap(4,4,3)", lambda: strata.slope_gap(4, 4, 3), 3),
    ("kcl cone min", lambda: strata.kcl_cone_min(4, 1, 2, 2, 4, 10_000), ((2, 2, 2, 2), 3)),
    ("singular_line_codim(2,5)", lambda: apps.singular_line_codim(2, 5), 9),
    ("rnc_conditions(3,0,3)", lambda: apps.rnc_singular_conditions(3, 0, 3), 20),
    ("rnc_stratum(1,3,5)", lambda: apps.rnc_stratum_codim_lower(1, 3, 5), 12),
    ("rnc_stratum equals line codim", lambda: apps.rnc_stratum_codim_lower(1, 3, 5)
     == apps.singular_line_codim(3, 5), True),
    ("primed_span(4,2,3,2)", lambda: apps.primed_span_bound(4, 2, 3, 2), 20),
    ("threshold (3,5)", lambda: (apps.char2_threshold_report(3, 5).holds,
                                 tuple(v for _, v in apps.char2_threshold_report(3, 5).margins)),
     (True, (3, 4))),
    ("threshold (3,6)", lambda: apps.char2_threshold_report(3, 6).holds, False),
    ("prop2r1(4)", lambda: apps.prop2r1_report(4), {"max_codim": 12, "second_codim": 15, "gap": 3}),
    ("e1_bound(3,2)", lambda: apps.e1_bound(3, 2), 25),
    ("e1_bound first term", lambda: apps.e1_bound(6, 1), 28),
    ("lines(5,4)", lambda: sorted(apps.lines_verdict(5, 4).maximal_components),
     ["ContainsPlane", "EckardtPoint"]),
    ("lines(7,6)", lambda: sorted(apps.lines_verdict(7, 6).maximal_components), ["ContainsPlane"]),
    ("lines(4,6)", lambda: sorted(apps.lines_verdict(4, 6).maximal_components), ["ContainsLine"]),
    ("lines(6,3)", lambda: sorted(apps.lines_verdict(6, 3).maximal_components), ["EckardtPoint"]),
    ("GF(8) generator order", lambda: gf(2, 3).element_order(gf(2, 3).generator_code), 7),
    ("oracle excess F2 hits", lambda: excess_experiment(2, (1, 1), 1, gf(2), mode="exhaustive").hits, 22),
    ("oracle r=1 estimate", lambda: excess_experiment(1, (1,), 1, gf(2), mode="exhaustive").est_codim, 2.0),
    ("restriction(4,3,1)", lambda: restriction_codim(4, 3, 1), 4),
    ("poonen odd identity", lambda: _poonen_check(), True),
]


def _poonen_check() -> bool:
    sample = poonen_sample(2, 5, gf(2), seed=DEFAULT_SEED)
    return all(
        sample.F.partial(i) == sample.base.partial(i) + sample.fudge[i].square()
        for i in range(3)
    )


def _cmd_selftest(args) -> Report:
    report = Report({"command": "selftest", "format": args.format})
    failures = 0
    for name, fn, expected in SELFTEST_CHECKS:
        actual = fn()
        ok = actual == expected
        failures += 0 if ok else 1
        report.add(name, "ok" if ok else f"FAIL: expected {expected}, got {actual}",
                   "exact", "pinned known value")
    report.add("failures", failures, "exact", "total mismatches")
    if failures:
        raise InvariantError(f"selftest found {failures} mismatches")
    return report


# -- parser ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="excodim",
        description="Codimension bounds for hypersurface tuples with excess "
                    "intersection, application verdicts, and finite-field "
                    "oracle experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("bounds", help="full stratum analysis")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--degrees", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("exact", help="exact base-stratum codimension")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--degrees", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("slope", help="cone membership and guaranteed gap")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degrees", required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_slope)

    p = sub.add_parser("example", help="the worked running example")
    add_format(p)
    p.set_defaults(fn=_cmd_example)

    papps = sub.add_parser("apps", help="application verdicts")
    apps_sub = papps.add_subparsers(dest="apps_command", required=True)

    p = apps_sub.add_parser("singular", help="singular-hypersurface thresholds")
    p.add_argument("--r", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, default=8)
    p.add_argument("--ell-min", type=int, default=3)
    p.add_argument("--ell-max", type=int, default=20)
    add_format(p)
    p.set_defaults(fn=_cmd_apps_singular)

    p = apps_sub.add_parser("lines", help="lines-through-a-point verdicts")
    p.add_argument("--r", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, default=8)
    p.add_argument("--d-min", type=int, default=3)
    p.add_argument("--d-max", type=int, default=10)
    add_format(p)
    p.set_defaults(fn=_cmd_apps_lines)

    poracle = sub.add_parser("oracle", help="finite-field experiments")
    oracle_sub = poracle.add_subparsers(dest="oracle_command", required=True)

    p = oracle_sub.add_parser("excess", help="excess-intersection experiment")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degrees", required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--field", default="2")
    p.add_argument("--mode", choices=["auto", "exhaustive", "sampled"], default="auto")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--threads", type=int)
    add_format(p)
    p.set_defaults(fn=_cmd_oracle_excess)

    p = oracle_sub.add_parser("singular", help="positive-dimensional singular locus")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--field", default="2")
    p.add_argument("--mode", choices=["auto", "exhaustive", "sampled"], default="auto")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int)
    add_format(p)
    p.set_defaults(fn=_cmd_oracle_singular)

    p = sub.add_parser("selftest", help="verify the pinned known values")
    add_format(p)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        report = args.fn(args)
        print(report.render(args.format))
        return 0
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
