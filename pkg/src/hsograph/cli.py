"""Command-line front end: compute, verify, search, enumerate.

Exit codes: 0 clean, 1 theorem violation or inconsistency, 2 usage or I/O
error, 3 conjecture counterexample found.  Output files embed a header with
the tool version, tolerance and check identifier; rows are sorted so that
identical runs (at any worker count) produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import sys
import time

from . import __version__
from .enumeration import graphs_in_class
from .families import InvalidParametersError, build, parse_family
from .graph import Graph, GraphError, parse_graph6
from .indices import hso
from .search import (
    CampaignSummary,
    check_conjecture_star_max,
    extremal_table,
    find_monotonicity_counterexamples,
    witnesses_with_delta,
)
from .verify import (
    CSV_COLUMNS,
    DEFAULT_TOLERANCE,
    THEOREM_CHECKERS,
    THEOREM_CLASS,
    THEOREM_MIN_N,
    TheoremReport,
    check_pendant_split_monotone,
    check_theorem,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3

PENDANT_SPLIT_CHECK = "f-monotone"
VERIFY_CHECKS = tuple(THEOREM_CHECKERS) + (PENDANT_SPLIT_CHECK,)

_TOOL = f"hsograph {__version__}"


class UsageError(ValueError):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    """Parse 'A..B' or a single integer 'A' into an inclusive range."""

    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad order range {text!r}; expected A or A..B") from None
    if lo > hi:
        raise UsageError(f"empty order range {text!r}")
    return lo, hi


def _default_jobs() -> int:
    env = os.environ.get("HSO_JOBS", "")
    if env.strip():
        try:
            jobs = int(env)
        except ValueError:
            raise UsageError(f"HSO_JOBS must be an integer, got {env!r}") from None
        if jobs < 1:
            raise UsageError("HSO_JOBS must be at least 1")
        return jobs
    return 1


def _check_tolerance(tolerance: float) -> float:
    if not 0.0 < tolerance <= 1e-3:
        raise UsageError("tolerance must lie in (0, 1e-3]")
    return tolerance


def _header_lines(meta: dict) -> str:
    parts = " ".join(f"{k}={v}" for k, v in meta.items())
    return f"# {_TOOL} {parts}"


def _write_text(path, text: str):
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _render_reports(reports: list[TheoremReport], fmt: str, meta: dict) -> str:
    if fmt == "json":
        doc = {"tool": _TOOL, **meta, "reports": [r.to_dict() for r in reports]}
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(_header_lines(meta) + "\n")
        writer = csv.writer(buf)
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow(r.csv_row())
        return buf.getvalue()
    lines = [_header_lines(meta)]
    for r in reports:
        lines.append(
            f"{r.theorem} {r.graph6} value={r.value!r} lower={r.bound_lower!r} "
            f"upper={r.bound_upper!r} eq_lower={r.equality_lower} "
            f"eq_upper={r.equality_upper} class={r.structural_class} "
            f"consistent={r.consistent} holds={r.holds}"
        )
    return "\n".join(lines)


def _render_witnesses(witnesses, fmt: str, meta: dict) -> str:
    if fmt == "json":
        doc = {"tool": _TOOL, **meta, "witnesses": [w.to_dict() for w in witnesses]}
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(_header_lines(meta) + "\n")
        writer = csv.writer(buf)
        writer.writerow(["graph6_before", "graph6_after", "u", "v", "hso_before", "hso_after", "delta"])
        for w in witnesses:
            writer.writerow(
                [w.graph6_before, w.graph6_after, w.added_edge[0], w.added_edge[1],
                 repr(w.hso_before), repr(w.hso_after), repr(w.delta)]
            )
        return buf.getvalue()
    # two-column interchange format: before after
    lines = [_header_lines(meta)]
    lines.extend(w.pair_line() for w in witnesses)
    return "\n".join(lines)


def _render_summary(summary: CampaignSummary, fmt: str, meta: dict) -> str:
    if fmt == "json":
        doc = {"tool": _TOOL, **meta, "summary": summary.to_dict(include_timing=False)}
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(_header_lines(meta) + "\n")
        writer = csv.writer(buf)
        writer.writerow(["n", "min_graph6", "min_value", "max_graph6", "max_value"])
        for n in sorted(set(summary.extremal_min) | set(summary.extremal_max)):
            lo = summary.extremal_min.get(n, ("", ""))
            hi = summary.extremal_max.get(n, ("", ""))
            writer.writerow([n, lo[0], repr(lo[1]) if lo[1] != "" else "",
                             hi[0], repr(hi[1]) if hi[1] != "" else ""])
        return buf.getvalue()
    lines = [_header_lines(meta)]
    lines.append(
        f"{summary.label} class={summary.graph_class} n={summary.n_lo}..{summary.n_hi} "
        f"examined={summary.graphs_examined} violations={len(summary.violations)}"
    )
    for n in sorted(summary.extremal_min):
        g6, value = summary.extremal_min[n]
        lines.append(f"  n={n} min {g6} {value!r}")
    for n in sorted(summary.extremal_max):
        g6, value = summary.extremal_max[n]
        lines.append(f"  n={n} max {g6} {value!r}")
    for v in summary.violations:
        lines.append(f"  VIOLATION {v}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verify campaigns
# ---------------------------------------------------------------------------


def _check_chunk(args):
    theorem, tolerance, g6_list = args
    out = []
    for g6 in g6_list:
        out.append(check_theorem(theorem, parse_graph6(g6), tolerance))
    return out


def run_verify_campaign(
    theorem: str,
    n_lo: int,
    n_hi: int,
    graph_class: str | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    jobs: int = 1,
    grid: int = 1000,
    allow_large: bool = False,
) -> tuple[CampaignSummary, list[TheoremReport]]:
    """Sweep a theorem checker over every graph of the class in the order range.

    Returns the campaign summary plus the per-graph reports sorted by
    (order, graph6).  Parallel runs partition each order's stream into
    contiguous chunks; the final sort makes worker count invisible.
    """
    start = time.perf_counter()
    if theorem == PENDANT_SPLIT_CHECK:
        summary = CampaignSummary(f"verify:{theorem}", "-", n_lo, n_hi)
        if n_lo < 5:
            raise UsageError(f"{theorem} needs n >= 5")
        failed = [n for n in range(n_lo, n_hi + 1) if not check_pendant_split_monotone(n, grid)]
        summary.graphs_examined = n_hi - n_lo + 1
        summary.details["grid"] = grid
        for n in failed:
            summary.violations.append({"n": n, "reason": "split weight increased"})
        summary.wall_time = time.perf_counter() - start
        return summary, []

    if theorem not in THEOREM_CHECKERS:
        raise UsageError(f"unknown check {theorem!r}; expected one of {', '.join(VERIFY_CHECKS)}")
    cls = graph_class or THEOREM_CLASS[theorem]
    if n_lo < THEOREM_MIN_N[theorem]:
        raise UsageError(f"{theorem} is stated for n >= {THEOREM_MIN_N[theorem]}")
    if cls == "connected" and n_hi > 8 and not allow_large:
        raise UsageError("connected sweeps above n = 8 need --allow-large")

    summary = CampaignSummary(f"verify:{theorem}", cls, n_lo, n_hi)
    reports: list[TheoremReport] = []
    for n in range(n_lo, n_hi + 1):
        graphs = list(graphs_in_class(cls, n))
        if jobs > 1 and len(graphs) > 4 * jobs:
            g6s = [g.to_graph6() for g in graphs]
            size = (len(g6s) + jobs - 1) // jobs
            chunks = [
                (theorem, tolerance, g6s[i:i + size]) for i in range(0, len(g6s), size)
            ]
            with multiprocessing.Pool(jobs) as pool:
                for part in pool.map(_check_chunk, chunks):
                    reports.extend(part)
        else:
            for g in graphs:
                reports.append(check_theorem(theorem, g, tolerance))
    reports.sort(key=lambda r: (r.n, r.graph6))

    for r in reports:
        summary.graphs_examined += 1
        if not (r.holds and r.consistent):
            summary.violations.append(r.to_dict())
        if r.equality_lower:
            summary.eq_lower_witnesses.setdefault(r.n, []).append(r.graph6)
        if r.equality_upper:
            summary.eq_upper_witnesses.setdefault(r.n, []).append(r.graph6)
        cur_min = summary.extremal_min.get(r.n)
        if cur_min is None or r.value < cur_min[1]:
            summary.extremal_min[r.n] = (r.graph6, r.value)
        cur_max = summary.extremal_max.get(r.n)
        if cur_max is None or r.value > cur_max[1]:
            summary.extremal_max[r.n] = (r.graph6, r.value)
    summary.wall_time = time.perf_counter() - start
    return summary, reports


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _load_inputs(args) -> list[tuple[str, Graph]]:
    """Resolve compute inputs: family specs, graph6 strings, or --file lines."""
    texts = []
    if args.input:
        texts.append(args.input)
    if args.file:
        with open(args.file) as fh:
            texts.extend(line.strip() for line in fh if line.strip())
    if not texts:
        raise UsageError("nothing to compute: pass a graph6 string, family spec, or --file")
    out = []
    for text in texts:
        if ":" in text:
            spec = parse_family(text)
            out.append((spec.label(), build(spec)))
        else:
            out.append((text, parse_graph6(text)))
    return out


def cmd_compute(args) -> int:
    results = []
    for label, g in _load_inputs(args):
        iv = hso(g)
        entry = {
            "input": label,
            "graph6": g.to_graph6(),
            "n": g.n,
            "m": g.m,
            "class": g.classify(),
            "max_degree": g.max_degree,
            "min_degree": g.min_degree,
            "hso": iv.hso,
            "so": iv.so,
        }
        if args.per_edge:
            entry["per_edge"] = [
                {"u": t.u, "v": t.v, "du": t.du, "dv": t.dv, "value": t.value}
                for t in iv.per_edge
            ]
        results.append(entry)
    if args.format == "json":
        _write_text(args.out, json.dumps({"tool": _TOOL, "results": results}, indent=2, sort_keys=True))
    else:
        lines = []
        for entry in results:
            lines.append(
                f"{entry['input']}: graph6={entry['graph6']} n={entry['n']} m={entry['m']} "
                f"class={entry['class']} maxdeg={entry['max_degree']} mindeg={entry['min_degree']}"
            )
            lines.append(f"  HSO = {entry['hso']!r}")
            lines.append(f"  SO  = {entry['so']!r}")
            for t in entry.get("per_edge", []):
                lines.append(
                    f"  edge ({t['u']}, {t['v']}) degrees ({t['du']}, {t['dv']}) -> {t['value']!r}"
                )
        _write_text(args.out, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    n_lo, n_hi = _parse_range(args.n)
    tolerance = _check_tolerance(args.tolerance)
    summary, reports = run_verify_campaign(
        args.check,
        n_lo,
        n_hi,
        graph_class=args.graph_class,
        tolerance=tolerance,
        jobs=args.jobs,
        grid=args.grid,
        allow_large=args.allow_large,
    )
    meta = {"check": args.check, "tolerance": tolerance, "n": f"{n_lo}..{n_hi}"}
    if args.out or args.format != "text":
        _write_text(args.out, _render_reports(reports, args.format, meta))
    print(
        f"{summary.label}: examined {summary.graphs_examined} graphs, "
        f"{len(summary.violations)} violations, {summary.wall_time:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if not summary.violations else EXIT_VIOLATION


def cmd_search(args) -> int:
    tolerance = _check_tolerance(args.tolerance)
    if args.kind == "monotonicity":
        witnesses = find_monotonicity_counterexamples(args.n_max, tolerance)
        if args.target_delta is not None:
            witnesses = witnesses_with_delta(witnesses, args.target_delta, tolerance)
        meta = {"check": "monotonicity", "tolerance": tolerance, "n_max": args.n_max}
        _write_text(args.out, _render_witnesses(witnesses, args.format, meta))
        print(f"monotonicity: {len(witnesses)} witnesses", file=sys.stderr)
        return EXIT_OK
    if args.kind == "conjecture":
        if args.n is None:
            raise UsageError("search conjecture needs --n")
        n_lo, n_hi = _parse_range(args.n)
        if n_hi > 8 and not args.allow_large:
            raise UsageError("conjecture sweeps above n = 8 need --allow-large")
        exit_code = EXIT_OK
        outputs = []
        for n in range(n_lo, n_hi + 1):
            summary = check_conjecture_star_max(n, tolerance, jobs=args.jobs)
            meta = {"check": "conjecture-star-max", "tolerance": tolerance, "n": n}
            outputs.append(_render_summary(summary, args.format, meta))
            if summary.violations:
                exit_code = EXIT_COUNTEREXAMPLE
            print(
                f"conjecture n={n}: maximizer {summary.extremal_max[n][0]} "
                f"value={summary.extremal_max[n][1]!r} "
                f"is_star={summary.details['maximizer_is_star']} "
                f"violations={len(summary.violations)}",
                file=sys.stderr,
            )
        _write_text(args.out, "\n".join(outputs))
        return exit_code
    if args.kind == "extremal-table":
        if args.n is None:
            raise UsageError("search extremal-table needs --n")
        n_lo, n_hi = _parse_range(args.n)
        if args.graph_class == "connected" and n_hi > 8 and not args.allow_large:
            raise UsageError("connected sweeps above n = 8 need --allow-large")
        summary = extremal_table(args.graph_class, n_lo, n_hi, jobs=args.jobs)
        meta = {"check": "extremal-table", "class": args.graph_class, "n": f"{n_lo}..{n_hi}"}
        _write_text(args.out, _render_summary(summary, args.format, meta))
        return EXIT_OK if not summary.violations else EXIT_VIOLATION
    raise UsageError(f"unknown search kind {args.kind!r}")


def cmd_enumerate(args) -> int:
    n_lo, n_hi = _parse_range(args.n)
    if args.graph_class == "connected" and n_hi > 8 and not args.allow_large:
        raise UsageError("connected enumeration above n = 8 needs --allow-large")
    count = 0
    lines = []
    for n in range(n_lo, n_hi + 1):
        if args.edges is not None:
            from .enumeration import connected_graphs_with_edges

            stream = connected_graphs_with_edges(n, args.edges)
        else:
            stream = graphs_in_class(args.graph_class, n)
        for g in stream:
            lines.append(g.to_graph6())
            count += 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines))
            if lines:
                fh.write("\n")
    else:
        for line in lines:
            print(line)
    print(count, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsograph",
        description="Hyperbolic Sombor index: compute, enumerate, verify bounds, search",
    )
    parser.add_argument("--version", action="version", version=_TOOL)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="HSO/SO of a graph6 string or family spec")
    p_compute.add_argument("input", nargs="?", help="graph6 string or family spec like star:7")
    p_compute.add_argument("--file", help="file with one graph6 string per line")
    p_compute.add_argument("--per-edge", action="store_true", help="print per-edge terms")
    p_compute.add_argument("--format", choices=("text", "json"), default="text")
    p_compute.add_argument("--out", help="write output to this path")

    p_verify = sub.add_parser("verify", help="sweep a bound check over an enumerated class")
    p_verify.add_argument("check", choices=VERIFY_CHECKS)
    p_verify.add_argument("--n", required=True, help="order range A..B (or single order)")
    p_verify.add_argument(
        "--class", dest="graph_class",
        choices=("tree", "unicyclic", "bicyclic", "connected"),
        help="override the check's default graph class",
    )
    p_verify.add_argument("--grid", type=int, default=1000, help="grid size for f-monotone")
    p_verify.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p_verify.add_argument("--jobs", type=int, default=None)
    p_verify.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_verify.add_argument("--out", help="write per-graph reports to this path")
    p_verify.add_argument("--allow-large", action="store_true", help="enable n = 9 sweeps")

    p_search = sub.add_parser("search", help="counterexample and extremal campaigns")
    p_search.add_argument("kind", choices=("monotonicity", "conjecture", "extremal-table"))
    p_search.add_argument("--n-max", type=int, default=5, help="monotonicity: max order")
    p_search.add_argument("--n", help="order or range for conjecture/extremal-table")
    p_search.add_argument(
        "--class", dest="graph_class",
        choices=("tree", "unicyclic", "bicyclic", "connected"), default="connected",
    )
    p_search.add_argument("--target-delta", type=float, default=None,
                          help="monotonicity: keep witnesses with this exact HSO drop")
    p_search.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p_search.add_argument("--jobs", type=int, default=None)
    p_search.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_search.add_argument("--out", help="write witnesses/tables to this path")
    p_search.add_argument("--allow-large", action="store_true")

    p_enum = sub.add_parser("enumerate", help="write an enumerated class as graph6 lines")
    p_enum.add_argument("--class", dest="graph_class",
                        choices=("tree", "unicyclic", "bicyclic", "connected"),
                        default="connected")
    p_enum.add_argument("--n", required=True, help="order range A..B (or single order)")
    p_enum.add_argument("--edges", type=int, default=None,
                        help="exact edge count (overrides --class)")
    p_enum.add_argument("--out", help="write graph6 lines to this path")
    p_enum.add_argument("--allow-large", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "jobs", None) is None and args.command in ("verify", "search"):
            args.jobs = _default_jobs()
        if getattr(args, "jobs", None) is not None and args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "search":
            return cmd_search(args)
        if args.command == "enumerate":
            return cmd_enumerate(args)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, GraphError, InvalidParametersError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
