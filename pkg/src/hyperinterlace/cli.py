"""Command-line front end.

Exit status: 0 when every verdict passes, 1 when some verdict fails, 2 for
usage or input errors. Reports go to stdout and are deterministic for fixed
inputs and seed; wall time is logged to stderr only.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
import time

import numpy as np

from . import campaign, document, interlacing as il, operators, tightness
from .eigen import spectrum as compute_spectrum
from .exceptions import HypergraphError
from .hypergraph import classify, delete_edges, delete_vertices, restrict

log = logging.getLogger("hyperinterlace")

OPERATOR_CHOICES = ("A", "L", "K", "Kdual", "Lrw")
THEOREM_CHOICES = campaign.THEOREMS
TARGET_CHOICES = {"butler": "butler_strictness", "edgeset-L": "edgeset_L_strictness"}
SIGNIFICANT = 10


def fmt(x: float) -> str:
    return f"{x:.{SIGNIFICANT}g}"


def rounded(obj):
    """Round every float in a JSON-like structure to ten significant digits."""
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v) for v in obj]
    return obj


def snap_zeros(values: np.ndarray) -> np.ndarray:
    """Display-only: print eigenvalues that are zero up to rounding as 0."""
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    return np.where(np.abs(values) <= 1e-12 * scale, 0.0, values)


class Output:
    def __init__(self, fmt_name: str, stream=None):
        self.format = fmt_name
        self.stream = stream or sys.stdout

    def record(self, obj: dict) -> None:
        if self.format == "json-lines":
            self.stream.write(json.dumps(rounded(obj), sort_keys=True) + "\n")

    def line(self, text: str = "") -> None:
        if self.format == "table":
            self.stream.write(text + "\n")


def _header(args, G=None) -> dict:
    return {
        "command": args.command,
        "argv": list(args.argv),
        "input_digest": None if G is None else document.digest(G),
    }


# -- subcommands ---------------------------------------------------------------


def cmd_spectrum(args, out: Output) -> int:
    G = document.load(args.input)
    op = args.operator
    # the random-walk form is similar to the symmetric one, so they share a spectrum
    M = operators.normalized_laplacian(G) if op == "Lrw" else operators.operator(G, op)
    values = snap_zeros(compute_spectrum(M).values)
    out.record({**_header(args, G), "operator": op, "dim": len(values), "values": values.tolist()})
    for v in values:
        out.line(fmt(float(v)))
    return 0


MATRIX_BUILDERS = (
    ("D", operators.degree_matrix),
    ("A", operators.adjacency_matrix),
    ("I", operators.incidence_matrix),
    ("L", operators.normalized_laplacian),
    ("Lrw", operators.random_walk_laplacian),
    ("K", operators.kirchhoff_laplacian),
    ("Kdual", operators.dual_kirchhoff_laplacian),
)


def cmd_matrices(args, out: Output) -> int:
    G = document.load(args.input)
    header = _header(args, G)
    for name, build in MATRIX_BUILDERS:
        try:
            M, error = build(G), None
        except HypergraphError as exc:
            M, error = None, str(exc)
        rows, cols = (None, None) if M is None else M.shape
        out.record({**header, "matrix": name, "rows": rows, "cols": cols,
                    "entries": None if M is None else M.tolist(), "error": error})
        out.line(f"{name}:" if M is None else f"{name} ({rows}x{cols}):")
        if M is None:
            out.line(f"  unavailable: {error}")
        for row in [] if M is None else M:
            out.line("  " + "  ".join(f"{fmt(float(x)):>13}" for x in row))
    return 0


def cmd_delete(args, out: Output) -> int:
    G = document.load(args.input)
    chosen = [bool(args.vertex), bool(args.edge), bool(args.restrict)]
    if sum(chosen) != 1:
        raise UsageError("delete needs exactly one of --vertex, --edge, --restrict")
    if args.vertex:
        H = delete_vertices(G, args.vertex)
    elif args.edge:
        H = delete_edges(G, args.edge)
    else:
        H = restrict(G, args.restrict)
    text = document.serialize_hypergraph(H) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _verify_reports(G, args) -> list[il.InterlacingReport]:
    theorem, tol = args.theorem, args.tolerance
    if theorem.startswith("vertex-"):
        return il.verify_vertex_deletions(G, theorem[-1], args.vertex or None, tol)
    if theorem == "edge-K":
        return il.verify_edge_deletions_kirchhoff(G, args.edge or None, tol)
    if theorem.startswith("edgeset-"):
        if not args.edge:
            raise UsageError(f"{theorem} needs the edge set F via --edge")
        return [il.verify_edge_set(G, args.edge, theorem[-1], tol)]
    if theorem == "butler":
        if not args.edge:
            raise UsageError("butler needs the edge set F via --edge")
        return [il.verify_butler(G, args.edge, tol)]
    if theorem == "loop":
        return il.verify_loop_removals(G, args.edge or None, tol)
    return [il.verify_trace_identities(G, tol)]


def _print_report(report: il.InterlacingReport, out: Output, indent: str = "") -> None:
    p = report.perturbation
    what = "" if p is None else f" {p.kind} " + (p.vertex if p.vertex is not None else "{" + ",".join(p.edges) + "}")
    label = f" [{report.label}]" if report.label else ""
    out.line(f"{indent}{report.theorem.value}{label}{what}: {'PASS' if report.verdict else 'FAIL'} (tol {fmt(report.tolerance_used)})")
    if report.premise is not None:
        out.line(f"{indent}  principal submatrix premise: {'holds' if report.premise else 'VIOLATED'}")
    for note in report.notes:
        out.line(f"{indent}  note: {note}")
    for c in report.checks:
        lo = "" if c.lower_bound is None else f"{fmt(c.lower_bound)} <= "
        hi = "" if c.upper_bound is None else f" <= {fmt(c.upper_bound)}"
        tag = f" ({c.label})" if c.label else ""
        out.line(f"{indent}  k={c.k}: {lo}{fmt(c.value)}{hi}{tag}  {'ok' if c.passed else 'FAIL'}")
    for comp in report.companions:
        _print_report(comp, out, indent + "  ")


def cmd_verify(args, out: Output) -> int:
    G = document.load(args.input)
    reports = _verify_reports(G, args)
    header = {**_header(args, G), "theorem": args.theorem, "tolerance": args.tolerance}
    for report in reports:
        out.record({**header, "report": report.as_dict()})
        _print_report(report, out)
    verdict = all(r.verdict for r in reports)
    out.record({**header, "summary": {"reports": len(reports), "verdict": verdict}})
    out.line(f"verdict: {'PASS' if verdict else 'FAIL'} ({len(reports)} reports)")
    return 0 if verdict else 1


def cmd_fuzz(args, out: Output) -> int:
    summary = campaign.run_campaign(args.theorem, args.count, args.seed, args.tolerance)
    data = summary.as_dict()
    out.record({**_header(args), "summary": data})
    for key in ("theorem", "seed", "count", "tolerance", "reports", "passed", "failed", "skipped", "errors",
                "companion_failures", "worst_margin", "verdict"):
        value = data[key]
        out.line(f"{key}: {fmt(value) if isinstance(value, float) else value}")
    if summary.first_failure is not None:
        out.line("first failing witness:")
        out.line(json.dumps(rounded(summary.first_failure), sort_keys=True))
    return 0 if summary.verdict else 1


def cmd_tightness(args, out: Output) -> int:
    target = TARGET_CHOICES[args.target]
    files = [document.load(path) for path in args.input or []]
    if target == "butler_strictness":
        generated = tightness.random_connected_simple_graphs(args.max_vertices, args.seed)
    else:
        generated = (G for _, G in campaign.instances(args.seed, args.budget))
    witnesses = tightness.tightness_search(
        itertools.chain(files, generated), target, args.budget, args.tolerance, args.max_witnesses
    )
    header = {**_header(args), "target": target, "budget": args.budget, "seed": args.seed}
    for w in witnesses:
        out.record({**header, "witness": w.as_dict()})
        out.line(w.describe())
        out.line("  " + document.serialize_hypergraph(w.hypergraph, indent=None))
    out.record({**header, "summary": {"witnesses": len(witnesses), "verdict": bool(witnesses)}})
    out.line(f"witnesses found: {len(witnesses)}")
    return 0 if witnesses else 1


def cmd_classify(args, out: Output) -> int:
    G = document.load(args.input)
    flags = classify(G).as_dict()
    out.record({**_header(args, G), "class": flags})
    for name, value in flags.items():
        out.line(f"{name}: {value}")
    return 0


# -- parser ------------------------------------------------------------------------


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperinterlace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="hypergraph document (JSON)")
        p.add_argument("--format", choices=("table", "json-lines"), default="table")
        return p

    p = common(sub.add_parser("spectrum", help="ascending spectrum of one operator"))
    p.add_argument("--operator", choices=OPERATOR_CHOICES, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = common(sub.add_parser("matrices", help="dump D, A, I, L, Lrw, K, Kdual"))
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("delete", help="apply a deletion or restriction and emit the document")
    p.add_argument("--input", required=True)
    p.add_argument("--vertex", action="append", default=[])
    p.add_argument("--edge", action="append", default=[])
    p.add_argument("--restrict", action="append", default=[], metavar="EDGE")
    p.add_argument("--output")
    p.set_defaults(func=cmd_delete, format="table")

    p = common(sub.add_parser("verify", help="run one interlacing verifier on a file"))
    p.add_argument("--theorem", choices=THEOREM_CHOICES, required=True)
    p.add_argument("--vertex", action="append", default=[])
    p.add_argument("--edge", action="append", default=[])
    p.add_argument("--tolerance", type=float, default=il.DEFAULT_TOL)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("fuzz", help="random campaign over one verifier"), needs_input=False)
    p.add_argument("--theorem", choices=THEOREM_CHOICES, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=il.DEFAULT_TOL)
    p.set_defaults(func=cmd_fuzz)

    p = common(sub.add_parser("tightness", help="search for tightness witnesses"), needs_input=False)
    p.add_argument("--target", choices=tuple(TARGET_CHOICES), required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--max-witnesses", type=int, default=1)
    p.add_argument("--input", action="append", help="hypergraph documents searched before random candidates")
    p.add_argument("--tolerance", type=float, default=il.DEFAULT_TOL)
    p.set_defaults(func=cmd_tightness)

    p = common(sub.add_parser("classify", help="structural class flags"))
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    start = time.perf_counter()
    try:
        status = args.func(args, Output(args.format))
    except UsageError as exc:
        parser.error(str(exc))
    except (HypergraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - start)
    return status


if __name__ == "__main__":
    sys.exit(main())
