"""Command-line front end.

Subcommands: ``compute`` (polynomial, zeta, counts, surgery trace for one
graph file), ``verify`` (cross-check one file or a generated corpus),
``qanalog`` and ``monoid`` (calculator front ends).  Exit codes: 0 success,
1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass, field
from random import Random

from . import corpus
from .grothendieck import class_of, surgery
from .loose_graph import GraphError, LooseGraph
from .monoid_spec import MonoidPresentation, PresentationError
from .oracle import CountTable, OracleLimitError, cross_check, enumerate_points
from .poly import IntPolynomial
from .qanalog import f1_subspace_count, gauss_binomial, gl_order, q_factorial, q_integer
from .zeta import render_arithmetic_zeta, zeta_from_polynomial


@dataclass
class Report:
    """Everything `compute` knows about one graph, JSON-serializable."""

    vertices: int
    full_edges: int
    loose_edges: int
    free_edges: int
    connected: bool
    polynomial: list
    euler_characteristic: int
    zeta: list | None = None
    zeta_rendered: str | None = None
    arithmetic_zeta: str | None = None
    counts: dict | None = None
    surgery_trace: list | None = None
    verdicts: dict = field(default_factory=dict)

    def __post_init__(self):
        at_one = sum(self.polynomial)
        if at_one != self.vertices or at_one != self.euler_characteristic:
            raise ValueError("polynomial(1) must equal the vertex count")

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        if self.counts is not None:
            out["counts"] = {str(q): c for q, c in self.counts.items()}
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        data = dict(data)
        if data.get("counts") is not None:
            data["counts"] = {int(q): c for q, c in data["counts"].items()}
        if data.get("zeta") is not None:
            data["zeta"] = [dict(entry) for entry in data["zeta"]]
        if data.get("surgery_trace") is not None:
            data["surgery_trace"] = [_trace_from_json(t) for t in data["surgery_trace"]]
        return cls(**data)


def _trace_from_json(entry):
    out = dict(entry)
    out["steps"] = [dict(s) for s in out.get("steps", [])]
    return out


def _primes_list(text: str) -> list:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f1zeta",
        description="Counting polynomials and zeta functions of loose graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0, help="RNG seed")
    common.add_argument(
        "--max-ambient", type=int, default=None, dest="max_ambient",
        help="ambient-vertex budget for corpus generation",
    )
    common.add_argument(
        "--primes", type=_primes_list, default=None,
        help="comma-separated primes for point counting",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", parents=[common], help="analyze one graph file")
    pc.add_argument("path")
    pc.add_argument("--counts", type=_primes_list, default=None,
                    help="count points over these primes")
    pc.add_argument("--zeta", action="store_true", help="include zeta data")
    pc.add_argument("--surgery-trace", action="store_true", dest="surgery_trace")
    pc.add_argument("--ascii", action="store_true", help="spell zeta in ASCII")
    pc.add_argument("--csv", action="store_true",
                    help="emit the count table as CSV (needs --counts)")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", parents=[common], help="cross-check graphs")
    pv.add_argument("path", nargs="?")
    pv.add_argument("--corpus", action="store_true",
                    help="exhaustive small corpus plus random graphs")
    pv.add_argument("--random", type=int, default=25, dest="random_count",
                    help="number of random graphs for --corpus")
    pv.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    pv.set_defaults(func=cmd_verify)

    pq = sub.add_parser("qanalog", parents=[common], help="q-analog calculators")
    qs = pq.add_subparsers(dest="op", required=True)
    b = qs.add_parser("binom")
    b.add_argument("n", type=int)
    b.add_argument("k", type=int)
    for name in ("qint", "qfact"):
        p = qs.add_parser(name)
        p.add_argument("n", type=int)
    go = qs.add_parser("glorder")
    go.add_argument("d", type=int)
    go.add_argument("n", type=int)
    fs = qs.add_parser("f1subspaces")
    fs.add_argument("n", type=int)
    fs.add_argument("k", type=int)
    pq.set_defaults(func=cmd_qanalog)

    pm = sub.add_parser("monoid", parents=[common], help="monoid spectra")
    ms = pm.add_subparsers(dest="op", required=True)
    sp = ms.add_parser("spec")
    sp.add_argument("presentation")
    sp.add_argument("--bound", type=int, default=8)
    hc = ms.add_parser("homcount")
    hc.add_argument("presentation")
    hc.add_argument("q", type=int)
    mx = ms.add_parser("maximal")
    mx.add_argument("presentation")
    mx.add_argument("--bound", type=int, default=8)
    pm.set_defaults(func=cmd_monoid)

    return parser


# -- compute ------------------------------------------------------------------


def cmd_compute(args) -> int:
    with open(args.path, encoding="utf-8") as handle:
        g = LooseGraph.parse(handle.read())

    poly = class_of(g)
    components = g.components()
    verdicts = {}

    surgery_results = [surgery(c) for c in components]
    surgery_total = IntPolynomial(0, var="L")
    for part, _ in surgery_results:
        surgery_total = surgery_total + part
    verdicts["surgery_agrees"] = surgery_total == poly

    report = Report(
        vertices=len(g.vertices),
        full_edges=len(g.full_edges),
        loose_edges=len(g.loose_edges),
        free_edges=len(g.free_edges),
        connected=len(components) == 1,
        polynomial=poly.to_coefficient_list(),
        euler_characteristic=poly(1),
        verdicts=verdicts,
    )

    if args.zeta:
        z = zeta_from_polynomial(poly)
        report.zeta = z.to_json()
        report.zeta_rendered = z.render("t")
        report.arithmetic_zeta = render_arithmetic_zeta(poly, ascii_zeta=args.ascii)

    wanted = args.counts if args.counts is not None else args.primes
    if wanted:
        counts = {q: enumerate_points(g, q) for q in wanted}
        report.counts = counts
        verdicts["counts_agree"] = all(poly(q) == c for q, c in counts.items())

    if args.surgery_trace:
        report.surgery_trace = [
            {
                "component": i,
                "spanning_tree": sorted(trace.spanning_tree),
                "steps": [
                    {
                        "edge": step.tag,
                        "ends": list(step.ends),
                        "ball": sorted(step.ball),
                        "difference": step.difference.to_coefficient_list(),
                    }
                    for step in trace.steps
                ],
                "tree_class": trace.final_tree_class.to_coefficient_list(),
            }
            for i, (_, trace) in enumerate(surgery_results)
        ]

    if args.csv:
        if report.counts is None:
            print("error: --csv needs --counts", file=sys.stderr)
            return 2
        table = CountTable(args.path, tuple(sorted(report.counts.items())))
        print(table.to_csv(), end="")
    elif args.json:
        print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    else:
        _print_report(report, poly)
    return 0 if all(report.verdicts.values()) else 1


def _print_report(report: Report, poly) -> None:
    print(f"vertices         : {report.vertices}")
    print(f"full edges       : {report.full_edges}")
    print(f"loose edges      : {report.loose_edges}")
    print(f"free loose edges : {report.free_edges}")
    print(f"connected        : {'yes' if report.connected else 'no'}")
    print(f"class            : {poly.render('L')}")
    print(f"euler char       : {report.euler_characteristic}")
    if report.zeta_rendered is not None:
        print(f"zeta             : {report.zeta_rendered}")
        print(f"arithmetic zeta  : {report.arithmetic_zeta}")
    if report.counts is not None:
        for q, c in sorted(report.counts.items()):
            print(f"points over F_{q}  : {c}")
    for name, verdict in report.verdicts.items():
        print(f"{name:17s}: {'pass' if verdict else 'FAIL'}")
    if report.surgery_trace is not None:
        for trace in report.surgery_trace:
            print(f"surgery component {trace['component']}:")
            print(f"  spanning tree edges {trace['spanning_tree']}")
            for step in trace["steps"]:
                u, v = step["ends"]
                diff = step["difference"]
                print(f"  resolve {u}-{v} (tag {step['edge']}), "
                      f"ball {step['ball']}, difference {diff}")
            print(f"  final tree class {trace['tree_class']}")


# -- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.corpus:
        rng = Random(args.seed)
        bound = args.max_ambient if args.max_ambient is not None else 5
        graphs = list(corpus.exhaustive_loose_graphs(bound))
        graphs += [
            corpus.random_loose_graph(rng, max_ambient=max(bound, 7))
            for _ in range(args.random_count)
        ]
    elif args.path:
        with open(args.path, encoding="utf-8") as handle:
            graphs = [LooseGraph.parse(handle.read())]
    else:
        print("error: verify needs a path or --corpus", file=sys.stderr)
        return 2

    primes = args.primes if args.primes is not None else [2, 3, 5]
    failures = []
    checked = 0
    for i, g in enumerate(graphs):
        report = cross_check(g, primes=primes, graph_id=f"graph{i}")
        checked += 1
        expected = report.class_polynomial
        if args.corrupt and i == 0:
            expected = expected + 1  # test hook: make the first graph fail
        problems = []
        if report.surgery_polynomial != expected:
            problems.append(
                f"surgery {report.surgery_polynomial.render('L')} "
                f"!= class {expected.render('L')}"
            )
        if report.tree_polynomial is not None and report.tree_polynomial != expected:
            problems.append(
                f"tree {report.tree_polynomial.render('L')} "
                f"!= class {expected.render('L')}"
            )
        if report.interpolated is not None and report.interpolated != expected:
            problems.append(
                f"interpolation {report.interpolated.render('L')} "
                f"!= class {expected.render('L')}"
            )
        for q, c in report.counts.samples:
            if expected(q) != c:
                problems.append(f"count over F_{q}: expected {expected(q)}, got {c}")
        if expected(1) != len(g.vertices):
            problems.append(
                f"class at 1 gives {expected(1)}, vertex count is {len(g.vertices)}"
            )
        if problems:
            failures.append({"graph": g.render(), "problems": problems})

    if args.json:
        print(json.dumps(
            {"checked": checked, "passed": checked - len(failures),
             "failures": failures},
            indent=2,
        ))
    else:
        print(f"checked {checked} graphs, {len(failures)} failures")
        for failure in failures:
            print("graph:")
            for line in failure["graph"].splitlines():
                print(f"  {line}")
            for problem in failure["problems"]:
                print(f"  {problem}")
    return 1 if failures else 0


# -- calculators ------------------------------------------------------------------


def cmd_qanalog(args) -> int:
    if args.op == "binom":
        out = gauss_binomial(args.n, args.k).render("q")
    elif args.op == "qint":
        out = q_integer(args.n).render("q")
    elif args.op == "qfact":
        out = q_factorial(args.n).render("q")
    elif args.op == "glorder":
        out = str(gl_order(args.d, args.n))
    else:
        out = str(f1_subspace_count(args.n, args.k))
    print(out)
    return 0


def cmd_monoid(args) -> int:
    pres = MonoidPresentation.parse(args.presentation)
    if args.op == "spec":
        primes = pres.spec(bound=args.bound)
        if args.json:
            print(json.dumps([sorted(p.generators) for p in primes]))
        else:
            print(f"{len(primes)} prime ideals")
            for p in primes:
                print(str(p))
    elif args.op == "homcount":
        print(pres.hom_count(args.q))
    else:
        print(str(pres.maximal_ideal(bound=args.bound)))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, PresentationError, OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
