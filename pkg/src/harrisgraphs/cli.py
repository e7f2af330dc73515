"""Batch command-line front end: check graphs, run the census, generate
families, apply transforms.

Exit codes: 0 success, 1 usage error, 2 parse/validation failure,
3 exhaustive-search ceiling exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .barnacles import (
    BarnacleError,
    find_barnacles,
    grow_barnacle,
    simplify_all,
)
from .canonical import CanonicalError
from .constructions import (
    ConstructionError,
    flower,
    graft,
    graft_edge_candidates,
)
from .core import Graph, GraphError, degree_sequence
from .enumeration import (
    CensusCheckpoint,
    CheckpointError,
    EnumerationError,
    HARRIS_MAX_ORDER,
    HARRIS_MIN_ORDER,
    enumerate_harris,
)
from .families import FamilyError, hirotaka_base, hirotaka_step, justine, shaw_base, shaw_step
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .properties import CeilingError, is_harris

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CEILING = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _default_threads() -> int:
    env = os.environ.get("HARRIS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def report_for(g: Graph, line: str) -> dict:
    """The JSON verdict document for one input graph."""
    verdict = is_harris(g, full_report=True)
    barns, _ = find_barnacles(g)
    witnesses: dict = {}
    if verdict.eulerian_witness is not None:
        kind = verdict.eulerian_witness[0]
        if kind == "odd_degree":
            witnesses["odd_vertex"] = verdict.eulerian_witness[1]
        else:
            witnesses["disconnection"] = list(verdict.eulerian_witness[1:])
    if verdict.toughness.violating_set is not None:
        witnesses["violating_set"] = sorted(verdict.toughness.violating_set)
    if verdict.hamiltonicity.cycle is not None:
        witnesses["hamiltonian_cycle"] = list(verdict.hamiltonicity.cycle)
    return {
        "input": line,
        "order": g.n,
        "edges": g.edge_count,
        "eulerian": verdict.eulerian,
        "tough": verdict.toughness.tough,
        "hamiltonian": verdict.hamiltonicity.hamiltonian,
        "harris": verdict.is_harris,
        "witnesses": witnesses,
        "barnacles": [b.to_json() for b in barns],
        "degree_sequence": str(degree_sequence(g)),
    }


def _read_lines(source: str):
    if source == "-":
        return sys.stdin.read().splitlines()
    return Path(source).read_text().splitlines()


def cmd_check(args) -> int:
    lines = [
        (i, line.strip())
        for i, line in enumerate(_read_lines(args.input), start=1)
        if line.strip()
    ]

    def process(item):
        lineno, line = item
        try:
            return lineno, report_for(parse_graph6(line), line), None
        except (Graph6Error, GraphError) as exc:
            return lineno, None, str(exc)

    with ThreadPoolExecutor(max_workers=args.threads) as pool:
        results = list(pool.map(process, lines))

    failed = False
    for lineno, report, error in results:
        if error is not None:
            failed = True
            print(json.dumps({"line": lineno, "error": error}))
            if args.strict:
                return EXIT_PARSE
            continue
        if args.harris_only and not report["harris"]:
            continue
        print(json.dumps(report))
    return EXIT_PARSE if failed else EXIT_OK


def cmd_enumerate(args) -> int:
    if not HARRIS_MIN_ORDER <= args.n <= HARRIS_MAX_ORDER:
        raise CliError(
            f"census order must be in [{HARRIS_MIN_ORDER}, {HARRIS_MAX_ORDER}], "
            f"got {args.n}",
            EXIT_USAGE,
        )
    checkpoint = None
    if args.checkpoint and Path(args.checkpoint).exists():
        checkpoint = CensusCheckpoint.load(args.checkpoint)
    result = enumerate_harris(
        args.n,
        threads=args.threads,
        checkpoint=checkpoint,
        checkpoint_path=args.checkpoint,
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    catalog_path = out / f"harris-{args.n}.g6"
    catalog_path.write_text("".join(line + "\n" for line in result.catalog))
    (out / f"harris-{args.n}.summary.json").write_text(
        json.dumps(result.summary(), indent=2) + "\n"
    )
    _update_census_csv(out / "census.csv", args.n, result.harris_count)
    print(result.harris_count)
    return EXIT_OK


def _update_census_csv(path: Path, order: int, count: int) -> None:
    rows: dict[int, int] = {}
    if path.exists():
        with path.open() as fh:
            for row in csv.DictReader(fh):
                rows[int(row["order"])] = int(row["count"])
    rows[order] = count
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["order", "count"])
        for n in sorted(rows):
            writer.writerow([n, rows[n]])


def _emit_family_state(state, name: str, verify: bool, out_dir: Path | None) -> None:
    g6 = emit_graph6(state.graph)
    record = {
        "family": name,
        "step": state.step,
        "order": state.graph.n,
        "graph6": g6,
        "roles": state.roles,
    }
    if verify:
        record["harris"] = is_harris(state.graph).is_harris
    print(g6)
    print(json.dumps(record))
    if out_dir is not None:
        (out_dir / f"{name}-{state.step}.g6").write_text(g6 + "\n")
        (out_dir / f"{name}-{state.step}.roles.json").write_text(
            json.dumps(record, indent=2) + "\n"
        )


def cmd_family(args) -> int:
    out_dir = None
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
    if args.name in ("hirotaka", "shaw"):
        if args.steps is None:
            raise CliError(f"family {args.name} needs --steps", EXIT_USAGE)
        state = hirotaka_base() if args.name == "hirotaka" else shaw_base()
        step_fn = hirotaka_step if args.name == "hirotaka" else shaw_step
        _emit_family_state(state, args.name, args.verify, out_dir)
        for _ in range(args.steps):
            state = step_fn(state)
            _emit_family_state(state, args.name, args.verify, out_dir)
        return EXIT_OK
    # justine
    if args.n is None:
        raise CliError("family justine needs --n (odd, >= 3)", EXIT_USAGE)
    g = justine(args.n)
    g6 = emit_graph6(g)
    record = {"family": "justine", "n": args.n, "order": g.n, "graph6": g6}
    if args.verify:
        record["harris"] = is_harris(g).is_harris
    print(g6)
    print(json.dumps(record))
    if out_dir is not None:
        (out_dir / f"justine-{args.n}.g6").write_text(g6 + "\n")
        (out_dir / f"justine-{args.n}.roles.json").write_text(
            json.dumps(record, indent=2) + "\n"
        )
    return EXIT_OK


def _parse_edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(t) for t in text.split(","))
        return (u, v) if u < v else (v, u)
    except ValueError:
        raise CliError(f"bad edge {text!r}; expected 'u,v'", EXIT_USAGE) from None


def _pick_graft_edge(g: Graph) -> tuple[int, int]:
    candidates = graft_edge_candidates(g)
    if not candidates:
        raise CliError(
            "no graft edge with toughness slack exists in this graph", EXIT_PARSE
        )
    return candidates[0]


def cmd_transform(args) -> int:
    graphs = [parse_graph6(s) for s in args.graphs]
    if args.op == "graft":
        if len(graphs) != 2:
            raise CliError("graft needs exactly two graph6 inputs", EXIT_USAGE)
        g, h = graphs
        eg = _parse_edge(args.edge1) if args.edge1 else _pick_graft_edge(g)
        eh = _parse_edge(args.edge2) if args.edge2 else _pick_graft_edge(h)
        out = graft(g, eg, h, eh)
    elif args.op == "flower":
        (g,) = graphs
        out = flower(g)
    elif args.op == "simplify":
        (g,) = graphs
        out = simplify_all(g)
        if out == g:
            print("warning: input has no simplifiable barnacle; output unchanged",
                  file=sys.stderr)
    else:  # grow
        (g,) = graphs
        barns, _ = find_barnacles(g)
        if not barns:
            raise CliError("input has no barnacle to grow", EXIT_PARSE)
        if not 0 <= args.barnacle < len(barns):
            raise CliError(
                f"--barnacle index out of range 0..{len(barns) - 1}", EXIT_USAGE
            )
        out = grow_barnacle(g, barns[args.barnacle], args.extra)
    print(emit_graph6(out))
    if args.verify:
        verdict = is_harris(out)
        print(json.dumps({"order": out.n, "harris": verdict.is_harris}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harris",
        description="Verify, construct, and enumerate Harris graphs "
        "(tough, Eulerian, non-Hamiltonian).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verdict reports for graph6 lines")
    p.add_argument("input", nargs="?", default="-", help="graph6 file or - for stdin")
    p.add_argument("--harris-only", action="store_true")
    p.add_argument("--strict", action="store_true",
                   help="stop at the first parse failure")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("enumerate", help="run the Harris census for one order")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=".")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--checkpoint", default=None)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("family", help="generate a named family")
    p.add_argument("name", choices=["hirotaka", "shaw", "justine"])
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("transform", help="apply a graph transform")
    p.add_argument("op", choices=["graft", "flower", "simplify", "grow"])
    p.add_argument("graphs", nargs="+", help="graph6 inputs")
    p.add_argument("--edge1", default=None, help="graft edge in G as 'u,v'")
    p.add_argument("--edge2", default=None, help="graft edge in H as 'u,v'")
    p.add_argument("--barnacle", type=int, default=0,
                   help="index into the barnacle list for grow")
    p.add_argument("--extra", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_transform)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (Graph6Error, GraphError, BarnacleError, ConstructionError,
            FamilyError, CheckpointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CeilingError, CanonicalError, EnumerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING


if __name__ == "__main__":
    sys.exit(main())
