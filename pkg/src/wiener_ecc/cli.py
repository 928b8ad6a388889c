"""Command-line front end.

Records go to standard output (JSONL, CSV or human-readable), diagnostics and
the closing summary line go to standard error.

Exit status: 0 success, 1 a checker failed (a lemma or the proved
inequality does not hold, which means a bug here), 2 operational error (I/O,
parse failure, input outside a command's domain).  Violations of the open
path bound are findings and never change the exit status.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import count as _count

from . import corpus, verification
from .contraction import STRATEGIES, contract_chain, first_increase
from .errors import GraphError
from .graph import Graph, is_connected, parse_graph6, write_graph6
from .metrics import invariant_summary

PARALLELISM_ENV = "WIENER_ECC_PARALLELISM"

FIELDS = {
    "verify": ["graph", "edge", "wse_before", "wse_after", "delta", "pass"],
    "lemmas": ["graph", "edge", "lemma", "holds", "witness"],
    "conjecture2": ["graph", "n", "radius", "wse", "bound", "within_bound", "equality", "is_path", "finding"],
    "chain": ["source", "step", "graph", "edge", "wse"],
    "summary": ["graph", "n", "m", "wiener", "total_ecc", "wse", "radius", "diameter"],
}


class UsageError(Exception):
    pass


# -- per-graph work -------------------------------------------------------------
#
# Workers receive graph6 text and return (rows, error).  They are module-level
# so process pools can pickle them.


def _domain_graph(g6: str) -> Graph:
    g = parse_graph6(g6)
    if g.n < 3:
        raise GraphError(f"needs at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    return g


def _edge(e) -> list[int]:
    return [e.a, e.b]


def work_verify(g6: str, _opts: dict) -> list[dict]:
    g = _domain_graph(g6)
    rows = []
    for case in verification.cases(g):
        rec = case.inequality()
        rows.append({
            "graph": rec.graph_id,
            "edge": _edge(rec.edge),
            "wse_before": rec.wse_before,
            "wse_after": rec.wse_after,
            "delta": rec.delta,
            "pass": rec.passed,
        })
    return rows


def work_lemmas(g6: str, _opts: dict) -> list[dict]:
    g = _domain_graph(g6)
    return [
        {
            "graph": rep.graph_id,
            "edge": _edge(rep.edge),
            "lemma": rep.lemma_id,
            "holds": rep.holds,
            "witness": rep.witness,
        }
        for case in verification.cases(g)
        for rep in case.lemma_reports()
    ]


def work_conjecture2(g6: str, _opts: dict) -> list[dict]:
    g = parse_graph6(g6)
    if not is_connected(g):
        raise GraphError("graph is not connected")
    rec = verification.check_conjecture2(g)
    if rec is None:
        return []
    return [{
        "graph": rec.graph_id,
        "n": rec.n,
        "radius": rec.radius,
        "wse": rec.wse,
        "bound": rec.bound,
        "within_bound": rec.within_bound,
        "equality": rec.equality,
        "is_path": rec.is_path,
        "finding": rec.finding,
    }]


def work_chain(g6: str, opts: dict) -> list[dict]:
    g = parse_graph6(g6)
    if g.n < 2:
        raise GraphError("chains need at least 2 vertices")
    steps = contract_chain(g, opts["strategy"], opts["strategy_seed"])
    bad = first_increase(steps)
    return [
        {
            "source": g6,
            "step": s.step,
            "graph": s.graph6,
            "edge": None if s.edge is None else _edge(s.edge),
            "wse": s.wse,
            "increase": k == bad,
        }
        for k, s in enumerate(steps)
    ]


def work_summary(g6: str, _opts: dict) -> list[dict]:
    g = parse_graph6(g6)
    if not is_connected(g):
        raise GraphError("graph is not connected")
    s = invariant_summary(g)
    return [{
        "graph": g6,
        "n": g.n,
        "m": g.m,
        "wiener": s.wiener,
        "total_ecc": s.total_ecc,
        "wse": s.wse,
        "radius": s.radius,
        "diameter": s.diameter,
    }]


WORKERS: dict[str, Callable[[str, dict], list[dict]]] = {
    "verify": work_verify,
    "lemmas": work_lemmas,
    "conjecture2": work_conjecture2,
    "chain": work_chain,
    "summary": work_summary,
}


def _run_one(task: tuple[str, str, dict]) -> tuple[list[dict], str | None]:
    command, g6, opts = task
    try:
        return WORKERS[command](g6, opts), None
    except GraphError as exc:
        return [], str(exc)


# -- sources --------------------------------------------------------------------


def _parse_p(text: str) -> tuple[int, int]:
    num, sep, den = text.partition("/")
    try:
        p = (int(num), int(den) if sep else 1)
    except ValueError:
        raise UsageError(f"--p expects NUM/DEN, got {text!r}") from None
    if not 0 < p[0] <= p[1]:
        raise UsageError("--p must satisfy 0 < NUM <= DEN")
    return p


def _seed(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a decimal integer, got {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def iter_source(args: argparse.Namespace, diagnostics: list[str]) -> Iterator[tuple[str, str]]:
    """Yield ``(label, graph6)`` pairs; the label locates the graph for
    diagnostics."""
    if args.enumerate is not None:
        n = args.enumerate
        if args.min_radius:
            graphs = corpus.enumerate_min_radius(n, args.min_radius)
        else:
            graphs = corpus.enumerate_connected(n)
        for i, g in enumerate(graphs, 1):
            yield f"#{i}", write_graph6(g)
    elif args.file is not None:
        stream = sys.stdin if args.file == "-" else open(args.file, encoding="ascii", errors="replace")
        try:
            for lineno, g in corpus.read_graph6_stream(stream, args.skip_bad_lines, diagnostics):
                yield f"line {lineno}", write_graph6(g)
        finally:
            if stream is not sys.stdin:
                stream.close()
    elif args.gnp is not None:
        num, den = _parse_p(args.p)
        for i in range(args.count):
            seed = (args.seed + i) % (1 << 64)
            yield f"seed {seed}", write_graph6(corpus.sample_connected_gnp(args.gnp, num, den, seed))
    else:
        for i in range(args.count):
            seed = (args.seed + i) % (1 << 64)
            yield f"seed {seed}", write_graph6(corpus.sample_random_tree(args.tree, seed))


# -- output ---------------------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "-".join(map(str, value))
    return str(value)


class Writer:
    def __init__(self, fmt: str, fields: list[str], out):
        self.fmt = fmt
        self.fields = fields
        self.out = out
        if fmt == "csv":
            self._csv = csv.writer(out, lineterminator="\n")
            self._csv.writerow(fields)

    def write(self, row: dict) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps({k: row[k] for k in self.fields}, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow([_cell(row[k]) for k in self.fields])
        else:
            self.out.write("  ".join(f"{k}={_cell(row[k])}" for k in self.fields) + "\n")


# -- summaries --------------------------------------------------------------------


@dataclass
class Tally:
    command: str
    graphs: int = 0
    records: int = 0
    failures: int = 0
    skipped: int = 0
    extra: dict = field(default_factory=dict)

    def add(self, rows: list[dict]) -> bool:
        """Account for one graph's rows; True if any row is a failure."""
        self.graphs += 1
        self.records += len(rows)
        failed = False
        c, x = self.command, self.extra
        for row in rows:
            if c == "verify":
                x["min_delta"] = min(x.get("min_delta", row["delta"]), row["delta"])
                x["max_delta"] = max(x.get("max_delta", row["delta"]), row["delta"])
                failed |= not row["pass"]
                self.failures += not row["pass"]
            elif c == "lemmas":
                if not row["holds"]:
                    failed = True
                    self.failures += 1
                    key = f"fail_{row['lemma']}"
                    x[key] = x.get(key, 0) + 1
            elif c == "conjecture2":
                x["equality"] = x.get("equality", 0) + row["equality"]
                x["findings"] = x.get("findings", 0) + row["finding"]
            elif c == "chain":
                if row["increase"]:
                    failed = True
                    self.failures += 1
        if c == "conjecture2" and not rows:
            x["below_radius"] = x.get("below_radius", 0) + 1
        return failed

    def line(self) -> str:
        parts = [f"graphs={self.graphs}", f"records={self.records}"]
        if self.command in ("verify", "lemmas", "chain"):
            parts.append(f"failures={self.failures}")
        if self.command == "conjecture2":
            parts.append(f"checked={self.records}")
            parts.append(f"below_radius={self.extra.get('below_radius', 0)}")
            parts.append(f"equality={self.extra.get('equality', 0)}")
            parts.append(f"findings={self.extra.get('findings', 0)}")
        else:
            parts.extend(f"{k}={v}" for k, v in sorted(self.extra.items()))
        parts.append(f"skipped={self.skipped}")
        return f"{self.command}: " + " ".join(parts)


# -- driver -------------------------------------------------------------------------


def _workers(requested: int | None) -> int:
    if requested is None:
        env = os.environ.get(PARALLELISM_ENV, "1")
        try:
            requested = int(env)
        except ValueError:
            raise UsageError(f"{PARALLELISM_ENV} must be an integer, got {env!r}") from None
    if requested < 0:
        raise UsageError("parallelism must be >= 0")
    return requested or (os.cpu_count() or 1)


def _results(tasks: Iterable[tuple[str, str, dict]], workers: int):
    if workers == 1:
        for task in tasks:
            yield _run_one(task)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        try:
            yield from pool.map(_run_one, tasks, chunksize=16)
        finally:
            pool.shutdown(wait=True, cancel_futures=True)


def _run_checks(args: argparse.Namespace, out, err) -> int:
    command = args.command
    opts = {
        "strategy": getattr(args, "strategy", "first-edge"),
        "strategy_seed": getattr(args, "strategy_seed", 0),
    }
    diagnostics: list[str] = []
    labels: list[str] = []

    def tasks() -> Iterator[tuple[str, str, dict]]:
        for label, g6 in iter_source(args, diagnostics):
            labels.append(label)
            yield command, g6, opts

    writer = Writer(args.output, FIELDS[command], out)
    tally = Tally(command)
    status = 0
    emitted = 0
    try:
        for idx, (rows, error) in zip(_count(), _results(tasks(), _workers(args.parallelism))):
            while emitted < len(diagnostics):
                err.write(diagnostics[emitted] + "\n")
                emitted += 1
            if error is not None:
                tally.skipped += 1
                err.write(f"{labels[idx]}: skipped: {error}\n")
                if command != "summary":
                    status = 2
                continue
            failed = tally.add(rows)
            for row in rows:
                writer.write(row)
                if command == "conjecture2" and row["finding"]:
                    err.write(f"FINDING: open bound contradicted by {row['graph']} "
                              f"(n={row['n']} wse={row['wse']} bound={row['bound']} "
                              f"is_path={_cell(row['is_path'])})\n")
                elif command == "chain" and row["increase"]:
                    err.write(f"VIOLATION: W - eps increased at step {row['step']} "
                              f"of the chain from {row['source']}\n")
            if failed:
                status = max(status, 1)
                if args.fail_fast:
                    break
    except (GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        status = 2
    for msg in diagnostics[emitted:]:
        err.write(msg + "\n")
    err.write(tally.line() + "\n")
    return status


def _run_gen(args: argparse.Namespace, out, err) -> int:
    diagnostics: list[str] = []
    try:
        for _, g6 in iter_source(args, diagnostics):
            out.write(g6 + "\n")
    except (GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    for msg in diagnostics:
        err.write(msg + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wiener-ecc",
        description="Check W - eps under edge contraction on enumerated, file or random graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify": "check W(G.e) - eps(G.e) <= W(G) - eps(G) for every edge",
        "lemmas": "check the distance/eccentricity lemmas and per-vertex inequalities",
        "conjecture2": "probe the open path bound on graphs of radius >= 4",
        "chain": "contract down to K2 and check W - eps never increases",
        "gen": "write the source graphs as graph6 lines",
        "summary": "print W, eps, W - eps, radius and diameter per graph",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--enumerate", type=int, metavar="N", help="all connected graphs on N vertices, up to isomorphism")
        src.add_argument("--file", metavar="PATH", help="graph6 file, one graph per line ('-' for stdin)")
        src.add_argument("--gnp", type=int, metavar="N", help="connected G(N, p) samples")
        src.add_argument("--tree", type=int, metavar="N", help="uniform random labeled trees on N vertices")
        p.add_argument("--min-radius", type=int, default=0, metavar="R",
                       help="with --enumerate: only graphs of radius >= R (N <= 10)")
        p.add_argument("--p", default="1/2", metavar="NUM/DEN", help="edge probability for --gnp (default 1/2)")
        p.add_argument("--seed", type=_seed, default=0, help="decimal 64-bit seed for --gnp/--tree (default 0)")
        p.add_argument("--count", type=int, default=1, help="number of random samples; sample i uses seed+i")
        p.add_argument("--skip-bad-lines", action="store_true", help="skip malformed graph6 lines instead of aborting")
        if name == "gen":
            continue
        p.add_argument("--output", choices=("jsonl", "csv", "human"), default="jsonl")
        p.add_argument("--fail-fast", action="store_true", help="stop at the first failing record")
        p.add_argument("--parallelism", type=int, default=None, metavar="K",
                       help=f"worker processes, 0 = all cores (default ${PARALLELISM_ENV} or 1)")
        if name == "chain":
            p.add_argument("--strategy", choices=STRATEGIES, default="first-edge")
            p.add_argument("--strategy-seed", type=_seed, default=0, help="seed for --strategy random")
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.count < 1:
            raise UsageError("--count must be >= 1")
        if args.min_radius and args.enumerate is None:
            raise UsageError("--min-radius only applies to --enumerate")
        if args.gnp is not None:
            _parse_p(args.p)
        if args.command == "gen":
            return _run_gen(args, out, err)
        _workers(args.parallelism)
        return _run_checks(args, out, err)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())
