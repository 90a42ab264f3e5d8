"""Command-line entry point: ``longcycle validate|find|audit|oracle|gen``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from . import gen as gen_mod
from .cycle import Cycle, build_context
from .discharge import run_discharging
from .embed import EmbeddedGraph, essential_4_connectivity, is_3_connected, read_graphs, to_rotation_text, write_planar_code
from .errors import BudgetExceeded, InputError, LongCycleError, NotThreeConnected, TooSmall
from .extend import bound, long_cycle
from .oracle import DEFAULT_BUDGET, circumference_bruteforce
from .render import svg_drawing

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("longcycle")


@dataclass
class RunSummary:
    name: str
    n: int
    length: int
    bound: int
    bound16: int | None
    kind: str
    steps: int
    wall_time: float

    @property
    def ok(self) -> bool:
        return self.kind != "error" and self.length >= self.bound and (
            self.bound16 is None or self.length >= self.bound16
        )

    def line(self) -> str:
        extra = f" bound16={self.bound16}" if self.bound16 is not None else ""
        return (
            f"{self.name}: n={self.n} length={self.length} bound={self.bound}{extra} "
            f"kind={self.kind} steps={self.steps} time={self.wall_time:.3f}s"
        )


def _label(path: str, i: int, total: int) -> str:
    return f"{path}#{i}" if total > 1 else path


def _load(path: str) -> list[EmbeddedGraph]:
    return read_graphs(path)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    graphs = _load(args.file)
    status = EXIT_OK
    results = []
    for i, g in enumerate(graphs):
        entry = {"name": _label(args.file, i, len(graphs)), "n": g.n, "m": g.m, "faces": len(g.faces)}
        try:
            entry["3-connected"] = is_3_connected(g)
        except TooSmall:
            entry["3-connected"] = False
        if entry["3-connected"]:
            witness = essential_4_connectivity(g)
            entry["essentially-4-connected"] = witness is None
            if witness is not None:
                entry["witness"] = witness.to_json()
        else:
            entry["essentially-4-connected"] = False
        if not entry["essentially-4-connected"]:
            status = EXIT_DOMAIN
        results.append(entry)
    if args.json:
        print(json.dumps(results if len(results) > 1 else results[0], indent=2))
    else:
        for e in results:
            verdict = "ok" if e["essentially-4-connected"] else "FAIL"
            line = f"{e['name']}: n={e['n']} m={e['m']} faces={e['faces']} 3-connected={e['3-connected']} {verdict}"
            if "witness" in e:
                w = e["witness"]
                line += f" witness={w['vertices']} components={w['components']}"
            print(line)
    return status


def _find_one(name: str, g: EmbeddedGraph, audit: bool):
    audits = []
    hook = (lambda ctx, rep: audits.append({"context": ctx.to_json(), "report": rep.to_json()})) if audit else None
    t0 = time.perf_counter()
    c, cert = long_cycle(g, on_audit=hook)
    dt = time.perf_counter() - t0
    summary = RunSummary(
        name, g.n, len(c), bound(g.n), -(-5 * (g.n + 4) // 8) if g.n >= 16 else None,
        cert.kind, len(cert.steps), dt,
    )
    return summary, cert, audits


def _find_worker(item):
    name, path, idx, audit = item
    g = read_graphs(path)[idx]
    try:
        summary, cert, audits = _find_one(name, g, audit)
        return summary, cert.to_json(), audits, None
    except LongCycleError as exc:
        return RunSummary(name, g.n, 0, bound(g.n), None, "error", 0, 0.0), None, [], f"{type(exc).__name__}: {exc}"


def cmd_find(args: argparse.Namespace) -> int:
    path = Path(args.file)
    if args.all:
        if not path.is_dir():
            raise InputError(f"--all expects a directory, got {path}")
        files = sorted(p for p in path.iterdir() if p.is_file())
    else:
        files = [path]
    items = []
    for p in files:
        graphs = read_graphs(p)
        for i in range(len(graphs)):
            items.append((_label(str(p), i, len(graphs)), str(p), i, args.audit))

    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_find_worker, items))
    else:
        results = [_find_worker(it) for it in items]

    status = EXIT_OK
    out = []
    for (name, p, i, _), (summary, cert, audits, err) in zip(items, results):
        if err is not None:
            print(f"{name}: error {err}", file=sys.stderr)
            status = EXIT_DOMAIN
        elif not summary.ok:
            status = EXIT_DOMAIN
        entry = {"summary": asdict(summary), "certificate": cert}
        if args.audit:
            entry["audits"] = audits
        out.append(entry)
        if args.svg and cert is not None and len(items) == 1:
            Path(args.svg).write_text(svg_drawing(read_graphs(p)[i], cert["cycle"]))
        if not args.json:
            print(summary.line())
            if cert is not None:
                print(Cycle(tuple(cert["cycle"])).to_text())
    if args.json:
        print(json.dumps(out if len(out) > 1 else out[0], indent=2))
    elif args.audit:
        for e in out:
            print(json.dumps(e["audits"]))
    return status


def cmd_audit(args: argparse.Namespace) -> int:
    g = _load(args.file)[args.index]
    if args.cycle:
        c = Cycle.from_text(args.cycle if ":" in args.cycle else "cycle: " + args.cycle)
    else:
        c, _ = long_cycle(g)
    ctx = build_context(g, c)
    entry = {"context": ctx.to_json()}
    status = EXIT_OK
    if ctx.both_sides_nonempty:
        report = run_discharging(ctx)
        entry["report"] = report.to_json()
        if report.violations:
            status = EXIT_DOMAIN
    else:
        entry["report"] = None
    print(json.dumps(entry, indent=2))
    return status


def _default_budget() -> int:
    raw = os.environ.get("LONGCYCLE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"LONGCYCLE_BUDGET must be an integer, got {raw!r}") from None


def cmd_oracle(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    graphs = _load(args.file)
    out = []
    for g in graphs:
        res = circumference_bruteforce(g, budget)
        out.append({"circumference": res.circumference, "witness": list(res.witness), "explored": res.explored})
    print(json.dumps(out if len(out) > 1 else out[0]))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.catalog:
        text = to_rotation_text(gen_mod.catalog(args.catalog), comment=f"catalog {args.catalog}")
        _emit_text(text, args.output)
    elif args.kleetope:
        base = gen_mod.catalog(args.kleetope) if not Path(args.kleetope).exists() else read_graphs(args.kleetope)[0]
        text = to_rotation_text(gen_mod.kleetope(base), comment=f"kleetope of {args.kleetope}")
        _emit_text(text, args.output)
    elif args.ingest:
        res = gen_mod.ingest_filtered(args.ingest, args.filter, sample=args.sample, seed=args.seed)
        data = write_planar_code(res.graphs)
        if args.output:
            Path(args.output).write_bytes(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        print(f"{args.ingest}: read {res.read}, kept {res.kept} ({res.require})", file=sys.stderr)
    else:
        raise InputError("gen needs one of --catalog, --kleetope, --ingest")
    return EXIT_OK


def _emit_text(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="longcycle", description="Long cycles in essentially 4-connected plane graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check embedding and connectivity")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_validate)

    f = sub.add_parser("find", help="find a long cycle")
    f.add_argument("file", help="graph file, or a directory with --all")
    f.add_argument("--all", action="store_true", help="process every file in the directory")
    f.add_argument("--audit", action="store_true", help="include every discharging report")
    f.add_argument("--json", action="store_true")
    f.add_argument("--svg", metavar="OUT")
    f.add_argument("--jobs", type=int, default=1)
    f.set_defaults(func=cmd_find)

    a = sub.add_parser("audit", help="dump the face context and discharging report of a cycle")
    a.add_argument("file")
    a.add_argument("--cycle", help="'cycle: v0 v1 ...' (default: the cycle found by find)")
    a.add_argument("--index", type=int, default=0)
    a.set_defaults(func=cmd_audit)

    o = sub.add_parser("oracle", help="exact circumference by exhaustive search")
    o.add_argument("file")
    o.add_argument("--budget", type=int)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="write catalog graphs, kleetopes or filtered planar_code")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="NAME")
    src.add_argument("--kleetope", metavar="BASE", help="catalog name or graph file")
    src.add_argument("--ingest", metavar="FILE")
    g.add_argument("--filter", default="essentially-4-connected")
    g.add_argument("--sample", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc} (explored {exc.explored})", file=sys.stderr)
        return EXIT_BUDGET
    except (NotThreeConnected, LongCycleError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
