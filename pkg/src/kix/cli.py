"""Command-line entry point ``kix``.

Exit codes: 0 success, 1 a check came out false, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from kix import __version__
from kix.coloring import describe_violation, check_multiplicity, find_violation
from kix.errors import ExtensionFailed, KixError, LiftNotGood, NoConfigurationFound
from kix.textio import format_coloring, format_graph, parse_coloring, parse_graph

OK, FALSE, BAD_INPUT = 0, 1, 2


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise KixError(f"cannot read {path}: {exc.strerror}") from exc


def _graph(path: str):
    return parse_graph(_read(path).decode())


def _digest(paths) -> str:
    h = hashlib.sha256()
    for p in paths:
        h.update(_read(p))
        h.update(b"\0")
    return "sha256:" + h.hexdigest()


def _certificate(args, inputs, payload) -> None:
    if not getattr(args, "cert", None):
        return
    record = {"command": args.command, "input_digest": _digest(inputs),
              "payload": payload, "version": __version__, "deterministic": True}
    with open(args.cert, "a") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def _map(func, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(func, items))
    return [func(i) for i in items]


# -- subcommands ------------------------------------------------------------

def cmd_verify(args) -> int:
    g = _graph(args.graph)
    phi = parse_coloring(_read(args.coloring).decode())
    check_multiplicity(g, args.k)
    violation = find_violation(g, phi, args.k, args.t)
    if violation is None and args.total:
        missing = [e for e in g.edge_ids if e not in phi]
        if missing:
            violation = ("uncolored", missing[0])
    if violation is None:
        print(f"good k={args.k} t={args.t}")
        _certificate(args, [args.graph, args.coloring], {"good": True})
        return OK
    msg = (f"edge {violation[1]} is uncolored" if violation[0] == "uncolored"
           else describe_violation(violation))
    print(f"not good: {msg}")
    _certificate(args, [args.graph, args.coloring], {"good": False, "reason": msg})
    return FALSE


def _solve_one(job):
    path, k, t, force = job
    from kix.solver import chromatic_index_k_intersection, search_good_coloring
    g = _graph(path)
    if t is None:
        res = chromatic_index_k_intersection(g, k, force=force)
        return path, res.optimum, res.witness, res.nodes
    witness, nodes = search_good_coloring(g, k, t, force=force)
    return path, (t if witness is not None else None), witness, nodes


def cmd_solve(args) -> int:
    results = _map(_solve_one, [(p, args.k, args.t, args.force) for p in args.graphs], args.jobs)
    code = OK
    for path, optimum, witness, nodes in results:
        if len(results) > 1:
            print(f"# {path}")
        if args.t is None:
            print(f"optimum {optimum}")
            print(f"nodes {nodes}")
        elif witness is None:
            print(f"none k={args.k} t={args.t} nodes={nodes}")
            code = FALSE
        else:
            print(f"found k={args.k} t={args.t}")
        if witness is not None:
            sys.stdout.write(format_coloring(witness))
        _certificate(args, [path], {"k": args.k, "t": args.t, "optimum": optimum,
                                    "witness": None if witness is None else
                                    {str(e): c for e, c in sorted(witness.items())}})
    return code


def _color_one(job):
    path, want_trace = job
    from kix.reduction import color5
    g = _graph(path)
    trace: list = []
    phi = color5(g, trace)
    return path, phi, [s.format() for s in trace] if want_trace else []


def cmd_color5(args) -> int:
    from kix.coloring import is_good
    results = _map(_color_one, [(p, args.trace) for p in args.graphs], args.jobs)
    code = OK
    for path, phi, trace in results:
        if len(results) > 1:
            print(f"# {path}")
        for line in trace:
            print(f"# {line}")
        sys.stdout.write(format_coloring(phi))
        if not is_good(_graph(path), phi, 2, 5):
            print("# output is not good", file=sys.stderr)
            code = FALSE
        _certificate(args, [path], {str(e): c for e, c in sorted(phi.items())})
    return code


def cmd_find_config(args) -> int:
    from kix.reduction import find_configuration
    g = _graph(args.graph)
    c = find_configuration(g)
    print(f"configuration {c.kind} variant={c.variant or '-'} "
          f"vertices={','.join(map(str, c.vertices))} edges={','.join(map(str, c.edges))}")
    _certificate(args, [args.graph], {"kind": c.kind, "variant": c.variant,
                                      "vertices": list(c.vertices), "edges": list(c.edges)})
    return OK


def _budget(args) -> float | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("KIX_BUDGET_SECS")
    if env:
        try:
            return float(env)
        except ValueError:
            raise KixError(f"KIX_BUDGET_SECS is not a number: {env!r}") from None
    return None


def cmd_check_lemma(args) -> int:
    from kix import lab
    from kix.templates import FILTER_NAMES, LEMMA_IDS
    ids = list(LEMMA_IDS) if args.all else (args.id or [])
    if not ids:
        raise KixError("give --id (repeatable) or --all")
    for name in args.no_filter:
        if name not in FILTER_NAMES:
            raise KixError(f"unknown filter {name!r}; known: {', '.join(FILTER_NAMES)}")
    reports = lab.verify_all(ids, args.k, args.t, args.no_filter, _budget(args),
                             args.route, args.jobs)
    if args.format in ("table", "both"):
        print(f"{'lemma':<6} {'part':<22} {'total':>12} {'extendable':>12} {'failing':>8} "
              f"{'seconds':>8}  status")
        for r in reports:
            for p in r.parts:
                status = "certified" if p.certified else ("incomplete" if not p.complete else "FAILED")
                print(f"{r.lemma:<6} {p.part:<22} {p.total:>12} {p.extendable:>12} "
                      f"{p.failing_count:>8} {p.seconds:>8.2f}  {status}")
    if args.format in ("jsonl", "both"):
        for r in reports:
            rec = r.record()
            print(json.dumps(rec, sort_keys=True))
    if args.replay_dir:
        out = Path(args.replay_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in reports:
            tpls = {t.part: t for t in lab.lemma(r.lemma).parts}
            for i, (part, env) in enumerate(r.failing):
                tpl = tpls[part]
                if hasattr(tpl, "interior"):
                    rec = lab.transcript(tpl, env, args.k, args.t)
                else:
                    rec = {"lemma": r.lemma, "part": part, "environment": env.to_json()}
                (out / f"lemma-{r.lemma}-{part}-{i:04d}.json").write_text(
                    json.dumps(rec, sort_keys=True) + "\n")
    for r in reports:
        rec = r.record()
        rec.pop("seconds")
        for p in rec["parts"]:
            p.pop("seconds")
        _certificate(args, [], rec)
    return OK if all(r.certified for r in reports) else FALSE


def cmd_charges(args) -> int:
    from kix.discharging import audit, format_fraction
    g = _graph(args.graph)
    rep = audit(g)
    led = rep.ledger
    print(f"initial-total {format_fraction(led.total_initial())}")
    print(f"final-total {format_fraction(led.total_final())}")
    if args.verbose:
        for (kind, i), c in sorted(led.final.items()):
            print(f"charge {kind}{i} {format_fraction(led.initial[(kind, i)])} -> {format_fraction(c)}")
    for (kind, i), c, why in rep.negative:
        print(f"negative {kind}{i} {format_fraction(c)} {why}")
    if rep.configuration is not None:
        c = rep.configuration
        print(f"configuration {c.kind} vertices={','.join(map(str, c.vertices))}")
    _certificate(args, [args.graph], {
        "initial_total": format_fraction(led.total_initial()),
        "final_total": format_fraction(led.total_final()),
        "negative": [[f"{k}{i}", format_fraction(c), w] for (k, i), c, w in rep.negative],
        "configuration": None if rep.configuration is None else rep.configuration.kind})
    return OK


def cmd_gen_corpus(args) -> int:
    from kix import corpus
    if args.mode == "exhaustive":
        graphs = corpus.exhaustive_corpus(args.max_vertices)
    else:
        graphs = corpus.random_corpus(args.count, args.seed, args.max_vertices)
    paths = corpus.write_corpus(graphs, args.out, args.prefix or args.mode)
    print(f"wrote {len(paths)} graphs to {args.out}")
    _certificate(args, [str(p) for p in paths], {"mode": args.mode, "count": len(paths)})
    return OK


def cmd_show(args) -> int:
    sys.stdout.write(format_graph(_graph(args.graph)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kix", description="k-intersection edge-coloring toolkit")
    p.add_argument("--version", action="version", version=f"kix {__version__}")
    p.add_argument("--cert", metavar="PATH", help="append a certificate record (JSON line)")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cert", metavar="PATH", default=argparse.SUPPRESS,
                        help="append a certificate record (JSON line)")

    s = sub.add_parser("verify", parents=[common], help="check a coloring is good")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--t", type=int, default=5)
    s.add_argument("--total", action="store_true", help="also require every edge colored")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", parents=[common], help="exact optimum palette or a fixed-palette search")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--t", type=int, default=None, help="only decide this palette size")
    s.add_argument("--force", action="store_true", help="lift the solver's edge limit")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("graphs", nargs="+")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("color5", parents=[common], help="good coloring with 5 colors by reductions")
    s.add_argument("--no-trace", dest="trace", action="store_false",
                   help="omit the reduction steps (printed as comment lines)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("graphs", nargs="+")
    s.set_defaults(func=cmd_color5)

    s = sub.add_parser("find-config", parents=[common], help="report the configuration the reducer would use")
    s.add_argument("graph")
    s.set_defaults(func=cmd_find_config)

    s = sub.add_parser("check-lemma", parents=[common], help="certify extension templates")
    s.add_argument("--id", action="append", help="lemma id, repeatable")
    s.add_argument("--all", action="store_true")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--t", type=int, default=5)
    s.add_argument("--budget", type=float, default=None, help="seconds (default $KIX_BUDGET_SECS)")
    s.add_argument("--no-filter", action="append", default=[], metavar="NAME")
    s.add_argument("--route", choices=("fast", "direct"), default="fast")
    s.add_argument("--format", choices=("table", "jsonl", "both"), default="both")
    s.add_argument("--replay-dir", help="write one transcript per failing environment")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_check_lemma)

    s = sub.add_parser("charges", parents=[common], help="discharging ledger and negative elements")
    s.add_argument("--verbose", action="store_true")
    s.add_argument("graph")
    s.set_defaults(func=cmd_charges)

    s = sub.add_parser("gen-corpus", parents=[common], help="write test graphs")
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--max-vertices", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--prefix")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen_corpus)

    s = sub.add_parser("show", parents=[common], help="parse and reprint a graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_show)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExtensionFailed, LiftNotGood, NoConfigurationFound) as exc:
        print(f"kix: check failed: {exc}", file=sys.stderr)
        return FALSE
    except KixError as exc:
        print(f"kix: error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
