"""Command line front end.

    maxclique solve GRAPH          maximum clique of a static graph
    maxclique tscc CONTACTS        largest temporal strong component
    maxclique kcore GRAPH          core numbers / degeneracy only
    maxclique heuristic GRAPH      heuristic clique only
    maxclique profile RECORDS.csv  performance-profile curves as CSV

Reports go to stdout as JSON (``--human`` for key: value lines).  Exit
codes: 0 success, 1 verification failed, 2 unreadable input, 3 a resource
guard tripped.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import core_numbers
from .heuristic import heuristic_clique
from .ingest import ParseError, preprocess, read_graph, read_temporal
from .profile import ProblemSetMismatch, performance_profile, profile_csv, read_records
from .search import SearchConfig, solve
from .temporal import ReachabilityTooLarge, max_tscc, verify_component

SCHEMA = "maxclique.report/1"
EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def label_key(x):
    s = str(x)
    try:
        return (0, int(s), s)
    except ValueError:
        return (1, 0, s)


def _labels(graph_or_net, members):
    return sorted((graph_or_net.label_of(v) for v in members), key=label_key)


def _config(args) -> SearchConfig:
    return SearchConfig(
        use_neighborhood_cores=not args.no_neighborhood_cores,
        rebuild_interval=args.rebuild_interval,
        dense_threshold=args.dense_threshold,
        workers=args.threads,
        jitter_seed=args.seed,
    )


def _load_static(args, report):
    t0 = time.perf_counter()
    raw = read_graph(args.input, args.format, args.directed)
    t1 = time.perf_counter()
    g = preprocess(raw)
    report["timings"]["parse"] = t1 - t0
    report["timings"]["preprocess"] = time.perf_counter() - t1
    report["n"], report["m"] = g.n, g.m
    return g


def _base(command, args):
    return {"schema": SCHEMA, "version": __version__, "command": command,
            "input": str(args.input), "timings": {}}


def cmd_maxclique(args) -> dict:
    report = _base("solve", args)
    g = _load_static(args, report)
    cfg = _config(args)
    res = solve(g, cfg)
    report.update(
        max_core=res.max_core,
        colors=res.colors,
        upper_bound=res.upper_bound,
        heuristic_size=res.heuristic.size,
        clique_size=res.size,
        clique=_labels(g, res.clique.members),
        workers=cfg.workers,
        config=_config_echo(cfg),
        stats=res.stats.as_dict(),
    )
    report["timings"].update(res.timings)
    return report


def cmd_kcore(args) -> dict:
    report = _base("kcore", args)
    g = _load_static(args, report)
    t0 = time.perf_counter()
    dec = core_numbers(g)
    report["timings"]["cores"] = time.perf_counter() - t0
    report["max_core"] = dec.max_core
    report["upper_bound"] = dec.max_core + 1 if g.n else 0
    if args.per_vertex:
        report["cores"] = {str(g.label_of(v)): dec.core[v] for v in range(g.n)}
    return report


def cmd_heuristic(args) -> dict:
    report = _base("heuristic", args)
    g = _load_static(args, report)
    t0 = time.perf_counter()
    dec = core_numbers(g)
    H = heuristic_clique(g, dec)
    report["timings"]["heuristic"] = time.perf_counter() - t0
    report.update(max_core=dec.max_core, heuristic_size=H.size, clique=_labels(g, H.members))
    return report


def cmd_tscc(args) -> dict:
    report = _base("tscc", args)
    t0 = time.perf_counter()
    net = read_temporal(args.input)
    report["timings"]["parse"] = time.perf_counter() - t0
    cfg = _config(args)
    t0 = time.perf_counter()
    comp = max_tscc(net, cfg, allow_equal=args.allow_equal, max_edges=args.max_reach_edges)
    report["timings"]["tscc"] = time.perf_counter() - t0
    report.update(
        temporal_edges=len(net.edges),
        reach_vertices=comp.reach_vertices,
        reach_edges=comp.reach_edges,
        reciprocal_edges=comp.reciprocal_edges,
        component_size=comp.size,
        component=_labels(net, comp.members),
        workers=cfg.workers,
        config=_config_echo(cfg),
        verified=None,
    )
    if comp.search is not None:
        r = comp.search
        report.update(max_core=r.max_core, colors=r.colors, upper_bound=r.upper_bound,
                      heuristic_size=r.heuristic.size, clique_size=r.size,
                      stats=r.stats.as_dict())
    if args.verify:
        report["verified"] = verify_component(net, comp.members, args.allow_equal)
    return report


def cmd_profile(args) -> str:
    curves = performance_profile(read_records(Path(args.input).read_text()))
    return profile_csv(curves)


def _config_echo(cfg: SearchConfig) -> dict:
    return {
        "use_neighborhood_cores": cfg.use_neighborhood_cores,
        "rebuild_interval": None if math.isinf(cfg.rebuild_interval) else cfg.rebuild_interval,
        "dense_threshold": cfg.dense_threshold,
        "seed": cfg.jitter_seed,
    }


def _print_human(report: dict, out):
    for k, v in report.items():
        if isinstance(v, dict):
            for k2, v2 in v.items():
                print(f"{k}.{k2}: {v2}", file=out)
        elif isinstance(v, list):
            print(f"{k}: {' '.join(map(str, v))}", file=out)
        else:
            print(f"{k}: {v}", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxclique", description="Exact maximum cliques in large sparse graphs.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, static=True):
        sp.add_argument("input")
        if static:
            sp.add_argument("--format", choices=["auto", "edges", "dimacs"], default="auto")
            sp.add_argument("--directed", action="store_true",
                            help="edge list is directed: keep the largest strong component, then reciprocated pairs")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="human", action="store_false", default=False)
        g.add_argument("--human", dest="human", action="store_true")

    def solver_flags(sp):
        sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        sp.add_argument("--no-neighborhood-cores", action="store_true",
                        help="skip neighborhood core bounds; color by largest degree first")
        sp.add_argument("--rebuild-interval", type=float, default=4.0, metavar="SECONDS")
        sp.add_argument("--dense-threshold", type=int, default=1024, metavar="N")
        sp.add_argument("--seed", type=int, default=None,
                        help="perturb worker scheduling with this seed (audit runs)")

    sp = sub.add_parser("solve", help="maximum clique")
    common(sp)
    solver_flags(sp)
    sp.set_defaults(func=cmd_maxclique)

    sp = sub.add_parser("tscc", help="largest temporal strong component")
    common(sp, static=False)
    solver_flags(sp)
    sp.add_argument("--verify", action="store_true", help="re-check the component with a forward path search")
    sp.add_argument("--allow-equal", action="store_true",
                    help="let consecutive contacts share a timestamp")
    sp.add_argument("--max-reach-edges", type=int, default=50_000_000)
    sp.set_defaults(func=cmd_tscc)

    sp = sub.add_parser("kcore", help="core numbers")
    common(sp)
    sp.add_argument("--per-vertex", action="store_true")
    sp.set_defaults(func=cmd_kcore)

    sp = sub.add_parser("heuristic", help="heuristic clique only")
    common(sp)
    sp.set_defaults(func=cmd_heuristic)

    sp = sub.add_parser("profile", help="performance profile from problem,config,seconds CSV")
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_profile)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out = args.func(args)
    except (ParseError, ProblemSetMismatch, FileNotFoundError, UnicodeDecodeError) as e:
        print(f"maxclique: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ReachabilityTooLarge, MemoryError) as e:
        print(f"maxclique: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as e:
        print(f"maxclique: {e}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, str):
        if getattr(args, "output", None):
            Path(args.output).write_text(out)
        else:
            sys.stdout.write(out)
        return EXIT_OK
    if args.human:
        _print_human(out, sys.stdout)
    else:
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return EXIT_VERIFY if out.get("verified") is False else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
