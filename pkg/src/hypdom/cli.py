"""Command-line entry point: ``hypdom {compute,oracle,bcc,gen,stats}``.

Exit codes: 0 ok, 2 unreadable or unusable input, 3 bad parameter,
4 memory budget refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass

from . import __version__
from .domination import ParameterError, derive_sequence
from .eccentricity import compute_all_eccentricities
from .engine import (EngineConfig, MemoryBudgetError, brute_force_hyperbolicity,
                     compute_hyperbolicity)
from .engine.quad import format_doubled
from .generators import generate
from .graph_core import (Graph, GraphError, ParseError, graph_summary,
                         largest_biconnected_component, load_edge_list, write_edge_list)

log = logging.getLogger("hypdom")

EXIT_OK, EXIT_INPUT, EXIT_PARAM, EXIT_MEMORY = 0, 2, 3, 4
MODES = ("exact", "approx-pass1", "oracle")
SCHEMA = 1
LOG_LEVELS = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}


@dataclass
class RunConfig:
    input: str = "-"
    format: str = "edgelist"
    max_dom_dist: int = 2
    ratio: float = 2.0
    cache_size: int = 10_000
    side_limit: int = 50_000
    memory_budget: int = 2_000_000_000
    mode: str = "exact"
    bcc: bool = False
    stats_json: str | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.format not in ("edgelist", "dimacs"):
            raise ParameterError(f"format must be edgelist or dimacs, got {self.format!r}")
        if self.mode not in MODES:
            raise ParameterError(f"mode must be one of {', '.join(MODES)}")
        derive_sequence(self.max_dom_dist, self.ratio)
        self.engine_config().validate()

    def engine_config(self) -> EngineConfig:
        # cache size 0 switches the matrix cache off (direct label queries)
        enabled = self.cache_size != 0
        return EngineConfig(cache_capacity=self.cache_size if enabled else 10_000,
                            side_limit=self.side_limit, cache_enabled=enabled,
                            memory_budget=self.memory_budget,
                            pass1_only=self.mode == "approx-pass1")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        if path == "-":
            return load_edge_list(sys.stdin, fmt)
        with open(path) as fh:
            return load_edge_list(fh, fmt)
    except OSError as e:
        raise _Fail(EXIT_INPUT, f"cannot read {path}: {e.strerror}") from None


def _load_input(cfg: RunConfig) -> Graph:
    g = _read_graph(cfg.input, cfg.format)
    if cfg.bcc:
        g, _ = largest_biconnected_component(g)
    return g


def _labels(g: Graph, quad) -> list[int]:
    return [g.labels[v] for v in quad]


def _write_json(path: str, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def cmd_compute(cfg: RunConfig) -> int:
    cfg.validate()
    g = _load_input(cfg)
    k = cfg.max_dom_dist
    payload = {"schema": SCHEMA, "version": __version__, "config": asdict(cfg),
               "graph": graph_summary(g)}
    if cfg.mode == "oracle":
        res = brute_force_hyperbolicity(g)
        witness = _labels(g, res.witness)
        print(f"hyperbolicity: {format_doubled(res.twice)}")
        print("witness: " + " ".join(map(str, witness)))
        payload.update({"delta": format_doubled(res.twice), "witness": witness, "exact": True})
    else:
        res = compute_hyperbolicity(g, k, cfg.ratio, cfg.engine_config())
        witness = _labels(g, res.witness)
        low = format_doubled(res.twice)
        if res.exact:
            print(f"hyperbolicity: {low}")
        else:
            high = format_doubled(res.twice + 8 * k)
            print(f"hyperbolicity: >= {low}")
            print(f"certified interval: [{low}, {high}]")
        print("witness: " + " ".join(map(str, witness)))
        payload.update({"delta": low, "delta_upper": format_doubled(res.upper_twice),
                        "witness": witness, "exact": res.exact})
        payload.update(res.stats.as_dict())
    if cfg.stats_json:
        _write_json(cfg.stats_json, payload)
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    cfg.mode = "oracle"
    return cmd_compute(cfg)


def cmd_bcc(args) -> int:
    g = _read_graph(args.input, args.format)
    sub, _ = largest_biconnected_component(g)
    _emit_graph(sub, args.output, original_ids=True)
    log.info("largest block: n=%d m=%d", sub.n, sub.m)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {"n": args.n, "rows": args.rows, "cols": args.cols, "side": args.side,
              "fraction": args.fraction, "p": args.p, "seed": args.seed}
    try:
        g = generate(args.kind, **params)
    except TypeError:
        raise _Fail(EXIT_PARAM, f"missing size parameter for {args.kind}") from None
    _emit_graph(g, args.output)
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.bcc:
        g, _ = largest_biconnected_component(g)
    s = graph_summary(g)
    if not g.is_connected():
        raise GraphError("graph must be connected for eccentricity statistics")
    ecc = compute_all_eccentricities(g)
    s.update({"radius": ecc.radius, "diameter": ecc.diameter, "mean_eccentricity": ecc.mean})
    for key in ("n", "m", "min_degree", "mean_degree", "max_degree",
                "radius", "diameter", "mean_eccentricity"):
        v = s[key]
        print(f"{key}: {v:.2f}" if isinstance(v, float) else f"{key}: {v}")
    if args.stats_json:
        _write_json(args.stats_json, {"schema": SCHEMA, "graph": s})
    return EXIT_OK


def _emit_graph(g: Graph, path: str | None, original_ids: bool = False) -> None:
    if path is None or path == "-":
        write_edge_list(g, sys.stdout, original_ids)
        return
    with open(path, "w") as fh:
        write_edge_list(g, fh, original_ids)


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", help="edge list path, '-' for stdin")
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--bcc", action="store_true", help="restrict to the largest biconnected component")


def _engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-dom-dist", "-k", type=int, default=2)
    p.add_argument("--ratio", "-r", type=float, default=2.0)
    p.add_argument("--cache-size", type=int, default=10_000, help="matrices kept; 0 disables the cache")
    p.add_argument("--side-limit", type=int, default=50_000)
    p.add_argument("--memory-budget", type=int, default=2_000_000_000,
                   help="max entries of the top-level distance matrix")
    p.add_argument("--mode", choices=MODES, default="exact")
    p.add_argument("--stats-json", default=None, help="write run statistics here ('-' for stdout)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypdom", description="Exact Gromov hyperbolicity of graphs.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact hyperbolicity (or a pass-1 certificate)")
    _input_flags(p)
    _engine_flags(p)

    p = sub.add_parser("oracle", help="brute force over all quadruples")
    _input_flags(p)
    _engine_flags(p)

    p = sub.add_parser("bcc", help="emit the largest biconnected component")
    p.add_argument("--input", "-i", default="-")
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("gen", help="generate a graph as an edge list")
    p.add_argument("kind", choices=("cycle", "path", "clique", "grid", "grid_perturbed",
                                    "tree", "random_connected"))
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--side", type=int)
    p.add_argument("--fraction", type=float, default=0.1)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("stats", help="size, degree and eccentricity statistics")
    _input_flags(p)
    p.add_argument("--stats-json", default=None)
    return ap


def _setup_logging() -> None:
    level = LOG_LEVELS.get(os.environ.get("HYP_LOG", "quiet").lower(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _run_config(args) -> RunConfig:
    return RunConfig(input=args.input, format=args.format, max_dom_dist=args.max_dom_dist,
                     ratio=args.ratio, cache_size=args.cache_size, side_limit=args.side_limit,
                     memory_budget=args.memory_budget, mode=args.mode, bcc=args.bcc,
                     stats_json=args.stats_json, seed=args.seed)


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(_run_config(args))
        if args.command == "oracle":
            return cmd_oracle(_run_config(args))
        if args.command == "bcc":
            return cmd_bcc(args)
        if args.command == "gen":
            return cmd_gen(args)
        return cmd_stats(args)
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ParameterError as e:
        print(f"parameter error: {e}", file=sys.stderr)
        return EXIT_PARAM
    except MemoryBudgetError as e:
        print(f"memory budget: {e}", file=sys.stderr)
        return EXIT_MEMORY
    except GraphError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"parameter error: {e}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
