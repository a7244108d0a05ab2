"""Command-line experiment runner.

Subcommands: `run` (restart-averaged optimization -> JSON report), `sweep`
(depth-1 beta curve -> CSV plus summary JSON), `oracle` (brute-force
optimum -> JSON on stdout), and `reproduce-paper` (the full benchmark grid
into a directory). Outputs are byte-identical for identical flags.

Exit codes: 0 success, 2 usage, 3 infeasible initial state, 4 instance too
large for exhaustive scanning.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .graphs import Graph, NAMED_GRAPHS, build_named_graph, load_edge_list
from .operators import maxcut_cost, maxcut_mixer, mis_cost, mis_mixer
from .optimize import (
    InfeasibleInitialState,
    NelderMeadConfig,
    VqeRunConfig,
    resolve_initial_state,
    sweep_p1,
    vqe_optimize,
)
from .oracle import brute_force_optimum
from .report import SweepReport
from .simulator import build_mixer_engine

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_TOO_LARGE = 4


def resolve_graph(spec: str) -> tuple[Graph, str]:
    """Named instance, or @path to an edge-list file ("n m" header)."""
    if spec.startswith("@"):
        return load_edge_list(spec[1:]), spec
    return build_named_graph(spec), spec


def _problem_operators(problem: str, g: Graph):
    if problem == "maxcut":
        return maxcut_cost(g), maxcut_mixer(g)
    return mis_cost(g), mis_mixer(g)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--problem", choices=("maxcut", "mis"), required=True)
    parser.add_argument(
        "--graph",
        required=True,
        help=f"one of {', '.join(NAMED_GRAPHS)}, or @FILE for an edge list",
    )
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaoasim",
        description="Statevector QAOA / alternating-operator-ansatz experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="restart-averaged optimization -> JSON report")
    _add_common(p_run)
    p_run.add_argument("--p", type=int, required=True, help="circuit depth")
    p_run.add_argument("--restarts", type=int, default=50)
    p_run.add_argument(
        "--init",
        default=None,
        help="'plus' or a bitstring (default: plus for maxcut, all-zeros for mis)",
    )
    p_run.add_argument("--max-evals", type=int, default=2000,
                       help="Nelder-Mead evaluation budget per restart")
    p_run.add_argument("--out", type=Path, required=True, help="report path (JSON)")

    p_sweep = sub.add_parser("sweep", help="depth-1 beta sweep -> CSV + summary JSON")
    _add_common(p_sweep)
    p_sweep.add_argument(
        "--init", default=None,
        help="basis bitstring initial state (default all-zeros)",
    )
    p_sweep.add_argument("--beta-grid", type=int, default=200,
                         help="number of beta points on [0, pi] (default 200)")
    p_sweep.add_argument("--out", type=Path, required=True, help="curve path (CSV)")

    p_oracle = sub.add_parser("oracle", help="brute-force optimum -> JSON on stdout")
    _add_common(p_oracle)

    p_repro = sub.add_parser(
        "reproduce-paper",
        help="run the full graph x problem x depth grid into a directory",
    )
    p_repro.add_argument("--seed", type=int, default=0)
    p_repro.add_argument("--restarts", type=int, default=50)
    p_repro.add_argument("--p-list", default="1,6,15",
                         help="comma-separated depths (default 1,6,15)")
    p_repro.add_argument("--max-evals", type=int, default=2000)
    p_repro.add_argument("--beta-grid", type=int, default=200)
    p_repro.add_argument("--out-dir", type=Path, required=True)

    return parser


def _summary_path(csv_path: Path) -> Path:
    if csv_path.suffix and csv_path.suffix != ".json":
        return csv_path.with_suffix(".json")
    return csv_path.parent / (csv_path.name + ".summary.json")


def cmd_run(args) -> int:
    graph, label = resolve_graph(args.graph)
    config = VqeRunConfig(
        p=args.p,
        restarts=args.restarts,
        seed=args.seed,
        initial_state=args.init,
        nelder_mead=NelderMeadConfig(max_evaluations=args.max_evals),
    )
    report = vqe_optimize(args.problem, graph, config, graph_label=label)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    report.write(args.out)
    print(
        f"wrote {args.out} (best F_p = {report.best_expectation:.6f}, "
        f"ratio = {report.approximation_ratio:.4f})"
    )
    return EXIT_OK


def cmd_sweep(args) -> int:
    graph, _ = resolve_graph(args.graph)
    if args.beta_grid < 2:
        raise UsageError(f"--beta-grid must be at least 2, got {args.beta_grid}")
    init = args.init if args.init is not None else "0" * graph.num_nodes
    if args.problem == "mis":
        resolve_initial_state("mis", graph, init)
    cost, mixer = _problem_operators(args.problem, graph)
    engine = build_mixer_engine(mixer)
    c_max = brute_force_optimum(args.problem, graph).optimal_value
    grid = np.linspace(0.0, math.pi, args.beta_grid)
    curve = sweep_p1(cost.diagonal_values(), engine, init, grid, c_max)
    ratios = tuple(r for _, r in curve)
    best = max(range(len(curve)), key=lambda k: ratios[k])
    sweep = SweepReport(
        initial_state=init,
        beta_grid=tuple(b for b, _ in curve),
        ratios=ratios,
        max_value=ratios[best],
        argmax_beta=curve[best][0],
    )
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(sweep.to_csv())
    summary = _summary_path(args.out)
    summary.write_text(sweep.to_json())
    print(f"wrote {args.out} and {summary} (max ratio = {sweep.max_value:.4f})")
    return EXIT_OK


def cmd_oracle(args) -> int:
    graph, _ = resolve_graph(args.graph)
    report = brute_force_optimum(args.problem, graph)
    print(
        json.dumps(
            {
                "problem": report.problem,
                "optimal_value": report.optimal_value,
                "optimizers": list(report.optimizers),
            },
            indent=2,
        )
    )
    return EXIT_OK


def cmd_reproduce_paper(args) -> int:
    depths = [int(tok) for tok in args.p_list.split(",") if tok.strip()]
    if not depths:
        raise UsageError("--p-list must name at least one depth")
    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    nm = NelderMeadConfig(max_evaluations=args.max_evals)
    for name in NAMED_GRAPHS:
        graph = build_named_graph(name)
        for problem in ("maxcut", "mis"):
            for p in depths:
                config = VqeRunConfig(
                    p=p, restarts=args.restarts, seed=args.seed, nelder_mead=nm
                )
                report = vqe_optimize(problem, graph, config, graph_label=name)
                path = out / f"run_{problem}_{name}_p{p}.json"
                path.write_text(report.to_json())
                print(f"wrote {path}")

    # depth-1 approximation-ratio curves for the ring instance
    ring = build_named_graph("square-ring")
    cost, mixer = _problem_operators("mis", ring)
    engine = build_mixer_engine(mixer)
    c_max = brute_force_optimum("mis", ring).optimal_value
    grid = np.linspace(0.0, math.pi, args.beta_grid)
    diag = cost.diagonal_values()
    for init in ("0101", "1010", "0000", "0001"):
        curve = sweep_p1(diag, engine, init, grid, c_max)
        ratios = tuple(r for _, r in curve)
        best = max(range(len(curve)), key=lambda k: ratios[k])
        sweep = SweepReport(
            initial_state=init,
            beta_grid=tuple(b for b, _ in curve),
            ratios=ratios,
            max_value=ratios[best],
            argmax_beta=curve[best][0],
        )
        csv_path = out / f"sweep_mis_square-ring_init{init}.csv"
        csv_path.write_text(sweep.to_csv())
        _summary_path(csv_path).write_text(sweep.to_json())
        print(f"wrote {csv_path}")
    return EXIT_OK


class UsageError(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": cmd_run,
        "sweep": cmd_sweep,
        "oracle": cmd_oracle,
        "reproduce-paper": cmd_reproduce_paper,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleInitialState as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        if "capped at" in message or "exceeds" in message:
            return EXIT_TOO_LARGE
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
