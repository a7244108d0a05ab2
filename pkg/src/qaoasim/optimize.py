"""Angle optimization: Nelder-Mead simplex search, the restart-averaged
variational loop, and the depth-1 beta sweep.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .graphs import Graph, feasible_table, find_violated_edge, index_to_bits
from .operators import maxcut_cost, maxcut_mixer, mis_cost, mis_mixer
from .oracle import brute_force_optimum
from .report import RunReport, deterministic_timestamp
from .simulator import (
    BETA_RANGE,
    GAMMA_RANGE,
    AnsatzParams,
    MixerEngine,
    build_mixer_engine,
    expectation,
    init_state,
    probabilities,
    run_ansatz,
)
from .version import __version__


class NelderMeadResult(NamedTuple):
    x: np.ndarray
    value: float
    evaluations: int


@dataclass
class NelderMeadConfig:
    """Simplex-search settings; the defaults suit smooth few-dozen-dim angle
    landscapes."""

    max_evaluations: int = 2000
    simplex_tolerance: float = 1e-8
    value_tolerance: float = 1e-8
    reflection: float = 1.0
    expansion: float = 2.0
    contraction: float = 0.5
    shrink: float = 0.5
    initial_step: float = 0.25

    def validate(self) -> None:
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be positive")
        if self.simplex_tolerance <= 0 or self.value_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if self.reflection <= 0:
            raise ValueError("reflection coefficient must be > 0")
        if self.expansion <= 1:
            raise ValueError("expansion coefficient must be > 1")
        if not 0 < self.contraction < 1:
            raise ValueError("contraction coefficient must be in (0, 1)")
        if not 0 < self.shrink < 1:
            raise ValueError("shrink coefficient must be in (0, 1)")
        if self.initial_step <= 0:
            raise ValueError("initial_step must be positive")


def nelder_mead(
    objective: Callable[[np.ndarray], float],
    x0,
    bounds,
    config: NelderMeadConfig | None = None,
) -> NelderMeadResult:
    """Minimize `objective` inside a box, starting from `x0`.

    Every proposed point (including the initial simplex) is clamped
    coordinate-wise into the bounds before evaluation. Terminates when the
    simplex collapses below `simplex_tolerance`, the vertex values agree
    within `value_tolerance`, or the evaluation budget runs out.
    """
    cfg = config if config is not None else NelderMeadConfig()
    cfg.validate()
    x0 = np.asarray(x0, dtype=float)
    dim = x0.size
    if dim == 0:
        raise ValueError("cannot optimize over an empty vector")
    lower = np.array([b[0] for b in bounds], dtype=float)
    upper = np.array([b[1] for b in bounds], dtype=float)
    if lower.size != dim or upper.size != dim:
        raise ValueError(f"{len(bounds)} bounds for a {dim}-dimensional start")
    if np.any(lower > upper):
        raise ValueError("lower bound exceeds upper bound")
    if np.any(x0 < lower) or np.any(x0 > upper):
        raise ValueError("start point lies outside the bounds")

    evaluations = 0

    def evaluate(x: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        return float(objective(x))

    def clamp(x: np.ndarray) -> np.ndarray:
        return np.clip(x, lower, upper)

    simplex = [x0.copy()]
    for i in range(dim):
        vertex = x0.copy()
        vertex[i] += cfg.initial_step
        if vertex[i] > upper[i]:
            vertex[i] = x0[i] - cfg.initial_step
        simplex.append(clamp(vertex))
    values = [evaluate(v) for v in simplex]

    while True:
        order = np.argsort(values, kind="stable")
        simplex = [simplex[k] for k in order]
        values = [values[k] for k in order]

        spread_x = max(np.max(np.abs(v - simplex[0])) for v in simplex[1:])
        spread_f = values[-1] - values[0]
        if spread_f <= cfg.value_tolerance or spread_x <= cfg.simplex_tolerance:
            break
        if evaluations >= cfg.max_evaluations:
            break

        centroid = np.mean(simplex[:-1], axis=0)
        worst = simplex[-1]

        reflected = clamp(centroid + cfg.reflection * (centroid - worst))
        f_reflected = evaluate(reflected)
        if f_reflected < values[0]:
            expanded = clamp(centroid + cfg.expansion * (centroid - worst))
            f_expanded = evaluate(expanded)
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
            continue
        if f_reflected < values[-2]:
            simplex[-1], values[-1] = reflected, f_reflected
            continue

        if f_reflected < values[-1]:
            contracted = clamp(centroid + cfg.contraction * (reflected - centroid))
            f_contracted = evaluate(contracted)
            if f_contracted <= f_reflected:
                simplex[-1], values[-1] = contracted, f_contracted
                continue
        else:
            contracted = clamp(centroid + cfg.contraction * (worst - centroid))
            f_contracted = evaluate(contracted)
            if f_contracted < values[-1]:
                simplex[-1], values[-1] = contracted, f_contracted
                continue

        best = simplex[0]
        for k in range(1, len(simplex)):
            simplex[k] = clamp(best + cfg.shrink * (simplex[k] - best))
            values[k] = evaluate(simplex[k])
            if evaluations >= cfg.max_evaluations:
                break

    best_index = int(np.argmin(values))
    return NelderMeadResult(
        x=simplex[best_index].copy(),
        value=values[best_index],
        evaluations=evaluations,
    )


class InfeasibleInitialState(ValueError):
    """MIS initial state with support outside the independent sets."""

    def __init__(self, bits: str, edge: tuple[int, int] | None = None):
        self.bits = bits
        self.edge = edge
        if edge is None:
            message = (
                f"initial state {bits!r} is not a computational-basis state; "
                "mis requires a feasible basis state"
            )
        else:
            message = (
                f"initial state '{bits}' is not an independent set: "
                f"edge {edge} has both endpoints occupied"
            )
        super().__init__(message)


@dataclass
class VqeRunConfig:
    """One restart-averaged optimization: depth, restart count, seeding.

    Each restart draws its random start from an independent child stream of
    `seed` (SeedSequence spawn key = restart index), so any subset of
    restarts can be reproduced in isolation and results do not depend on
    scheduling. `warm_starts` appends extra deterministic starts after the
    random ones; they compete for best-of and join the distribution average.
    """

    p: int
    restarts: int = 50
    seed: int = 0
    initial_state: str | None = None
    warm_starts: tuple[AnsatzParams, ...] = ()
    nelder_mead: NelderMeadConfig = field(default_factory=NelderMeadConfig)
    n_jobs: int | None = None

    def validate(self) -> None:
        if self.p < 1:
            raise ValueError("p must be at least 1")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        for ws in self.warm_starts:
            if ws.p != self.p:
                raise ValueError(f"warm start has depth {ws.p}, config has {self.p}")
        self.nelder_mead.validate()


def _angle_bounds(p: int) -> list[tuple[float, float]]:
    return [GAMMA_RANGE] * p + [BETA_RANGE] * p


def _random_start(seed: int, restart: int, p: int) -> np.ndarray:
    child = np.random.SeedSequence(entropy=seed, spawn_key=(restart,))
    rng = np.random.Generator(np.random.PCG64(child))
    gammas = rng.uniform(GAMMA_RANGE[0], GAMMA_RANGE[1], p)
    betas = rng.uniform(BETA_RANGE[0], BETA_RANGE[1], p)
    return np.concatenate([gammas, betas])


def resolve_initial_state(problem: str, g: Graph, spec: str | None) -> str:
    """Apply the per-problem default and, for mis, require feasibility."""
    if spec is None:
        spec = "plus" if problem == "maxcut" else "0" * g.num_nodes
    if problem == "mis":
        if spec == "plus":
            if g.edges:
                raise InfeasibleInitialState("plus")
            return spec
        edge = find_violated_edge(g, spec)
        if edge is not None:
            raise InfeasibleInitialState(spec, edge)
    return spec


def vqe_optimize(
    problem: str,
    g: Graph,
    config: VqeRunConfig,
    graph_label: str | None = None,
) -> RunReport:
    """Run `restarts` independent Nelder-Mead maximizations of the depth-p
    expectation from random angle starts; report the best run and the
    arithmetic mean of the per-run optimal distributions.
    """
    if problem not in ("maxcut", "mis"):
        raise ValueError(f"unknown problem {problem!r}")
    config.validate()
    initial_spec = resolve_initial_state(problem, g, config.initial_state)

    if problem == "maxcut":
        cost, mixer = maxcut_cost(g), maxcut_mixer(g)
    else:
        cost, mixer = mis_cost(g), mis_mixer(g)
    diag = cost.diagonal_values()
    engine = build_mixer_engine(mixer)
    initial = init_state(g.num_nodes, initial_spec)
    optimum = brute_force_optimum(problem, g)
    p = config.p

    def objective(x: np.ndarray) -> float:
        params = AnsatzParams(tuple(x[:p]), tuple(x[p:]))
        return -expectation(run_ansatz(diag, engine, params, initial), diag)

    bounds = _angle_bounds(p)
    starts = [_random_start(config.seed, r, p) for r in range(config.restarts)]
    starts += [np.clip(ws.as_vector(), [b[0] for b in bounds], [b[1] for b in bounds])
               for ws in config.warm_starts]

    def run_one(x0: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
        result = nelder_mead(objective, x0, bounds, config.nelder_mead)
        params = AnsatzParams.from_vector(result.x)
        dist = probabilities(run_ansatz(diag, engine, params, initial))
        return -result.value, result.x, dist

    jobs = config.n_jobs or int(os.environ.get("QAOA_THREADS", "1"))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_one, starts))
    else:
        outcomes = [run_one(x0) for x0 in starts]

    # aggregate in start order so results are independent of scheduling
    averaged = np.zeros(1 << g.num_nodes)
    best_value, best_x = -np.inf, None
    for value, x, dist in outcomes:
        averaged += dist
        if value > best_value:
            best_value, best_x = value, x
    averaged /= len(outcomes)

    feasible = feasible_table(g)
    leakage = float(averaged[~feasible].sum()) if problem == "mis" else 0.0
    best_params = AnsatzParams.from_vector(best_x)
    return RunReport(
        problem=problem,
        graph=graph_label or f"n{g.num_nodes}-m{len(g.edges)}",
        p=p,
        restarts=config.restarts,
        seed=config.seed,
        initial_state=initial_spec,
        best_gammas=best_params.gammas,
        best_betas=best_params.betas,
        best_expectation=best_value,
        c_max=optimum.optimal_value,
        approximation_ratio=best_value / optimum.optimal_value,
        averaged_distribution=tuple(
            (index_to_bits(i, g.num_nodes), float(prob))
            for i, prob in enumerate(averaged)
        ),
        feasibility_leakage=leakage,
        timestamp=deterministic_timestamp(),
        tool_version=__version__,
    )


def sweep_p1(
    cost_diag,
    engine: MixerEngine,
    initial_bits: str,
    beta_grid: Sequence[float],
    c_max: float,
) -> list[tuple[float, float]]:
    """Depth-1 expectation over a beta grid, gamma fixed at 0, normalized by
    c_max (take it from the oracle module's brute-force optimum).

    Gamma may be pinned because the phase separator only contributes a
    global phase on a computational-basis initial state.
    """
    if len(beta_grid) == 0:
        raise ValueError("beta grid is empty")
    if c_max <= 0:
        raise ValueError(f"c_max must be positive, got {c_max}")
    if initial_bits == "plus":
        raise ValueError("sweep requires a computational-basis initial state")
    initial = init_state(engine.num_qubits, initial_bits)
    diag = np.asarray(cost_diag, dtype=float)
    curve = []
    for beta in beta_grid:
        state = run_ansatz(diag, engine, AnsatzParams((0.0,), (float(beta),)), initial)
        curve.append((float(beta), expectation(state, diag) / c_max))
    return curve
