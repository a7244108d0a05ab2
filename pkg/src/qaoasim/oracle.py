"""Independent brute-force references used to validate the simulator.

Everything here is deliberately disjoint from the simulator's fast paths:
optima come from exhaustive scans, and evolution uses dense layer unitaries
built by Pade scaling-and-squaring rather than eigendecomposition or
diagonal shortcuts, so a disagreement localizes the bug.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import ENUMERATION_LIMIT, Graph, index_to_bits
from .operators import PauliSum
from .simulator import AnsatzParams

REFERENCE_QUBIT_LIMIT = 10

PROBLEMS = ("maxcut", "mis")


@dataclass(frozen=True)
class OptimumReport:
    """Exact optimum of a problem instance and every subset attaining it."""

    problem: str
    optimal_value: float
    optimizers: tuple[str, ...]


def brute_force_optimum(problem: str, g: Graph) -> OptimumReport:
    """Scan all 2^n subsets; for mis, infeasible subsets are skipped."""
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")
    if g.num_nodes > ENUMERATION_LIMIT:
        raise ValueError(
            f"graph has {g.num_nodes} nodes; brute force capped at {ENUMERATION_LIMIT}"
        )
    idx = np.arange(1 << g.num_nodes, dtype=np.int64)
    if problem == "maxcut":
        values = np.zeros(idx.shape)
        for (i, j), w in g.edge_weights.items():
            values += w * (((idx >> (i - 1)) ^ (idx >> (j - 1))) & 1)
        eligible = np.ones(idx.shape, dtype=bool)
    else:
        values = np.zeros(idx.shape)
        for v, w in enumerate(g.node_weights):
            values += w * ((idx >> v) & 1)
        eligible = np.ones(idx.shape, dtype=bool)
        for i, j in g.edges:
            eligible &= (((idx >> (i - 1)) & (idx >> (j - 1))) & 1) == 0
    best = float(values[eligible].max())
    winners = np.flatnonzero(eligible & (values == best))
    return OptimumReport(
        problem=problem,
        optimal_value=best,
        optimizers=tuple(index_to_bits(int(x), g.num_nodes) for x in winners),
    )


def expm_pade(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by fixed-order diagonal Pade with norm-based scaling.

    Order-6 approximant of exp(a / 2^s) followed by s squarings, with s
    chosen so the scaled norm is below 0.5. Kept free of eigendecomposition
    on purpose; see the module docstring.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    norm = np.linalg.norm(a, np.inf)
    squarings = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0 else 0
    a = a / (2.0**squarings)

    order = 6
    ident = np.eye(n, dtype=complex)
    coeff = 0.5
    power = a.copy()
    numer = ident + coeff * power
    denom = ident - coeff * power
    sign = -1.0
    for k in range(2, order + 1):
        coeff *= (order - k + 1) / (k * (2 * order - k + 1))
        power = a @ power
        numer += coeff * power
        sign = -sign
        denom += sign * coeff * power
    result = np.linalg.solve(denom, numer)
    for _ in range(squarings):
        result = result @ result
    return result


def _dense_from_pauli_sum(h: PauliSum) -> np.ndarray:
    # independent of operators.to_dense_matrix: accumulate each term by
    # walking qubits low to high and growing the Kronecker product leftward
    pauli = {
        "I": np.eye(2, dtype=complex),
        "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
        "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
        "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
    }
    size = 1 << h.num_qubits
    total = np.zeros((size, size), dtype=complex)
    for term in h.terms:
        letters = dict(term.factors)
        m = np.array([[1.0]], dtype=complex)
        for qubit in range(h.num_qubits):
            m = np.kron(pauli[letters.get(qubit, "I")], m)
        total += term.coefficient * m
    return total


def reference_evolve(
    cost: PauliSum, mixer: PauliSum, params: AnsatzParams, initial: np.ndarray
) -> np.ndarray:
    """Evolve `initial` through the depth-p circuit using dense layer unitaries."""
    if cost.num_qubits != mixer.num_qubits:
        raise ValueError(
            f"cost has {cost.num_qubits} qubits but mixer has {mixer.num_qubits}"
        )
    if cost.num_qubits > REFERENCE_QUBIT_LIMIT:
        raise ValueError(
            f"{cost.num_qubits} qubits exceeds reference cap of {REFERENCE_QUBIT_LIMIT}"
        )
    size = 1 << cost.num_qubits
    if initial.shape != (size,):
        raise ValueError(f"state length {initial.size} vs expected {size}")
    cost_dense = _dense_from_pauli_sum(cost)
    mixer_dense = _dense_from_pauli_sum(mixer)
    state = np.array(initial, dtype=complex)
    for gamma, beta in zip(params.gammas, params.betas):
        state = expm_pade(-1j * gamma * cost_dense) @ state
        state = expm_pade(-1j * beta * mixer_dense) @ state
    return state
