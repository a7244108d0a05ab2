"""Weighted Pauli-string sums and the cost/mixer Hamiltonians for both problems.

Qubits are 0-indexed; node i of a graph acts on qubit i-1. Basis-state
integers use qubit q as bit q, matching the graph module's subset encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .graphs import Graph

DENSE_QUBIT_LIMIT = 14
COEFF_EPS = 1e-15

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class PauliString:
    """One weighted Pauli product; empty factors means a multiple of identity."""

    coefficient: float
    factors: tuple[tuple[int, str], ...]

    def __post_init__(self):
        raw = self.factors
        items = sorted(raw.items()) if isinstance(raw, Mapping) else sorted(raw)
        seen = set()
        for qubit, letter in items:
            if qubit < 0:
                raise ValueError(f"negative qubit index {qubit}")
            if letter not in ("X", "Y", "Z"):
                raise ValueError(f"invalid Pauli letter {letter!r} (identity is implicit)")
            if qubit in seen:
                raise ValueError(f"duplicate factor on qubit {qubit}")
            seen.add(qubit)
        object.__setattr__(self, "coefficient", float(self.coefficient))
        object.__setattr__(self, "factors", tuple(items))

    @property
    def is_identity(self) -> bool:
        return not self.factors

    @property
    def is_single_x(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == "X"

    def render(self) -> str:
        if self.is_identity:
            return f"{self.coefficient:g} * I"
        body = " ".join(f"{letter}{qubit}" for qubit, letter in self.factors)
        return f"{self.coefficient:g} * {body}"


class PauliSum:
    """Hermitian operator given as a real-weighted sum of Pauli strings.

    Treated as immutable once built; `simplified` returns a new sum with
    identical factor maps merged and negligible coefficients dropped.
    """

    def __init__(self, num_qubits: int, terms: Iterable[PauliString]):
        if num_qubits < 1:
            raise ValueError(f"num_qubits must be positive, got {num_qubits}")
        self.num_qubits = num_qubits
        self.terms: tuple[PauliString, ...] = tuple(terms)
        for term in self.terms:
            if term.factors and term.factors[-1][0] >= num_qubits:
                raise ValueError(
                    f"term {term.render()!r} touches qubit {term.factors[-1][0]}, "
                    f"but the sum has {num_qubits} qubits"
                )

    def simplified(self) -> "PauliSum":
        merged: dict[tuple[tuple[int, str], ...], float] = {}
        for term in self.terms:
            merged[term.factors] = merged.get(term.factors, 0.0) + term.coefficient
        kept = [
            PauliString(coeff, factors)
            for factors, coeff in sorted(merged.items())
            if abs(coeff) >= COEFF_EPS
        ]
        return PauliSum(self.num_qubits, kept)

    def is_diagonal(self) -> bool:
        return all(letter == "Z" for term in self.terms for _, letter in term.factors)

    def diagonal_values(self) -> np.ndarray:
        """Eigenvalue of each computational-basis state, for Z/identity-only sums."""
        if not self.is_diagonal():
            raise ValueError("not diagonal: sum contains X or Y factors")
        size = 1 << self.num_qubits
        idx = np.arange(size, dtype=np.int64)
        values = np.zeros(size)
        for term in self.terms:
            v = np.full(size, term.coefficient)
            for qubit, _ in term.factors:
                v *= 1 - 2 * ((idx >> qubit) & 1)
            values += v
        return values

    def to_dense_matrix(self) -> np.ndarray:
        """Full 2^n x 2^n matrix; qubit q indexes bit q of row/column."""
        if self.num_qubits > DENSE_QUBIT_LIMIT:
            raise ValueError(
                f"{self.num_qubits} qubits exceeds dense-matrix cap of {DENSE_QUBIT_LIMIT}"
            )
        size = 1 << self.num_qubits
        out = np.zeros((size, size), dtype=complex)
        for term in self.terms:
            letters = dict(term.factors)
            m = np.array([[term.coefficient]], dtype=complex)
            for qubit in reversed(range(self.num_qubits)):
                m = np.kron(m, _PAULI[letters.get(qubit, "I")])
            out += m
        return out

    def render(self) -> str:
        """Debug rendering, one term per line with qubits ascending."""
        return "\n".join(term.render() for term in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.num_qubits == other.num_qubits and self.terms == other.terms

    def __repr__(self) -> str:
        return f"PauliSum(num_qubits={self.num_qubits}, terms={len(self.terms)})"

    __str__ = render


def maxcut_cost(g: Graph) -> PauliSum:
    """Diagonal cost whose eigenvalue on a basis state is that subset's cut weight."""
    total = sum(g.edge_weights.values())
    terms = [PauliString(0.5 * total, {})]
    for (i, j), w in sorted(g.edge_weights.items()):
        terms.append(PauliString(-0.5 * w, {i - 1: "Z", j - 1: "Z"}))
    return PauliSum(g.num_nodes, terms).simplified()


def maxcut_mixer(g: Graph) -> PauliSum:
    """Transverse-field driver: one X per node."""
    terms = [PauliString(1.0, {u - 1: "X"}) for u in range(1, g.num_nodes + 1)]
    return PauliSum(g.num_nodes, terms).simplified()


def mis_cost(g: Graph) -> PauliSum:
    """Diagonal cost counting (node-weighted) subset size."""
    total = sum(g.node_weights)
    terms = [PauliString(0.5 * total, {})]
    for u in range(1, g.num_nodes + 1):
        terms.append(PauliString(-0.5 * g.node_weights[u - 1], {u - 1: "Z"}))
    return PauliSum(g.num_nodes, terms).simplified()


def mis_mixer(g: Graph) -> PauliSum:
    """Feasibility-preserving driver for independent sets.

    Per node u with neighbors v_1..v_l, contributes the expansion of
    X_u * prod_j (I + Z_{v_j}) / 2^l: on a basis state this flips bit u
    iff every neighbor bit is 0, and annihilates the state otherwise.
    """
    terms = []
    for u in range(1, g.num_nodes + 1):
        nbrs = g.neighbors(u)
        coeff = 0.5 ** len(nbrs)
        for r in range(len(nbrs) + 1):
            for chosen in combinations(nbrs, r):
                factors = {u - 1: "X"}
                for v in chosen:
                    factors[v - 1] = "Z"
                terms.append(PauliString(coeff, factors))
    return PauliSum(g.num_nodes, terms).simplified()
