"""Exact statevector evolution of the alternating ansatz and measurement statistics.

States are dense complex vectors of length 2^n; index bit q is qubit q.
No renormalization happens inside the circuit: unitarity is verified by
the tests, not patched over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import PauliSum

GAMMA_RANGE = (0.0, 2.0 * math.pi)
BETA_RANGE = (0.0, math.pi)

EIGENDECOMPOSITION_QUBIT_LIMIT = 14


@dataclass(frozen=True)
class AnsatzParams:
    """The 2p angles of a depth-p circuit: gammas in [0, 2pi], betas in [0, pi]."""

    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(float(x) for x in self.gammas))
        object.__setattr__(self, "betas", tuple(float(x) for x in self.betas))
        if len(self.gammas) != len(self.betas):
            raise ValueError(
                f"{len(self.gammas)} gammas vs {len(self.betas)} betas; lengths must match"
            )

    @property
    def p(self) -> int:
        return len(self.gammas)

    def as_vector(self) -> np.ndarray:
        """Flat layout [gamma_1..gamma_p, beta_1..beta_p] for the optimizer."""
        return np.array(self.gammas + self.betas)

    @classmethod
    def from_vector(cls, x) -> "AnsatzParams":
        x = np.asarray(x, dtype=float)
        if x.size % 2:
            raise ValueError(f"angle vector length {x.size} is odd")
        p = x.size // 2
        return cls(tuple(x[:p]), tuple(x[p:]))

    def padded(self, p: int) -> "AnsatzParams":
        """Extend to depth p with zero angles (identity layers)."""
        if p < self.p:
            raise ValueError(f"cannot pad depth {self.p} down to {p}")
        extra = (0.0,) * (p - self.p)
        return AnsatzParams(self.gammas + extra, self.betas + extra)


def init_state(num_qubits: int, spec: str = "plus") -> np.ndarray:
    """"plus" for the uniform superposition, or a basis bitstring."""
    if num_qubits < 1:
        raise ValueError(f"num_qubits must be positive, got {num_qubits}")
    size = 1 << num_qubits
    if spec == "plus":
        return np.full(size, size ** -0.5, dtype=complex)
    if len(spec) != num_qubits or any(c not in "01" for c in spec):
        raise ValueError(
            f"initial state {spec!r} is neither 'plus' nor a length-{num_qubits} bitstring"
        )
    state = np.zeros(size, dtype=complex)
    state[int(spec, 2)] = 1.0
    return state


def apply_phase_separator(state: np.ndarray, diag, gamma: float) -> np.ndarray:
    """Multiply each amplitude by e^{-i*gamma*d_x}."""
    diag = np.asarray(diag, dtype=float)
    if diag.shape != state.shape:
        raise ValueError(f"diagonal length {diag.size} vs state length {state.size}")
    return state * np.exp(-1j * gamma * diag)


class MixerEngine:
    """Prepared form of e^{-i*beta*B} for a fixed mixer B, reusable across betas.

    kind "exact-product": B is a sum of single-qubit X terms, so the
    exponential factorizes into per-qubit rotations
    [[cos a, -i sin a], [-i sin a, cos a]] with a = coeff * beta.
    kind "eigendecomposition": dense Hermitian eigendecomposition of B,
    computed once and applied as V e^{-i beta L} V^dag.
    """

    def __init__(self, mixer: PauliSum):
        mixer = mixer.simplified()
        self.num_qubits = mixer.num_qubits
        if mixer.terms and all(t.is_single_x for t in mixer.terms):
            self.kind = "exact-product"
            self._rotations = tuple(
                (term.factors[0][0], term.coefficient) for term in mixer.terms
            )
            self.eigenvalues = None
            self.eigenvectors = None
        else:
            if mixer.num_qubits > EIGENDECOMPOSITION_QUBIT_LIMIT:
                raise ValueError(
                    f"{mixer.num_qubits} qubits exceeds eigendecomposition cap of "
                    f"{EIGENDECOMPOSITION_QUBIT_LIMIT}"
                )
            self.kind = "eigendecomposition"
            self._rotations = None
            w, v = np.linalg.eigh(mixer.to_dense_matrix())
            self.eigenvalues = w
            self.eigenvectors = v
            self._adjoint = np.ascontiguousarray(v.conj().T)

    def apply(self, state: np.ndarray, beta: float) -> np.ndarray:
        if state.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"state length {state.size} vs engine size {1 << self.num_qubits}"
            )
        if self.kind == "exact-product":
            psi = np.array(state, dtype=complex)
            for qubit, coeff in self._rotations:
                angle = coeff * beta
                c = math.cos(angle)
                s = -1j * math.sin(angle)
                v = psi.reshape(-1, 2, 1 << qubit)
                top = v[:, 0].copy()
                v[:, 0] *= c
                v[:, 0] += s * v[:, 1]
                v[:, 1] *= c
                v[:, 1] += s * top
            return psi
        coeffs = self._adjoint @ state
        coeffs *= np.exp(-1j * beta * self.eigenvalues)
        return self.eigenvectors @ coeffs


def build_mixer_engine(mixer: PauliSum) -> MixerEngine:
    return MixerEngine(mixer)


def apply_mixer(state: np.ndarray, engine: MixerEngine, beta: float) -> np.ndarray:
    return engine.apply(state, beta)


def run_ansatz(
    cost_diag, engine: MixerEngine, params: AnsatzParams, initial: np.ndarray
) -> np.ndarray:
    """Alternate phase separator and mixer for p layers, separator first."""
    diag = np.asarray(cost_diag, dtype=float)
    state = np.array(initial, dtype=complex)
    size = 1 << engine.num_qubits
    if diag.size != size or state.size != size:
        raise ValueError(
            f"size mismatch: diagonal {diag.size}, state {state.size}, engine {size}"
        )
    for gamma, beta in zip(params.gammas, params.betas):
        state *= np.exp(-1j * gamma * diag)
        state = engine.apply(state, beta)
    return state


def expectation(state: np.ndarray, cost_diag) -> float:
    """<state| C |state> for a diagonal cost."""
    diag = np.asarray(cost_diag, dtype=float)
    if diag.shape != state.shape:
        raise ValueError(f"diagonal length {diag.size} vs state length {state.size}")
    return float((state.real**2 + state.imag**2) @ diag)


def probabilities(state: np.ndarray) -> np.ndarray:
    """Measurement distribution |amp_x|^2 of a normalized state."""
    p = state.real**2 + state.imag**2
    total = float(p.sum())
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized: |amp|^2 sums to {total!r}")
    return p


def sample_counts(state: np.ndarray, shots: int, seed: int) -> np.ndarray:
    """Optional shot sampler: multinomial draw over basis states, fixed seed."""
    if shots < 1:
        raise ValueError(f"shots must be positive, got {shots}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    p = probabilities(state)
    return rng.multinomial(shots, p / p.sum())
