import math

import numpy as np
import pytest

from qaoasim import (
    AnsatzParams,
    apply_mixer,
    apply_phase_separator,
    build_mixer_engine,
    build_named_graph,
    expectation,
    feasible_table,
    init_state,
    maxcut_cost,
    maxcut_mixer,
    mis_cost,
    mis_mixer,
    probabilities,
    run_ansatz,
    sample_counts,
)
from qaoasim.operators import PauliString, PauliSum


def random_params(rng, p):
    return AnsatzParams(
        tuple(rng.uniform(0, 2 * math.pi, p)), tuple(rng.uniform(0, math.pi, p))
    )


class TestAnsatzParams:
    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="lengths"):
            AnsatzParams((0.1,), (0.1, 0.2))

    def test_vector_roundtrip(self):
        params = AnsatzParams((0.1, 0.2), (0.3, 0.4))
        assert AnsatzParams.from_vector(params.as_vector()) == params
        with pytest.raises(ValueError, match="odd"):
            AnsatzParams.from_vector([1.0, 2.0, 3.0])

    def test_padding(self):
        padded = AnsatzParams((0.5,), (0.7,)).padded(3)
        assert padded.gammas == (0.5, 0.0, 0.0)
        assert padded.betas == (0.7, 0.0, 0.0)
        with pytest.raises(ValueError):
            padded.padded(1)


class TestInitState:
    def test_plus(self):
        assert np.allclose(init_state(2, "plus"), [0.5, 0.5, 0.5, 0.5])

    def test_basis(self):
        state = init_state(4, "0101")
        assert state[5] == 1.0
        assert np.count_nonzero(state) == 1

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            init_state(4, "10101")
        with pytest.raises(ValueError):
            init_state(2, "0x")


class TestPhaseSeparator:
    def test_zero_gamma(self):
        state = init_state(3, "plus")
        out = apply_phase_separator(state, np.arange(8.0), 0.0)
        assert np.allclose(out, state)

    def test_basis_probabilities_unchanged(self):
        state = init_state(3, "011")
        out = apply_phase_separator(state, np.arange(8.0), 1.7)
        assert np.allclose(np.abs(out) ** 2, np.abs(state) ** 2, atol=1e-15)

    def test_one_qubit_pi(self):
        state = init_state(1, "plus")
        out = apply_phase_separator(state, [0.0, 1.0], math.pi)
        expected = np.array([1.0, -1.0]) / math.sqrt(2)
        assert np.allclose(out, expected, atol=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            apply_phase_separator(init_state(2, "plus"), [0.0, 1.0], 0.3)


class TestMixerEngine:
    def test_kinds(self):
        ring = build_named_graph("square-ring")
        assert build_mixer_engine(maxcut_mixer(ring)).kind == "exact-product"
        engine = build_mixer_engine(mis_mixer(ring))
        assert engine.kind == "eigendecomposition"
        assert engine.eigenvalues.shape == (16,)

    def test_eigendecomposition_reconstructs(self):
        mixer = mis_mixer(build_named_graph("square-ring"))
        engine = build_mixer_engine(mixer)
        rebuilt = (
            engine.eigenvectors
            @ np.diag(engine.eigenvalues)
            @ engine.eigenvectors.conj().T
        )
        assert np.max(np.abs(rebuilt - mixer.to_dense_matrix())) < 1e-9

    def test_size_cap(self):
        big = PauliSum(15, [PauliString(1.0, {0: "X", 1: "Z"})])
        with pytest.raises(ValueError, match="cap"):
            build_mixer_engine(big)

    def test_beta_zero_identity(self):
        ring = build_named_graph("square-ring")
        rng = np.random.default_rng(0)
        state = rng.normal(size=16) + 1j * rng.normal(size=16)
        state /= np.linalg.norm(state)
        for mixer in (maxcut_mixer(ring), mis_mixer(ring)):
            out = apply_mixer(state, build_mixer_engine(mixer), 0.0)
            assert np.allclose(out, state, atol=1e-12)

    def test_single_qubit_rotation(self):
        engine = build_mixer_engine(PauliSum(1, [PauliString(1.0, {0: "X"})]))
        out = apply_mixer(init_state(1, "0"), engine, math.pi / 2)
        assert np.allclose(out, [0.0, -1j], atol=1e-12)

    def test_exact_product_matches_eigendecomposition(self):
        # same operator through the two engine paths
        mixer = maxcut_mixer(build_named_graph("k23"))
        product_engine = build_mixer_engine(mixer)
        w, v = np.linalg.eigh(mixer.to_dense_matrix())
        rng = np.random.default_rng(1)
        state = rng.normal(size=32) + 1j * rng.normal(size=32)
        state /= np.linalg.norm(state)
        for beta in (0.3, 1.2, 2.8):
            fast = apply_mixer(state, product_engine, beta)
            direct = v @ (np.exp(-1j * beta * w) * (v.conj().T @ state))
            assert np.max(np.abs(fast - direct)) < 1e-10

    def test_mis_leakage_from_feasible(self):
        ring = build_named_graph("square-ring")
        engine = build_mixer_engine(mis_mixer(ring))
        feasible = feasible_table(ring)
        state = init_state(4, "0000")
        for beta in (0.3, 1.1, 2.9):
            out = apply_mixer(state, engine, beta)
            assert float((np.abs(out) ** 2)[~feasible].sum()) < 1e-10

    def test_size_mismatch(self):
        engine = build_mixer_engine(maxcut_mixer(build_named_graph("square-ring")))
        with pytest.raises(ValueError):
            apply_mixer(init_state(3, "plus"), engine, 0.5)


class TestRunAnsatz:
    def test_p_zero(self):
        ring = build_named_graph("square-ring")
        engine = build_mixer_engine(maxcut_mixer(ring))
        diag = maxcut_cost(ring).diagonal_values()
        initial = init_state(4, "plus")
        out = run_ansatz(diag, engine, AnsatzParams((), ()), initial)
        assert np.allclose(out, initial)

    def test_zero_angles(self):
        ring = build_named_graph("square-ring")
        engine = build_mixer_engine(mis_mixer(ring))
        diag = mis_cost(ring).diagonal_values()
        initial = init_state(4, "0101")
        out = run_ansatz(diag, engine, AnsatzParams((0.0,), (0.0,)), initial)
        assert np.allclose(out, initial, atol=1e-12)

    def test_identity_padding(self):
        ring = build_named_graph("square-ring")
        engine = build_mixer_engine(mis_mixer(ring))
        diag = mis_cost(ring).diagonal_values()
        initial = init_state(4, "0001")
        one = run_ansatz(diag, engine, AnsatzParams((0.9,), (0.4,)), initial)
        two = run_ansatz(
            diag, engine, AnsatzParams((0.9, 0.0), (0.4, 0.0)), initial
        )
        assert np.max(np.abs(one - two)) < 1e-12

    def test_size_mismatch(self):
        ring = build_named_graph("square-ring")
        engine = build_mixer_engine(maxcut_mixer(ring))
        with pytest.raises(ValueError, match="mismatch"):
            run_ansatz(np.zeros(8), engine, AnsatzParams((), ()), init_state(4, "plus"))

    def test_norm_preserved(self):
        rng = np.random.default_rng(23)
        for name in ("square-ring", "k23"):
            g = build_named_graph(name)
            diag = mis_cost(g).diagonal_values()
            engine = build_mixer_engine(mis_mixer(g))
            for _ in range(5):
                out = run_ansatz(
                    diag, engine, random_params(rng, 4), init_state(g.num_nodes, "plus")
                )
                assert abs(np.linalg.norm(out) - 1.0) < 1e-10


class TestExpectationAndProbabilities:
    def test_eigenstate(self):
        ring = build_named_graph("square-ring")
        diag = mis_cost(ring).diagonal_values()
        assert expectation(init_state(4, "0101"), diag) == pytest.approx(2.0)
        assert expectation(init_state(4, "0000"), diag) == pytest.approx(0.0)

    def test_plus_maxcut(self):
        ring = build_named_graph("square-ring")
        diag = maxcut_cost(ring).diagonal_values()
        assert expectation(init_state(4, "plus"), diag) == pytest.approx(2.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            expectation(init_state(2, "plus"), [1.0, 2.0])

    def test_probabilities(self):
        assert np.allclose(probabilities(init_state(4, "plus")), 1 / 16)
        p = probabilities(init_state(3, "010"))
        assert p[2] == 1.0 and p.sum() == pytest.approx(1.0)

    def test_probabilities_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="normalized"):
            probabilities(np.ones(4, dtype=complex))

    def test_feasible_mass_after_circuit(self):
        ring = build_named_graph("square-ring")
        engine = build_mixer_engine(mis_mixer(ring))
        diag = mis_cost(ring).diagonal_values()
        rng = np.random.default_rng(2)
        out = run_ansatz(diag, engine, random_params(rng, 3), init_state(4, "0101"))
        p = probabilities(out)
        assert p[feasible_table(ring)].sum() == pytest.approx(1.0, abs=1e-10)


class TestSymmetries:
    def test_maxcut_complement_symmetry(self):
        rng = np.random.default_rng(31)
        for name in ("square-ring", "k23", "k33"):
            g = build_named_graph(name)
            diag = maxcut_cost(g).diagonal_values()
            engine = build_mixer_engine(maxcut_mixer(g))
            out = run_ansatz(diag, engine, random_params(rng, 3), init_state(g.num_nodes, "plus"))
            p = probabilities(out)
            size = 1 << g.num_nodes
            flipped = p[::-1]  # x -> ~x reverses the index order
            assert np.max(np.abs(p - flipped)) < 1e-9

    def test_gamma1_cancels_for_basis_init(self):
        ring = build_named_graph("square-ring")
        diag = mis_cost(ring).diagonal_values()
        engine = build_mixer_engine(mis_mixer(ring))
        rng = np.random.default_rng(4)
        for bits in ("0000", "0101", "0011"):
            initial = init_state(4, bits)
            for beta in rng.uniform(0, math.pi, 5):
                values = [
                    expectation(
                        run_ansatz(
                            diag, engine, AnsatzParams((g1,), (beta,)), initial
                        ),
                        diag,
                    )
                    for g1 in np.linspace(0, 2 * math.pi, 20)
                ]
                assert max(values) - min(values) < 1e-10


class TestSampling:
    def test_deterministic(self):
        state = init_state(3, "plus")
        a = sample_counts(state, 1000, seed=42)
        b = sample_counts(state, 1000, seed=42)
        assert np.array_equal(a, b)
        assert a.sum() == 1000

    def test_basis_state_concentrates(self):
        counts = sample_counts(init_state(3, "101"), 64, seed=1)
        assert counts[5] == 64

    def test_shots_positive(self):
        with pytest.raises(ValueError):
            sample_counts(init_state(1, "0"), 0, seed=0)
