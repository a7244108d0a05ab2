"""Statevector QAOA and alternating-operator-ansatz simulator for Max-Cut
and maximum independent set, with a restart-averaged variational optimizer.
"""

from .graphs import (
    Graph,
    NAMED_GRAPHS,
    bits_to_index,
    build_named_graph,
    complement_bits,
    cut_value,
    enumerate_feasible,
    feasible_table,
    index_to_bits,
    is_independent,
    load_edge_list,
    subset_weight,
)
from .operators import (
    PauliString,
    PauliSum,
    maxcut_cost,
    maxcut_mixer,
    mis_cost,
    mis_mixer,
)
from .optimize import (
    InfeasibleInitialState,
    NelderMeadConfig,
    NelderMeadResult,
    VqeRunConfig,
    nelder_mead,
    sweep_p1,
    vqe_optimize,
)
from .oracle import OptimumReport, brute_force_optimum, expm_pade, reference_evolve
from .report import RunReport, SweepReport
from .simulator import (
    AnsatzParams,
    MixerEngine,
    apply_mixer,
    apply_phase_separator,
    build_mixer_engine,
    expectation,
    init_state,
    probabilities,
    run_ansatz,
    sample_counts,
)
from .solver import QaoaSolver
from .version import __version__

__all__ = [
    "AnsatzParams",
    "Graph",
    "InfeasibleInitialState",
    "MixerEngine",
    "NAMED_GRAPHS",
    "NelderMeadConfig",
    "NelderMeadResult",
    "OptimumReport",
    "PauliString",
    "PauliSum",
    "QaoaSolver",
    "RunReport",
    "SweepReport",
    "VqeRunConfig",
    "apply_mixer",
    "apply_phase_separator",
    "bits_to_index",
    "brute_force_optimum",
    "build_mixer_engine",
    "build_named_graph",
    "complement_bits",
    "cut_value",
    "enumerate_feasible",
    "expectation",
    "expm_pade",
    "feasible_table",
    "index_to_bits",
    "init_state",
    "is_independent",
    "load_edge_list",
    "maxcut_cost",
    "maxcut_mixer",
    "mis_cost",
    "mis_mixer",
    "nelder_mead",
    "probabilities",
    "reference_evolve",
    "run_ansatz",
    "sample_counts",
    "subset_weight",
    "sweep_p1",
    "vqe_optimize",
    "__version__",
]
