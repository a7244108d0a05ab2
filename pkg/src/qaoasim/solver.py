"""scikit-learn style front end: configure once, fit on a graph, read off
the solution and its quality.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .graphs import Graph, build_named_graph
from .optimize import NelderMeadConfig, VqeRunConfig, vqe_optimize


class QaoaSolver(BaseEstimator):
    """Restart-averaged variational solver with an estimator interface.

    Parameters mirror the experiment configuration; `fit` accepts a
    `Graph` (or one of the built-in instance names) and exposes the
    outcome through trailing-underscore attributes.

    >>> solver = QaoaSolver(problem="maxcut", p=3, restarts=10, seed=7)
    >>> solver.fit(build_named_graph("square-ring"))  # doctest: +SKIP
    >>> solver.predict()  # doctest: +SKIP
    '0101'
    """

    def __init__(
        self,
        problem: str = "maxcut",
        p: int = 1,
        restarts: int = 50,
        seed: int = 0,
        initial_state: str | None = None,
        max_evaluations: int = 2000,
        n_jobs: int | None = None,
    ):
        self.problem = problem
        self.p = p
        self.restarts = restarts
        self.seed = seed
        self.initial_state = initial_state
        self.max_evaluations = max_evaluations
        self.n_jobs = n_jobs

    def fit(self, graph: Graph | str, y=None) -> "QaoaSolver":
        """Optimize the angles on one problem instance."""
        if isinstance(graph, str):
            label = graph
            graph = build_named_graph(graph)
        elif isinstance(graph, Graph):
            label = None
        else:
            raise TypeError(f"expected a Graph or instance name, got {type(graph).__name__}")
        config = VqeRunConfig(
            p=self.p,
            restarts=self.restarts,
            seed=self.seed,
            initial_state=self.initial_state,
            nelder_mead=NelderMeadConfig(max_evaluations=self.max_evaluations),
            n_jobs=self.n_jobs,
        )
        report = vqe_optimize(self.problem, graph, config, graph_label=label)
        self.report_ = report
        self.best_gammas_ = report.best_gammas
        self.best_betas_ = report.best_betas
        self.best_expectation_ = report.best_expectation
        self.c_max_ = report.c_max
        self.approximation_ratio_ = report.approximation_ratio
        self.averaged_distribution_ = report.averaged_distribution
        self.feasibility_leakage_ = report.feasibility_leakage
        return self

    def _check_fitted(self) -> None:
        if not hasattr(self, "report_"):
            raise NotFittedError("this QaoaSolver instance is not fitted yet; call fit first")

    def predict(self, graph=None) -> str:
        """Most probable bitstring of the averaged distribution."""
        self._check_fitted()
        return max(self.averaged_distribution_, key=lambda item: item[1])[0]

    def score(self, graph=None, y=None) -> float:
        """Approximation ratio achieved by the best restart."""
        self._check_fitted()
        return self.approximation_ratio_
