"""Serializable experiment reports.

Serialization is deterministic: identical configurations (including seed)
must produce byte-identical files. The timestamp therefore comes from
SOURCE_DATE_EPOCH when set and otherwise pins to the Unix epoch instead of
the wall clock.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path


def deterministic_timestamp() -> str:
    epoch = int(os.environ.get("SOURCE_DATE_EPOCH", "0"))
    return datetime.fromtimestamp(epoch, tz=timezone.utc).isoformat()


@dataclass(frozen=True)
class RunReport:
    """Outcome of one restart-averaged variational optimization."""

    problem: str
    graph: str
    p: int
    restarts: int
    seed: int
    initial_state: str
    best_gammas: tuple[float, ...]
    best_betas: tuple[float, ...]
    best_expectation: float
    c_max: float
    approximation_ratio: float
    averaged_distribution: tuple[tuple[str, float], ...]
    feasibility_leakage: float
    timestamp: str
    tool_version: str

    def __post_init__(self):
        total = sum(p for _, p in self.averaged_distribution)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"averaged distribution sums to {total!r}, not 1")
        if not -1e-9 <= self.approximation_ratio <= 1.0 + 1e-9:
            raise ValueError(
                f"approximation ratio {self.approximation_ratio!r} outside [0, 1]"
            )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["best_params"] = {
            "gammas": list(d.pop("best_gammas")),
            "betas": list(d.pop("best_betas")),
        }
        d["averaged_distribution"] = [
            [bits, prob] for bits, prob in self.averaged_distribution
        ]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json())


@dataclass(frozen=True)
class SweepReport:
    """Depth-1 expectation curve over a beta grid, normalized by the optimum."""

    initial_state: str
    beta_grid: tuple[float, ...]
    ratios: tuple[float, ...]
    max_value: float
    argmax_beta: float

    def __post_init__(self):
        if len(self.beta_grid) != len(self.ratios):
            raise ValueError("beta grid and ratios have different lengths")
        if self.ratios and self.max_value != max(self.ratios):
            raise ValueError("max_value does not equal the maximum listed ratio")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(
            {
                "initial_state": self.initial_state,
                "max_value": self.max_value,
                "argmax_beta": self.argmax_beta,
                "points": len(self.beta_grid),
            },
            indent=2,
        ) + "\n"

    def to_csv(self) -> str:
        lines = ["beta,ratio"]
        lines += [f"{b!r},{r!r}" for b, r in zip(self.beta_grid, self.ratios)]
        return "\n".join(lines) + "\n"
