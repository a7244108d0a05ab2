"""Graph model, built-in benchmark instances, and node-subset predicates.

Nodes are 1-indexed. Node i occupies bit i-1 of a subset's integer
encoding, so the canonical bitstring rendering puts the highest-numbered
node leftmost: on four nodes, the subset {1, 3} is "0101" (= integer 5).
"""

from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

NAMED_GRAPHS = ("square-ring", "k23", "k33")

# exhaustive 2^n scans refuse anything larger
ENUMERATION_LIMIT = 24


class Graph:
    """Undirected graph with positive node and edge weights.

    Immutable after construction; instances can be shared freely across
    threads. Edges are stored sorted with endpoints ordered low-high.
    """

    def __init__(
        self,
        num_nodes: int,
        edges: Iterable[tuple[int, int]] = (),
        node_weights: Iterable[float] | None = None,
        edge_weights: Mapping[tuple[int, int], float] | None = None,
    ):
        if num_nodes < 1:
            raise ValueError(f"num_nodes must be positive, got {num_nodes}")
        self.num_nodes = num_nodes

        canonical: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for edge in edges:
            i, j = edge
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            if not (1 <= i <= num_nodes and 1 <= j <= num_nodes):
                raise ValueError(f"edge {edge} has endpoint outside [1, {num_nodes}]")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            canonical.append(key)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canonical))

        if node_weights is None:
            self.node_weights: tuple[float, ...] = (1.0,) * num_nodes
        else:
            self.node_weights = tuple(float(w) for w in node_weights)
            if len(self.node_weights) != num_nodes:
                raise ValueError(
                    f"expected {num_nodes} node weights, got {len(self.node_weights)}"
                )
        if any(w <= 0 for w in self.node_weights):
            raise ValueError("node weights must be strictly positive")

        weights = dict.fromkeys(self.edges, 1.0)
        if edge_weights is not None:
            for edge, w in edge_weights.items():
                i, j = edge
                key = (min(i, j), max(i, j))
                if key not in weights:
                    raise ValueError(f"weight given for non-edge {key}")
                weights[key] = float(w)
        if any(w <= 0 for w in weights.values()):
            raise ValueError("edge weights must be strictly positive")
        self.edge_weights: dict[tuple[int, int], float] = weights

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per node (index i-1), bitmask of its neighbors' bits."""
        masks = [0] * self.num_nodes
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    def neighbors(self, node: int) -> tuple[int, ...]:
        if not 1 <= node <= self.num_nodes:
            raise ValueError(f"node {node} outside [1, {self.num_nodes}]")
        mask = self.neighbor_masks[node - 1]
        return tuple(v + 1 for v in range(self.num_nodes) if (mask >> v) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.num_nodes == other.num_nodes
            and self.edges == other.edges
            and self.node_weights == other.node_weights
            and self.edge_weights == other.edge_weights
        )

    def __repr__(self) -> str:
        return f"Graph(num_nodes={self.num_nodes}, edges={list(self.edges)})"


def build_named_graph(name: str) -> Graph:
    """One of the built-in benchmark instances: square-ring, k23, or k33."""
    if name == "square-ring":
        return Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    if name == "k23":
        return Graph(5, [(a, b) for a in (1, 2) for b in (3, 4, 5)])
    if name == "k33":
        return Graph(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
    raise ValueError(f"unknown graph name {name!r}; expected one of {', '.join(NAMED_GRAPHS)}")


def load_edge_list(path: str | Path) -> Graph:
    """Read a graph from a text file: first line "n m", then m lines "i j [w]"."""
    lines = Path(path).read_text().splitlines()
    rows = [(k + 1, line.split()) for k, line in enumerate(lines) if line.strip()]
    if not rows:
        raise ValueError(f"{path}: empty edge-list file")
    header_no, header = rows[0]
    if len(header) != 2:
        raise ValueError(f"{path}:{header_no}: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"{path}:{header_no}: expected integer header 'n m'") from None
    if len(rows) - 1 != m:
        raise ValueError(f"{path}: header promises {m} edges, found {len(rows) - 1}")
    edges = []
    weights = {}
    for line_no, fields in rows[1:]:
        if len(fields) not in (2, 3):
            raise ValueError(f"{path}:{line_no}: expected 'i j [w]'")
        try:
            i, j = int(fields[0]), int(fields[1])
            w = float(fields[2]) if len(fields) == 3 else 1.0
        except ValueError:
            raise ValueError(f"{path}:{line_no}: malformed edge line") from None
        edges.append((i, j))
        weights[(min(i, j), max(i, j))] = w
    return Graph(n, edges, edge_weights=weights)


def bits_to_index(bits: str) -> int:
    """Canonical bitstring to its integer encoding ("0101" -> 5)."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"invalid bitstring {bits!r}")
    return int(bits, 2)


def index_to_bits(index: int, num_nodes: int) -> str:
    """Integer encoding to the canonical bitstring (5, 4 -> "0101")."""
    if not 0 <= index < (1 << num_nodes):
        raise ValueError(f"index {index} outside [0, 2^{num_nodes})")
    return format(index, f"0{num_nodes}b")


def complement_bits(bits: str) -> str:
    """Flip every node in/out of the subset."""
    return "".join("1" if c == "0" else "0" for c in bits)


def _checked_index(g: Graph, bits: str) -> int:
    if len(bits) != g.num_nodes:
        raise ValueError(
            f"bitstring {bits!r} has length {len(bits)}, expected {g.num_nodes}"
        )
    return bits_to_index(bits)


def is_independent(g: Graph, bits: str) -> bool:
    """True iff no edge has both endpoints in the subset."""
    return _mask_independent(g, _checked_index(g, bits))


def _mask_independent(g: Graph, mask: int) -> bool:
    for i, j in g.edges:
        if (mask >> (i - 1)) & 1 and (mask >> (j - 1)) & 1:
            return False
    return True


def find_violated_edge(g: Graph, bits: str) -> tuple[int, int] | None:
    """First edge (canonical order) with both endpoints occupied, if any."""
    mask = _checked_index(g, bits)
    for i, j in g.edges:
        if (mask >> (i - 1)) & 1 and (mask >> (j - 1)) & 1:
            return (i, j)
    return None


def feasible_table(g: Graph) -> np.ndarray:
    """Boolean array over all 2^n subsets: True where the subset is independent."""
    if g.num_nodes > ENUMERATION_LIMIT:
        raise ValueError(
            f"graph has {g.num_nodes} nodes; exhaustive enumeration capped at {ENUMERATION_LIMIT}"
        )
    idx = np.arange(1 << g.num_nodes, dtype=np.int64)
    ok = np.ones(idx.shape, dtype=bool)
    for i, j in g.edges:
        ok &= ~(((idx >> (i - 1)) & 1).astype(bool) & ((idx >> (j - 1)) & 1).astype(bool))
    return ok


def enumerate_feasible(g: Graph) -> list[str]:
    """All independent sets as canonical bitstrings, ascending by integer value."""
    ok = feasible_table(g)
    return [index_to_bits(int(i), g.num_nodes) for i in np.flatnonzero(ok)]


def cut_value(g: Graph, bits: str) -> float:
    """Total weight of edges crossing the subset boundary."""
    mask = _checked_index(g, bits)
    total = 0.0
    for (i, j), w in g.edge_weights.items():
        if ((mask >> (i - 1)) & 1) != ((mask >> (j - 1)) & 1):
            total += w
    return total


def subset_weight(g: Graph, bits: str) -> float:
    """Total node weight of the subset."""
    mask = _checked_index(g, bits)
    return sum(
        w for v, w in enumerate(g.node_weights) if (mask >> v) & 1
    )
