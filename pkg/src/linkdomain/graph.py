"""Connectivity graph on candidates.

Two candidates are connected (strong) when one vote ranks a first and b
second and another vote ranks b first and a second; weakly connected when
a single vote puts the pair in the top two positions in either order. The
weak rule is a documented convention behind Mode.WEAK, not a certified
equivalent of any external definition. Linkedness of an election depends
only on this graph, so everything downstream consumes it.
"""

from enum import Enum
from itertools import chain
from typing import Iterable, Sequence

import numpy as np

from .errors import TooFewCandidates
from .model import Election

Edge = tuple[int, int]


class Mode(str, Enum):
    STRONG = "strong"
    WEAK = "weak"


class ConnectivityGraph:
    """Immutable undirected graph on vertices 0..m-1, no self-loops.

    Adjacency lists are sorted and symmetric; edges are normalized to
    (u, v) with u < v and kept in ascending order. Equality compares the
    vertex count and edge set (mode is provenance, not structure).
    """

    __slots__ = ("m", "mode", "edges", "edge_set", "adjacency", "_csr")

    def __init__(self, m: int, edges: Iterable[Edge], mode: Mode | None = None):
        if m < 1:
            raise ValueError("graph needs at least one vertex")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < m and 0 <= v < m):
                raise ValueError(f"edge ({u}, {v}) outside 0..{m - 1}")
            normalized.add((u, v) if u < v else (v, u))
        self.m = m
        self.mode = mode
        self.edges: tuple[Edge, ...] = tuple(sorted(normalized))
        self.edge_set: frozenset[Edge] = frozenset(self.edges)
        neighbors: list[list[int]] = [[] for _ in range(m)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in neighbors
        )
        self._csr: tuple[np.ndarray, np.ndarray] | None = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def csr_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices) as int32, cached."""
        if self._csr is None:
            indptr = np.zeros(self.m + 1, dtype=np.int32)
            indptr[1:] = np.cumsum([len(ns) for ns in self.adjacency])
            indices = np.fromiter(
                chain.from_iterable(self.adjacency), dtype=np.int32, count=int(indptr[-1])
            )
            self._csr = (indptr, indices)
        return self._csr

    def seed_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Edge endpoints as parallel int32 arrays, in ascending edge order."""
        if not self.edges:
            empty = np.empty(0, dtype=np.int32)
            return empty, empty
        arr = np.asarray(self.edges, dtype=np.int32)
        return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConnectivityGraph):
            return NotImplemented
        return self.m == other.m and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash((self.m, self.edge_set))

    def __repr__(self) -> str:
        mode = f", mode={self.mode.value}" if self.mode else ""
        return f"ConnectivityGraph(m={self.m}, edges={len(self.edges)}{mode})"


def top_pair_set(election: Election) -> frozenset[tuple[int, int]]:
    """Ordered (first, second) pairs occurring in some vote; multiplicities collapse."""
    if election.m < 2:
        raise TooFewCandidates("top pairs need at least two candidates")
    return frozenset((ranking[0], ranking[1]) for ranking, _ in election.votes)


def build_graph(election: Election, mode: Mode = Mode.STRONG) -> ConnectivityGraph:
    """Connectivity graph of an election under the given edge rule.

    Strong: edge {a, b} iff both (a, b) and (b, a) occur as top pairs.
    Weak: edge {a, b} iff at least one of them occurs.

    Depends only on the set of top pairs, so vote order and multiplicities
    never matter. O(n + m^2) regardless of how many votes there are.
    """
    pairs = top_pair_set(election)
    if mode is Mode.STRONG:
        edges = [(a, b) for a, b in pairs if a < b and (b, a) in pairs]
    else:
        edges = [(min(a, b), max(a, b)) for a, b in pairs]
    return ConnectivityGraph(election.m, edges, mode)


def export_dot(graph: ConnectivityGraph, names: Sequence[str]) -> str:
    """Graphviz text for the graph: isolated vertices first, then edges ascending."""
    if len(names) != graph.m:
        raise ValueError(f"expected {graph.m} names, got {len(names)}")
    lines = ["graph {"]
    covered = {v for edge in graph.edges for v in edge}
    for v in range(graph.m):
        if v not in covered:
            lines.append(f'  {_dot_quote(names[v])};')
    for u, v in graph.edges:
        lines.append(f'  {_dot_quote(names[u])} -- {_dot_quote(names[v])};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'
