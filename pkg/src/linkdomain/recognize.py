"""Linked-order recognition.

An order (c_1, ..., c_m) of the candidates is linked when c_1 and c_2 are
connected and every c_i with i >= 3 is connected to at least two earlier
candidates. Recognition tries every edge as the first two entries and
grows the rest greedily: absorb any vertex with two absorbed neighbors
until stuck or done. If some seed covers everything the insertion order is
a valid witness; if every seed gets stuck, no order with that seed can
exist (the first outside vertex in any such order would need two neighbors
inside the stuck set, but stuck means nobody has two), so the election is
not linked. Non-edge seeds need not be tried: a linked order starting with
an unconnected pair is invalid outright.

The reached set of a seed does not depend on absorption order (absorbing a
vertex never lowers another vertex's count), so any tie-break gives the
same verdict; greedy_closure uses lowest-id-first to make witnesses
reproducible, and the sweep kernels use a FIFO worklist.
"""

import heapq
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import NotAPermutation, SeedNotEdge
from .graph import ConnectivityGraph, Edge, Mode, build_graph
from .model import Election

LinkedOrder = tuple[int, ...]


@dataclass(frozen=True)
class ClosureState:
    """Result of growing one seed: insertion order plus per-vertex bookkeeping.

    counters[v] is the number of neighbors of v inside the reached set for
    every vertex, members or not; every vertex at position >= 2 of
    `reached` had a counter of at least 2 when it was inserted.
    """

    seed: Edge
    reached: tuple[int, ...]
    in_set: tuple[bool, ...]
    counters: tuple[int, ...]


class StuckCertificate(Mapping):
    """Read-only map seed edge -> stuck reached set, proof of a NO verdict.

    Stuck sets are recomputed on access (the closure is deterministic), so
    holding a certificate costs O(#seeds), not O(#seeds * m). stuck_size()
    answers without materializing anything.
    """

    def __init__(self, graph: ConnectivityGraph, sizes: Sequence[int]):
        self._graph = graph
        self._sizes = dict(zip(graph.edges, sizes))

    def __getitem__(self, seed: Edge) -> frozenset[int]:
        if seed not in self._sizes:
            raise KeyError(seed)
        return frozenset(greedy_closure(self._graph, seed).reached)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._sizes)

    def __len__(self) -> int:
        return len(self._sizes)

    def stuck_size(self, seed: Edge) -> int:
        return self._sizes[seed]

    @property
    def max_stuck_size(self) -> int:
        return max(self._sizes.values(), default=0)


@dataclass(frozen=True)
class RecognitionResult:
    linked: bool
    witness: LinkedOrder | None = None
    certificate: StuckCertificate | None = None

    @property
    def verdict(self) -> str:
        return "linked" if self.linked else "not-linked"


def greedy_closure(
    graph: ConnectivityGraph,
    seed: Edge,
    priority: Sequence[int] | None = None,
) -> ClosureState:
    """Grow the seed edge by repeatedly absorbing a vertex with >= 2 absorbed neighbors.

    The reached set is maximal and independent of which addable vertex is
    taken first; `priority` (a rank per vertex id, lowest rank wins)
    controls only the recorded insertion order. Default is lowest id
    first. Raises SeedNotEdge when the seed pair is not an edge.
    """
    a, b = (seed[0], seed[1]) if seed[0] < seed[1] else (seed[1], seed[0])
    if not graph.has_edge(a, b):
        raise SeedNotEdge(f"seed ({a}, {b}) is not an edge")
    rank = priority if priority is not None else range(graph.m)

    counters = [0] * graph.m
    in_set = [False] * graph.m
    reached = []
    ready: list[tuple[int, int]] = []

    def absorb(v: int) -> None:
        in_set[v] = True
        reached.append(v)
        for w in graph.neighbors(v):
            counters[w] += 1
            if counters[w] == 2 and not in_set[w]:
                heapq.heappush(ready, (rank[w], w))

    absorb(a)
    absorb(b)
    while ready:
        _, v = heapq.heappop(ready)
        if not in_set[v]:
            absorb(v)
    return ClosureState((a, b), tuple(reached), tuple(in_set), tuple(counters))


def verify_witness(graph: ConnectivityGraph, witness: Sequence[int]) -> bool:
    """Check the linked condition directly: first two adjacent, later entries
    adjacent to >= 2 predecessors. O(m + edges), independent of recognition."""
    order = tuple(witness)
    if sorted(order) != list(range(graph.m)):
        raise NotAPermutation(f"{order} is not a permutation of 0..{graph.m - 1}")
    if graph.m == 1:
        return True
    if not graph.has_edge(order[0], order[1]):
        return False
    placed = [False] * graph.m
    placed[order[0]] = True
    placed[order[1]] = True
    for v in order[2:]:
        prior = sum(1 for w in graph.neighbors(v) if placed[w])
        if prior < 2:
            return False
        placed[v] = True
    return True


def recognize(graph: ConnectivityGraph) -> RecognitionResult:
    """Decide whether the graph admits a linked order.

    Seeds are the edges in ascending order; the witness comes from the
    first (lexicographically smallest) seed whose closure covers all
    vertices, with lowest-id-first insertion order. On failure the
    certificate maps every seed edge to its stuck set. A single vertex is
    linked by convention (the conditions quantify over positions that do
    not exist); two vertices are linked iff they are connected.
    """
    if graph.m == 1:
        return RecognitionResult(linked=True, witness=(0,))
    if not graph.edges:
        return RecognitionResult(linked=False, certificate=StuckCertificate(graph, ()))

    indptr, indices = graph.csr_arrays()
    seed_u, seed_v = graph.seed_arrays()
    sizes = np.zeros(len(graph.edges), dtype=np.int32)
    winner = kernels.sweep_seeds(indptr, indices, seed_u, seed_v, graph.m, sizes)

    if winner < 0:
        return RecognitionResult(linked=False, certificate=StuckCertificate(graph, sizes.tolist()))
    witness = greedy_closure(graph, graph.edges[winner]).reached
    if not verify_witness(graph, witness):
        raise RuntimeError(f"kernel {kernels.KERNEL!r} produced an invalid witness; this is a bug")
    return RecognitionResult(linked=True, witness=witness)


def recognize_election(election: Election, mode: Mode = Mode.STRONG) -> RecognitionResult:
    """Build the connectivity graph for the mode and recognize it."""
    if election.m == 1:
        return RecognitionResult(linked=True, witness=(0,))
    return recognize(build_graph(election, mode))
