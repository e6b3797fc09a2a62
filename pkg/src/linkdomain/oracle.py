"""Brute-force references for small instances.

Independent of the production path on purpose: adjacency is re-derived as
bitmasks, orders are enumerated (with pruning) rather than grown, and the
all-pairs variant re-implements the closure with a plain rescan loop.
These exist to catch bugs in recognize(), so they share nothing with it
beyond the definition of a linked order.
"""

from itertools import combinations
from typing import Iterator

from .errors import InstanceTooLarge
from .graph import ConnectivityGraph

DEFAULT_CAP = 8


def brute_force_linked(
    graph: ConnectivityGraph, cap: int = DEFAULT_CAP
) -> tuple[bool, tuple[int, ...] | None]:
    """Search all candidate orders for a linked one.

    Returns (True, lexicographically first linked order) or (False, None).
    Prefixes die as soon as a position violates its condition, which keeps
    exhaustive runs at m <= 8 fast; the pruning rule is the definition
    itself, applied position by position.
    """
    m = graph.m
    if m > cap:
        raise InstanceTooLarge(f"brute force capped at m <= {cap}, got {m}")
    if m == 1:
        return True, (0,)

    masks = [0] * m
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    prefix: list[int] = []

    def extend(used: int) -> tuple[int, ...] | None:
        depth = len(prefix)
        if depth == m:
            return tuple(prefix)
        for c in range(m):
            bit = 1 << c
            if used & bit:
                continue
            if depth == 1 and not masks[c] & (1 << prefix[0]):
                continue
            if depth >= 2 and (masks[c] & used).bit_count() < 2:
                continue
            prefix.append(c)
            found = extend(used | bit)
            if found is not None:
                return found
            prefix.pop()
        return None

    order = extend(0)
    return (True, order) if order is not None else (False, None)


def linked_via_all_pair_seeds(graph: ConnectivityGraph) -> bool:
    """Seed every unordered vertex pair, as if none could be skipped.

    A pair's subinstance is a yes only when its closure covers everything
    AND the pair is an edge; a full flood from a non-edge seed (seed {a, b}
    on the path a-c-b, say) still yields an order whose first two entries
    are unconnected. Used to check that edge-only seeding loses nothing.
    """
    m = graph.m
    if m == 1:
        return True
    for a, b in combinations(range(m), 2):
        reached = {a, b}
        grew = True
        while grew:
            grew = False
            for v in range(m):
                if v not in reached and sum(w in reached for w in graph.neighbors(v)) >= 2:
                    reached.add(v)
                    grew = True
        if len(reached) == m and graph.has_edge(a, b):
            return True
    return False


def enumerate_graphs(m: int) -> Iterator[ConnectivityGraph]:
    """Every graph on m labeled vertices, one per edge-subset bitmask."""
    pairs = list(combinations(range(m), 2))
    for mask in range(1 << len(pairs)):
        yield ConnectivityGraph(m, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
