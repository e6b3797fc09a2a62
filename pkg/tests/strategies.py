"""Shared hypothesis strategies."""

from itertools import combinations

import hypothesis.strategies as st

from linkdomain import ConnectivityGraph
from linkdomain.model import election_from_ids


@st.composite
def graphs(draw, min_m: int = 1, max_m: int = 7):
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    pairs = list(combinations(range(m), 2))
    if not pairs:
        return ConnectivityGraph(m, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return ConnectivityGraph(m, edges)


@st.composite
def graphs_with_edges(draw, min_m: int = 2, max_m: int = 7):
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    pairs = list(combinations(range(m), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs)))
    return ConnectivityGraph(m, edges)


@st.composite
def elections(draw, min_m: int = 1, max_m: int = 6, max_votes: int = 8):
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    votes = draw(
        st.lists(
            st.tuples(st.permutations(range(m)), st.integers(min_value=1, max_value=3)),
            max_size=max_votes,
        )
    )
    return election_from_ids([(tuple(order), mult) for order, mult in votes], m)
