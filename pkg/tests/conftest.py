"""Shared fixtures: small named graphs used across the test modules."""

import re

import pytest

from specine.graphs import Graph


def from_chains(text: str) -> tuple[Graph, list[str]]:
    """Build a graph from ``(A)--(B)--(C)`` style edge chains."""
    names: list[str] = []
    edges = []
    for chain in text.split():
        vs = re.findall(r"\((\w+)\)", chain)
        for v in vs:
            if v not in names:
                names.append(v)
        edges += [(names.index(a), names.index(b)) for a, b in zip(vs, vs[1:])]
    return Graph.from_edges(len(names), edges), names


# the 17-vertex graph that reduces in two rounds; its decoration carries
# the tags S2, S1, T2, T3, S1
BIG_EXAMPLE = (
    "(V10)--(V11)--(V12)--(V10) (V10)--(V21)--(V3) (V10)--(V22)--(V3) (V4)--(V5)--(V10) "
    "(V11)--(V21) (V21)--(V22) (V11)--(V22) (V5)--(V11) (V12)--(V21) (V12)--(V22) (V5)--(V12) "
    "(V3)--(V5) (V21)--(V4) (V21)--(V6) (V22)--(V4) (V22)--(V6) (V3)--(V7) (V4)--(V81) "
    "(V4)--(V82) (V81)--(V82) (V7)--(V5) (V51)--(V5)--(V52) (V71)--(V7)--(V72) (V73)--(V7)"
)

# 15-vertex three-sort example with a five-block patch decomposition
PATCH_EXAMPLE = (
    "(X1)--(X2) (X2)--(X3) (X2)--(X4) (X4)--(X3) (X4)--(X5) (X5)--(X3) (X2)--(Y21) "
    "(X4)--(Y41) (X4)--(Y42) (X6)--(Y61) (X7)--(Y71) (X7)--(Y72) (X2)--(Z1) (X2)--(Z2) "
    "(X2)--(X6) (X2)--(X7) (Z1)--(Z2) (Z1)--(X6) (Z1)--(X7) (Z2)--(X6) (Z2)--(X7) (X7)--(X6)"
)


@pytest.fixture
def big_example():
    return from_chains(BIG_EXAMPLE)[0]


@pytest.fixture
def big_example_reduced():
    return Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 0), (2, 4), (1, 3), (2, 5), (5, 4)])


@pytest.fixture
def patch_example():
    return from_chains(PATCH_EXAMPLE)


def four_vertex_graphs() -> dict[tuple[int, int], Graph]:
    """The six connected graphs on four vertices keyed by (s, t)."""
    return {
        (0, 3): Graph.star(4),
        (0, 1): Graph.path(4),
        (0, 0): Graph.cycle(4),
        (1, 1): Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]),
        (1, 0): Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 2)]),
        (3, 0): Graph.complete(4),
    }


def six_vertex_examples() -> dict[str, list[Graph]]:
    """The two (1,2) and the two (2,1) graphs on six vertices."""
    e = lambda pairs: Graph.from_edges(6, [(a - 1, b - 1) for a, b in pairs])  # noqa: E731
    return {
        "1,2": [
            e([(1, 2), (2, 4), (4, 5), (1, 3), (3, 4), (4, 6), (2, 3)]),
            e([(3, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]),
        ],
        "2,1": [
            e([(1, 2), (2, 3), (3, 4), (4, 2), (2, 5), (5, 3), (3, 1), (1, 4), (4, 5), (5, 6)]),
            e([(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 6), (2, 4), (4, 3)]),
        ],
    }


def five_vertex_reduced() -> list[Graph]:
    """The five leafless sibling-free connected graphs on five vertices."""
    e = lambda pairs: Graph.from_edges(5, [(a - 1, b - 1) for a, b in pairs])  # noqa: E731
    return [
        e([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 3)]),
        Graph.cycle(5),
        e([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 3), (2, 5), (5, 4)]),
        e([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (5, 3)]),
        e([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (5, 3), (5, 2)]),
    ]
