"""Leaf removal, sibling contraction and the reduction of a graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import DisconnectedInput, K2Input, NotALeaf, WouldEmptyGraph
from .core import Graph, bits
from .invariants import has_siblings, sibling_classes


def remove_leaves(g: Graph, leaves: Iterable[int] | None = None, *, return_map: bool = False):
    """Delete a set of leaves (all leaves when ``leaves`` is None).

    Returns the induced subgraph on the remaining vertices, relabeled in
    increasing order; with ``return_map`` also the old->new vertex map.
    """
    drop = set(g.leaves() if leaves is None else leaves)
    for v in drop:
        if not 0 <= v < g.n or g.degree(v) != 1:
            raise NotALeaf(f"vertex {v} is not a leaf")
    if len(drop) == g.n and drop:
        raise WouldEmptyGraph("removing these leaves leaves no vertices")
    h, mapping = g.induced_subgraph(v for v in range(g.n) if v not in drop)
    return (h, mapping) if return_map else h


def contract_siblings(g: Graph, *, return_map: bool = False):
    """Contract every sibling class to one vertex.

    Classes are numbered by least member; with ``return_map`` the old->new
    vertex map is returned as well.
    """
    classes = sibling_classes(g)
    mapping = {v: i for i, c in enumerate(classes) for v in c}
    adj = []
    for i, c in enumerate(classes):
        nb = 0
        for u in bits(g.adj[c[0]]):
            j = mapping[u]
            if j != i:
                nb |= 1 << j
        adj.append(nb)
    h = Graph._trusted(len(classes), tuple(adj))
    if h.is_k2():
        raise AssertionError("sibling contraction produced K2")
    return (h, mapping) if return_map else h


@dataclass(frozen=True)
class ReductionStep:
    round: int
    operation: str  # "lambda" (remove all leaves) or "rho" (contract siblings)
    graph: Graph
    mapping: dict


def _check_input(g: Graph, k2_as_bullet: bool) -> bool:
    if not g.is_connected():
        raise DisconnectedInput("reduction needs a connected graph")
    if g.is_k2():
        if not k2_as_bullet:
            raise K2Input("the reduction of K2 is undefined (pass k2_as_bullet to map it to a point)")
        return True
    return False


def reduction_trace(g: Graph, *, k2_as_bullet: bool = False) -> list[ReductionStep]:
    """Every intermediate graph of ``(rho . lambda)^k`` until nothing changes."""
    if _check_input(g, k2_as_bullet):
        return [ReductionStep(1, "rho", Graph.bullet(), {0: 0, 1: 0})]
    steps: list[ReductionStep] = []
    h = g
    rnd = 0
    while h.leaves() or has_siblings(h):
        rnd += 1
        h, m = remove_leaves(h, return_map=True)
        steps.append(ReductionStep(rnd, "lambda", h, m))
        h, m = contract_siblings(h, return_map=True)
        steps.append(ReductionStep(rnd, "rho", h, m))
    return steps


def reduce(g: Graph, *, k2_as_bullet: bool = False) -> Graph:
    """Leafless, sibling-free graph obtained by alternating leaf removal and
    sibling contraction (the single vertex for trees, complete graphs, ...)."""
    steps = reduction_trace(g, k2_as_bullet=k2_as_bullet)
    return steps[-1].graph if steps else g


def rho_lambda(g: Graph, leaves: Iterable[int] | None = None) -> Graph:
    """``rho(lambda_S(g))``; ``leaves=None`` removes all leaves."""
    return contract_siblings(remove_leaves(g, leaves))


def is_reduced(g: Graph) -> bool:
    return not g.leaves() and not has_siblings(g)
