"""Unlabeled connected graphs, one per isomorphism class.

Generation is by canonical augmentation: a graph on ``n`` vertices is
produced from each class on ``n-1`` vertices by adding a vertex joined to a
nonempty subset, taking one subset per orbit of the parent's automorphism
group.  A child is kept only when the new vertex is equivalent to the
canonically chosen deletable (non-cut) vertex, so each class appears once.

``labeled_oracle_classes`` is an unrelated second path: it scans labeled
graphs directly and deduplicates by canonical form.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from ..errors import CapExceeded
from .canon import automorphisms, canonical_form, canonical_labeling, subset_orbit_reps
from .core import Graph, bits

DEFAULT_CAP = int(os.environ.get("SPECINE_MAX_N", "8"))
ORACLE_CAP = 7


def _check_cap(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise CapExceeded(f"n={n} is outside 1..{cap}")


def _profile(g: Graph, v: int) -> tuple:
    # isomorphism-invariant vertex signature used to shortlist the deletion vertex
    adj = g.adj
    return adj[v].bit_count(), sorted(adj[u].bit_count() for u in bits(adj[v]))


def _non_cut(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        rest = full ^ 1 << v
        start = (rest & -rest).bit_length() - 1
        if g.component_mask(start, rest) == rest:
            out.append(v)
    return out


def _accept(child: Graph) -> bool:
    new = child.n - 1
    cands = _non_cut(child)
    prof = {v: _profile(child, v) for v in cands}
    top = max(prof.values())
    if prof[new] != top:
        return False
    cands = [v for v in cands if prof[v] == top]
    if len(cands) == 1:
        return True
    lab = canonical_labeling(child)
    m = max(cands, key=lambda v: lab[v])
    if m == new:
        return True
    mark = [0] * child.n
    mark[new] = 1
    form_new = canonical_form(child, mark)
    mark[new], mark[m] = 0, 1
    return canonical_form(child, mark) == form_new


def children(parent: Graph) -> list[Graph]:
    """Accepted one-vertex extensions of ``parent``."""
    k = parent.n
    group = automorphisms(parent)
    out = []
    for s in subset_orbit_reps(group, k, range(1, 1 << k)):
        adj = list(parent.adj)
        for u in bits(s):
            adj[u] |= 1 << k
        adj.append(s)
        child = Graph._trusted(k + 1, tuple(adj))
        if _accept(child):
            out.append(child)
    return out


@lru_cache(maxsize=None)
def _level(n: int, jobs: int = 1) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.bullet(),)
    parents = _level(n - 1, jobs)
    if jobs > 1 and len(parents) > 64:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            parts = pool.map(children, parents, chunksize=8)
    else:
        parts = [children(p) for p in parents]
    return tuple(g for part in parts for g in part)


def enumerate_connected(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> Iterator[Graph]:
    """One graph per unlabeled connected graph on ``n`` vertices.

    Results are cached per process; the order is deterministic.
    """
    _check_cap(n, cap)
    yield from _level(n, max(1, jobs))


def count_connected(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> int:
    return sum(1 for _ in enumerate_connected(n, cap, jobs))


def _sorted_degree_masks(n: int) -> np.ndarray:
    """Edge masks (over ``combinations(range(n), 2)``) whose degree sequence
    is nonincreasing with no isolated vertex.  Every class has such a
    labeling, so this cuts the scan without losing any class."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    masks = np.arange(1 << m, dtype=np.int64)
    deg = np.zeros((n, masks.size), dtype=np.int8)
    for i, (u, v) in enumerate(pairs):
        bit = ((masks >> i) & 1).astype(np.int8)
        deg[u] += bit
        deg[v] += bit
    keep = deg[n - 1] >= 1
    for v in range(n - 1):
        keep &= deg[v] >= deg[v + 1]
    return masks[keep]


def labeled_oracle_classes(n: int) -> dict[bytes, Graph]:
    """Canonical form -> representative, found by scanning labeled graphs."""
    _check_cap(n, ORACLE_CAP)
    if n == 1:
        g = Graph.bullet()
        return {canonical_form(g): g}
    out: dict[bytes, Graph] = {}
    for mask in _sorted_degree_masks(n).tolist():
        g = Graph.from_edge_mask(n, mask)
        if not g.is_connected():
            continue
        key = canonical_form(g)
        if key not in out:
            out[key] = g
    return out


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``0..n-1`` (no isomorphism reduction)."""
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        g = Graph.from_edge_mask(n, mask)
        if g.is_connected():
            yield g
